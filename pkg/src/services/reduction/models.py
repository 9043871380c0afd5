"""Модели редукции сети."""

from typing import Dict, Tuple

from src.core.schemas import FrozenModel
from src.services.network.models import Edge, Network


class MergedEdge(FrozenModel):
    """Замена двух рёбер удалённого узла одним последовательным ребром.

    Attributes:
        node: Удалённый узел.
        replaced: Идентификаторы заменённых рёбер.
        edge: Новое ребро.
    """
    node: str
    replaced: Tuple[str, str]
    edge: Edge


class ReductionTrace(FrozenModel):
    """Журнал стягивания цепочек.

    Attributes:
        removed_nodes: Удалённые узлы в порядке удаления.
        merged_edges: Слияния рёбер в том же порядке.
        rounds: Число раундов с хотя бы одним удалением.
    """
    removed_nodes: Tuple[str, ...] = ()
    merged_edges: Tuple[MergedEdge, ...] = ()
    rounds: int = 0


class ConfluenceReport(FrozenModel):
    """Итог перебора всех порядков удаления.

    Attributes:
        confluent: Все порядки дали изоморфные сети с равными параметрами.
        orders_checked: Число пройденных полных порядков удаления.
        results: Попарно различные неподвижные точки.
    """
    confluent: bool
    orders_checked: int
    results: Tuple[Network, ...]


class EquivalenceReport(FrozenModel):
    """Сравнение стационарных потенциалов граничных узлов до и после редукции."""
    agree: bool
    max_difference: float
    original: Dict[str, float]
    reduced: Dict[str, float]
