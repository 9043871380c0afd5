"""Экземпляры задач и результаты решателей.

Результаты содержат сертификат (путь, тур, назначение), который можно проверить
детерминированно, пересчитав стоимость или выполнимость.
"""

import math
from typing import Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import Field, model_validator

from src.core.schemas import FrozenModel, SatClass, Verdict


class WeightedEdge(FrozenModel):
    """Взвешенное ребро графа (ключи JSON ``from``, ``to``, ``weight``)."""
    source: str = Field(alias="from")
    target: str = Field(alias="to")
    weight: float


class WeightedGraph(FrozenModel):
    """Граф с неотрицательными весами; рёбра идентифицируются индексом в списке.

    Attributes:
        vertices: Идентификаторы вершин.
        edges: Рёбра (допускаются кратные).
        directed: Ориентирован ли граф.
    """
    vertices: Tuple[str, ...]
    edges: Tuple[WeightedEdge, ...] = ()
    directed: bool = False

    @model_validator(mode="after")
    def check_endpoints(self) -> Self:
        """Проверяет уникальность вершин и концы рёбер."""
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise ValueError("Идентификаторы вершин должны быть уникальны")
        for index, edge in enumerate(self.edges):
            if edge.source not in known or edge.target not in known:
                raise ValueError(f"Ребро {index} ссылается на несуществующую вершину")
        return self

    def without(self, removed: set[int]) -> "WeightedGraph":
        """Копия графа без рёбер с указанными индексами (индексы остальных не сохраняются)."""
        edges = tuple(edge for index, edge in enumerate(self.edges) if index not in removed)
        return self.model_copy(update={"edges": edges})


class ShortestPathInstance(WeightedGraph):
    """Граф с парой источник–цель."""
    source: str
    target: str

    @model_validator(mode="after")
    def check_terminals(self) -> Self:
        """Источник и цель должны быть вершинами графа."""
        if self.source not in self.vertices or self.target not in self.vertices:
            raise ValueError("Источник и цель должны быть вершинами графа")
        return self

    @property
    def graph(self) -> WeightedGraph:
        return WeightedGraph(vertices=self.vertices, edges=self.edges, directed=self.directed)


class InterdictionInstance(ShortestPathInstance):
    """Задача максимизации кратчайшего пути удалением k рёбер.

    Attributes:
        budget: Число удаляемых рёбер k ≥ 1.
        removable: Индексы рёбер, которые разрешено удалять (по умолчанию все).
    """
    budget: int = Field(default=1, ge=1)
    removable: Optional[Tuple[int, ...]] = None

    @model_validator(mode="after")
    def check_budget(self) -> Self:
        """Проверяет источник ≠ цель и бюджет в пределах удаляемого множества."""
        if self.source == self.target:
            raise ValueError("Источник и цель должны различаться")
        candidates = self.removable_edges
        if any(index < 0 or index >= len(self.edges) for index in candidates):
            raise ValueError("Индекс удаляемого ребра вне диапазона")
        if len(set(candidates)) != len(candidates):
            raise ValueError("Индексы удаляемых рёбер повторяются")
        if self.budget > len(candidates):
            raise ValueError("Бюджет превышает число удаляемых рёбер")
        return self

    @property
    def removable_edges(self) -> Tuple[int, ...]:
        if self.removable is None:
            return tuple(range(len(self.edges)))
        return tuple(sorted(self.removable))


class TspInstance(FrozenModel):
    """Симметричная задача коммивояжёра.

    Attributes:
        distances: Неотрицательная симметричная матрица с нулевой диагональю, n ≥ 3.
    """
    distances: Tuple[Tuple[float, ...], ...]

    @model_validator(mode="after")
    def check_matrix(self) -> Self:
        """Проверяет форму, симметрию, диагональ и неотрицательность."""
        size = len(self.distances)
        if size < 3:
            raise ValueError("Нужно не менее трёх городов")
        for i, row in enumerate(self.distances):
            if len(row) != size:
                raise ValueError("Матрица расстояний должна быть квадратной")
            if row[i] != 0:
                raise ValueError("Диагональ матрицы расстояний должна быть нулевой")
            for j, value in enumerate(row):
                if not math.isfinite(value) or value < 0:
                    raise ValueError(f"Расстояние ({i}, {j}) должно быть конечным и неотрицательным")
                if value != self.distances[j][i]:
                    raise ValueError(f"Матрица несимметрична в ({i}, {j})")
        return self

    @property
    def size(self) -> int:
        return len(self.distances)


class CnfFormula(FrozenModel):
    """Формула в КНФ: клозы — списки ненулевых литералов ±i.

    Attributes:
        variables: Число переменных.
        clauses: Клозы; пустые клозы запрещены.
    """
    variables: int = Field(ge=0)
    clauses: Tuple[Tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def check_literals(self) -> Self:
        """Литералы ненулевые и ссылаются на объявленные переменные."""
        for index, clause in enumerate(self.clauses):
            if not clause:
                raise ValueError(f"Клоза {index} пуста")
            for literal in clause:
                if literal == 0 or abs(literal) > self.variables:
                    raise ValueError(f"Литерал {literal} в клозе {index} вне диапазона переменных")
        return self

    @property
    def width(self) -> int:
        """Максимальная ширина клозы (0 для пустой формулы)."""
        return max((len(clause) for clause in self.clauses), default=0)


class PathResult(FrozenModel):
    """Кратчайший путь или признак недостижимости."""
    reachable: bool
    cost: Optional[float] = None
    path: Tuple[str, ...] = ()

    @property
    def value(self) -> float:
        """Стоимость, бесконечная для недостижимой цели."""
        return self.cost if self.reachable and self.cost is not None else math.inf


class TourResult(FrozenModel):
    """Гамильтонов цикл и его стоимость."""
    tour: Tuple[int, ...]
    cost: float


class InterdictionResult(FrozenModel):
    """Удалённые рёбра и кратчайший путь после удаления."""
    removed: Tuple[int, ...]
    reachable: bool
    cost: Optional[float] = None

    @property
    def value(self) -> float:
        return self.cost if self.reachable and self.cost is not None else math.inf


class SatResult(FrozenModel):
    """Вердикт выполнимости и назначение (x1 первым)."""
    verdict: Verdict
    assignment: Optional[Tuple[bool, ...]] = None


class SatClassification(FrozenModel):
    """Класс формулы и её максимальная ширина."""
    sat_class: SatClass
    width: int
