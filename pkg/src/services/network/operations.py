"""Операции над сетью: валидация, потенциалы, свободные энергии и степени свободы.

Все функции чистые: сеть неизменяема, результат вычисляется заново при каждом вызове.
"""

import math
from typing import List

import networkx as nx
from scipy.special import gammaln

from src.core import NodeClass, settings
from src.core.exceptions import NotFoundError, ValidationError
from src.core.logger import get_logger
from src.core.validators import NumberValidator
from src.services.network.models import Edge, Network, Node, Violation

logger = get_logger(__name__)


def validate(network: Network) -> List[Violation]:
    """Проверяет инварианты сети и возвращает список нарушений.

    Правила: заселённость положительна и конечна, энергия Гиббса конечна,
    идентификаторы уникальны, проводимость неотрицательна, вырождение не меньше 1,
    концы рёбер существуют, петель нет, на каждую неупорядоченную пару не более
    одного ребра, температура положительна.

    Args:
        network: Проверяемая сеть.

    Returns:
        List[Violation]: Пустой список, если все инварианты выполнены.
    """
    violations: List[Violation] = []

    if not NumberValidator.is_positive_finite(network.temperature):
        violations.append(
            Violation(subject="network", rule="temperature", message="Температура должна быть положительной")
        )

    seen_nodes: set[str] = set()
    for node in network.nodes:
        if node.id in seen_nodes:
            violations.append(
                Violation(subject=node.id, rule="unique_node_id", message="Повторяющийся идентификатор узла")
            )
        seen_nodes.add(node.id)
        if not NumberValidator.is_positive_finite(node.occupancy):
            violations.append(
                Violation(
                    subject=node.id,
                    rule="occupancy",
                    message=f"Заселённость должна быть конечной и положительной, получено {node.occupancy}",
                )
            )
        if not NumberValidator.is_finite(node.gibbs_energy):
            violations.append(
                Violation(subject=node.id, rule="gibbs_energy", message="Энергия Гиббса должна быть конечной")
            )

    seen_pairs: set[frozenset[str]] = set()
    for edge in network.edges:
        if edge.source not in seen_nodes or edge.target not in seen_nodes:
            violations.append(
                Violation(subject=edge.id, rule="endpoints", message="Конец ребра ссылается на несуществующий узел")
            )
        if edge.source == edge.target:
            violations.append(Violation(subject=edge.id, rule="self_loop", message="Петли запрещены"))
        if edge.pair in seen_pairs:
            violations.append(
                Violation(
                    subject=edge.id,
                    rule="single_edge",
                    message="Пара узлов может быть соединена только одним ребром",
                )
            )
        seen_pairs.add(edge.pair)
        if not NumberValidator.is_non_negative_finite(edge.conductance):
            violations.append(
                Violation(subject=edge.id, rule="conductance", message="Проводимость должна быть неотрицательной")
            )
        if edge.degeneracy < 1:
            violations.append(Violation(subject=edge.id, rule="degeneracy", message="Вырождение должно быть ≥ 1"))
        if not NumberValidator.is_finite(edge.dissipation):
            violations.append(
                Violation(subject=edge.id, rule="dissipation", message="Диссипация должна быть конечной")
            )

    return violations


def ensure_valid(network: Network) -> None:
    """Выбрасывает ValidationError, если сеть нарушает инварианты.

    Raises:
        ValidationError: Список нарушений передаётся в details.
    """
    violations = validate(network)
    if violations:
        raise ValidationError(
            message="Сеть нарушает инварианты модели",
            details={"violations": [violation.model_dump() for violation in violations]},
        )


def stirling_warnings(network: Network) -> List[str]:
    """Возвращает узлы с заселённостью ниже порога применимости формулы Стирлинга."""
    flagged = [node.id for node in network.nodes if node.occupancy < settings.STIRLING_THRESHOLD]
    if flagged:
        logger.warning(
            "Occupancy below Stirling threshold",
            nodes=flagged,
            threshold=settings.STIRLING_THRESHOLD,
        )
    return flagged


def _node(network: Network, node_id: str) -> Node:
    for node in network.nodes:
        if node.id == node_id:
            return node
    raise NotFoundError(message=f"Узел '{node_id}' не найден", details={"node": node_id})


def density(network: Network, node_id: str) -> float:
    """Плотность энергии φ_j = N_j·exp(G_j/T)."""
    node = _node(network, node_id)
    return node.occupancy * math.exp(node.gibbs_energy / network.temperature)


def potential(network: Network, node_id: str) -> float:
    """Потенциал узла μ_j = T·ln φ_j = G_j + T·ln N_j.

    Args:
        network: Сеть.
        node_id: Идентификатор узла.

    Returns:
        float: Потенциал в единицах k_BT.

    Raises:
        NotFoundError: Если узла нет в сети.
    """
    node = _node(network, node_id)
    return node.gibbs_energy + network.temperature * math.log(node.occupancy)


def log_degeneracy(degeneracy: int) -> float:
    """ln(g!) через логарифм гамма-функции."""
    return float(gammaln(degeneracy + 1))


def free_energy(network: Network, edge: Edge) -> float:
    """Свободная энергия ΔV_jk = [μ_j − μ_k + T·ln(g_jk!)] − ΔQ_jk в ориентации ребра.

    Args:
        network: Сеть.
        edge: Ребро (концы должны существовать).

    Returns:
        float: Движущая сила jk-преобразования.
    """
    delta_mu = potential(network, edge.source) - potential(network, edge.target)
    return delta_mu + network.temperature * log_degeneracy(edge.degeneracy) - edge.dissipation


def resistance(network: Network, edge: Edge) -> float:
    """Сопротивление m_jk = T/σ_jk (бесконечно для непроводящего ребра)."""
    if edge.conductance == 0:
        return math.inf
    return network.temperature / edge.conductance


def node_dof(network: Network, node_id: str) -> int:
    """Число взаимодействующих плотностей в узле: 1 + число проводящих рёбер.

    Raises:
        NotFoundError: Если узла нет в сети.
    """
    _node(network, node_id)
    return 1 + sum(1 for edge in network.incident(node_id) if edge.is_conducting)


def classify_node(network: Network, node_id: str) -> NodeClass:
    """Классифицирует узел по числу проводящих диссипативных рёбер.

    Args:
        network: Сеть.
        node_id: Идентификатор узла.

    Returns:
        NodeClass: branching (≥ 2 рёбер), deterministic (ровно 1) или idle.
    """
    _node(network, node_id)
    dissipative = sum(1 for edge in network.incident(node_id) if edge.is_conducting and edge.is_dissipative)
    if dissipative >= 2:
        return NodeClass.BRANCHING
    if dissipative == 1:
        return NodeClass.DETERMINISTIC
    return NodeClass.IDLE


def branching_nodes(network: Network) -> set[str]:
    """Множество ветвящихся узлов сети."""
    return {node.id for node in network.nodes if classify_node(network, node.id) == NodeClass.BRANCHING}


def conducting_graph(network: Network) -> nx.Graph:
    """Неориентированный граф проводящих рёбер (все узлы сохраняются)."""
    graph = nx.Graph()
    graph.add_nodes_from(network.node_ids)
    graph.add_edges_from((edge.source, edge.target) for edge in network.edges if edge.is_conducting)
    return graph


def attach_reservoir(
    network: Network,
    anchor: str,
    reservoir_id: str,
    conductance: float = 1.0,
    gibbs_energy: float = 0.0,
    occupancy: float | None = None,
    dissipation: float = 0.0,
) -> Network:
    """Подключает резервуар окружения к узлу anchor.

    Резервуар — обычный узел с очень большой заселённостью, поэтому его потенциал
    практически закреплён.

    Args:
        network: Исходная сеть.
        anchor: Узел, к которому подключается резервуар.
        reservoir_id: Идентификатор нового узла.
        conductance: Проводимость ребра резервуар → anchor.
        gibbs_energy: Энергия Гиббса резервуара (задаёт его потенциал).
        occupancy: Заселённость резервуара (по умолчанию RESERVOIR_OCCUPANCY).
        dissipation: Диссипация подводящего ребра.

    Returns:
        Network: Новая сеть с резервуаром.
    """
    _node(network, anchor)
    reservoir = Node(
        id=reservoir_id,
        occupancy=occupancy if occupancy is not None else settings.RESERVOIR_OCCUPANCY,
        gibbs_energy=gibbs_energy,
    )
    lead = Edge(source=reservoir_id, target=anchor, conductance=conductance, dissipation=dissipation)
    return network.model_copy(update={"nodes": (*network.nodes, reservoir), "edges": (*network.edges, lead)})
