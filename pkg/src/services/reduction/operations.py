"""Редукция NP → NP-complete: стягивание детерминированных цепочек.

Узел удаляется, если у него ровно два инцидентных ребра и оба проводящие.
Два ребра (j, m), (m, k) заменяются одним ребром j → k (j < k лексикографически)
с последовательной проводимостью, суммой диссипаций и произведением вырождений.
"""

import math
from typing import Dict, List, Mapping, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match

from src.core import Termination, settings
from src.core.exceptions import ConvergenceError, NotFoundError, SizeLimitError
from src.core.logger import get_logger
from src.services.dynamics import SimConfig, simulate
from src.services.network import Edge, Network, attach_reservoir, ensure_valid, potential
from src.services.reduction.models import ConfluenceReport, EquivalenceReport, MergedEdge, ReductionTrace

logger = get_logger(__name__)

PARAMETER_TOLERANCE = 1e-12
EQUIVALENCE_TOLERANCE = 1e-6


def _is_removable(network: Network, node_id: str) -> bool:
    incident = network.incident(node_id)
    if len(incident) != 2 or not all(edge.is_conducting for edge in incident):
        return False
    first, second = (edge.other(node_id) for edge in incident)
    if first == second:
        return False
    return not any(edge.pair == frozenset((first, second)) for edge in network.edges)


def removal_candidates(network: Network) -> List[str]:
    """Узлы, удаляемые по правилу стягивания, в лексикографическом порядке."""
    return sorted(node.id for node in network.nodes if _is_removable(network, node.id))


def is_reduced(network: Network) -> bool:
    """Сеть является неподвижной точкой стягивания."""
    return not removal_candidates(network)


def _oriented(edge: Edge, start: str) -> float:
    return edge.dissipation if edge.source == start else -edge.dissipation


def _remove(network: Network, node_id: str) -> Tuple[Network, MergedEdge]:
    first_edge, second_edge = network.incident(node_id)
    left, right = sorted((first_edge.other(node_id), second_edge.other(node_id)))
    left_edge, right_edge = (first_edge, second_edge) if first_edge.other(node_id) == left else (second_edge, first_edge)

    merged = Edge(
        source=left,
        target=right,
        conductance=1.0 / (1.0 / left_edge.conductance + 1.0 / right_edge.conductance),
        degeneracy=left_edge.degeneracy * right_edge.degeneracy,
        dissipation=_oriented(left_edge, left) + _oriented(right_edge, node_id),
    )
    edges = tuple(edge for edge in network.edges if node_id not in (edge.source, edge.target)) + (merged,)
    nodes = tuple(node for node in network.nodes if node.id != node_id)
    record = MergedEdge(node=node_id, replaced=(left_edge.id, right_edge.id), edge=merged)
    return network.model_copy(update={"nodes": nodes, "edges": edges}), record


def contract_chains(network: Network) -> Tuple[Network, ReductionTrace]:
    """Стягивает цепочки до неподвижной точки.

    В каждом раунде кандидаты вычисляются заново; из них удаляются попарно
    несмежные узлы в лексикографическом порядке. Узел, чьи соседи уже соединены
    ребром, пропускается.

    Args:
        network: Валидная сеть.

    Returns:
        Tuple[Network, ReductionTrace]: Редуцированная сеть и журнал удалений.

    Raises:
        ValidationError: Если входная сеть нарушает инварианты.
    """
    ensure_valid(network)
    removed: List[str] = []
    merges: List[MergedEdge] = []
    rounds = 0
    current = network

    while True:
        candidates = removal_candidates(current)
        if not candidates:
            break
        touched: Set[str] = set()
        progress = False
        for node_id in candidates:
            if node_id in touched or not _is_removable(current, node_id):
                continue
            neighbours = {edge.other(node_id) for edge in current.incident(node_id)}
            current, record = _remove(current, node_id)
            removed.append(node_id)
            merges.append(record)
            touched |= neighbours
            progress = True
            logger.debug("Node contracted", node=node_id, merged=record.edge.id)
        if not progress:
            break
        rounds += 1

    ensure_valid(current)
    logger.info("Chains contracted", removed=len(removed), rounds=rounds)
    return current, ReductionTrace(removed_nodes=tuple(removed), merged_edges=tuple(merges), rounds=rounds)


def _parameter_graph(network: Network) -> nx.DiGraph:
    graph = nx.DiGraph()
    for node in network.nodes:
        graph.add_node(node.id, state=(node.occupancy, node.gibbs_energy))
    for edge in network.edges:
        graph.add_edge(edge.source, edge.target, params=(edge.conductance, edge.degeneracy, edge.dissipation))
        graph.add_edge(edge.target, edge.source, params=(edge.conductance, edge.degeneracy, -edge.dissipation))
    return graph


def _edge_match(first: Mapping, second: Mapping) -> bool:
    return first["params"][1] == second["params"][1] and all(
        math.isclose(a, b, rel_tol=0.0, abs_tol=PARAMETER_TOLERANCE)
        for a, b in zip((first["params"][0], first["params"][2]), (second["params"][0], second["params"][2]))
    )


def _equivalent(first: Network, second: Network) -> bool:
    return nx.is_isomorphic(
        _parameter_graph(first),
        _parameter_graph(second),
        node_match=categorical_node_match("state", None),
        edge_match=_edge_match,
    )


def confluence_check(network: Network) -> ConfluenceReport:
    """Перебирает все порядки удаления и сравнивает неподвижные точки.

    Args:
        network: Валидная сеть не более чем из CONFLUENCE_MAX_NODES узлов.

    Returns:
        ConfluenceReport: Различные результаты не скрываются, а перечисляются.

    Raises:
        SizeLimitError: Если сеть слишком велика для полного перебора.
    """
    ensure_valid(network)
    if len(network.nodes) > settings.CONFLUENCE_MAX_NODES:
        raise SizeLimitError(
            message="Сеть слишком велика для перебора порядков удаления",
            details={"nodes": len(network.nodes), "limit": settings.CONFLUENCE_MAX_NODES},
        )

    fixpoints: List[Network] = []
    visited: Dict[Network, int] = {}

    def explore(state: Network) -> int:
        if state in visited:
            return visited[state]
        candidates = removal_candidates(state)
        if not candidates:
            if not any(_equivalent(state, known) for known in fixpoints):
                fixpoints.append(state)
            visited[state] = 1
            return 1
        orders = sum(explore(_remove(state, node_id)[0]) for node_id in candidates)
        visited[state] = orders
        return orders

    orders = explore(network)
    report = ConfluenceReport(confluent=len(fixpoints) == 1, orders_checked=orders, results=tuple(fixpoints))
    if not report.confluent:
        logger.warning("Contraction is not confluent", distinct_results=len(fixpoints))
    return report


def _reservoir_id(anchor: str) -> str:
    return f"reservoir:{anchor}"


def boundary_potentials(
    network: Network,
    leads: Mapping[str, float],
    config: SimConfig | None = None,
    lead_conductance: float = 1.0,
) -> Dict[str, float]:
    """Стационарные потенциалы узлов, подключённых к резервуарам.

    Стационарность определяется по потокам внутренних узлов с допуском
    ε·PROBE_EPSILON_FACTOR: резервуары несут постоянный ток и в окно не входят.

    Args:
        network: Сеть без резервуаров.
        leads: Узел → потенциал резервуара, подключаемого к нему.
        config: Конфигурация интегратора.
        lead_conductance: Проводимость подводящих рёбер.

    Returns:
        Dict[str, float]: Стационарный потенциал каждого узла из leads.

    Raises:
        NotFoundError: Если узла из leads нет в сети.
        ConvergenceError: Если стационарное состояние не достигнуто за max_steps.
    """
    ensure_valid(network)
    driven = network
    for anchor, reservoir_potential in sorted(leads.items()):
        if anchor not in network.node_ids:
            raise NotFoundError(message=f"Узел '{anchor}' не найден", details={"node": anchor})
        gibbs = reservoir_potential - network.temperature * math.log(settings.RESERVOIR_OCCUPANCY)
        driven = attach_reservoir(
            driven, anchor, _reservoir_id(anchor), conductance=lead_conductance, gibbs_energy=gibbs
        )
    config = config or settings.simulation
    tight = config.model_copy(update={"epsilon": config.epsilon * settings.PROBE_EPSILON_FACTOR})
    reservoirs = [_reservoir_id(anchor) for anchor in leads]
    trajectory = simulate(driven, tight, reservoirs=reservoirs)
    if trajectory.terminated != Termination.STEADY:
        raise ConvergenceError(
            message="Сеть с резервуарами не достигла стационарного состояния",
            details={"max_steps": tight.max_steps, "generator": trajectory.final.generator},
        )
    final = trajectory.final_network()
    return {anchor: potential(final, anchor) for anchor in sorted(leads)}


def steady_state_equivalence(
    original: Network,
    reduced: Network,
    leads: Mapping[str, float],
    config: SimConfig | None = None,
) -> EquivalenceReport:
    """Сравнивает граничные стационарные потенциалы исходной и редуцированной сети.

    Args:
        original: Исходная сеть.
        reduced: Результат contract_chains.
        leads: Узел → потенциал резервуара (узлы должны остаться после редукции).
        config: Конфигурация интегратора (одна для обеих симуляций).

    Returns:
        EquivalenceReport: agree, если расхождение не больше 1e-6.
    """
    before = boundary_potentials(original, leads, config)
    after = boundary_potentials(reduced, leads, config)
    difference = max((abs(before[node_id] - after[node_id]) for node_id in before), default=0.0)
    return EquivalenceReport(
        agree=difference <= EQUIVALENCE_TOLERANCE,
        max_difference=difference,
        original=before,
        reduced=after,
    )
