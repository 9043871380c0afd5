"""Случайные ансамбли сетей и их пакетная симуляция."""

from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence

import networkx as nx
import numpy as np
from scipy.special import gammaln

from src.core import settings
from src.core.logger import get_logger
from src.services.dynamics.engine import simulate
from src.services.dynamics.models import SimConfig, Trajectory
from src.services.network import Edge, Network, Node

logger = get_logger(__name__)


def random_network(
    rng: np.random.Generator,
    size: int,
    extra_edges: int = 1,
    dissipative_probability: float = 0.5,
    temperature: float = 1.0,
) -> Network:
    """Строит случайную связную сеть, у которой существует равновесие.

    Остов — случайное дерево; рёбра дерева диссипативны с вероятностью
    dissipative_probability и изредка имеют вырождение 2. Каждому узлу
    приписывается сдвиг h так, что смещение ребра T·ln(g!) − ΔQ равно h_to − h_from.
    Замыкающие циклы рёбра получают ΔQ = h_from − h_to, поэтому суммарное смещение
    по любому циклу равно нулю.

    Args:
        rng: Генератор случайных чисел numpy.
        size: Число узлов (≥ 1).
        extra_edges: Желаемое число рёбер сверх остова.
        dissipative_probability: Вероятность диссипации на ребре остова.
        temperature: Температура сети.

    Returns:
        Network: Валидная сеть с узлами n00, n01, ...
    """
    ids = [f"n{index:02d}" for index in range(size)]
    nodes = tuple(
        Node(id=node_id, occupancy=float(rng.uniform(1.0, 5.0)), gibbs_energy=float(rng.uniform(-0.5, 0.5)))
        for node_id in ids
    )

    shift = {ids[0]: 0.0} if ids else {}
    edges: List[Edge] = []
    for index in range(1, size):
        parent, child = ids[int(rng.integers(0, index))], ids[index]
        source, target = (parent, child) if rng.random() < 0.5 else (child, parent)
        degeneracy = 2 if rng.random() < 0.1 else 1
        dissipation = float(rng.uniform(0.05, 0.3)) if rng.random() < dissipative_probability else 0.0
        offset = temperature * float(gammaln(degeneracy + 1)) - dissipation
        if source == parent:
            shift[child] = shift[parent] + offset
        else:
            shift[child] = shift[parent] - offset
        edges.append(
            Edge(
                source=source,
                target=target,
                conductance=float(rng.uniform(0.5, 2.0)),
                degeneracy=degeneracy,
                dissipation=dissipation,
            )
        )

    taken = {edge.pair for edge in edges}
    free_pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1 :] if frozenset((a, b)) not in taken]
    count = min(extra_edges, len(free_pairs))
    if count:
        for choice in rng.choice(len(free_pairs), size=count, replace=False):
            source, target = free_pairs[int(choice)]
            edges.append(
                Edge(
                    source=source,
                    target=target,
                    conductance=float(rng.uniform(0.5, 2.0)),
                    dissipation=shift[source] - shift[target],
                )
            )

    return Network(temperature=temperature, nodes=nodes, edges=tuple(edges))


def random_ensemble(
    count: int,
    seed: int,
    min_nodes: int = 3,
    max_nodes: int = 8,
    dissipative_probability: float = 0.5,
) -> List[Network]:
    """Детерминированный по seed набор случайных сетей."""
    rng = np.random.default_rng(seed)
    networks = []
    for _ in range(count):
        size = int(rng.integers(min_nodes, max_nodes + 1))
        extra = int(rng.integers(0, size))
        networks.append(random_network(rng, size, extra_edges=extra, dissipative_probability=dissipative_probability))
    return networks


def _simulate_member(payload: tuple[Network, SimConfig]) -> Trajectory:
    network, config = payload
    return simulate(network, config)


def run_ensemble(
    networks: Sequence[Network],
    config: SimConfig | None = None,
    workers: int | None = None,
) -> List[Trajectory]:
    """Симулирует независимые сети, при workers > 1 в пуле процессов.

    Порядок результатов совпадает с порядком входа при любом числе процессов.

    Args:
        networks: Сети ансамбля.
        config: Общая конфигурация интегратора.
        workers: Число процессов (по умолчанию ENSEMBLE_WORKERS).

    Returns:
        List[Trajectory]: Траектории в порядке входных сетей.
    """
    config = config or settings.simulation
    workers = workers or settings.ENSEMBLE_WORKERS
    logger.info("Running ensemble", size=len(networks), workers=workers)
    payloads = [(network, config) for network in networks]
    if workers <= 1:
        return [_simulate_member(payload) for payload in payloads]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_simulate_member, payloads))


def is_connected(network: Network) -> bool:
    """Связен ли граф рёбер сети."""
    graph = nx.Graph()
    graph.add_nodes_from(network.node_ids)
    graph.add_edges_from((edge.source, edge.target) for edge in network.edges)
    return graph.number_of_nodes() == 0 or nx.is_connected(graph)
