import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from src.core import Termination
from src.services.dynamics import Trajectory
from src.services.network import Edge, Network, Node


def build_network(nodes: Iterable[tuple], edges: Iterable[tuple], temperature: float = 1.0) -> Network:
    """nodes: (id, N[, G]); edges: (from, to, σ[, ΔQ[, g]])."""
    return Network(
        temperature=temperature,
        nodes=tuple(Node(id=node[0], occupancy=node[1], gibbs_energy=node[2] if len(node) > 2 else 0.0) for node in nodes),
        edges=tuple(
            Edge(
                source=edge[0],
                target=edge[1],
                conductance=edge[2],
                dissipation=edge[3] if len(edge) > 3 else 0.0,
                degeneracy=edge[4] if len(edge) > 4 else 1,
            )
            for edge in edges
        ),
    )


def network_document(network: Network) -> dict:
    return network.model_dump(mode="json", by_alias=True)


def write_json(path: Path, data) -> Path:
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def network_from_edges(edges: Iterable[tuple], occupancy: float = 2.0) -> Network:
    """Сеть, узлы которой берутся из концов рёбер с одинаковой заселённостью."""
    edges = list(edges)
    node_ids = sorted({edge[0] for edge in edges} | {edge[1] for edge in edges})
    return build_network([(node_id, occupancy) for node_id in node_ids], edges)


@dataclass(frozen=True)
class EnsembleRun:
    """Итог симуляции одной сети ансамбля без хранения всех снимков."""
    network: Network
    terminated: Termination
    steps: int
    min_entropy_delta: float
    max_generator_delta: float
    min_generator: float
    mass_drift: float
    final: Network


def summarize_run(network: Network, trajectory: Trajectory) -> EnsembleRun:
    entropies = np.array([snapshot.entropy for snapshot in trajectory.snapshots])
    generators = np.array([snapshot.generator for snapshot in trajectory.snapshots])
    total = sum(node.occupancy for node in network.nodes)
    drift = max(abs(float(np.sum(snapshot.occupancy_values)) - total) for snapshot in trajectory.snapshots)
    return EnsembleRun(
        network=network,
        terminated=trajectory.terminated,
        steps=len(trajectory.snapshots) - 1,
        min_entropy_delta=float(np.min(np.diff(entropies), initial=0.0)),
        max_generator_delta=float(np.max(np.diff(generators), initial=0.0)),
        min_generator=float(np.min(generators)),
        mass_drift=drift,
        final=trajectory.final_network(),
    )
