"""Пакет модели сети преобразования энергии."""

from src.services.network.models import Edge, Network, Node, Violation
from src.services.network.operations import (
    attach_reservoir,
    branching_nodes,
    classify_node,
    conducting_graph,
    density,
    ensure_valid,
    free_energy,
    log_degeneracy,
    node_dof,
    potential,
    resistance,
    stirling_warnings,
    validate,
)

__all__ = [
    "Node",
    "Edge",
    "Network",
    "Violation",
    "validate",
    "ensure_valid",
    "stirling_warnings",
    "density",
    "potential",
    "free_energy",
    "log_degeneracy",
    "resistance",
    "node_dof",
    "classify_node",
    "branching_nodes",
    "conducting_graph",
    "attach_reservoir",
]
