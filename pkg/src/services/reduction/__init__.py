"""Пакет редукции сети стягиванием детерминированных цепочек."""

from src.services.reduction.models import ConfluenceReport, EquivalenceReport, MergedEdge, ReductionTrace
from src.services.reduction.operations import (
    boundary_potentials,
    confluence_check,
    contract_chains,
    is_reduced,
    removal_candidates,
    steady_state_equivalence,
)

__all__ = [
    "ReductionTrace",
    "MergedEdge",
    "ConfluenceReport",
    "EquivalenceReport",
    "contract_chains",
    "is_reduced",
    "removal_candidates",
    "confluence_check",
    "boundary_potentials",
    "steady_state_equivalence",
]
