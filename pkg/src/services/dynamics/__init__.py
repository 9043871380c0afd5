"""Пакет динамики: закон потоков, энтропия, генератор процесса и проверки устойчивости."""

from src.services.dynamics.engine import (
    CompiledNetwork,
    entropy,
    generator,
    generator_delta,
    generator_from_flows,
    net_flows,
    simulate,
    step,
)
from src.services.dynamics.ensemble import is_connected, random_ensemble, random_network, run_ensemble
from src.services.dynamics.models import SimConfig, Snapshot, StabilityReport, Trajectory
from src.services.dynamics.stability import conserved_current_check, perturb, stability_probe

__all__ = [
    "SimConfig",
    "Snapshot",
    "Trajectory",
    "StabilityReport",
    "CompiledNetwork",
    "entropy",
    "generator",
    "net_flows",
    "generator_from_flows",
    "step",
    "simulate",
    "generator_delta",
    "stability_probe",
    "perturb",
    "conserved_current_check",
    "random_network",
    "random_ensemble",
    "run_ensemble",
    "is_connected",
]
