"""Пакет мер пространства состояний и классификации сложности."""

from src.services.measures.models import ComponentReport, MeasureReport
from src.services.measures.operations import classify, kl_divergence, measure, measure_components, separation

__all__ = [
    "MeasureReport",
    "ComponentReport",
    "measure",
    "classify",
    "separation",
    "kl_divergence",
    "measure_components",
]
