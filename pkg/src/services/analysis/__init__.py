"""Пакет сценариев анализа: загрузка, вычисление и сохранение артефактов."""

from src.services.analysis.models import (
    AutomatonDocument,
    EquivalenceCheck,
    ReductionDocument,
    SolveDocument,
    ValidationDocument,
)
from src.services.analysis.service import AnalysisService

__all__ = [
    "AnalysisService",
    "AutomatonDocument",
    "EquivalenceCheck",
    "ReductionDocument",
    "SolveDocument",
    "ValidationDocument",
]
