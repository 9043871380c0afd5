"""Ядро приложения: конфигурация, схемы и базовые компоненты."""

from src.core.config import settings
from src.core.schemas import (
    ClassLabel,
    FrozenModel,
    NodeClass,
    ProblemKind,
    SatClass,
    Termination,
    Verdict,
)

__all__ = [
    "settings",
    "FrozenModel",
    "NodeClass",
    "ClassLabel",
    "Termination",
    "SatClass",
    "Verdict",
    "ProblemKind",
]
