"""Пакет с исключениями приложения."""

from src.core.exceptions.base import (
    AppError,
    ConvergenceError,
    DomainError,
    InputFormatError,
    NoComputationError,
    NotFoundError,
    NumericalFailureError,
    SimulationError,
    SizeLimitError,
    StepRejectedError,
    TrajectoryError,
    UsageError,
    ValidationError,
)

__all__ = [
    "AppError",
    "ValidationError",
    "NotFoundError",
    "InputFormatError",
    "DomainError",
    "SizeLimitError",
    "NoComputationError",
    "SimulationError",
    "StepRejectedError",
    "NumericalFailureError",
    "TrajectoryError",
    "ConvergenceError",
    "UsageError",
]
