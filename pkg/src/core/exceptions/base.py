"""Базовые исключения приложения.

Этот модуль определяет иерархию исключений, используемых в приложении для
обработки ошибок различной природы: от ошибок валидации сети до численных сбоев интегратора.
"""

from typing import Any, Dict, Optional


class AppError(Exception):
    """Базовый класс для всех исключений приложения.

    Attributes:
        message: Человекочитаемое описание ошибки.
        code: Код ошибки для программной обработки.
        exit_code: Код завершения процесса командной строки.
        details: Дополнительные детали ошибки.
    """

    def __init__(
        self,
        message: str,
        code: str = "internal_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует базовое исключение.

        Args:
            message: Описание ошибки.
            code: Символьный код ошибки.
            exit_code: Код завершения процесса.
            details: Словарь с подробностями.
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.exit_code = exit_code
        self.details = details or {}


class ValidationError(AppError):
    """Ошибка валидации данных: нарушены инварианты сети."""

    def __init__(
        self,
        message: str,
        code: str = "validation_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку валидации."""
        super().__init__(message, code, exit_code, details)


class NotFoundError(AppError):
    """Ошибка: узел или ребро не найдены."""

    def __init__(
        self,
        message: str,
        code: str = "not_found",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку 'Не найдено'."""
        super().__init__(message, code, exit_code, details)


class InputFormatError(AppError):
    """Ошибка разбора входного файла (JSON, CSV, DIMACS)."""

    def __init__(
        self,
        message: str,
        code: str = "input_format_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку формата входных данных."""
        super().__init__(message, code, exit_code, details)


class DomainError(AppError):
    """Нарушение предусловия операции (отрицательный вес, чужой символ и т.д.)."""

    def __init__(
        self,
        message: str,
        code: str = "domain_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку предметной области."""
        super().__init__(message, code, exit_code, details)


class SizeLimitError(DomainError):
    """Экземпляр превышает предел полного перебора."""

    def __init__(
        self,
        message: str,
        code: str = "size_limit",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку превышения размера."""
        super().__init__(message, code, exit_code, details)


class NoComputationError(DomainError):
    """Сеть без диссипативных переходов не выполняет вычисления."""

    def __init__(
        self,
        message: str,
        code: str = "no_computation",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку холостой цепи."""
        super().__init__(message, code, exit_code, details)


class SimulationError(AppError):
    """Ошибки интегратора."""

    def __init__(
        self,
        message: str,
        code: str = "simulation_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку симуляции."""
        super().__init__(message, code, exit_code, details)


class StepRejectedError(SimulationError):
    """Шаг довёл бы заселённость узла до неположительного значения."""

    def __init__(
        self,
        message: str,
        code: str = "step_rejected",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует сигнал отклонённого шага."""
        super().__init__(message, code, exit_code, details)


class NumericalFailureError(SimulationError):
    """Получено нечисловое значение или шаг интегрирования выродился."""

    def __init__(
        self,
        message: str,
        code: str = "numerical_failure",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует численную ошибку."""
        super().__init__(message, code, exit_code, details)


class TrajectoryError(SimulationError):
    """Траектория слишком коротка для запрошенной операции."""

    def __init__(
        self,
        message: str,
        code: str = "trajectory_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку траектории."""
        super().__init__(message, code, exit_code, details)


class ConvergenceError(SimulationError):
    """Симуляция исчерпала max_steps, не достигнув стационарного состояния."""

    def __init__(
        self,
        message: str,
        code: str = "not_converged",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку сходимости."""
        super().__init__(message, code, exit_code, details)


class UsageError(AppError):
    """Неверное использование командной строки."""

    def __init__(
        self,
        message: str,
        code: str = "usage_error",
        exit_code: int = 2,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Инициализирует ошибку использования."""
        super().__init__(message, code, exit_code, details)
