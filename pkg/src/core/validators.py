"""Утилиты для валидации данных.

Этот модуль содержит классы и методы для проверки числовых входных данных:
конечность, положительность и неотрицательность величин модели.
"""

import math


class NumberValidator:
    """Класс для валидации вещественных параметров."""

    @classmethod
    def is_finite(cls, value: float) -> bool:
        """Проверяет, что число конечно (не NaN и не бесконечность).

        Args:
            value: Число для проверки.

        Returns:
            bool: True, если число конечно.
        """
        return math.isfinite(value)

    @classmethod
    def is_positive_finite(cls, value: float) -> bool:
        """Проверяет, что число конечно и строго положительно."""
        return math.isfinite(value) and value > 0

    @classmethod
    def is_non_negative_finite(cls, value: float) -> bool:
        """Проверяет, что число конечно и неотрицательно."""
        return math.isfinite(value) and value >= 0

