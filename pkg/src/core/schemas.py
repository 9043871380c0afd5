"""Схемы данных и перечисления.

Этот модуль содержит базовую Pydantic-модель и Enum-классы, общие для всех
сервисов: классы узлов, метки классов сложности, причины остановки симуляции
и вердикты решателей.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Базовая неизменяемая модель: лишние ключи запрещены, поля по псевдонимам и по именам."""
    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)


class NodeClass(str, Enum):
    """Класс узла по числу диссипативных рёбер."""
    IDLE = "idle"
    DETERMINISTIC = "deterministic"
    BRANCHING = "branching"


class ClassLabel(str, Enum):
    """Метка класса сложности сети."""
    REVERSIBLE_IDLE = "reversible-idle"
    P = "P"
    NP = "NP"
    NP_COMPLETE = "NP-complete"


class Termination(str, Enum):
    """Причина остановки симуляции."""
    STEADY = "steady"
    MAX_STEPS = "max_steps"


class SatClass(str, Enum):
    """Класс формулы по максимальной ширине клозы."""
    TRIVIAL = "trivial-1SAT"
    DETERMINISTIC = "deterministic-2SAT"
    GENERAL = "general-nSAT"


class Verdict(str, Enum):
    """Вердикт решателя выполнимости."""
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"


class ProblemKind(str, Enum):
    """Типы задач для команды solve."""
    SSSP = "sssp"
    SSSP_ORACLE = "sssp-oracle"
    TSP = "tsp"
    TSP_GREEDY = "tsp-greedy"
    TSP_ANNEAL = "tsp-anneal"
    INTERDICTION = "interdiction"
    SAT_CLASSIFY = "sat-classify"
    TWO_SAT = "2sat"
    SAT = "sat"
