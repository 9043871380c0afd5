"""Документы, которые команды анализа записывают на диск."""

from typing import Any, Dict, Optional, Tuple

from src.core.schemas import FrozenModel, ProblemKind
from src.services.automata import Dfa, Nfa
from src.services.measures import MeasureReport
from src.services.network import Network, Violation
from src.services.reduction import ReductionTrace


class ReductionDocument(FrozenModel):
    """Редуцированная сеть, журнал и отчёты о мерах до и после."""
    network: Network
    trace: ReductionTrace
    before: MeasureReport
    after: MeasureReport


class EquivalenceCheck(FrozenModel):
    """Итог ограниченной проверки эквивалентности языков."""
    max_len: int
    equivalent: bool
    witness: Optional[Tuple[str, ...]] = None


class AutomatonDocument(FrozenModel):
    """НКА, его ДКА и (по запросу) проверка эквивалентности."""
    nfa: Nfa
    dfa: Dfa
    equivalence: Optional[EquivalenceCheck] = None


class SolveDocument(FrozenModel):
    """Результат решателя с сертификатом.

    Attributes:
        problem: Тип задачи.
        result: Поля результата (cost/verdict и сертификат).
        verified: Сертификат перепроверен детерминированно.
    """
    problem: ProblemKind
    result: Dict[str, Any]
    verified: bool


class ValidationDocument(FrozenModel):
    """Список нарушений инвариантов сети."""
    valid: bool
    violations: Tuple[Violation, ...] = ()
