"""Выполнимость КНФ: классификация по ширине, 2-SAT через граф импликаций и перебор."""

from typing import Sequence

import networkx as nx
import numpy as np

from src.core import SatClass, Verdict, settings
from src.core.exceptions import DomainError, SizeLimitError
from src.core.logger import get_logger
from src.services.problems.models import CnfFormula, SatClassification, SatResult

logger = get_logger(__name__)

CHUNK_SIZE = 1 << 16


def sat_classify(formula: CnfFormula) -> SatClassification:
    """Класс формулы по максимальной ширине клозы: ≤ 1, 2 или ≥ 3 литерала."""
    width = formula.width
    if width <= 1:
        sat_class = SatClass.TRIVIAL
    elif width == 2:
        sat_class = SatClass.DETERMINISTIC
    else:
        sat_class = SatClass.GENERAL
    return SatClassification(sat_class=sat_class, width=width)


def check_assignment(formula: CnfFormula, assignment: Sequence[bool]) -> bool:
    """Выполняет ли назначение (x1 первым) все клозы.

    Raises:
        DomainError: Если длина назначения не равна числу переменных.
    """
    if len(assignment) != formula.variables:
        raise DomainError(
            message="Длина назначения не совпадает с числом переменных",
            details={"expected": formula.variables, "got": len(assignment)},
        )
    return all(any(assignment[abs(literal) - 1] == (literal > 0) for literal in clause) for clause in formula.clauses)


def implication_graph(formula: CnfFormula) -> nx.DiGraph:
    """Граф импликаций: (a ∨ b) даёт ¬a ⇒ b и ¬b ⇒ a, (a) даёт ¬a ⇒ a."""
    graph = nx.DiGraph()
    for variable in range(1, formula.variables + 1):
        graph.add_nodes_from((variable, -variable))
    for clause in formula.clauses:
        if len(clause) == 1:
            graph.add_edge(-clause[0], clause[0])
        else:
            first, second = clause
            graph.add_edge(-first, second)
            graph.add_edge(-second, first)
    return graph


def solve_2sat(formula: CnfFormula) -> SatResult:
    """Решает 2-SAT через сильно связные компоненты графа импликаций.

    Формула невыполнима, если переменная и её отрицание в одной компоненте.
    Иначе переменная истинна, если её компонента идёт позже компоненты отрицания
    в топологическом порядке конденсации.

    Args:
        formula: Формула с шириной клоз ≤ 2.

    Returns:
        SatResult: Вердикт и назначение.

    Raises:
        DomainError: Если есть клоза шире двух литералов.
    """
    if formula.width > 2:
        raise DomainError(
            message="2-SAT допускает клозы не шире двух литералов",
            details={"width": formula.width},
        )
    graph = implication_graph(formula)
    condensed = nx.condensation(graph)
    component = condensed.graph["mapping"]
    position = {node: index for index, node in enumerate(nx.topological_sort(condensed))}

    assignment = []
    for variable in range(1, formula.variables + 1):
        positive, negative = component[variable], component[-variable]
        if positive == negative:
            logger.info("2-SAT unsatisfiable", variable=variable)
            return SatResult(verdict=Verdict.UNSATISFIABLE)
        assignment.append(position[positive] > position[negative])
    return SatResult(verdict=Verdict.SATISFIABLE, assignment=tuple(assignment))


def _clause_masks(formula: CnfFormula, bits: np.ndarray) -> np.ndarray:
    satisfied = np.ones(bits.shape[0], dtype=bool)
    for clause in formula.clauses:
        clause_value = np.zeros(bits.shape[0], dtype=bool)
        for literal in clause:
            column = bits[:, abs(literal) - 1]
            clause_value |= column if literal > 0 else ~column
        satisfied &= clause_value
    return satisfied


def solve_sat_bruteforce(formula: CnfFormula) -> SatResult:
    """Перебор назначений в лексикографическом порядке (x1 — старший бит).

    Назначения проверяются блоками numpy; возвращается первая модель.

    Raises:
        SizeLimitError: Если переменных больше SAT_BRUTEFORCE_MAX_VARS.
    """
    count = formula.variables
    if count > settings.SAT_BRUTEFORCE_MAX_VARS:
        raise SizeLimitError(
            message="Слишком много переменных для полного перебора",
            details={"variables": count, "limit": settings.SAT_BRUTEFORCE_MAX_VARS},
        )
    shifts = np.arange(count - 1, -1, -1, dtype=np.int64)
    total = 1 << count
    for start in range(0, total, CHUNK_SIZE):
        values = np.arange(start, min(start + CHUNK_SIZE, total), dtype=np.int64)
        bits = ((values[:, None] >> shifts) & 1).astype(bool)
        hits = np.flatnonzero(_clause_masks(formula, bits))
        if hits.size:
            return SatResult(verdict=Verdict.SATISFIABLE, assignment=tuple(bool(bit) for bit in bits[hits[0]]))
    return SatResult(verdict=Verdict.UNSATISFIABLE)
