"""Интердикция кратчайшего пути: удаление k рёбер для максимизации стоимости пути.

Недостижимая цель оценивается как +∞. При равенстве выбирается лексикографически
наименьший отсортированный набор индексов рёбер.
"""

import math
from itertools import combinations
from typing import Callable, Iterable, Tuple

from src.core import settings
from src.core.exceptions import SizeLimitError
from src.core.logger import get_logger
from src.services.problems.models import InterdictionInstance, InterdictionResult, PathResult, WeightedGraph
from src.services.problems.shortest_path import shortest_path, sssp_oracle

logger = get_logger(__name__)

Solver = Callable[[WeightedGraph, str, str], PathResult]


def _evaluate(instance: InterdictionInstance, removed: Iterable[int], solver: Solver = shortest_path) -> PathResult:
    return solver(instance.graph.without(set(removed)), instance.source, instance.target)


def _result(removed: Tuple[int, ...], path: PathResult) -> InterdictionResult:
    return InterdictionResult(removed=tuple(sorted(removed)), reachable=path.reachable, cost=path.cost)


def _best(instance: InterdictionInstance, subsets: Iterable[Tuple[int, ...]], solver: Solver) -> InterdictionResult:
    best: Tuple[float, Tuple[int, ...], PathResult] | None = None
    for subset in subsets:
        path = _evaluate(instance, subset, solver)
        if best is None or path.value > best[0]:
            best = (path.value, subset, path)
    assert best is not None
    return _result(best[1], best[2])


def interdict(instance: InterdictionInstance) -> InterdictionResult:
    """Оптимальная интердикция с бюджетом k.

    При k = 1 каждое удаляемое ребро пробуется по очереди (полиномиально).
    При k ≥ 2 перебираются все k-подмножества удаляемых рёбер.

    Args:
        instance: Экземпляр задачи.

    Returns:
        InterdictionResult: Удалённые рёбра и кратчайший путь после удаления.

    Raises:
        SizeLimitError: Если подмножеств больше INTERDICTION_MAX_SUBSETS.
        DomainError: Если в графе есть отрицательный вес.
    """
    removable = instance.removable_edges
    subsets = math.comb(len(removable), instance.budget)
    if subsets > settings.INTERDICTION_MAX_SUBSETS:
        raise SizeLimitError(
            message="Слишком много подмножеств рёбер для полного перебора",
            details={"subsets": subsets, "limit": settings.INTERDICTION_MAX_SUBSETS},
        )
    log = logger.bind(budget=instance.budget, removable=len(removable))
    result = _best(instance, combinations(removable, instance.budget), shortest_path)
    log.info("Interdiction solved", removed=list(result.removed), reachable=result.reachable)
    return result


def interdict_sequential(instance: InterdictionInstance) -> InterdictionResult:
    """Жадная интердикция: k раз подряд ставится лучшая одиночная интердикция.

    Каждый следующий выбор делается на графе, из которого уже удалены прежние рёбра.
    """
    chosen: Tuple[int, ...] = ()
    for _ in range(instance.budget):
        remaining = [index for index in instance.removable_edges if index not in chosen]
        step = _best(instance, ((*chosen, index) for index in remaining), shortest_path)
        chosen = step.removed
    return _result(chosen, _evaluate(instance, chosen))


def interdict_single_bruteforce(instance: InterdictionInstance) -> InterdictionResult:
    """Оракул для k = 1: одиночные удаления, пути считаются перебором простых путей."""
    return _best(instance, ((index,) for index in instance.removable_edges), sssp_oracle)
