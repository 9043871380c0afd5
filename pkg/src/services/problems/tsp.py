"""Задача коммивояжёра: динамическое программирование, перебор, жадный спуск и отжиг."""

from itertools import permutations
from typing import List, Sequence, Tuple

import numpy as np

from src.core import settings
from src.core.exceptions import DomainError, SizeLimitError
from src.core.logger import get_logger
from src.services.problems.models import TourResult, TspInstance

logger = get_logger(__name__)


def tour_cost(instance: TspInstance, tour: Sequence[int]) -> float:
    """Стоимость замкнутого тура.

    Raises:
        DomainError: Если тур не является перестановкой всех городов.
    """
    if sorted(tour) != list(range(instance.size)):
        raise DomainError(message="Тур должен посетить каждый город ровно один раз", details={"tour": list(tour)})
    distances = instance.distances
    return sum(distances[here][there] for here, there in zip(tour, (*tour[1:], tour[0])))


def canonical_tour(tour: Sequence[int]) -> Tuple[int, ...]:
    """Поворачивает тур к городу 0 и выбирает ориентацию с меньшим вторым городом."""
    start = list(tour).index(0)
    rotated = (*tour[start:], *tour[:start])
    reversed_tour = (rotated[0], *reversed(rotated[1:]))
    return min(rotated, reversed_tour)


def _result(instance: TspInstance, tour: Sequence[int]) -> TourResult:
    canonical = canonical_tour(tour)
    return TourResult(tour=canonical, cost=tour_cost(instance, canonical))


def tsp_exact(instance: TspInstance) -> TourResult:
    """Оптимальный тур алгоритмом Хелда–Карпа, векторизованным по подмножествам.

    Args:
        instance: Экземпляр с n ≤ TSP_EXACT_MAX_CITIES.

    Returns:
        TourResult: Канонический оптимальный тур и его стоимость.

    Raises:
        SizeLimitError: Если городов слишком много.
    """
    size = instance.size
    if size > settings.TSP_EXACT_MAX_CITIES:
        raise SizeLimitError(
            message="Слишком много городов для динамического программирования",
            details={"cities": size, "limit": settings.TSP_EXACT_MAX_CITIES},
        )
    matrix = np.asarray(instance.distances, dtype=float)
    inner = matrix[1:, 1:]
    count = size - 1
    full = (1 << count) - 1

    cost = np.full((1 << count, count), np.inf)
    parent = np.full((1 << count, count), -1, dtype=np.intp)
    for city in range(count):
        cost[1 << city, city] = matrix[0, city + 1]

    for mask in range(1, full + 1):
        members = np.array([city for city in range(count) if mask >> city & 1], dtype=np.intp)
        if members.size < 2:
            continue
        previous = mask ^ (1 << members)
        candidates = cost[previous, :] + inner[:, members].T
        best = np.argmin(candidates, axis=1)
        cost[mask, members] = candidates[np.arange(members.size), best]
        parent[mask, members] = best

    closing = cost[full, :] + matrix[1:, 0]
    last = int(np.argmin(closing))
    tour: List[int] = []
    mask = full
    while last >= 0:
        tour.append(last + 1)
        previous = int(parent[mask, last])
        mask ^= 1 << last
        last = previous
    tour.append(0)
    result = _result(instance, tour[::-1])
    logger.info("Exact tour found", cities=size, cost=result.cost)
    return result


def tsp_bruteforce(instance: TspInstance) -> TourResult:
    """Переборный оракул по всем перестановкам (n ≤ TSP_BRUTEFORCE_MAX_CITIES).

    Raises:
        SizeLimitError: Если городов слишком много.
    """
    size = instance.size
    if size > settings.TSP_BRUTEFORCE_MAX_CITIES:
        raise SizeLimitError(
            message="Слишком много городов для полного перебора",
            details={"cities": size, "limit": settings.TSP_BRUTEFORCE_MAX_CITIES},
        )
    best: Tuple[float, Tuple[int, ...]] | None = None
    for order in permutations(range(1, size)):
        if order[0] > order[-1]:
            continue
        tour = (0, *order)
        candidate = (tour_cost(instance, tour), tour)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return TourResult(tour=best[1], cost=best[0])


def tsp_greedy_mepp(instance: TspInstance) -> TourResult:
    """Жадный спуск: из города 0 всякий раз в ближайший непосещённый (равенство по индексу).

    Тур возвращается в порядке обхода, без канонизации.
    """
    distances = instance.distances
    tour = [0]
    unvisited = set(range(1, instance.size))
    while unvisited:
        here = tour[-1]
        nearest = min(unvisited, key=lambda city: (distances[here][city], city))
        tour.append(nearest)
        unvisited.remove(nearest)
    return TourResult(tour=tuple(tour), cost=tour_cost(instance, tour))


def tsp_annealing(
    instance: TspInstance,
    seed: int = 0,
    iterations: int = 20_000,
    initial_temperature: float | None = None,
    cooling: float = 0.999,
) -> TourResult:
    """Имитация отжига с ходами 2-opt.

    Args:
        instance: Экземпляр задачи.
        seed: Зерно генератора numpy.
        iterations: Число пробных ходов.
        initial_temperature: Начальная температура (по умолчанию средняя длина ребра).
        cooling: Множитель охлаждения за ход.

    Returns:
        TourResult: Лучший найденный тур в канонической форме.
    """
    rng = np.random.default_rng(seed)
    matrix = np.asarray(instance.distances, dtype=float)
    size = instance.size
    temperature = initial_temperature if initial_temperature is not None else float(matrix.sum()) / (size * size)
    tour = [0, *(int(city) for city in rng.permutation(np.arange(1, size)))]
    current = tour_cost(instance, tour)
    best_tour, best_cost = list(tour), current

    for _ in range(iterations):
        i, j = sorted(int(index) for index in rng.choice(np.arange(1, size), size=2, replace=False))
        a, b = tour[i - 1], tour[i]
        c, d = tour[j], tour[(j + 1) % size]
        delta = matrix[a, c] + matrix[b, d] - matrix[a, b] - matrix[c, d]
        if delta <= 0 or (temperature > 0 and rng.random() < np.exp(-delta / temperature)):
            tour[i : j + 1] = tour[i : j + 1][::-1]
            current += delta
            if current < best_cost - 1e-12:
                best_tour, best_cost = list(tour), current
        temperature *= cooling

    result = _result(instance, best_tour)
    logger.info("Annealing finished", cities=size, cost=result.cost, seed=seed)
    return result
