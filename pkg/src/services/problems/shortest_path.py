"""Кратчайший путь: алгоритм Дейкстры и переборный оракул по простым путям.

При равной стоимости выбирается лексикографически наименьшая последовательность вершин.
"""

import heapq
import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from src.core import settings
from src.core.exceptions import DomainError, NotFoundError, SizeLimitError
from src.core.logger import get_logger
from src.services.problems.models import PathResult, WeightedGraph

logger = get_logger(__name__)

Adjacency = Dict[str, List[Tuple[str, float]]]


def _adjacency(graph: WeightedGraph) -> Adjacency:
    adjacency: Adjacency = defaultdict(list)
    for index, edge in enumerate(graph.edges):
        if edge.weight < 0 or not math.isfinite(edge.weight):
            raise DomainError(
                message=f"Вес ребра {index} должен быть конечным и неотрицательным",
                details={"edge": index, "weight": edge.weight},
            )
        adjacency[edge.source].append((edge.target, edge.weight))
        if not graph.directed:
            adjacency[edge.target].append((edge.source, edge.weight))
    return adjacency


def _check_terminals(graph: WeightedGraph, source: str, target: str) -> None:
    for vertex in (source, target):
        if vertex not in graph.vertices:
            raise NotFoundError(message=f"Вершина '{vertex}' не найдена", details={"vertex": vertex})


def shortest_path(graph: WeightedGraph, source: str, target: str) -> PathResult:
    """Кратчайший путь алгоритмом Дейкстры.

    В куче лежат пары (стоимость, путь), поэтому при равенстве стоимостей
    первым извлекается лексикографически меньший путь.

    Args:
        graph: Граф с неотрицательными весами.
        source: Начальная вершина.
        target: Конечная вершина.

    Returns:
        PathResult: Стоимость и путь либо reachable=False.

    Raises:
        DomainError: Если есть отрицательный вес.
        NotFoundError: Если вершины нет в графе.
    """
    _check_terminals(graph, source, target)
    adjacency = _adjacency(graph)
    heap: List[Tuple[float, Tuple[str, ...]]] = [(0.0, (source,))]
    done: set[str] = set()

    while heap:
        cost, path = heapq.heappop(heap)
        vertex = path[-1]
        if vertex in done:
            continue
        if vertex == target:
            return PathResult(reachable=True, cost=cost, path=path)
        done.add(vertex)
        for neighbour, weight in adjacency[vertex]:
            if neighbour not in done:
                heapq.heappush(heap, (cost + weight, path + (neighbour,)))

    return PathResult(reachable=False)


def sssp_oracle(graph: WeightedGraph, source: str, target: str) -> PathResult:
    """Переборный оракул: минимум по всем простым путям с тем же правилом равенства.

    Raises:
        SizeLimitError: Если вершин больше SSSP_ORACLE_MAX_VERTICES.
    """
    if len(graph.vertices) > settings.SSSP_ORACLE_MAX_VERTICES:
        raise SizeLimitError(
            message="Граф слишком велик для перебора простых путей",
            details={"vertices": len(graph.vertices), "limit": settings.SSSP_ORACLE_MAX_VERTICES},
        )
    _check_terminals(graph, source, target)
    adjacency = _adjacency(graph)
    best: Tuple[float, Tuple[str, ...]] | None = None

    def extend(path: Tuple[str, ...], cost: float) -> None:
        nonlocal best
        vertex = path[-1]
        if vertex == target:
            if best is None or (cost, path) < best:
                best = (cost, path)
            return
        for neighbour, weight in adjacency[vertex]:
            if neighbour not in path:
                extend(path + (neighbour,), cost + weight)

    extend((source,), 0.0)
    if best is None:
        return PathResult(reachable=False)
    return PathResult(reachable=True, cost=best[0], path=best[1])


def path_cost(graph: WeightedGraph, path: Sequence[str]) -> float:
    """Пересчитывает стоимость пути по самым лёгким рёбрам между соседними вершинами.

    Raises:
        DomainError: Если соседние вершины пути не соединены ребром.
    """
    adjacency = _adjacency(graph)
    cost = 0.0
    for here, there in zip(path, path[1:]):
        weights = [weight for neighbour, weight in adjacency[here] if neighbour == there]
        if not weights:
            raise DomainError(message=f"Нет ребра {here} → {there}", details={"from": here, "to": there})
        cost += min(weights)
    return cost
