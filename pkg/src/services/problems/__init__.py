"""Пакет задач: кратчайший путь, коммивояжёр, интердикция и выполнимость."""

from src.services.problems.interdiction import interdict, interdict_sequential, interdict_single_bruteforce
from src.services.problems.models import (
    CnfFormula,
    InterdictionInstance,
    InterdictionResult,
    PathResult,
    SatClassification,
    SatResult,
    ShortestPathInstance,
    TourResult,
    TspInstance,
    WeightedEdge,
    WeightedGraph,
)
from src.services.problems.sat import (
    check_assignment,
    implication_graph,
    sat_classify,
    solve_2sat,
    solve_sat_bruteforce,
)
from src.services.problems.shortest_path import path_cost, shortest_path, sssp_oracle
from src.services.problems.tsp import (
    canonical_tour,
    tour_cost,
    tsp_annealing,
    tsp_bruteforce,
    tsp_exact,
    tsp_greedy_mepp,
)

__all__ = [
    "WeightedEdge",
    "WeightedGraph",
    "ShortestPathInstance",
    "InterdictionInstance",
    "TspInstance",
    "CnfFormula",
    "PathResult",
    "TourResult",
    "InterdictionResult",
    "SatResult",
    "SatClassification",
    "shortest_path",
    "sssp_oracle",
    "path_cost",
    "tsp_exact",
    "tsp_bruteforce",
    "tsp_greedy_mepp",
    "tsp_annealing",
    "tour_cost",
    "canonical_tour",
    "interdict",
    "interdict_sequential",
    "interdict_single_bruteforce",
    "sat_classify",
    "solve_2sat",
    "solve_sat_bruteforce",
    "check_assignment",
    "implication_graph",
]
