from typing import List

import pytest

from src.services.dynamics import SimConfig, random_ensemble, simulate
from src.services.network import Network
from src.services.problems import InterdictionInstance, TspInstance
from tests.factories import EnsembleRun, build_network, summarize_run


@pytest.fixture
def two_node() -> Network:
    return build_network([("a", 2.0), ("b", 1.0)], [("a", "b", 1.0)])


@pytest.fixture
def relaxed_two_node() -> Network:
    return build_network([("a", 1.5), ("b", 1.5)], [("a", "b", 1.0)])


@pytest.fixture
def branching_chain() -> Network:
    return build_network(
        [("a", 3.0), ("b", 2.0), ("c", 1.0)],
        [("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.2)],
    )


@pytest.fixture
def dissipative_star() -> Network:
    return build_network(
        [("c", 4.0), ("x", 1.0), ("y", 1.0)],
        [("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.3)],
    )


@pytest.fixture
def reversible_triangle() -> Network:
    return build_network(
        [("a", 2.0), ("b", 1.0), ("c", 3.0)],
        [("a", "b", 1.0), ("b", "c", 0.5), ("a", "c", 2.0)],
    )


@pytest.fixture
def fig6_network() -> Network:
    """Два диссипативных треугольника, соединённых цепочкой a1–m1–m2–b1."""
    nodes = [(node_id, 2.0) for node_id in ("a1", "a2", "a3", "b1", "b2", "b3", "m1", "m2")]
    edges = [
        ("a1", "a2", 1.0, 0.1),
        ("a2", "a3", 1.0, 0.1),
        ("a1", "a3", 1.0, 0.2),
        ("b1", "b2", 1.0, 0.1),
        ("b2", "b3", 1.0, 0.1),
        ("b1", "b3", 1.0, 0.2),
        ("a1", "m1", 1.0),
        ("m1", "m2", 1.0, 0.3),
        ("m2", "b1", 1.0),
    ]
    return build_network(nodes, edges)


@pytest.fixture
def fast_config() -> SimConfig:
    return SimConfig(dt_initial=0.01, dt_max=0.5, epsilon=1e-6, window=50, max_steps=200_000)


@pytest.fixture
def greedy_gap_tsp() -> TspInstance:
    return TspInstance(distances=((0, 1, 2, 3), (1, 0, 1, 5), (2, 1, 0, 10), (3, 5, 10, 0)))


@pytest.fixture
def interdiction_gap() -> InterdictionInstance:
    return InterdictionInstance.model_validate(
        {
            "vertices": ["s", "u", "v", "w", "t"],
            "edges": [
                {"from": "s", "to": "u", "weight": 1},
                {"from": "s", "to": "v", "weight": 1},
                {"from": "u", "to": "w", "weight": 1},
                {"from": "v", "to": "w", "weight": 1},
                {"from": "w", "to": "t", "weight": 1},
                {"from": "u", "to": "t", "weight": 10},
                {"from": "v", "to": "t", "weight": 10},
            ],
            "source": "s",
            "target": "t",
            "budget": 2,
        }
    )


ENSEMBLE_CONFIG = SimConfig(epsilon=1e-10, window=50)


@pytest.fixture(scope="session")
def ensemble_runs() -> List[EnsembleRun]:
    """100 случайных сетей до 20 узлов, просимулированных до стационарного состояния."""
    networks = random_ensemble(100, seed=3, min_nodes=2, max_nodes=20)
    return [summarize_run(network, simulate(network, ENSEMBLE_CONFIG)) for network in networks]
