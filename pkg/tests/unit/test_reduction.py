import math

import numpy as np
import pytest

from src.core import ClassLabel, Termination, settings
from src.core.exceptions import ConvergenceError, NotFoundError, SizeLimitError
from src.services.dynamics import SimConfig, net_flows, simulate
from src.services.measures import measure
from src.services.network import attach_reservoir
from src.services.reduction import (
    boundary_potentials,
    confluence_check,
    contract_chains,
    is_reduced,
    removal_candidates,
    steady_state_equivalence,
)
from tests.factories import build_network


@pytest.fixture
def three_path():
    return build_network(
        [("a", 2.0), ("m", 2.0), ("b", 2.0)],
        [("a", "m", 1.0, 0.1), ("m", "b", 1.0, 0.2)],
    )


def square(dissipations):
    return build_network(
        [(node_id, 2.0) for node_id in "abcd"],
        [(source, target, 1.0, dissipation) for (source, target), dissipation in zip(("ab", "bc", "cd", "da"), dissipations)],
    )


def test_three_path_collapses_to_single_edge(three_path):
    reduced, trace = contract_chains(three_path)
    assert reduced.node_ids == ["a", "b"]
    (edge,) = reduced.edges
    assert (edge.source, edge.target) == ("a", "b")
    assert edge.conductance == pytest.approx(0.5)
    assert edge.dissipation == pytest.approx(0.3)
    assert trace.removed_nodes == ("m",)
    assert trace.merged_edges[0].replaced == ("a->m", "m->b")
    assert trace.rounds == 1


def test_merge_reorients_dissipation():
    network = build_network([("z", 1.0), ("m", 1.0), ("a", 1.0)], [("z", "m", 2.0, 0.4), ("a", "m", 2.0, 0.1)])
    reduced, _ = contract_chains(network)
    (edge,) = reduced.edges
    assert (edge.source, edge.target) == ("a", "z")
    assert edge.dissipation == pytest.approx(0.1 - 0.4)
    assert edge.conductance == pytest.approx(1.0)


def test_triangle_is_already_reduced(reversible_triangle):
    reduced, trace = contract_chains(reversible_triangle)
    assert reduced == reversible_triangle
    assert trace.removed_nodes == ()
    assert trace.rounds == 0


def test_four_path_needs_two_rounds():
    network = build_network(
        [(node_id, 1.0) for node_id in "abcd"],
        [("a", "b", 1.0), ("b", "c", 1.0), ("c", "d", 1.0)],
    )
    assert removal_candidates(network) == ["b", "c"]
    reduced, trace = contract_chains(network)
    assert reduced.node_ids == ["a", "d"]
    assert trace.removed_nodes == ("b", "c")
    assert trace.rounds == 2
    assert reduced.edges[0].conductance == pytest.approx(1 / 3)


def test_non_conducting_edge_blocks_removal():
    network = build_network([("a", 1.0), ("m", 1.0), ("b", 1.0)], [("a", "m", 1.0), ("m", "b", 0.0)])
    assert is_reduced(network)


def test_contraction_is_idempotent(fig6_network):
    reduced, _ = contract_chains(fig6_network)
    again, trace = contract_chains(reduced)
    assert again == reduced
    assert trace.removed_nodes == ()


def test_chain_between_triangles_turns_np_into_np_complete(fig6_network):
    reduced, trace = contract_chains(fig6_network)
    assert measure(fig6_network).class_label == ClassLabel.NP
    assert measure(reduced).class_label == ClassLabel.NP_COMPLETE
    assert trace.removed_nodes == ("m1", "m2")
    assert trace.rounds == 2
    bridge = next(edge for edge in reduced.edges if edge.pair == frozenset(("a1", "b1")))
    assert (bridge.source, bridge.target) == ("a1", "b1")
    assert bridge.dissipation == pytest.approx(0.3)


def test_uniform_square_is_confluent():
    report = confluence_check(square((0.1, 0.1, 0.1, 0.1)))
    assert report.confluent
    assert report.orders_checked == 4
    assert len(report.results) == 1


def test_non_uniform_square_reports_every_result():
    report = confluence_check(square((0.1, 0.2, 0.4, 0.8)))
    assert not report.confluent
    assert len(report.results) > 1


def test_paths_are_confluent():
    network = build_network(
        [(f"p{index}", 1.0 + index) for index in range(5)],
        [(f"p{index}", f"p{index + 1}", 1.0 + index, 0.1 * index) for index in range(4)],
    )
    report = confluence_check(network)
    assert report.confluent
    assert report.orders_checked == 6


def test_confluence_check_size_limit(fig6_network):
    big = fig6_network.model_copy(update={"nodes": (*fig6_network.nodes, *build_network([("x", 1.0)], []).nodes)})
    with pytest.raises(SizeLimitError):
        confluence_check(big)


def test_reduction_preserves_boundary_potentials(three_path):
    reduced, _ = contract_chains(three_path)
    config = SimConfig(dt_initial=0.01, dt_max=0.5, max_steps=20_000)
    report = steady_state_equivalence(three_path, reduced, {"a": 1.0, "b": 0.0}, config)
    assert report.agree
    assert report.max_difference <= 1e-6
    assert report.original["a"] == pytest.approx(0.825, abs=1e-5)
    assert report.original["b"] == pytest.approx(0.175, abs=1e-5)


def test_boundary_potentials_unknown_anchor(three_path):
    with pytest.raises(NotFoundError):
        boundary_potentials(three_path, {"ghost": 1.0})


def test_reservoir_driven_network_reaches_steady_state(three_path):
    gibbs = 1.0 - math.log(settings.RESERVOIR_OCCUPANCY)
    driven = attach_reservoir(three_path, "a", "reservoir:a", gibbs_energy=gibbs)
    driven = attach_reservoir(driven, "b", "reservoir:b", gibbs_energy=-math.log(settings.RESERVOIR_OCCUPANCY))
    config = SimConfig(dt_initial=0.01, dt_max=0.5, epsilon=1e-9, max_steps=20_000)
    trajectory = simulate(driven, config, reservoirs=["reservoir:a", "reservoir:b"])
    assert trajectory.terminated == Termination.STEADY
    rates = net_flows(trajectory.final_network())
    assert rates["reservoir:a"] == pytest.approx(-0.175, abs=1e-6)
    assert rates["reservoir:b"] == pytest.approx(0.175, abs=1e-6)
    assert abs(rates["m"]) <= 1e-9


def test_boundary_potentials_raises_when_not_converged(three_path):
    config = SimConfig(dt_initial=0.01, dt_max=0.5, max_steps=10)
    with pytest.raises(ConvergenceError) as error:
        boundary_potentials(three_path, {"a": 1.0, "b": 0.0}, config)
    assert error.value.code == "not_converged"
    assert error.value.exit_code == 1


def test_four_path_reduction_preserves_boundary_potentials():
    network = build_network(
        [(node_id, 1.0) for node_id in "abcd"],
        [("a", "b", 1.0), ("b", "c", 1.0), ("c", "d", 1.0)],
    )
    reduced, _ = contract_chains(network)
    config = SimConfig(dt_initial=0.01, dt_max=0.5, max_steps=50_000)
    report = steady_state_equivalence(network, reduced, {"a": 1.0, "d": 0.0}, config)
    assert report.agree
    assert report.original["a"] == pytest.approx(0.8, abs=1e-5)
    assert report.original["d"] == pytest.approx(0.2, abs=1e-5)


def chain_fixture(seed):
    """Путь из 3–6 узлов со случайной ориентацией; при чётном seed к началу пути прикреплён треугольник."""
    rng = np.random.default_rng(seed)
    length = int(rng.integers(3, 7))
    path = [f"p{index}" for index in range(length)]
    nodes = [(node_id, float(rng.uniform(1.0, 3.0))) for node_id in path]
    edges = []
    for left, right in zip(path, path[1:]):
        source, target = (left, right) if rng.random() < 0.5 else (right, left)
        edges.append((source, target, float(rng.uniform(0.5, 2.0)), float(rng.uniform(-0.2, 0.2))))
    if seed % 2 == 0:
        nodes += [("t1", float(rng.uniform(1.0, 3.0))), ("t2", float(rng.uniform(1.0, 3.0)))]
        for source, target in (("p0", "t1"), ("t1", "t2"), ("t2", "p0")):
            edges.append((source, target, float(rng.uniform(0.5, 2.0)), float(rng.uniform(-0.2, 0.2))))
    leads = {path[0]: float(rng.uniform(0.0, 1.0)), path[-1]: float(rng.uniform(0.0, 1.0))}
    return build_network(nodes, edges), leads


@pytest.mark.parametrize("seed", range(20))
def test_chain_reduction_preserves_boundary_potentials(seed):
    network, leads = chain_fixture(seed)
    reduced, trace = contract_chains(network)
    assert len(trace.removed_nodes) == len(network.nodes) - len(reduced.nodes) > 0
    assert contract_chains(reduced)[0] == reduced
    assert confluence_check(network).confluent
    config = SimConfig(dt_initial=0.01, dt_max=0.5, max_steps=100_000)
    report = steady_state_equivalence(network, reduced, leads, config)
    assert report.agree, report.max_difference
