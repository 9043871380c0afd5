import math

import numpy as np
import pytest

from src.core import ClassLabel
from src.core.exceptions import DomainError
from src.services.dynamics import random_ensemble, random_network
from src.services.measures import kl_divergence, measure, measure_components, separation
from src.services.network import Edge, Node, branching_nodes
from src.services.reduction import contract_chains
from tests.factories import build_network, network_from_edges


def test_deterministic_chain_is_p():
    network = build_network([("a", 5.0), ("b", 1.0), ("c", 1.0)], [("a", "b", 1.0, 0.2), ("b", "c", 1.0)])
    report = measure(network)
    assert report.two_dof_term == pytest.approx(1.0)
    assert report.multi_dof_term == 0.0
    assert report.class_label == ClassLabel.P


def test_outward_star_is_np_complete(dissipative_star):
    report = measure(dissipative_star)
    assert report.multi_dof_term == pytest.approx(1.6)
    assert report.two_dof_term == 0.0
    assert report.mu_diff == pytest.approx(1.6)
    assert report.mu_NP == pytest.approx(report.mu_P + 1.6)
    assert report.class_label == ClassLabel.NP_COMPLETE


def test_reversible_network_is_idle(reversible_triangle):
    report = measure(reversible_triangle)
    assert report.class_label == ClassLabel.REVERSIBLE_IDLE
    assert report.mu_P == report.mu_NP


def test_mixed_network_is_np(fig6_network):
    report = measure(fig6_network)
    assert report.two_dof_term > 0
    assert report.multi_dof_term > 0
    assert report.class_label == ClassLabel.NP


def test_conserved_term_matches_entropy_without_dissipation():
    network = build_network([("a", 2.0), ("b", 1.0)], [("a", "b", 1.0)])
    assert measure(network).conserved_term == pytest.approx(3 - math.log(2))


def test_separation_scales_with_dissipation(dissipative_star):
    doubled = dissipative_star.model_copy(
        update={"edges": tuple(edge.model_copy(update={"dissipation": 2 * edge.dissipation}) for edge in dissipative_star.edges)}
    )
    assert separation(measure(doubled)) == pytest.approx(2 * separation(measure(dissipative_star)))


def dissipative_part(report):
    return report.two_dof_term + report.multi_dof_term


def test_adding_dissipative_edge_grows_dissipative_part():
    rng = np.random.default_rng(17)
    checked = 0
    for network in random_ensemble(80, seed=17, max_nodes=10):
        hubs = sorted(branching_nodes(network))
        if not hubs:
            continue
        hub = hubs[int(rng.integers(0, len(hubs)))]
        dissipation = float(rng.uniform(0.01, 0.5))
        extended = network.model_copy(
            update={
                "nodes": (*network.nodes, Node(id="leaf", occupancy=float(rng.uniform(0.5, 6.0)))),
                "edges": (
                    *network.edges,
                    Edge(source=hub, target="leaf", conductance=float(rng.uniform(0.5, 2.0)), dissipation=dissipation),
                ),
            }
        )
        before, after = measure(network), measure(extended)
        gain = network.node_map()[hub].occupancy * dissipation / network.temperature
        assert dissipative_part(after) == pytest.approx(dissipative_part(before) + gain)
        assert after.multi_dof_term == pytest.approx(before.multi_dof_term + gain)
        checked += 1
    assert checked >= 20


def test_edge_between_existing_nodes_grows_dissipative_part():
    rng = np.random.default_rng(29)
    checked = 0
    for network in random_ensemble(80, seed=29, min_nodes=4, max_nodes=10):
        hubs = branching_nodes(network)
        taken = {edge.pair for edge in network.edges}
        free = [
            (hub, other)
            for hub in sorted(hubs)
            for other in network.node_ids
            if other != hub and frozenset((hub, other)) not in taken
        ]
        if not free:
            continue
        hub, other = free[int(rng.integers(0, len(free)))]
        dissipation = float(rng.uniform(0.01, 0.5))
        extended = network.model_copy(
            update={"edges": (*network.edges, Edge(source=hub, target=other, conductance=1.0, dissipation=dissipation))}
        )
        gain = network.node_map()[hub].occupancy * dissipation / network.temperature
        assert dissipative_part(measure(extended)) == pytest.approx(dissipative_part(measure(network)) + gain)
        checked += 1
    assert checked >= 20


def test_mu_np_can_drop_through_conserved_term(dissipative_star):
    extended = dissipative_star.model_copy(
        update={
            "nodes": (*dissipative_star.nodes, Node(id="z", occupancy=1.0)),
            "edges": (*dissipative_star.edges, Edge(source="c", target="z", conductance=1.0, dissipation=0.2)),
        }
    )
    before, after = measure(dissipative_star), measure(extended)
    assert dissipative_part(after) == pytest.approx(dissipative_part(before) + 0.8)
    assert after.conserved_term < before.conserved_term
    assert after.mu_NP < before.mu_NP


def test_relabelling_nodes_keeps_report(fig6_network):
    rename = {node_id: f"q{index}" for index, node_id in enumerate(reversed(fig6_network.node_ids))}
    relabelled = fig6_network.model_copy(
        update={
            "nodes": tuple(node.model_copy(update={"id": rename[node.id]}) for node in fig6_network.nodes),
            "edges": tuple(
                edge.model_copy(update={"source": rename[edge.source], "target": rename[edge.target]})
                for edge in fig6_network.edges
            ),
        }
    )
    original, renamed = measure(fig6_network), measure(relabelled)
    assert renamed.class_label == original.class_label
    assert renamed.mu_NP == pytest.approx(original.mu_NP)
    assert renamed.mu_diff == pytest.approx(original.mu_diff)


def test_components_add_up():
    network = build_network(
        [("a", 2.0), ("b", 1.0), ("c", 4.0), ("x", 1.0), ("y", 1.0)],
        [("a", "b", 1.0, 0.2), ("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.3)],
    )
    components = measure_components(network)
    whole = measure(network)
    assert [component.nodes for component in components] == [("a", "b"), ("c", "x", "y")]
    assert [component.report.class_label for component in components] == [ClassLabel.P, ClassLabel.NP_COMPLETE]
    for field in ("conserved_term", "two_dof_term", "multi_dof_term"):
        assert sum(getattr(component.report, field) for component in components) == pytest.approx(getattr(whole, field))


def test_branching_free_networks_have_zero_separation():
    rng = np.random.default_rng(21)
    for _ in range(100):
        network = random_network(rng, int(rng.integers(2, 21)), extra_edges=0)
        report = measure(network)
        if branching_nodes(network):
            assert report.mu_diff > 0
        else:
            assert report.mu_diff == 0.0


LABELLED_NETWORKS = [
    ([("a", "b", 1.0)], ClassLabel.REVERSIBLE_IDLE),
    ([("a", "b", 1.0), ("b", "c", 0.5), ("a", "c", 2.0)], ClassLabel.REVERSIBLE_IDLE),
    ([("a", "b", 1.0), ("b", "c", 1.0)], ClassLabel.REVERSIBLE_IDLE),
    ([("a", "b", 0.0, 0.3)], ClassLabel.REVERSIBLE_IDLE),
    ([("c", "x", 1.0), ("c", "y", 1.0), ("c", "z", 1.0)], ClassLabel.REVERSIBLE_IDLE),
    ([("a", "b", 1.0), ("b", "c", 1.0), ("c", "d", 1.0), ("a", "d", 1.0)], ClassLabel.REVERSIBLE_IDLE),
    ([("a", "b", 1.0, 0.1)], ClassLabel.P),
    ([("a", "b", 1.0, 0.2), ("b", "c", 1.0)], ClassLabel.P),
    ([("a", "b", 1.0), ("b", "c", 1.0, 0.1)], ClassLabel.P),
    ([("a", "b", 1.0, 0.1), ("c", "d", 1.0, 0.2)], ClassLabel.P),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0), ("c", "d", 1.0, 0.2)], ClassLabel.P),
    ([("a", "b", 1.0, -0.1)], ClassLabel.P),
    ([("a", "b", 1.0, 0.1), ("b", "c", 2.0), ("c", "d", 1.0, 0.1)], ClassLabel.P),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0), ("a", "c", 1.0)], ClassLabel.P),
    ([("a", "b", 1.0, 0.1), ("b", "c", 0.0, 0.2)], ClassLabel.P),
    ([("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.3)], ClassLabel.NP_COMPLETE),
    ([("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.1), ("c", "z", 1.0, 0.1)], ClassLabel.NP_COMPLETE),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.1), ("a", "c", 1.0, 0.2)], ClassLabel.NP_COMPLETE),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.2)], ClassLabel.NP_COMPLETE),
    ([("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.2), ("c", "z", 1.0)], ClassLabel.NP_COMPLETE),
    (
        [("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.1), ("c", "d", 1.0, 0.1), ("a", "d", 1.0, 0.1)],
        ClassLabel.NP_COMPLETE,
    ),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.1), ("c", "d", 1.0, 0.1)], ClassLabel.NP_COMPLETE),
    (
        [("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.1), ("d", "u", 1.0, 0.2), ("d", "v", 1.0, 0.2)],
        ClassLabel.NP_COMPLETE,
    ),
    ([("c", "x", 1.0, -0.1), ("c", "y", 1.0, 0.2)], ClassLabel.NP_COMPLETE),
    (
        [
            ("a1", "a2", 1.0, 0.1),
            ("a2", "a3", 1.0, 0.1),
            ("a1", "a3", 1.0, 0.2),
            ("a1", "m1", 1.0),
            ("m1", "m2", 1.0, 0.3),
            ("m2", "b1", 1.0),
        ],
        ClassLabel.NP,
    ),
    ([("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.1), ("d", "e", 1.0, 0.2)], ClassLabel.NP),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.1), ("c", "d", 1.0), ("d", "e", 1.0, 0.2)], ClassLabel.NP),
    (
        [("a", "b", 1.0, 0.1), ("b", "c", 1.0, 0.1), ("a", "c", 1.0, 0.1), ("d", "e", 1.0, 0.3)],
        ClassLabel.NP,
    ),
    ([("c", "x", 1.0, 0.1), ("c", "y", 1.0, 0.2), ("y", "z", 1.0), ("z", "w", 1.0, 0.3)], ClassLabel.NP),
    ([("a", "b", 1.0, 0.1), ("b", "c", 1.0), ("c", "d", 1.0, 0.1), ("d", "e", 1.0, 0.1)], ClassLabel.NP),
]


@pytest.mark.parametrize("edges, label", LABELLED_NETWORKS)
def test_hand_built_classification_table(edges, label):
    network = network_from_edges(edges)
    report = measure(network)
    assert report.class_label == label
    if label in (ClassLabel.REVERSIBLE_IDLE, ClassLabel.P):
        assert report.mu_diff == 0.0
    else:
        assert report.mu_diff > 0
    assert contract_chains(network)[0] == contract_chains(contract_chains(network)[0])[0]


def test_kl_divergence_examples():
    assert kl_divergence([1.0, 0.0], [0.5, 0.5]) == pytest.approx(math.log(2))
    assert kl_divergence([2.0, 2.0], [1.0, 1.0]) == pytest.approx(0.0)
    assert kl_divergence({"a": 1.0, "b": 3.0}, {"b": 3.0, "a": 1.0}) == pytest.approx(0.0)


def test_kl_divergence_rejects_incompatible_inputs():
    with pytest.raises(DomainError):
        kl_divergence([0.5, 0.5], [1.0, 0.0])
    with pytest.raises(DomainError):
        kl_divergence({"a": 1.0}, {"b": 1.0})
    with pytest.raises(DomainError):
        kl_divergence([1.0, 1.0], [1.0, 1.0, 1.0])
