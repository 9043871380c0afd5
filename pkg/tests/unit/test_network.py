import math

import pytest

from src.core import NodeClass
from src.core.exceptions import NotFoundError, ValidationError
from src.services.network import (
    Edge,
    Network,
    Node,
    attach_reservoir,
    branching_nodes,
    classify_node,
    density,
    ensure_valid,
    free_energy,
    node_dof,
    potential,
    resistance,
    stirling_warnings,
    validate,
)
from tests.factories import build_network


def test_potential_is_gibbs_plus_log_occupancy():
    network = build_network([("a", math.e, 0.5)], [], temperature=2.0)
    assert potential(network, "a") == pytest.approx(2.5)
    assert density(network, "a") == pytest.approx(math.e * math.exp(0.25))


def test_free_energy_includes_degeneracy_and_dissipation():
    network = build_network([("a", 2.0), ("b", 1.0)], [("a", "b", 1.0, 0.1, 3)])
    edge = network.edges[0]
    assert free_energy(network, edge) == pytest.approx(math.log(2) + math.log(6) - 0.1)


def test_resistance_is_infinite_for_non_conducting_edge():
    network = build_network([("a", 1.0), ("b", 1.0)], [("a", "b", 0.0)], temperature=3.0)
    assert resistance(network, network.edges[0]) == math.inf
    conducting = network.edges[0].model_copy(update={"conductance": 2.0})
    assert resistance(network, conducting) == 1.5


def test_node_dof_and_classification(dissipative_star, branching_chain):
    assert node_dof(dissipative_star, "c") == 3
    assert node_dof(dissipative_star, "x") == 2
    assert classify_node(dissipative_star, "c") == NodeClass.BRANCHING
    assert classify_node(dissipative_star, "x") == NodeClass.DETERMINISTIC
    assert branching_nodes(branching_chain) == {"b"}


def test_non_conducting_dissipative_edge_does_not_count():
    network = build_network(
        [("c", 1.0), ("x", 1.0), ("y", 1.0)],
        [("c", "x", 1.0, 0.1), ("c", "y", 0.0, 0.3)],
    )
    assert node_dof(network, "c") == 2
    assert classify_node(network, "c") == NodeClass.DETERMINISTIC


def test_reversible_nodes_are_idle(reversible_triangle):
    assert all(classify_node(reversible_triangle, node_id) == NodeClass.IDLE for node_id in "abc")


def test_unknown_node_raises_not_found(two_node):
    with pytest.raises(NotFoundError):
        potential(two_node, "zzz")


def test_validate_accepts_valid_network(reversible_triangle):
    assert validate(reversible_triangle) == []
    ensure_valid(reversible_triangle)


def test_validate_reports_every_violation():
    network = Network(
        temperature=0.0,
        nodes=(Node(id="a", occupancy=0.0), Node(id="a", occupancy=1.0), Node(id="b", occupancy=math.nan)),
        edges=(
            Edge(source="a", target="a", conductance=1.0),
            Edge(source="a", target="b", conductance=-1.0, degeneracy=0),
            Edge(source="b", target="a", conductance=1.0),
            Edge(source="a", target="ghost", conductance=1.0),
        ),
    )
    rules = {violation.rule for violation in validate(network)}
    assert rules == {
        "temperature",
        "unique_node_id",
        "occupancy",
        "self_loop",
        "conductance",
        "degeneracy",
        "single_edge",
        "endpoints",
    }


def test_ensure_valid_raises_with_details():
    network = build_network([("a", -1.0)], [])
    with pytest.raises(ValidationError) as exc_info:
        ensure_valid(network)
    assert exc_info.value.details["violations"][0]["subject"] == "a"


def test_edge_reads_from_and_to_aliases():
    edge = Edge.model_validate({"from": "a", "to": "b", "conductance": 1.0, "dissipation": 0.2})
    assert edge.source == "a"
    assert edge.oriented_dissipation("b") == -0.2
    assert edge.other("a") == "b"
    assert edge.model_dump(by_alias=True)["from"] == "a"


def test_with_occupancies_keeps_original_unchanged(two_node):
    updated = two_node.with_occupancies({"a": 1.5})
    assert updated.node_map()["a"].occupancy == 1.5
    assert two_node.node_map()["a"].occupancy == 2.0


def test_attach_reservoir_adds_lead_edge(two_node):
    network = attach_reservoir(two_node, "a", "res", conductance=2.0, gibbs_energy=1.0)
    lead = network.edges[-1]
    assert (lead.source, lead.target, lead.conductance) == ("res", "a", 2.0)
    assert network.node_map()["res"].occupancy == 1e12
    assert validate(network) == []


def test_stirling_warnings_flag_small_occupancies(two_node):
    assert stirling_warnings(two_node) == ["a", "b"]
    assert stirling_warnings(two_node.with_occupancies({"a": 100.0, "b": 100.0})) == []
