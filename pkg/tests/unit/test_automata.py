import pytest
from pydantic import ValidationError as SchemaError

from src.core.exceptions import DomainError, NoComputationError
from src.services.automata import (
    Dfa,
    Nfa,
    distinguishing_word,
    equivalent_up_to,
    kth_from_end_nfa,
    nfa_from_network,
    run,
    subset_construction,
)
from tests.factories import build_network


def automaton(cls, states, transitions, initial, accepting, alphabet=("a", "b")):
    return cls.model_validate(
        {
            "states": states,
            "alphabet": alphabet,
            "transitions": [{"from": source, "symbol": symbol, "to": targets} for source, symbol, targets in transitions],
            "initial": initial,
            "accepting": accepting,
        }
    )


@pytest.fixture
def accept_all():
    return automaton(Dfa, ["s"], [("s", "a", ["s"]), ("s", "b", ["s"])], "s", ["s"])


@pytest.fixture
def reject_ab():
    return automaton(
        Dfa,
        ["0", "a", "ab", "x"],
        [
            ("0", "a", ["a"]),
            ("0", "b", ["x"]),
            ("a", "a", ["x"]),
            ("a", "b", ["ab"]),
            ("ab", "a", ["x"]),
            ("ab", "b", ["x"]),
            ("x", "a", ["x"]),
            ("x", "b", ["x"]),
        ],
        "0",
        ["0", "a", "x"],
    )


def test_two_node_network_gives_single_transition():
    network = build_network([("a", 2.0), ("b", 1.0)], [("a", "b", 1.0, 0.1)])
    nfa = nfa_from_network(network)
    assert nfa.states == ("a", "b")
    assert nfa.initial == "a"
    assert nfa.accepting == ("b",)
    assert [(t.source, t.symbol, t.targets) for t in nfa.transitions] == [("a", "a", ("b",))]
    assert nfa.is_deterministic()
    assert run(nfa, ["a"])
    assert not run(nfa, [])


def test_outward_branching_is_nondeterministic(dissipative_star):
    nfa = nfa_from_network(dissipative_star)
    assert nfa.transition_map()[("c", "c")] == frozenset({"x", "y"})
    assert not nfa.is_deterministic()
    assert nfa.initial == "c"


def test_backward_drive_reverses_transition():
    network = build_network([("a", 1.0), ("b", 4.0)], [("a", "b", 1.0, 0.2)])
    nfa = nfa_from_network(network)
    assert nfa.transition_map() == {("b", "b"): frozenset({"a"})}


def test_reversible_network_does_not_compute(reversible_triangle):
    with pytest.raises(NoComputationError):
        nfa_from_network(reversible_triangle)


def test_deterministic_total_nfa_keeps_state_count():
    nfa = automaton(
        Nfa,
        ["p", "q"],
        [("p", "a", ["q"]), ("p", "b", ["p"]), ("q", "a", ["p"]), ("q", "b", ["q"])],
        "p",
        ["q"],
    )
    dfa = subset_construction(nfa)
    assert dfa.states == ("{p}", "{q}")
    assert equivalent_up_to(nfa, dfa, 6)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_kth_from_end_dfa_is_exponential(k):
    nfa = kth_from_end_nfa(k)
    dfa = subset_construction(nfa)
    assert len(nfa.states) == k + 1
    assert len(dfa.states) == 2**k
    assert dfa.is_deterministic()
    assert equivalent_up_to(nfa, dfa, 8)


def test_kth_from_end_language():
    nfa = kth_from_end_nfa(3)
    dfa = subset_construction(nfa)
    assert run(nfa, list("abb"))
    assert not run(nfa, list("bab"))
    assert run(dfa, list("baabb"))
    assert equivalent_up_to(nfa, dfa, 8)


def test_kth_from_end_requires_positive_k():
    with pytest.raises(DomainError):
        kth_from_end_nfa(0)


def test_unreachable_states_are_not_in_dfa():
    nfa = automaton(
        Nfa,
        ["p", "q", "z"],
        [("p", "a", ["q"]), ("z", "b", ["p"])],
        "p",
        ["q"],
    )
    dfa = subset_construction(nfa)
    assert all("z" not in state for state in dfa.states)
    assert "{}" in dfa.states


def test_distinguishing_word_finds_first_difference(accept_all, reject_ab):
    assert equivalent_up_to(accept_all, reject_ab, 1)
    assert not equivalent_up_to(accept_all, reject_ab, 2)
    assert distinguishing_word(accept_all, reject_ab, 3) == ("a", "b")


def test_alphabet_mismatch_is_rejected(accept_all):
    other = automaton(Dfa, ["s"], [("s", "c", ["s"])], "s", ["s"], alphabet=("c",))
    with pytest.raises(DomainError):
        distinguishing_word(accept_all, other, 2)


def test_foreign_symbol_is_rejected(accept_all):
    with pytest.raises(DomainError):
        run(accept_all, ["z"])


def test_dfa_must_be_total():
    with pytest.raises(SchemaError):
        automaton(Dfa, ["s"], [("s", "a", ["s"])], "s", ["s"])


def test_transition_must_reference_known_states():
    with pytest.raises(SchemaError):
        automaton(Nfa, ["s"], [("s", "a", ["ghost"])], "s", [])
