"""Пакет конечных автоматов."""

from src.services.automata.construction import (
    DEAD_STATE,
    kth_from_end_nfa,
    nfa_from_network,
    subset_construction,
    subset_name,
)
from src.services.automata.language import distinguishing_word, equivalent_up_to, run
from src.services.automata.models import Automaton, Dfa, Nfa, Transition

__all__ = [
    "Automaton",
    "Nfa",
    "Dfa",
    "Transition",
    "DEAD_STATE",
    "nfa_from_network",
    "subset_construction",
    "subset_name",
    "kth_from_end_nfa",
    "run",
    "equivalent_up_to",
    "distinguishing_word",
]
