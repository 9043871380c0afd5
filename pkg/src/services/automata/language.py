"""Запуск автоматов и ограниченная проверка эквивалентности языков."""

from itertools import product
from typing import Sequence, Tuple

from src.core.exceptions import DomainError
from src.services.automata.models import Automaton


def run(automaton: Automaton, word: Sequence[str]) -> bool:
    """Принимает ли автомат слово.

    Для НКА слово принимается, если хотя бы один путь заканчивается в принимающем состоянии.

    Args:
        automaton: НКА или ДКА.
        word: Последовательность символов.

    Returns:
        bool: True при приёме.

    Raises:
        DomainError: Если символ не входит в алфавит.
    """
    alphabet = set(automaton.alphabet)
    foreign = [symbol for symbol in word if symbol not in alphabet]
    if foreign:
        raise DomainError(message=f"Символ '{foreign[0]}' не входит в алфавит", details={"symbol": foreign[0]})

    mapping = automaton.transition_map()
    current = frozenset({automaton.initial})
    for symbol in word:
        current = frozenset().union(*(mapping.get((state, symbol), ()) for state in current))
        if not current:
            return False
    return bool(current & set(automaton.accepting))


def distinguishing_word(first: Automaton, second: Automaton, max_len: int) -> Tuple[str, ...] | None:
    """Кратчайшее слово длины ≤ max_len, на котором автоматы расходятся.

    Raises:
        DomainError: Если алфавиты различаются.
    """
    if set(first.alphabet) != set(second.alphabet):
        raise DomainError(
            message="Алфавиты автоматов различаются",
            details={"first": sorted(first.alphabet), "second": sorted(second.alphabet)},
        )
    symbols = sorted(first.alphabet)
    for length in range(max_len + 1):
        for word in product(symbols, repeat=length):
            if run(first, word) != run(second, word):
                return word
    return None


def equivalent_up_to(first: Automaton, second: Automaton, max_len: int) -> bool:
    """Совпадают ли языки на всех словах длины ≤ max_len (полный перебор)."""
    return distinguishing_word(first, second, max_len) is None
