"""Конечные автоматы: пятёрки (состояния, алфавит, переходы, начальное, принимающие)."""

from typing import Dict, FrozenSet, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import Field, model_validator

from src.core.schemas import FrozenModel


class Transition(FrozenModel):
    """Переход из состояния по символу во множество состояний.

    Attributes:
        source: Исходное состояние (ключ JSON ``from``).
        symbol: Символ алфавита.
        targets: Целевые состояния (ключ JSON ``to``).
    """
    source: str = Field(alias="from")
    symbol: str
    targets: Tuple[str, ...] = Field(alias="to")


class Automaton(FrozenModel):
    """Общая часть НКА и ДКА."""
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    transitions: Tuple[Transition, ...] = ()
    initial: str
    accepting: Tuple[str, ...] = ()

    @model_validator(mode="after")
    def check_references(self) -> Self:
        """Проверяет, что все ссылки указывают на объявленные состояния и символы."""
        states, alphabet = set(self.states), set(self.alphabet)
        if self.initial not in states:
            raise ValueError(f"Начальное состояние '{self.initial}' не объявлено")
        if not set(self.accepting) <= states:
            raise ValueError("Принимающие состояния должны входить в множество состояний")
        seen: set[tuple[str, str]] = set()
        for transition in self.transitions:
            if transition.source not in states or not set(transition.targets) <= states:
                raise ValueError(f"Переход из '{transition.source}' ссылается на необъявленное состояние")
            if transition.symbol not in alphabet:
                raise ValueError(f"Символ '{transition.symbol}' не входит в алфавит")
            key = (transition.source, transition.symbol)
            if key in seen:
                raise ValueError(f"Повторный переход из '{transition.source}' по '{transition.symbol}'")
            seen.add(key)
        return self

    def transition_map(self) -> Dict[tuple[str, str], FrozenSet[str]]:
        """Отображение (состояние, символ) → множество целей."""
        return {(t.source, t.symbol): frozenset(t.targets) for t in self.transitions}

    def is_deterministic(self) -> bool:
        """Не более одной цели у каждого перехода."""
        return all(len(transition.targets) <= 1 for transition in self.transitions)


class Nfa(Automaton):
    """Недетерминированный конечный автомат Λ: Φ×Δ → P(Φ)."""


class Dfa(Automaton):
    """Детерминированный автомат: ровно один переход для каждой пары (состояние, символ)."""

    @model_validator(mode="after")
    def check_total(self) -> Self:
        """Проверяет тотальность функции переходов."""
        mapping = self.transition_map()
        for state in self.states:
            for symbol in self.alphabet:
                if len(mapping.get((state, symbol), ())) != 1:
                    raise ValueError(f"ДКА не тотален в ('{state}', '{symbol}')")
        return self
