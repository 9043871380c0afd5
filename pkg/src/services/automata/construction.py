"""Построение автоматов: из сети, конструкция подмножеств и семейство k-го символа с конца."""

from collections import defaultdict, deque
from typing import Dict, FrozenSet, Iterable, List

from src.core.exceptions import DomainError, NoComputationError
from src.core.logger import get_logger
from src.services.automata.models import Dfa, Nfa, Transition
from src.services.network import Network, ensure_valid, free_energy, potential

logger = get_logger(__name__)

DEAD_STATE = "{}"


def nfa_from_network(network: Network) -> Nfa:
    """Отображает сеть в НКА.

    Состояния — узлы. Каждое проводящее диссипативное ребро с ΔV ≠ 0 даёт переход
    из верхнего узла (по направлению положительной свободной энергии) в нижний;
    символ перехода — идентификатор верхнего узла, принимающего решение. Начальное
    состояние — узел с максимальным потенциалом (при равенстве лексикографически
    первый), принимающие — узлы без проводящих соседей со строго меньшим потенциалом.

    Args:
        network: Валидная сеть.

    Returns:
        Nfa: Автомат, детерминированный, если ни один узел не ветвится наружу.

    Raises:
        NoComputationError: Если в сети нет диссипативных переходов.
    """
    ensure_valid(network)
    mu = {node_id: potential(network, node_id) for node_id in network.node_ids}
    targets: Dict[str, set[str]] = defaultdict(set)
    for edge in network.edges:
        if not (edge.is_conducting and edge.is_dissipative):
            continue
        drive = free_energy(network, edge)
        if drive > 0:
            targets[edge.source].add(edge.target)
        elif drive < 0:
            targets[edge.target].add(edge.source)

    if not targets:
        raise NoComputationError(
            message="Холостая цепь: нет диссипативных переходов, вычисление не продвигается",
            details={"nodes": len(network.nodes)},
        )

    states = tuple(sorted(mu))
    initial = min(states, key=lambda node_id: (-mu[node_id], node_id))
    lower: Dict[str, bool] = {node_id: False for node_id in states}
    for edge in network.edges:
        if not edge.is_conducting:
            continue
        if mu[edge.target] < mu[edge.source]:
            lower[edge.source] = True
        elif mu[edge.source] < mu[edge.target]:
            lower[edge.target] = True

    transitions = tuple(
        Transition(source=upstream, symbol=upstream, targets=tuple(sorted(targets[upstream])))
        for upstream in sorted(targets)
    )
    nfa = Nfa(
        states=states,
        alphabet=tuple(sorted(targets)),
        transitions=transitions,
        initial=initial,
        accepting=tuple(node_id for node_id in states if not lower[node_id]),
    )
    logger.info("Automaton built from network", states=len(states), deterministic=nfa.is_deterministic())
    return nfa


def subset_name(subset: Iterable[str]) -> str:
    """Имя состояния ДКА вида ``{a,b}``."""
    return "{" + ",".join(sorted(subset)) + "}"


def subset_construction(nfa: Nfa) -> Dfa:
    """Конструкция достижимых подмножеств.

    Состояния ДКА — достижимые подмножества состояний НКА, пустое подмножество
    служит мёртвым состоянием. Результат тотален.

    Args:
        nfa: Корректный НКА.

    Returns:
        Dfa: Автомат, принимающий тот же язык.
    """
    mapping = nfa.transition_map()
    accepting = set(nfa.accepting)
    start: FrozenSet[str] = frozenset({nfa.initial})
    order: List[FrozenSet[str]] = [start]
    seen = {start}
    queue = deque([start])
    transitions: List[Transition] = []

    while queue:
        subset = queue.popleft()
        for symbol in nfa.alphabet:
            target: FrozenSet[str] = frozenset().union(*(mapping.get((state, symbol), ()) for state in subset))
            transitions.append(
                Transition(source=subset_name(subset), symbol=symbol, targets=(subset_name(target),))
            )
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)

    dfa = Dfa(
        states=tuple(subset_name(subset) for subset in order),
        alphabet=nfa.alphabet,
        transitions=tuple(transitions),
        initial=subset_name(start),
        accepting=tuple(subset_name(subset) for subset in order if subset & accepting),
    )
    logger.info("Subset construction finished", nfa_states=len(nfa.states), dfa_states=len(dfa.states))
    return dfa


def kth_from_end_nfa(k: int) -> Nfa:
    """НКА языка «k-й символ с конца равен a» над {a, b}.

    Состояния 0..k: 0 петляет по a и b, 0 −a→ 1, i −a,b→ i+1, принимающее k.
    Его ДКА имеет 2^k достижимых состояний.

    Raises:
        DomainError: Если k < 1.
    """
    if k < 1:
        raise DomainError(message="k должно быть не меньше 1", details={"k": k})
    states = tuple(str(index) for index in range(k + 1))
    transitions = [
        Transition(source="0", symbol="a", targets=("0", "1")),
        Transition(source="0", symbol="b", targets=("0",)),
    ]
    for index in range(1, k):
        for symbol in ("a", "b"):
            transitions.append(Transition(source=str(index), symbol=symbol, targets=(str(index + 1),)))
    return Nfa(states=states, alphabet=("a", "b"), transitions=tuple(transitions), initial="0", accepting=(str(k),))
