"""Интегратор закона потоков.

Каждое ребро e = (j, k) переносит σ_e·ΔV_e/T в единицу времени из узла j в узел k,
поэтому парное сохранение выполняется точно. Энтропия траектории начинается со
значения формулы ln P и растёт на ΔS = dt·L за каждый принятый шаг.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Collection, List, Tuple

import numpy as np
from scipy.special import gammaln

from src.core import Termination, settings
from src.core.exceptions import NumericalFailureError, StepRejectedError, TrajectoryError
from src.core.logger import get_logger
from src.services.dynamics.models import SimConfig, Snapshot, Trajectory
from src.services.network import Network, ensure_valid, stirling_warnings

logger = get_logger(__name__)

GROWTH_STREAK = 10
GROWTH_FACTOR = 1.1


@dataclass(frozen=True)
class CompiledNetwork:
    """Векторное представление сети для горячего цикла.

    Attributes:
        node_ids: Идентификаторы узлов.
        edge_ids: Идентификаторы рёбер.
        gibbs: Энергии Гиббса узлов.
        source: Индексы узлов from.
        target: Индексы узлов to.
        conductance: Проводимости рёбер.
        offset: T·ln(g!) − ΔQ для каждого ребра.
        temperature: Температура.
    """
    node_ids: Tuple[str, ...]
    edge_ids: Tuple[str, ...]
    gibbs: np.ndarray
    source: np.ndarray
    target: np.ndarray
    conductance: np.ndarray
    offset: np.ndarray
    temperature: float

    @classmethod
    def from_network(cls, network: Network) -> "CompiledNetwork":
        index = {node_id: position for position, node_id in enumerate(network.node_ids)}
        edges = network.edges
        temperature = network.temperature
        return cls(
            node_ids=tuple(network.node_ids),
            edge_ids=tuple(edge.id for edge in edges),
            gibbs=np.array([node.gibbs_energy for node in network.nodes], dtype=float),
            source=np.array([index[edge.source] for edge in edges], dtype=np.intp),
            target=np.array([index[edge.target] for edge in edges], dtype=np.intp),
            conductance=np.array([edge.conductance for edge in edges], dtype=float),
            offset=np.array(
                [temperature * gammaln(edge.degeneracy + 1) - edge.dissipation for edge in edges], dtype=float
            ),
            temperature=temperature,
        )

    @property
    def size(self) -> int:
        return len(self.node_ids)

    def free_energies(self, occupancy: np.ndarray) -> np.ndarray:
        """ΔV_e в ориентации рёбер."""
        mu = self.gibbs + self.temperature * np.log(occupancy)
        return mu[self.source] - mu[self.target] + self.offset

    def edge_flows(self, free: np.ndarray) -> np.ndarray:
        """Вклад ребра в ΔN узла from за единицу времени: −σ·ΔV/T."""
        return -self.conductance * free / self.temperature

    def node_rates(self, flows: np.ndarray) -> np.ndarray:
        """Чистый поток в каждый узел."""
        rates = np.bincount(self.source, weights=flows, minlength=self.size)
        rates -= np.bincount(self.target, weights=flows, minlength=self.size)
        return rates

    def generator(self, free: np.ndarray) -> float:
        """L = Σ_e σ_e·(ΔV_e/T)²."""
        return float(np.sum(self.conductance * (free / self.temperature) ** 2))

    def static_entropy(self, occupancy: np.ndarray, free: np.ndarray) -> float:
        """ln P = Σ_j N_j(1 − Σ_k ΔV_jk/T) по проводящим рёбрам."""
        conducting = self.conductance > 0
        weight = occupancy[self.source] - occupancy[self.target]
        return float(np.sum(occupancy) - np.sum((weight * free)[conducting]) / self.temperature)

    def stability_cap(self, occupancy: np.ndarray) -> float:
        """Оценка Гершгорина 1/max_j Σ_k σ_jk(1/N_j + 1/N_k) для явного шага Эйлера."""
        if self.conductance.size == 0:
            return math.inf
        pair = self.conductance * (1.0 / occupancy[self.source] + 1.0 / occupancy[self.target])
        rows = np.bincount(self.source, weights=pair, minlength=self.size)
        rows += np.bincount(self.target, weights=pair, minlength=self.size)
        bound = float(rows.max())
        return math.inf if bound == 0 else 1.0 / bound


def _occupancy_array(network: Network) -> np.ndarray:
    return np.array([node.occupancy for node in network.nodes], dtype=float)


def entropy(network: Network) -> float:
    """Логарифмическая мера ln P (k_B = 1).

    S = Σ_j N_j(1 − Σ_k ΔV_jk/T), внутренняя сумма по проводящим рёбрам, инцидентным j;
    с точки зрения узла to ребра свободная энергия равна −ΔV_e.

    Args:
        network: Валидная сеть.

    Returns:
        float: Энтропия S.

    Raises:
        ValidationError: Если сеть нарушает инварианты.
    """
    ensure_valid(network)
    compiled = CompiledNetwork.from_network(network)
    occupancy = _occupancy_array(network)
    return compiled.static_entropy(occupancy, compiled.free_energies(occupancy))


def generator(network: Network) -> float:
    """Генератор процесса L = Σ_edges σ_jk(ΔV_jk/T)² ≥ 0."""
    ensure_valid(network)
    compiled = CompiledNetwork.from_network(network)
    return compiled.generator(compiled.free_energies(_occupancy_array(network)))


def net_flows(network: Network) -> dict[str, float]:
    """Чистый поток в каждый узел, −Σ_k σ_jk ΔV_jk/T."""
    ensure_valid(network)
    compiled = CompiledNetwork.from_network(network)
    rates = compiled.node_rates(compiled.edge_flows(compiled.free_energies(_occupancy_array(network))))
    return dict(zip(compiled.node_ids, rates.tolist()))


def generator_from_flows(network: Network, snapshot: Snapshot) -> float:
    """Генератор в потоковой форме −Σ_e (ΔN_e/dt)·ΔV_e/T по потокам снимка.

    Args:
        network: Сеть в состоянии снимка.
        snapshot: Снимок с потоками по рёбрам.

    Returns:
        float: Значение, совпадающее с generator(network).
    """
    compiled = CompiledNetwork.from_network(network)
    free = compiled.free_energies(_occupancy_array(network))
    return float(-np.sum(snapshot.flow_values * free) / compiled.temperature)


def _snapshot(
    compiled: CompiledNetwork, time: float, occupancy: np.ndarray, entropy_value: float, free: np.ndarray
) -> Tuple[Snapshot, np.ndarray]:
    flows = compiled.edge_flows(free)
    occupancy_values = occupancy.copy()
    occupancy_values.setflags(write=False)
    flows.setflags(write=False)
    snapshot = Snapshot(
        time=time,
        entropy=entropy_value,
        generator=compiled.generator(free),
        node_ids=compiled.node_ids,
        edge_ids=compiled.edge_ids,
        occupancy_values=occupancy_values,
        flow_values=flows,
    )
    return snapshot, compiled.node_rates(flows)


def step(network: Network, dt: float, time: float = 0.0, entropy_value: float | None = None) -> Tuple[Network, Snapshot]:
    """Один явный шаг закона потоков.

    Все заселённости обновляются одновременно по состоянию до шага:
    ΔN_j = −dt·Σ_k σ_jk ΔV_jk/T.

    Args:
        network: Валидная сеть.
        dt: Положительный шаг.
        time: Время состояния до шага.
        entropy_value: Накопленная энтропия до шага (по умолчанию ln P сети).

    Returns:
        Tuple[Network, Snapshot]: Сеть после шага и снимок нового состояния.

    Raises:
        StepRejectedError: Если шаг делает заселённость неположительной.
    """
    ensure_valid(network)
    if not dt > 0:
        raise StepRejectedError(message="Шаг должен быть положительным", details={"dt": dt})
    compiled = CompiledNetwork.from_network(network)
    occupancy = _occupancy_array(network)
    free = compiled.free_energies(occupancy)
    if entropy_value is None:
        entropy_value = compiled.static_entropy(occupancy, free)
    rates = compiled.node_rates(compiled.edge_flows(free))
    updated = occupancy + dt * rates
    if np.any(updated <= 0):
        raise StepRejectedError(
            message="Шаг сделал бы заселённость неположительной, уменьшите dt",
            details={"dt": dt, "nodes": [compiled.node_ids[i] for i in np.flatnonzero(updated <= 0)]},
        )
    produced = dt * compiled.generator(free)
    snapshot, _ = _snapshot(compiled, time + dt, updated, entropy_value + produced, compiled.free_energies(updated))
    return network.with_occupancies(dict(zip(compiled.node_ids, updated.tolist()))), snapshot


class _SteadyDetector:
    """Скользящее окно ε-стационарности по контрольной величине и чистым потокам.

    Для замкнутой сети контрольная величина — энтропия, для сети с резервуарами —
    генератор L, который в стационарном режиме постоянен, а энтропия растёт линейно.
    """

    def __init__(self, window: int, epsilon: float):
        self.epsilon = epsilon
        self.levels: deque[float] = deque(maxlen=window)
        self.flows: deque[float] = deque(maxlen=window)

    def push(self, level: float, max_flow: float) -> None:
        self.levels.append(level)
        self.flows.append(max_flow)

    def is_steady(self) -> bool:
        if len(self.levels) < (self.levels.maxlen or 0):
            return False
        mean = sum(self.levels) / len(self.levels)
        return all(abs(value - mean) <= self.epsilon for value in self.levels) and max(self.flows) <= self.epsilon


def simulate(network: Network, config: SimConfig | None = None, reservoirs: Collection[str] = ()) -> Trajectory:
    """Интегрирует закон потоков адаптивным явным методом Эйлера.

    Пробный шаг отклоняется и делится пополам, если заселённость становится
    неположительной или ΔL > +tol; приращение энтропии dt·L неотрицательно по
    построению. После 10 принятых шагов подряд шаг растёт в 1.1 раза до dt_max.
    Каждый пробный шаг ограничен оценкой Гершгорина.
    Симуляция останавливается как ``steady``, когда в последних ``window`` снимках
    |S_t − mean(S)| ≤ ε и максимальный чистый поток в узел ≤ ε. Для сети с
    резервуарами вместо S окно следит за L, а потоки резервуаров не учитываются.

    Args:
        network: Валидная сеть.
        config: Конфигурация интегратора (по умолчанию settings.simulation).
        reservoirs: Узлы-резервуары, подключённые через attach_reservoir.

    Returns:
        Trajectory: Принятые снимки и причина остановки.

    Raises:
        ValidationError: Если сеть нарушает инварианты.
        NumericalFailureError: При нечисловом значении или вырождении шага.
    """
    ensure_valid(network)
    config = config or settings.simulation
    stirling_warnings(network)
    tolerance = settings.SIM_TOLERANCE
    log = logger.bind(nodes=len(network.nodes), edges=len(network.edges))
    log.info("Starting simulation", dt_initial=config.dt_initial, epsilon=config.epsilon)

    compiled = CompiledNetwork.from_network(network)
    occupancy = _occupancy_array(network)
    free = compiled.free_energies(occupancy)
    entropy_value = compiled.static_entropy(occupancy, free)
    snapshot, rates = _snapshot(compiled, 0.0, occupancy, entropy_value, free)
    snapshots: List[Snapshot] = [snapshot]
    detector = _SteadyDetector(config.window, config.epsilon)
    interior = np.array([node_id not in reservoirs for node_id in compiled.node_ids], dtype=bool)
    driven = bool(reservoirs)

    def observe() -> None:
        level = snapshot.generator if driven else entropy_value
        detector.push(level, float(np.max(np.abs(rates[interior]), initial=0.0)))

    observe()

    dt = config.dt_initial
    streak = 0
    rejected = 0
    time = 0.0
    terminated = Termination.MAX_STEPS

    for step_number in range(1, config.max_steps + 1):
        if detector.is_steady():
            terminated = Termination.STEADY
            break

        trial = min(dt, config.dt_max, compiled.stability_cap(occupancy))
        current_generator = snapshot.generator
        while True:
            if trial < settings.SIM_DT_FLOOR:
                raise NumericalFailureError(
                    message=f"Шаг интегрирования выродился на шаге {step_number}",
                    details={"step": step_number, "dt": trial, "time": time},
                )
            updated = occupancy + trial * rates
            if not np.all(np.isfinite(updated)):
                raise NumericalFailureError(
                    message=f"Нечисловое значение заселённости на шаге {step_number}",
                    details={"step": step_number, "time": time},
                )
            if np.all(updated > 0):
                updated_free = compiled.free_energies(updated)
                if compiled.generator(updated_free) - current_generator <= tolerance:
                    break
            rejected += 1
            streak = 0
            trial /= 2.0
            dt = trial

        time += trial
        occupancy = updated
        entropy_value += trial * current_generator
        if not math.isfinite(entropy_value):
            raise NumericalFailureError(
                message=f"Нечисловое значение энтропии на шаге {step_number}",
                details={"step": step_number, "time": time},
            )
        snapshot, rates = _snapshot(compiled, time, occupancy, entropy_value, updated_free)
        snapshots.append(snapshot)
        observe()

        streak += 1
        if streak >= GROWTH_STREAK:
            dt = min(dt * GROWTH_FACTOR, config.dt_max)
            streak = 0
    else:
        if detector.is_steady():
            terminated = Termination.STEADY

    log.info(
        "Simulation finished",
        terminated=terminated.value,
        steps=len(snapshots) - 1,
        rejected=rejected,
        final_generator=snapshots[-1].generator,
    )
    return Trajectory(
        network=network,
        config=config,
        snapshots=tuple(snapshots),
        terminated=terminated,
        rejected_steps=rejected,
    )


def generator_delta(trajectory: Trajectory) -> List[float]:
    """Последовательные разности L_{t+1} − L_t вдоль траектории.

    Raises:
        TrajectoryError: Если в траектории меньше двух снимков.
    """
    if len(trajectory.snapshots) < 2:
        raise TrajectoryError(
            message="Для разностей генератора нужно не менее двух снимков",
            details={"snapshots": len(trajectory.snapshots)},
        )
    generators = np.array([snapshot.generator for snapshot in trajectory.snapshots])
    return np.diff(generators).tolist()
