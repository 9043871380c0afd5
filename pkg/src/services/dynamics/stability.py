"""Проверки устойчивости стационарного состояния и сохранения токов."""

import networkx as nx

from src.core import settings
from src.core.exceptions import DomainError
from src.core.logger import get_logger
from src.services.dynamics.engine import entropy, generator, net_flows, simulate
from src.services.dynamics.models import SimConfig, StabilityReport
from src.services.network import Network, conducting_graph, ensure_valid

logger = get_logger(__name__)


def conserved_current_check(network_at_steady: Network, epsilon: float) -> bool:
    """Проверяет, что чистый приток в каждый узел не превышает epsilon.

    Args:
        network_at_steady: Сеть в предполагаемом стационарном состоянии.
        epsilon: Допуск.

    Returns:
        bool: True, если |Σ_k σ_jk ΔV_jk/T| ≤ epsilon для каждого узла.
    """
    return all(abs(flow) <= epsilon for flow in net_flows(network_at_steady).values())


def perturb(network: Network, relative_perturbation: float) -> Network:
    """Знакопеременное возмущение заселённостей с сохранением массы компонент.

    Узлы, упорядоченные по идентификатору, получают множители 1+δ, 1−δ, 1+δ, ...
    Затем каждая связная компонента масштабируется к исходной суммарной заселённости.

    Raises:
        DomainError: Если возмущение делает заселённость неположительной.
    """
    occupancy = {node.id: node.occupancy for node in network.nodes}
    perturbed: dict[str, float] = {}
    for position, node_id in enumerate(sorted(occupancy)):
        sign = 1.0 if position % 2 == 0 else -1.0
        value = occupancy[node_id] * (1.0 + sign * relative_perturbation)
        if not value > 0:
            raise DomainError(
                message=f"Возмущение делает заселённость узла '{node_id}' неположительной",
                details={"node": node_id, "relative_perturbation": relative_perturbation},
            )
        perturbed[node_id] = value

    for component in nx.connected_components(conducting_graph(network)):
        scale = sum(occupancy[node_id] for node_id in component) / sum(perturbed[node_id] for node_id in component)
        for node_id in component:
            perturbed[node_id] *= scale
    return network.with_occupancies(perturbed)


def stability_probe(
    network_at_steady: Network,
    relative_perturbation: float,
    config: SimConfig | None = None,
) -> StabilityReport:
    """Проверяет устойчивость по Ляпунову: возмущённая система возвращается в стационар.

    Args:
        network_at_steady: Сеть, удовлетворяющая ε-критерию стационарности.
        relative_perturbation: Относительная амплитуда δ.
        config: Конфигурация интегратора; повторная симуляция идёт с ε·PROBE_EPSILON_FACTOR.

    Returns:
        StabilityReport: Вернулась ли система, сколько энтропии произведено на пути назад
        и генератор сразу после возмущения.

    Raises:
        DomainError: Если сеть не стационарна или возмущение недопустимо.
    """
    ensure_valid(network_at_steady)
    config = config or settings.simulation
    if not conserved_current_check(network_at_steady, config.epsilon):
        raise DomainError(
            message="Сеть не находится в ε-стационарном состоянии",
            details={"epsilon": config.epsilon},
        )

    perturbed = perturb(network_at_steady, relative_perturbation)
    log = logger.bind(relative_perturbation=relative_perturbation)
    log.info(
        "Probing stability",
        steady_entropy=entropy(network_at_steady),
        perturbed_entropy=entropy(perturbed),
    )

    probe_config = config.model_copy(update={"epsilon": config.epsilon * settings.PROBE_EPSILON_FACTOR})
    trajectory = simulate(perturbed, probe_config)
    steady = {node.id: node.occupancy for node in network_at_steady.nodes}
    final = trajectory.final.occupancies
    deviation = max((abs(final[node_id] - value) for node_id, value in steady.items()), default=0.0)

    report = StabilityReport(
        returned=deviation <= config.epsilon,
        entropy_drop=trajectory.final.entropy - trajectory.snapshots[0].entropy,
        initial_generator=generator(perturbed),
    )
    log.info("Stability probe finished", returned=report.returned, deviation=deviation)
    return report
