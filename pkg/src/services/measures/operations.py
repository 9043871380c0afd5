"""Меры μ_P и μ_NP, классификация P / NP / NP-complete и дивергенция Кульбака–Лейблера."""

from typing import List, Mapping, Sequence

import networkx as nx
import numpy as np
from scipy.special import rel_entr

from src.core import ClassLabel
from src.core.exceptions import DomainError
from src.core.logger import get_logger
from src.services.measures.models import ComponentReport, MeasureReport
from src.services.network import (
    Network,
    branching_nodes,
    conducting_graph,
    ensure_valid,
    log_degeneracy,
    potential,
)

logger = get_logger(__name__)


def classify(report: MeasureReport) -> ClassLabel:
    """Определяет класс по знакам диссипативных слагаемых.

    Args:
        report: Отчёт, вычисленный measure.

    Returns:
        ClassLabel: reversible-idle, P, NP или NP-complete.
    """
    two, multi = report.two_dof_term != 0, report.multi_dof_term != 0
    if two and multi:
        return ClassLabel.NP
    if multi:
        return ClassLabel.NP_COMPLETE
    if two:
        return ClassLabel.P
    return ClassLabel.REVERSIBLE_IDLE


def measure(network: Network) -> MeasureReport:
    """Вычисляет разложение меры пространства состояний.

    Каждое проводящее диссипативное ребро вносит N_from·ΔQ/T в корзину multi_dof,
    если хотя бы один его конец ветвящийся, иначе в корзину two_dof.

    Args:
        network: Валидная сеть.

    Returns:
        MeasureReport: Три слагаемых, μ_P, μ_NP, μ_diff и метка класса.

    Raises:
        ValidationError: Если сеть нарушает инварианты.
    """
    ensure_valid(network)
    temperature = network.temperature
    occupancy = {node.id: node.occupancy for node in network.nodes}
    mu = {node_id: potential(network, node_id) for node_id in occupancy}
    branching = branching_nodes(network)

    conserved = sum(occupancy.values())
    two_dof = 0.0
    multi_dof = 0.0
    for edge in network.edges:
        if not edge.is_conducting:
            continue
        delta_mu = mu[edge.source] - mu[edge.target] + temperature * log_degeneracy(edge.degeneracy)
        conserved -= (occupancy[edge.source] - occupancy[edge.target]) * delta_mu / temperature
        if not edge.is_dissipative:
            continue
        contribution = occupancy[edge.source] * edge.dissipation / temperature
        if edge.source in branching or edge.target in branching:
            multi_dof += contribution
        else:
            two_dof += contribution

    mu_p = conserved + two_dof
    draft = MeasureReport(
        conserved_term=conserved,
        two_dof_term=two_dof,
        multi_dof_term=multi_dof,
        mu_P=mu_p,
        mu_NP=mu_p + multi_dof,
        mu_diff=multi_dof,
        class_label=ClassLabel.REVERSIBLE_IDLE,
    )
    return draft.model_copy(update={"class_label": classify(draft)})


def separation(report: MeasureReport) -> float:
    """Разность μ_NP − μ_P, равная слагаемому multi_dof."""
    return report.multi_dof_term


def measure_components(network: Network) -> List[ComponentReport]:
    """Отчёты по связным компонентам проводящего графа.

    Сумма каждого слагаемого по компонентам совпадает с отчётом для всей сети.
    """
    ensure_valid(network)
    reports = []
    for component in sorted(nx.connected_components(conducting_graph(network)), key=min):
        nodes = tuple(node for node in network.nodes if node.id in component)
        edges = tuple(edge for edge in network.edges if edge.source in component and edge.target in component)
        sub = network.model_copy(update={"nodes": nodes, "edges": edges})
        reports.append(ComponentReport(nodes=tuple(node.id for node in nodes), report=measure(sub)))
    return reports


def _distribution(values: Sequence[float] | Mapping[str, float], name: str) -> np.ndarray:
    array = np.asarray(list(values.values()) if isinstance(values, Mapping) else list(values), dtype=float)
    if array.size == 0 or np.any(array < 0) or not np.all(np.isfinite(array)) or array.sum() <= 0:
        raise DomainError(
            message=f"Распределение {name} должно быть неотрицательным с положительной суммой",
            details={"distribution": name},
        )
    return array / array.sum()


def kl_divergence(p: Sequence[float] | Mapping[str, float], q: Sequence[float] | Mapping[str, float]) -> float:
    """Дивергенция Кульбака–Лейблера Σ p_i ln(p_i/q_i) по нормированным заселённостям.

    Args:
        p: Заселённости (последовательность или отображение узел → N).
        q: Заселённости на том же множестве узлов.

    Returns:
        float: Неотрицательное значение, ноль только при p = q.

    Raises:
        DomainError: При несовпадении носителей или множеств узлов.
    """
    if isinstance(p, Mapping) and isinstance(q, Mapping):
        if set(p) != set(q):
            raise DomainError(
                message="Распределения заданы на разных множествах узлов",
                details={"only_p": sorted(set(p) - set(q)), "only_q": sorted(set(q) - set(p))},
            )
        q = {key: q[key] for key in p}
    p_values, q_values = _distribution(p, "p"), _distribution(q, "q")
    if p_values.shape != q_values.shape:
        raise DomainError(
            message="Распределения имеют разную длину",
            details={"p": int(p_values.size), "q": int(q_values.size)},
        )
    if np.any((p_values > 0) & (q_values == 0)):
        raise DomainError(message="p не абсолютно непрерывно относительно q", details={"rule": "support"})
    return float(np.sum(rel_entr(p_values, q_values)))
