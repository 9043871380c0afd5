"""Модель отчёта о мерах пространства состояний."""

from typing import Tuple

from src.core.schemas import ClassLabel, FrozenModel


class MeasureReport(FrozenModel):
    """Разложение ln P на сохраняющуюся и диссипативные части.

    Attributes:
        conserved_term: Σ_j N_j(1 − Σ_k Δμ_jk/T) по проводящим рёбрам.
        two_dof_term: Диссипативный вклад рёбер без ветвящихся концов.
        multi_dof_term: Диссипативный вклад рёбер, инцидентных ветвящемуся узлу.
        mu_P: conserved_term + two_dof_term.
        mu_NP: mu_P + multi_dof_term.
        mu_diff: Разность μ_NP − μ_P.
        class_label: Метка класса сложности.
    """
    conserved_term: float
    two_dof_term: float
    multi_dof_term: float
    mu_P: float
    mu_NP: float
    mu_diff: float
    class_label: ClassLabel


class ComponentReport(FrozenModel):
    """Отчёт по одной связной компоненте."""
    nodes: Tuple[str, ...]
    report: MeasureReport
