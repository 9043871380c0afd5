"""Модели динамики: конфигурация интегратора, снимки состояния и траектории."""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import Field, model_validator

from src.core.schemas import FrozenModel, Termination
from src.services.network.models import Network


class SimConfig(FrozenModel):
    """Параметры адаптивного интегратора.

    Attributes:
        dt_initial: Начальный шаг.
        dt_max: Максимальный шаг.
        epsilon: Допуск ε-стационарного состояния ε_S.
        window: Окно обнаружения стационарности (принятые снимки).
        max_steps: Предельное число принятых шагов.
        seed: Зерно для рандомизированных утилит.
    """
    dt_initial: float = Field(default=0.01, gt=0)
    dt_max: float = Field(default=0.5, gt=0)
    epsilon: float = Field(default=1e-6, gt=0)
    window: int = Field(default=100, ge=2)
    max_steps: int = Field(default=1_000_000, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def check_step_bounds(self) -> Self:
        """Проверяет, что начальный шаг не превышает максимальный."""
        if self.dt_initial > self.dt_max:
            raise ValueError("dt_initial не может превышать dt_max")
        return self


@dataclass(frozen=True, slots=True, eq=False)
class Snapshot:
    """Снимок состояния сети в момент времени.

    Значения хранятся массивами, отображения строятся по требованию.

    Attributes:
        time: Время снимка.
        entropy: Энтропия S (накопленная по закону производства).
        generator: Генератор процесса L ≥ 0.
        node_ids: Идентификаторы узлов (общие для траектории).
        edge_ids: Идентификаторы рёбер (общие для траектории).
        occupancy_values: Заселённости в порядке node_ids.
        flow_values: Вклад каждого ребра в ΔN узла from за единицу времени.
    """
    time: float
    entropy: float
    generator: float
    node_ids: Tuple[str, ...]
    edge_ids: Tuple[str, ...]
    occupancy_values: np.ndarray = field(repr=False)
    flow_values: np.ndarray = field(repr=False)

    @property
    def occupancies(self) -> Mapping[str, float]:
        return MappingProxyType(dict(zip(self.node_ids, self.occupancy_values.tolist())))

    @property
    def flows(self) -> Mapping[str, float]:
        return MappingProxyType(dict(zip(self.edge_ids, self.flow_values.tolist())))


@dataclass(frozen=True, slots=True, eq=False)
class Trajectory:
    """Путь системы в пространстве состояний.

    Attributes:
        network: Начальная сеть.
        config: Конфигурация интегратора.
        snapshots: Принятые снимки (снимок 0 — начальное состояние).
        terminated: Причина остановки.
        rejected_steps: Число отклонённых пробных шагов.
    """
    network: Network
    config: SimConfig
    snapshots: Tuple[Snapshot, ...]
    terminated: Termination
    rejected_steps: int = 0

    @property
    def final(self) -> Snapshot:
        return self.snapshots[-1]

    def final_network(self) -> Network:
        """Сеть с заселённостями последнего снимка."""
        return self.network.with_occupancies(dict(self.final.occupancies))


class StabilityReport(FrozenModel):
    """Результат проверки устойчивости по Ляпунову.

    Attributes:
        returned: Система вернулась в ε-окрестность исходного стационарного состояния.
        entropy_drop: Насколько S(возмущённое) ниже S(стационарное) по шкале производства.
        initial_generator: Генератор L сразу после возмущения.
    """
    returned: bool
    entropy_drop: float
    initial_generator: float
