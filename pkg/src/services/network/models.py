"""Модели сети преобразования энергии.

Узлы несут заселённость N_j и энергию Гиббса G_j (в единицах k_BT), рёбра несут
проводимость σ_jk, вырождение g_jk и диссипацию ΔQ_jk. Постоянная Больцмана k_B = 1.
"""

from typing import Tuple

from pydantic import Field

from src.core.schemas import FrozenModel


class Node(FrozenModel):
    """Узел сети.

    Attributes:
        id: Уникальная метка узла.
        occupancy: Заселённость N_j.
        gibbs_energy: Энергия Гиббса G_j.
    """
    id: str
    occupancy: float
    gibbs_energy: float = 0.0


class Edge(FrozenModel):
    """Ребро сети с хранимой ориентацией from → to.

    Attributes:
        source: Узел j (ключ JSON ``from``).
        target: Узел k (ключ JSON ``to``).
        conductance: Проводимость σ_jk.
        degeneracy: Вырождение g_jk.
        dissipation: Диссипация ΔQ_jk.
    """
    source: str = Field(alias="from")
    target: str = Field(alias="to")
    conductance: float
    degeneracy: int = 1
    dissipation: float = 0.0

    @property
    def id(self) -> str:
        """Строковый идентификатор ребра."""
        return f"{self.source}->{self.target}"

    @property
    def pair(self) -> frozenset[str]:
        """Неупорядоченная пара концов."""
        return frozenset((self.source, self.target))

    @property
    def is_conducting(self) -> bool:
        return self.conductance > 0

    @property
    def is_dissipative(self) -> bool:
        return self.dissipation != 0

    def other(self, node_id: str) -> str:
        """Возвращает противоположный конец ребра."""
        return self.target if node_id == self.source else self.source

    def oriented_dissipation(self, node_id: str) -> float:
        """Диссипация с точки зрения узла node_id (знак меняется при обращении)."""
        return self.dissipation if node_id == self.source else -self.dissipation


class Network(FrozenModel):
    """Сеть: узлы, рёбра и температура окружения.

    Attributes:
        temperature: Температура T (k_B = 1).
        nodes: Узлы в порядке документа.
        edges: Рёбра в порядке документа.
    """
    temperature: float = 1.0
    nodes: Tuple[Node, ...] = ()
    edges: Tuple[Edge, ...] = ()

    @property
    def node_ids(self) -> list[str]:
        return [node.id for node in self.nodes]

    def node_map(self) -> dict[str, Node]:
        """Индекс узлов по идентификатору."""
        return {node.id: node for node in self.nodes}

    def incident(self, node_id: str) -> list[Edge]:
        """Рёбра, инцидентные узлу."""
        return [edge for edge in self.edges if node_id in (edge.source, edge.target)]

    def with_occupancies(self, occupancies: dict[str, float]) -> "Network":
        """Копия сети с новыми заселённостями (остальные поля без изменений)."""
        nodes = tuple(
            node.model_copy(update={"occupancy": float(occupancies.get(node.id, node.occupancy))})
            for node in self.nodes
        )
        return self.model_copy(update={"nodes": nodes})


class Violation(FrozenModel):
    """Нарушение инварианта сети.

    Attributes:
        subject: Узел, ребро или ``network``.
        rule: Машиночитаемое имя правила.
        message: Описание нарушения.
    """
    subject: str
    rule: str
    message: str
