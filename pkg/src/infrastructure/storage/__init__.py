"""Пакет файловых репозиториев."""

from src.infrastructure.storage.base import JsonRepository, load_json, read_text
from src.infrastructure.storage.network import NetworkRepository
from src.infrastructure.storage.problems import DimacsRepository, ParsedCnf, instance_repository
from src.infrastructure.storage.trajectory import TrajectoryRepository

__all__ = [
    "JsonRepository",
    "load_json",
    "read_text",
    "NetworkRepository",
    "DimacsRepository",
    "ParsedCnf",
    "TrajectoryRepository",
    "instance_repository",
]
