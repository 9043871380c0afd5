"""Репозиторий файлов сети."""

from src.infrastructure.storage.base import JsonRepository
from src.services.network import Network


class NetworkRepository(JsonRepository[Network]):
    """Чтение и запись сети в JSON с ключами temperature, nodes, edges."""

    def __init__(self) -> None:
        super().__init__(Network)
