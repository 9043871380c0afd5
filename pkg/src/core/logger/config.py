"""Конфигурация логирования.

Этот модуль настраивает структурированное логирование с использованием библиотеки structlog.
Диагностика пишется в stderr: построчно в формате key=value (по умолчанию), в JSON
или в цветном консольном виде для разработки.
"""

import logging
import sys
from typing import Any

import structlog
from structlog.types import Processor

from src.core.config import settings


def _renderer() -> Processor:
    """Выбирает финальный процессор по настройке LOG_RENDERER."""
    if settings.LOG_RENDERER == "console" or settings.APP_ENV == "development":
        return structlog.dev.ConsoleRenderer()
    if settings.LOG_RENDERER == "json":
        return structlog.processors.JSONRenderer()
    return structlog.processors.KeyValueRenderer(key_order=["level", "event"], sort_keys=True)


def _stderr_logger(*args: Any) -> structlog.PrintLogger:
    """Логгер, пишущий в текущий sys.stderr на момент создания."""
    return structlog.PrintLogger(file=sys.stderr)


def setup_logger() -> None:
    """Настройка structlog для проекта.

    Конфигурирует процессоры, обработчики и форматирование в зависимости
    от переменных окружения APP_ENV и LOG_RENDERER.
    """
    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.format_exc_info,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
    ]

    if settings.LOG_RENDERER == "json":
        processors.append(structlog.processors.dict_tracebacks)
    processors.append(_renderer())

    structlog.configure(
        processors=processors,
        logger_factory=_stderr_logger,
        wrapper_class=structlog.make_filtering_bound_logger(logging.getLevelName(settings.LOG_LEVEL)),
        cache_logger_on_first_use=False,
    )
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=settings.LOG_LEVEL,
    )


def get_logger(name: str | None = None) -> Any:
    """Получение экземпляра логгера.

    Args:
        name: Имя логгера (обычно передается __name__).

    Returns:
        Any: Настроенный экземпляр логгера structlog.
    """
    return structlog.get_logger(name)


def render_diagnostic(**fields: Any) -> str:
    """Форматирует одну машиночитаемую строку key=value для потока диагностики.

    Args:
        **fields: Пары ключ-значение в порядке вывода.

    Returns:
        str: Строка вида ``status=error code=... message=...``.
    """
    renderer = structlog.processors.KeyValueRenderer(key_order=list(fields), drop_missing=True)
    return str(renderer(None, "diagnostic", dict(fields)))
