"""Пакет для конфигурации логирования."""

from src.core.logger.config import get_logger, render_diagnostic, setup_logger

__all__ = ["get_logger", "setup_logger", "render_diagnostic"]
