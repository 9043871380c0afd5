"""Конфигурация приложения.

Этот модуль определяет настройки симулятора и решателей, используя pydantic-settings
для загрузки конфигурации из переменных окружения и .env файла.
"""

from typing import TYPE_CHECKING, Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

if TYPE_CHECKING:
    from src.services.dynamics.models import SimConfig


class Settings(BaseSettings):
    """Настройки приложения.

    Attributes:
        APP_ENV: Окружение (development, production, testing).
        LOG_LEVEL: Уровень логирования.
        LOG_RENDERER: Формат диагностического вывода (console, json, keyvalue).
        SIM_DT_INITIAL: Начальный шаг интегрирования.
        SIM_DT_MAX: Максимальный шаг интегрирования.
        SIM_EPSILON: Допуск ε-стационарного состояния.
        SIM_WINDOW: Окно обнаружения стационарности (в принятых шагах).
        SIM_MAX_STEPS: Предельное число принятых шагов.
    """
    model_config = SettingsConfigDict(
        env_file=".env",
        env_ignore_empty=True,
        extra="ignore",
    )

    # App
    APP_ENV: Literal["development", "production", "testing"] = "production"
    LOG_LEVEL: str = "WARNING"
    LOG_RENDERER: Literal["console", "json", "keyvalue"] = "keyvalue"

    # Simulation
    SIM_DT_INITIAL: float = 0.01
    SIM_DT_MAX: float = 0.5
    SIM_EPSILON: float = 1e-6
    SIM_WINDOW: int = 100
    SIM_MAX_STEPS: int = 1_000_000
    SIM_SEED: int = 0
    SIM_TOLERANCE: float = 1e-9
    SIM_DT_FLOOR: float = 1e-15

    # Network model
    STIRLING_THRESHOLD: float = 10.0
    RESERVOIR_OCCUPANCY: float = 1e12
    PROBE_EPSILON_FACTOR: float = 1e-3

    # Solver caps
    SSSP_ORACLE_MAX_VERTICES: int = 12
    TSP_EXACT_MAX_CITIES: int = 18
    TSP_BRUTEFORCE_MAX_CITIES: int = 10
    SAT_BRUTEFORCE_MAX_VARS: int = 22
    INTERDICTION_MAX_SUBSETS: int = 200_000
    CONFLUENCE_MAX_NODES: int = 8

    # Parallelism
    ENSEMBLE_WORKERS: int = 1

    @property
    def simulation(self) -> "SimConfig":
        """Конфигурация симуляции по умолчанию, собранная из ключей SIM_*.

        Returns:
            SimConfig: Параметры интегратора.
        """
        from src.services.dynamics.models import SimConfig

        return SimConfig(
            dt_initial=self.SIM_DT_INITIAL,
            dt_max=self.SIM_DT_MAX,
            epsilon=self.SIM_EPSILON,
            window=self.SIM_WINDOW,
            max_steps=self.SIM_MAX_STEPS,
            seed=self.SIM_SEED,
        )


settings = Settings()
