import json
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel
from pydantic.types import NonNegativeInt, PositiveInt
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from .models.report import Suite
from .services.potentials import Part


class ProcessorSettings(BaseModel):
    """Threads sharing the per-degree verification slices.

    The series kernels are pure Python and hold the GIL, so extra workers do not
    make a run faster.
    """
    nb_worker: PositiveInt = 1


class LoggerSettings(BaseModel):
    file_path: Path


OutputFormat = Literal['json', 'csv']


class Settings(BaseSettings):
    qmax: NonNegativeInt = 3
    zorder: NonNegativeInt = 5
    uorder: NonNegativeInt = 3
    suites: list[Suite] = [Suite.ALL]
    format: OutputFormat = 'json'
    extended: bool = False
    part: Part = Part.ALL
    at: dict[str, str | int | float] = {}

    Processor: ProcessorSettings = ProcessorSettings()
    Logger: Optional[LoggerSettings] = None

    model_config = SettingsConfigDict(extra='forbid')

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)

    @classmethod
    def load(cls, config_path: Optional[Path] = None, **overrides: Any) -> 'Settings':
        """Settings from a JSON file, overridden by the explicitly given values."""
        values: dict[str, Any] = json.loads(config_path.read_text(encoding='utf-8')) if config_path else {}
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
