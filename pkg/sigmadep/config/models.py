"""
Solver settings: defaults, profiles and environment overrides.
"""

import logging
import os
import re
from typing import Any, ClassVar, List, Optional

from pydantic import field_validator

from sigmadep.config.core import ConfigLoader, LayeredSources, load_sources
from sigmadep.config.formats import PackagedTomlLoader, TomlFileLoader
from sigmadep.config.schema import Config, ConfigDict, ConfigModel, Field

logger = logging.getLogger(__name__)

ENV_VAR = "SIGMADEP_ENV"

_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_int_range(text: str) -> list[int]:
    """Parses ``"3"`` or ``"1..10"`` (inclusive) into a list of integers."""
    match = _RANGE.match(text)
    if not match:
        raise ValueError(f"not an integer range: {text!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if high < low:
        raise ValueError(f"empty integer range: {text!r}")
    return list(range(low, high + 1))


class SearchConfig(ConfigModel):
    """Bounds for the semi-decision procedures."""

    max_order: int = Field(3, ge=0, description="Order bound J of sigma-relation searches")
    d_max: int = Field(5, ge=1, description="Largest d tried by integrability sweeps")
    s_range: str = Field("1..10", description="Integer s values swept by the Airy run")

    @field_validator("s_range")
    @classmethod
    def _check_range(cls, value: str) -> str:
        values = parse_int_range(value)
        if values[0] < 1:
            raise ValueError("s values must be positive")
        return value

    def s_values(self) -> list[int]:
        return parse_int_range(self.s_range)


class OdeConfig(ConfigModel):
    """Linear ODE solver knobs."""

    cyclic_vector_attempts: int = Field(8, ge=3, description="Seed vectors tried before giving up")
    seed: int = Field(20240917, description="Seed of the pseudo-random cyclic vector candidates")
    series_order: int = Field(8, ge=1, description="Default truncation order of series solutions")


class IntegrabilityConfig(ConfigModel):
    workers: int = Field(1, ge=1, description="Processes used by parameter sweeps")


class OutputConfig(ConfigModel):
    json_output: bool = Field(False, alias="json", description="Emit JSON reports")
    verify: bool = Field(True, description="Re-check certificates before emitting them")


class LoggingConfig(ConfigModel):
    level: str = Field("WARNING", description="Root log level used by the CLI")
    format: str = Field("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    @field_validator("level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        level = value.upper()
        if level not in _LEVELS:
            raise ValueError(f"unknown log level: {value}")
        return level


class SolverSettings(Config):
    """
    Effective settings of a sigmadep run.

    Sources, earliest wins: constructor arguments, ``SIGMADEP_*`` environment
    variables, ``.env``, secrets, then the TOML layers (packaged defaults,
    ``config.<SIGMADEP_ENV>.toml``, ``config.local.toml``).
    """

    search: SearchConfig = Field(default_factory=SearchConfig)
    ode: OdeConfig = Field(default_factory=OdeConfig)
    integrability: IntegrabilityConfig = Field(default_factory=IntegrabilityConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    model_config = ConfigDict(
        env_prefix="SIGMADEP_", env_nested_delimiter="__", case_sensitive=False
    )

    config_sources: ClassVar[List[ConfigLoader]] = []
    last_layers: ClassVar[Optional[LayeredSources]] = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[Config],
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ) -> tuple[Any, ...]:
        profile = os.getenv(ENV_VAR, "development").lower()
        logger.debug("Settings profile: %s", profile)

        cls.config_sources = [
            PackagedTomlLoader("defaults.toml"),
            TomlFileLoader(f"config.{profile}.toml", required=False),
            TomlFileLoader("config.local.toml", required=False),
        ]
        layers = load_sources(cls.config_sources)
        cls.last_layers = layers

        return (
            init_settings,
            env_settings,
            dotenv_settings,
            file_secret_settings,
            lambda: layers.data,
        )

    @classmethod
    def load(cls, **overrides: Any) -> "SolverSettings":
        """Builds the settings, with ``overrides`` taking precedence over every file."""
        settings = cls(**overrides)
        logger.debug(f"Effective settings: {settings.model_dump(by_alias=True)}")
        return settings

    def provenance(self) -> dict[str, str]:
        """Which TOML layer last set each section (sections unset by files are omitted)."""
        layers = type(self).last_layers
        return dict(layers.provenance) if layers is not None else {}
