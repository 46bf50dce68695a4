"""
Facade classes over Pydantic so solver code and users never import it directly.

Settings sections extend ``ConfigModel``; the top-level settings class extends
``Config`` and therefore reads environment variables.
"""

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict as PydanticModelConfigDict
from pydantic import Field as PydanticField
from pydantic import ValidationError as PydanticValidationError
from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import SettingsConfigDict as PydanticSettingsConfigDict


class ConfigModel(PydanticBaseModel):
    """
    Base class for a settings section.

    Sections are frozen: a solver run never mutates the settings it was given.
    """

    model_config = PydanticModelConfigDict(frozen=True, extra="forbid", populate_by_name=True)


class Config(PydanticBaseSettings):
    """Base class for top-level settings with environment variable support."""

    pass


class ConfigDict(PydanticSettingsConfigDict):
    """Settings behaviour dictionary, a facade over ``SettingsConfigDict``."""

    pass


Field = PydanticField
ValidationError = PydanticValidationError


__all__ = ["ConfigModel", "Config", "ConfigDict", "Field", "ValidationError"]
