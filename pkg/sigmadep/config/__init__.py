"""
sigmadep.config - layered solver settings.

Public API exports from schema.py, sources (core.py, formats.py) and models.py.
"""

# Export from schema.py
from sigmadep.config.schema import (
    Config,
    ConfigDict,
    ConfigModel,
    Field,
    ValidationError,
)

# Export from core.py and formats.py
from sigmadep.config.core import ConfigLoader, LayeredSources, deep_merge, load_sources
from sigmadep.config.formats import PackagedTomlLoader, TomlFileLoader

# Export from models.py
from sigmadep.config.models import (
    IntegrabilityConfig,
    LoggingConfig,
    OdeConfig,
    OutputConfig,
    SearchConfig,
    SolverSettings,
    parse_int_range,
)

__all__ = [
    # From schema.py
    "Config",
    "ConfigDict",
    "ConfigModel",
    "Field",
    "ValidationError",
    # Sources
    "ConfigLoader",
    "LayeredSources",
    "PackagedTomlLoader",
    "TomlFileLoader",
    "deep_merge",
    "load_sources",
    # From models.py
    "IntegrabilityConfig",
    "LoggingConfig",
    "OdeConfig",
    "OutputConfig",
    "SearchConfig",
    "SolverSettings",
    "parse_int_range",
]
