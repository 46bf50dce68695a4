"""
Loading and layering of settings sources.
"""
import abc
import logging
from typing import Any, Mapping

logger = logging.getLogger(__name__)


class ConfigLoader(abc.ABC):
    """A single source of settings, e.g. one TOML file."""

    @property
    def name(self) -> str:
        return repr(self)

    @abc.abstractmethod
    def load(self) -> Mapping[str, Any]:
        """
        Returns the source as a read-only mapping.

        A source that is absent but optional returns an empty mapping.
        """


def deep_merge(source: Mapping, destination: dict) -> dict:
    """
    Merges ``source`` into ``destination`` in place and returns ``destination``.

    Tables present on both sides are merged key by key. Anything else from the
    source (scalars, lists, or a table replacing a scalar) overwrites, and tables
    are copied so later edits to the source do not leak into the result.
    """
    for key, value in source.items():
        current = destination.get(key)
        if isinstance(value, Mapping) and isinstance(current, dict):
            deep_merge(value, current)
        elif isinstance(value, Mapping):
            destination[key] = deep_merge(value, {})
        else:
            destination[key] = value
    return destination


class LayeredSources:
    """
    Result of merging several loaders.

    ``data`` is the merged dictionary handed to pydantic-settings, ``provenance``
    maps every top-level key to the loader that last set it.
    """

    def __init__(self) -> None:
        self.data: dict[str, Any] = {}
        self.provenance: dict[str, str] = {}

    def add(self, loader: ConfigLoader, layer: Mapping[str, Any]) -> None:
        deep_merge(layer, self.data)
        for key in layer:
            self.provenance[key] = loader.name


def load_sources(sources: list[ConfigLoader]) -> LayeredSources:
    """
    Loads every source in order; later sources override earlier ones.

    A loader that raises is logged and skipped, except for ``FileNotFoundError``
    which signals a missing required file and propagates.
    """
    logger.debug("Layering settings from %d sources", len(sources))
    layered = LayeredSources()
    for loader in sources:
        try:
            layer = loader.load()
        except FileNotFoundError:
            raise
        except Exception as e:
            logger.error(f"Skipping settings source {loader}: {e}", exc_info=True)
            continue
        layered.add(loader, layer)
    logger.debug(f"Settings layered from: {sorted(set(layered.provenance.values()))}")
    return layered
