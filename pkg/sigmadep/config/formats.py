"""
TOML settings files, on disk or shipped inside the package.
"""
import logging
import types
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Union

from sigmadep.config.core import ConfigLoader

try:
    import tomllib
except ImportError:
    # Python < 3.11
    try:
        import tomli as tomllib
    except ImportError:
        logging.getLogger(__name__).error(
            "For Python < 3.11, the 'tomli' package is required for TOML parsing."
        )
        raise

logger = logging.getLogger(__name__)

_EMPTY: Mapping[str, Any] = types.MappingProxyType({})


def _parse(text: str, origin: str) -> Mapping[str, Any]:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        logger.warning(f"Ignoring malformed TOML in {origin}: {e}")
        return _EMPTY
    logger.debug(f"Loaded settings from {origin}")
    return types.MappingProxyType(data)


class TomlFileLoader(ConfigLoader):
    """
    Loads settings from a TOML file on disk.

    Args:
        file_path: Path of the file.
        required: If True a missing file raises FileNotFoundError, otherwise it
            contributes nothing.
    """

    def __init__(self, file_path: Union[Path, str], required: bool = False):
        self.file_path = Path(file_path)
        self.required = required

    @property
    def name(self) -> str:
        return str(self.file_path)

    def load(self) -> Mapping[str, Any]:
        if not self.file_path.exists():
            if self.required:
                raise FileNotFoundError(f"Required settings file not found: {self.file_path}")
            logger.debug(f"Optional settings file not found, skipping: {self.file_path}")
            return _EMPTY
        try:
            text = self.file_path.read_text(encoding="utf-8")
        except OSError as e:
            logger.warning(f"Cannot read settings file {self.file_path}: {e}")
            return _EMPTY
        return _parse(text, str(self.file_path))

    def __repr__(self) -> str:
        return f"TomlFileLoader(file_path='{self.file_path}', required={self.required})"


class PackagedTomlLoader(ConfigLoader):
    """Loads a TOML resource shipped inside the ``sigmadep.config`` package."""

    def __init__(self, resource: str, package: str = "sigmadep.config"):
        self.resource = resource
        self.package = package

    @property
    def name(self) -> str:
        return f"{self.package}/{self.resource}"

    def load(self) -> Mapping[str, Any]:
        try:
            text = resources.files(self.package).joinpath(self.resource).read_text(encoding="utf-8")
        except (FileNotFoundError, ModuleNotFoundError) as e:
            raise FileNotFoundError(f"Packaged settings resource missing: {self.name}") from e
        return _parse(text, self.name)

    def __repr__(self) -> str:
        return f"PackagedTomlLoader(resource='{self.resource}', package='{self.package}')"
