"""Configuration loading with layered precedence.

Layers, lowest to highest: model defaults, ``DETOUR_*`` environment variables, the
config file, and explicit overrides (usually command-line flags).
"""

import copy
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import toml
import tomllib
from dotenv import load_dotenv

from ..core.exceptions import ConfigFileError
from ..internal.utils import get_logger
from .schema import CliConfig, build_model

logger = get_logger(__name__)

SECTION = "detour"

# environment variable -> dotted path inside the CliConfig document
ENV_MAPPINGS: Dict[str, str] = {
    "DETOUR_JOBS": "engine.jobs",
    "DETOUR_RNG_SEED": "engine.rng_seed",
}

_dotenv_loaded = False


def _default_config_path() -> Path:
    env_path = os.environ.get("MATILDA_CONFIG")
    if env_path:
        return Path(env_path)
    return Path.home() / ".matilda" / "config.toml"


def _load_dotenv_once() -> None:
    global _dotenv_loaded
    if _dotenv_loaded:
        return
    _dotenv_loaded = True
    for parent in [Path.cwd(), *Path.cwd().parents]:
        env_path = parent / ".env"
        if env_path.exists():
            load_dotenv(env_path)
            logger.debug(f"Loaded environment from {env_path}")
            break


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """
    Merge two configuration dictionaries, with override taking precedence.

    Nested dictionaries are merged key by key; any other value in ``override``
    replaces the one in ``base``. Neither input is modified.
    """
    result = copy.deepcopy(base)
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = copy.deepcopy(value)
    return result


def _set_dotted(target: Dict[str, Any], dotted: str, value: Any) -> None:
    node = target
    *parents, leaf = dotted.split(".")
    for key in parents:
        node = node.setdefault(key, {})
    node[leaf] = value


def env_overrides() -> Dict[str, Any]:
    """Collect the ``DETOUR_*`` environment knobs as a nested override document."""
    _load_dotenv_once()
    data: Dict[str, Any] = {}
    for env_key, dotted in ENV_MAPPINGS.items():
        raw = os.environ.get(env_key)
        if raw is None or raw == "":
            continue
        try:
            _set_dotted(data, dotted, int(raw))
        except ValueError:
            logger.warning(f"Ignoring non-integer value for {env_key}: {raw!r}")
    return data


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a configuration document from ``path``.

    ``.toml`` files hold the settings under a ``[detour]`` table, following the
    shared matilda config layout. ``.json`` files may either wrap the settings in a
    top-level ``"detour"`` key or hold them directly.

    Raises:
        ConfigFileError: On unreadable files, parse errors, a missing section or an
            unsupported suffix.
    """
    config_path = Path(path)
    suffix = config_path.suffix.lower()
    if suffix not in (".toml", ".json"):
        raise ConfigFileError(str(config_path), f"Unsupported config file format: {config_path.suffix}")

    try:
        if suffix == ".toml":
            with open(config_path, "rb") as f:
                document: Any = tomllib.load(f)
            section = document.get(SECTION)
            if section is None:
                raise ConfigFileError(str(config_path), f"Missing [{SECTION}] section")
        else:
            with open(config_path, encoding="utf-8") as f:
                document = json.load(f)
            if not isinstance(document, dict):
                raise ConfigFileError(str(config_path), "Top-level JSON value must be an object")
            section = document.get(SECTION, document)
    except ConfigFileError:
        raise
    except tomllib.TOMLDecodeError as e:
        raise ConfigFileError(str(config_path), f"TOML parsing error: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigFileError(str(config_path), f"JSON parsing error: {e}") from e
    except OSError as e:
        raise ConfigFileError(str(config_path), str(e)) from e

    if not isinstance(section, dict):
        raise ConfigFileError(str(config_path), f"[{SECTION}] must be a table")
    logger.debug(f"Loaded config from {config_path}")
    return section


def find_config_file() -> Optional[Path]:
    """Return the default config file if one exists."""
    config_path = _default_config_path()
    if config_path.exists():
        logger.debug(f"Found config file: {config_path}")
        return config_path
    return None


def load_config(
    config_file: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> CliConfig:
    """
    Build a validated ``CliConfig`` from all configuration layers.

    Args:
        config_file: Explicit config path. When omitted the default location is used
            if present; a default file without a ``[detour]`` table is ignored.
        overrides: Highest-precedence values, shaped like the config document.

    Returns:
        The merged, validated configuration.

    Raises:
        ConfigFileError: If an explicitly named file cannot be used.
        ConfigError: If the merged values fail validation.
    """
    merged = env_overrides()

    if config_file is not None:
        merged = deep_merge(merged, load_config_file(config_file))
    else:
        default_path = find_config_file()
        if default_path is not None:
            try:
                merged = deep_merge(merged, load_config_file(default_path))
            except ConfigFileError as e:
                logger.debug(f"Skipping default config: {e.message}")

    if overrides:
        merged = deep_merge(merged, overrides)

    return build_model(CliConfig, merged, section=SECTION)


def dump_config(cfg: CliConfig) -> str:
    """
    Render ``cfg`` as a TOML document with a ``[detour]`` table.

    Settings that are ``None`` are left out, since TOML has no null.
    """
    document = cfg.model_dump(mode="json", exclude_none=True)
    return toml.dumps({SECTION: document})


__all__ = [
    "deep_merge",
    "dump_config",
    "env_overrides",
    "find_config_file",
    "load_config",
    "load_config_file",
    "ENV_MAPPINGS",
]
