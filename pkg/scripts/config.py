"""Run configuration: config.yaml defaults, an optional override file, and flags."""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from su2.errors import ConfigError

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def load_config(config_path: str = None) -> dict:
    path = Path(config_path) if config_path else PROJECT_ROOT / "config.yaml"
    try:
        with open(path) as f:
            if path.suffix == ".json":
                data = json.load(f)
            else:
                data = yaml.safe_load(f)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot parse config: {e}", path=str(path)) from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping", path=str(path))
    return data


def check_keys(overrides: dict, defaults: dict, where: str = "", path: str = None):
    """Reject override keys that have no default counterpart."""
    for key, value in overrides.items():
        name = f"{where}.{key}" if where else key
        if key not in defaults:
            raise ConfigError(f"unknown config key '{name}'", path=path)
        if isinstance(defaults[key], dict):
            if not isinstance(value, dict):
                raise ConfigError(f"config key '{name}' must be a mapping", path=path)
            check_keys(value, defaults[key], name, path)


@dataclass
class RunConfig:
    """Defaults overlaid by command-line flags, then by the override file."""

    defaults: dict = field(default_factory=dict)
    overrides: dict = field(default_factory=dict)
    out: Path = Path("out")
    seed: int = 0
    verbose: bool = False

    @classmethod
    def build(cls, config_path: str = None, out: str = None, seed: int = None, verbose: bool = False) -> "RunConfig":
        defaults = load_config()
        overrides = {}
        if config_path:
            overrides = load_config(config_path)
            check_keys(overrides, defaults, path=config_path)
            logger.debug("Loaded overrides from %s: %s", config_path, sorted(overrides))
        return cls(
            defaults=defaults,
            overrides=overrides,
            out=Path(overrides.get("output_dir", out if out is not None else defaults["output_dir"])),
            seed=int(overrides.get("seed", seed if seed is not None else defaults["seed"])),
            verbose=verbose,
        )

    def section(self, name: str, **flags) -> dict:
        settings = dict(self.defaults.get(name, {}))
        unknown = [key for key in flags if key not in settings]
        if unknown:
            raise ConfigError(f"flags {unknown} have no default in section '{name}'")
        settings.update({key: value for key, value in flags.items() if value is not None})
        settings.update(self.overrides.get(name, {}))
        return settings

    def output_dir(self) -> Path:
        self.out.mkdir(parents=True, exist_ok=True)
        return self.out
