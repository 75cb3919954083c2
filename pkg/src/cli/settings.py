# src/cli/settings.py
"""
Run configuration for the command-line front end.

A run configuration is a flat key=value text file (``#`` comments and
blank lines ignored) or a JSON object, plus ``--set key=value``
overrides. Any power-like key may instead be given in dB through a
``_db`` suffix (``p_m_db=10``); it is converted to linear at parse time.
"""

# imports built-in modules
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping

# imports local modules
from src.config import config
from src.core.simulate import SimConfig
from src.exceptions import ConfigError, MalformedValueError, MissingKeyError
from src.models import SystemParams

FLOAT_KEYS = frozenset(
    {
        "p_a",
        "p_min",
        "p_max",
        "p_j",
        "sigma_w2",
        "sigma_b2",
        "epsilon",
        "p_m",
        "rate",
        "gamma",
        "hypothesis_mix",
        "sweep_start",
        "sweep_stop",
        "sweep_step",
    }
)
INT_KEYS = frozenset({"symbols_per_slot", "trials", "seed", "block_size", "workers"})

# Keys that accept a "_db" variant
DB_KEYS = frozenset({"p_a", "p_min", "p_max", "sigma_w2", "sigma_b2", "p_m"})


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def _parse_number(key: str, raw: Any) -> float | int:
    if isinstance(raw, bool):
        raise MalformedValueError(key, str(raw), "expected a number")
    try:
        if key in INT_KEYS:
            if isinstance(raw, float) and not raw.is_integer():
                raise ValueError(raw)
            return int(raw)
        value = float(raw)
    except (TypeError, ValueError) as e:
        raise MalformedValueError(key, str(raw), "expected a number") from e
    if math.isnan(value):
        raise MalformedValueError(key, str(raw), "NaN is not allowed")
    return value


def _normalize(raw: Mapping[str, Any]) -> dict[str, float | int]:
    values: dict[str, float | int] = {}
    for key, value in raw.items():
        key = key.strip()
        if key.endswith("_db") and key[:-3] in DB_KEYS:
            base = key[:-3]
            values[base] = db_to_linear(float(_parse_number(base, value)))
        elif key in FLOAT_KEYS or key in INT_KEYS:
            values[key] = _parse_number(key, value)
        else:
            raise MalformedValueError(key, str(value), "unknown key")
    return values


def parse_key_values(lines: Iterable[str], source: str = "config") -> dict[str, str]:
    """Read ``key=value`` lines into raw strings."""
    raw: dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        key, sep, value = text.partition("=")
        if not sep or not key.strip():
            raise MalformedValueError(f"{source}:{number}", text, "expected key=value")
        raw[key.strip()] = value.strip()
    return raw


def load_file(path: str | Path) -> dict[str, Any]:
    """Raw mapping from a key=value or JSON config file."""
    file_path = Path(path)
    if not file_path.is_file():
        raise ConfigError("Config file not found", str(file_path))
    text = file_path.read_text(encoding="utf-8")
    if file_path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError("Invalid JSON config", f"{file_path}: {e}") from e
        if not isinstance(document, dict):
            raise ConfigError("Invalid JSON config", "top level must be an object")
        return document
    return parse_key_values(text.splitlines(), source=str(file_path))


@dataclass(frozen=True)
class RunSettings:
    """Resolved run configuration with typed accessors."""

    values: Mapping[str, float | int]

    @classmethod
    def resolve(
        cls, config_path: str | Path | None = None, overrides: Iterable[str] = ()
    ) -> "RunSettings":
        """Merge the config file (if any) with ``--set`` overrides."""
        raw: dict[str, Any] = dict(load_file(config_path)) if config_path else {}
        raw.update(parse_key_values(overrides, source="--set"))
        return cls(_normalize(raw))

    def require(self, *keys: str) -> tuple[float | int, ...]:
        for key in keys:
            if key not in self.values:
                raise MissingKeyError(key)
        return tuple(self.values[key] for key in keys)

    def get(self, key: str, default: float | int | None = None) -> float | int | None:
        return self.values.get(key, default)

    @property
    def sigma_w2(self) -> float:
        return float(self.values.get("sigma_w2", config.DEFAULT_SIGMA_W2))

    @property
    def sigma_b2(self) -> float:
        return float(self.values.get("sigma_b2", config.DEFAULT_SIGMA_B2))

    def system_params(self, *required: str) -> SystemParams:
        """SystemParams from the config; ``required`` keys must be present.

        Missing optional fields take their SystemParams defaults, noise
        variances the ``DEFAULT_SIGMA_*`` settings.
        """
        self.require(*required)
        fields = {
            key: float(self.values[key])
            for key in ("p_a", "p_min", "p_max", "p_j", "epsilon", "p_m", "rate")
            if key in self.values
        }
        return SystemParams(sigma_w2=self.sigma_w2, sigma_b2=self.sigma_b2, **fields)

    def sim_config(self) -> SimConfig:
        return SimConfig(
            symbols_per_slot=int(self.values.get("symbols_per_slot", config.SIM_SYMBOLS_PER_SLOT)),
            trials=int(self.values.get("trials", config.SIM_TRIALS)),
            seed=int(self.values.get("seed", config.SIM_SEED)),
            hypothesis_mix=float(self.values.get("hypothesis_mix", 0.5)),
            block_size=int(self.values.get("block_size", config.SIM_BLOCK_SIZE)),
            workers=int(self.values.get("workers", config.SIM_WORKERS)),
        )

    def resolved(self, extra: Mapping[str, Any] | None = None) -> dict[str, Any]:
        """Everything that shaped the run, for the output header."""
        merged = {"sigma_w2": self.sigma_w2, "sigma_b2": self.sigma_b2, **self.values}
        merged.update(extra or {})
        return merged
