"""
Configuration system for doublegraph.

Loads configuration from:
1. doublegraph.yaml (or ~/.doublegraph/doublegraph.yaml) for suite and probe defaults
2. .env for environment overrides (DOUBLEGRAPH_JOBS, DOUBLEGRAPH_LOG_LEVEL)

Supports ${VAR} placeholder resolution from environment. Nothing here is
required: with no file and no env vars every command runs on built-in defaults,
and command-line flags always win.
"""

import logging
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, List, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

# Exhaustive enumeration is 2^(p(p-1)/2) graphs; p = 8 is already 2^28.
P_HARD_CAP = 8

_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class SuiteSettings(BaseModel):
    """Defaults for `doublegraph verify`."""

    p_min: int = Field(default=2, description="Smallest vertex count in the exhaustive corpus.")
    p_max: int = Field(default=5, description="Largest vertex count (hard cap 8).")
    n_values: List[int] = Field(default_factory=lambda: [2, 3], description="Layer counts n.")
    jobs: int = Field(default=1, description="Worker processes for the sweep.")
    seed: int = Field(default=0, description="Seed for random corpora.")
    fixtures: List[str] = Field(default_factory=list, description="Named graphs appended.")

    @field_validator("p_min")
    @classmethod
    def clamp_p_min(cls, v: int) -> int:
        return max(1, v)

    @field_validator("p_max")
    @classmethod
    def check_p_max(cls, v: int) -> int:
        if v > P_HARD_CAP:
            raise ValueError(f"p_max must be <= {P_HARD_CAP}, got {v}")
        return v

    @field_validator("n_values")
    @classmethod
    def check_n_values(cls, v: List[int]) -> List[int]:
        if not v or any(n < 2 for n in v):
            raise ValueError("n_values must be a nonempty list of integers >= 2")
        return sorted(set(v))

    @field_validator("jobs")
    @classmethod
    def clamp_jobs(cls, v: int) -> int:
        return max(1, min(os.cpu_count() or 1, v))

    @field_validator("seed")
    @classmethod
    def mask_seed(cls, v: int) -> int:
        """Seeds are 64-bit."""
        return v & ((1 << 64) - 1)


class ProbeSettings(BaseModel):
    """Defaults for `doublegraph probe`."""

    p_max: int = Field(default=6, description="Largest vertex count searched exhaustively.")
    fixtures: List[str] = Field(default_factory=lambda: ["fig4", "cubic_pair"])

    @field_validator("p_max")
    @classmethod
    def check_p_max(cls, v: int) -> int:
        if v > P_HARD_CAP:
            raise ValueError(f"p_max must be <= {P_HARD_CAP}, got {v}")
        return v


@dataclass
class Config:
    """Main configuration object."""

    suite: SuiteSettings = field(default_factory=SuiteSettings)
    probe: ProbeSettings = field(default_factory=ProbeSettings)
    log_level: str = "WARNING"
    log_file: Optional[Path] = None
    source: Optional[Path] = None


def _load_env_file(env_path: Optional[Path] = None) -> None:
    if env_path and env_path.exists():
        load_dotenv(env_path)
        return
    env_locations = []
    try:
        env_locations.append(Path.cwd() / ".env")
    except OSError:
        pass
    env_locations.append(Path.home() / ".doublegraph" / ".env")
    for loc in env_locations:
        if loc.exists():
            load_dotenv(loc)
            break


def get_default_jobs() -> int:
    """
    Worker count for sweeps from DOUBLEGRAPH_JOBS. Default 1.
    Clamped to 1..cpu_count.
    """
    _load_env_file()
    raw = os.environ.get("DOUBLEGRAPH_JOBS", "1").strip()
    try:
        val = int(raw)
    except ValueError:
        return 1
    return max(1, min(os.cpu_count() or 1, val))


def get_log_level(default: str = "WARNING") -> str:
    """DOUBLEGRAPH_LOG_LEVEL if it names a logging level, else `default`."""
    _load_env_file()
    raw = os.environ.get("DOUBLEGRAPH_LOG_LEVEL", "").strip().upper()
    return raw if raw in _LEVELS else default


def _resolve_env_vars(value: Any) -> Any:
    """Resolve ${VAR} placeholders from environment."""
    if isinstance(value, str):
        pattern = r"\$\{([^}]+)\}"

        def replacer(match):
            return os.environ.get(match.group(1), match.group(0))

        return re.sub(pattern, replacer, value)
    if isinstance(value, dict):
        return {k: _resolve_env_vars(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_resolve_env_vars(item) for item in value]
    return value


def _find_config_file() -> Optional[Path]:
    """Find doublegraph.yaml in standard locations."""
    locations = []
    try:
        cwd = Path.cwd()
        locations.extend([cwd / "doublegraph.yaml", cwd / ".doublegraph.yaml"])
    except OSError:
        pass
    locations.extend([
        Path.home() / ".doublegraph" / "doublegraph.yaml",
        Path.home() / ".config" / "doublegraph" / "doublegraph.yaml",
    ])
    for loc in locations:
        if loc.exists():
            return loc
    return None


def load_config(config_path: Optional[Path] = None, env_path: Optional[Path] = None) -> Config:
    """
    Load configuration from YAML and environment.

    Args:
        config_path: Path to doublegraph.yaml (auto-detected if not provided)
        env_path: Path to .env file (auto-detected if not provided)

    Raises:
        pydantic.ValidationError: a suite or probe value is out of range
    """
    _load_env_file(env_path)
    yaml_path = config_path or _find_config_file()

    raw: dict = {}
    if yaml_path and yaml_path.exists():
        with open(yaml_path, "r", encoding="utf-8") as f:
            raw = _resolve_env_vars(yaml.safe_load(f) or {})
        logger.info("[config] loaded %s", yaml_path)

    suite_data = dict(raw.get("suite") or {})
    if "jobs" not in suite_data and os.environ.get("DOUBLEGRAPH_JOBS"):
        suite_data["jobs"] = get_default_jobs()
    logging_data = raw.get("logging") or {}
    level = str(logging_data.get("level", "WARNING")).upper()
    log_file = logging_data.get("file")

    return Config(
        suite=SuiteSettings(**suite_data),
        probe=ProbeSettings(**(raw.get("probe") or {})),
        log_level=get_log_level(level if level in _LEVELS else "WARNING"),
        log_file=Path(log_file).expanduser() if log_file else None,
        source=yaml_path if yaml_path and yaml_path.exists() else None,
    )
