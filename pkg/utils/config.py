"""
Runtime configuration.
Settings come from the environment (optionally a .env file); explicit
constructor arguments always win over the environment.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    return raw.strip().lower() in ('1', 'true', 'yes', 'on')


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class SolverConfig:
    """Settings shared by the solvers, the harness and the CLI."""
    debug_assertions: bool = True
    max_vertices: int = 12
    log_level: str = "WARNING"
    verify_seed: int = 0

    @classmethod
    def from_env(cls) -> "SolverConfig":
        """Build a config from ALPHA_* environment variables."""
        return cls(
            debug_assertions=_env_bool("ALPHA_DEBUG_ASSERTIONS", True),
            max_vertices=_env_int("ALPHA_MAX_VERTICES", 12),
            log_level=os.getenv("ALPHA_LOG_LEVEL", "WARNING").upper(),
            verify_seed=_env_int("ALPHA_VERIFY_SEED", 0),
        )


# Global config instance
_config: Optional[SolverConfig] = None


def get_config() -> SolverConfig:
    """Get or create the global config instance."""
    global _config
    if _config is None:
        _config = SolverConfig.from_env()
    return _config


def resolve_debug(debug_assertions: Optional[bool]) -> bool:
    """Explicit flag if given, otherwise the configured default."""
    if debug_assertions is None:
        return get_config().debug_assertions
    return debug_assertions
