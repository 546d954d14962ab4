"""
Environment configuration utilities for adfnlp.
"""

import os
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

DEFAULT_MAX_STATEMENTS = 14
DEFAULT_MAX_SUBSTATEMENTS = 10000
DEFAULT_MAX_CSET_PARENTS = 20
DEFAULT_SEED = 1
DEFAULT_TRIALS = 200

# Environment variable -> Settings field
ENV_VARIABLES = {
    "ADFNLP_MAX_STATEMENTS": "max_statements",
    "ADFNLP_MAX_SUBSTATEMENTS": "max_substatements",
    "ADFNLP_MAX_CSET_PARENTS": "max_cset_parents",
    "ADFNLP_SEED": "seed",
    "ADFNLP_TRIALS": "trials",
    "ADFNLP_UNICODE": "unicode",
}


class Settings(BaseModel):
    """Effective bounds and defaults shared by the library and the CLI."""

    model_config = ConfigDict(frozen=True)

    max_statements: int = Field(default=DEFAULT_MAX_STATEMENTS, ge=0)
    max_substatements: int = Field(default=DEFAULT_MAX_SUBSTATEMENTS, ge=0)
    max_cset_parents: int = Field(default=DEFAULT_MAX_CSET_PARENTS, ge=0)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    trials: int = Field(default=DEFAULT_TRIALS, ge=0)
    unicode: bool = False


def _load_dotenv() -> None:
    try:
        from dotenv import load_dotenv

        load_dotenv()
    except ImportError:
        # dotenv not installed, continue without it
        pass


def _read_environment() -> Dict[str, str]:
    values = {}
    for variable, field in ENV_VARIABLES.items():
        raw = os.getenv(variable)
        if raw is not None and raw.strip() != "":
            values[field] = raw.strip()
    return values


def load_settings_from_env() -> Settings:
    """
    Build Settings from ``ADFNLP_*`` environment variables.

    Requires python-dotenv for ``.env`` support: pip install adfnlp[env]

    Environment variables read:
    - ADFNLP_MAX_STATEMENTS (enumeration bound, default 14)
    - ADFNLP_MAX_SUBSTATEMENTS (substatement saturation bound, default 10000)
    - ADFNLP_MAX_CSET_PARENTS (widest parent set with a materialized C^t, default 20)
    - ADFNLP_SEED, ADFNLP_TRIALS (verify defaults)
    - ADFNLP_UNICODE (render negation as ¬)

    Returns:
        Validated Settings instance

    Raises:
        ValueError: If a variable holds a value of the wrong type or out of range
    """
    _load_dotenv()

    values = _read_environment()
    try:
        return Settings(**values)
    except ValidationError as e:
        bad = sorted(
            variable
            for variable, field in ENV_VARIABLES.items()
            if any(error["loc"] and error["loc"][0] == field for error in e.errors())
        )
        raise ValueError(f"Invalid adfnlp configuration in {', '.join(bad)}") from e


def get_env_config() -> Dict[str, Any]:
    """
    Get current environment configuration for adfnlp.

    Returns:
        Dictionary with the raw variables found and the effective settings
    """
    _load_dotenv()

    raw = {variable: os.getenv(variable) for variable in ENV_VARIABLES}
    try:
        effective: Dict[str, Any] = load_settings_from_env().model_dump()
        valid = True
    except ValueError:
        effective = Settings().model_dump()
        valid = False

    return {"environment": raw, "settings": effective, "valid": valid}


def validate_env_config() -> Tuple[bool, List[str]]:
    """
    Validate environment configuration.

    Returns:
        Tuple of (is_valid, list_of_invalid_variables)
    """
    _load_dotenv()

    invalid = []
    for variable, field in ENV_VARIABLES.items():
        raw = os.getenv(variable)
        if raw is None or raw.strip() == "":
            continue
        try:
            Settings(**{field: raw.strip()})
        except ValidationError:
            invalid.append(variable)

    return len(invalid) == 0, invalid


def create_settings(**overrides: Any) -> Settings:
    """
    Create Settings from explicit values, falling back to the environment.

    Args:
        **overrides: Settings fields; ``None`` values are ignored

    Returns:
        Settings with the overrides applied on top of the environment
    """
    base = load_settings_from_env()
    updates = {key: value for key, value in overrides.items() if value is not None}
    if not updates:
        return base
    return Settings(**{**base.model_dump(), **updates})
