"""
Runtime configuration for mapwalk.

Values come from (highest precedence first) explicit overrides, ``MAPWALK_*``
environment variables (a ``.env`` file is honoured), an optional YAML file, and
the defaults below.

Example:
--------
>>> from mapwalk.config import MapwalkSettings
>>> settings = MapwalkSettings.from_yaml("mapwalk.yaml").with_overrides(max_steps=64)
>>> settings.max_steps
64
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from loguru import logger
from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import PreconditionError


class MapwalkSettings(BaseSettings):
    """Search horizons, tolerances and feature switches."""

    model_config = SettingsConfigDict(
        env_prefix="MAPWALK_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        frozen=True,
    )

    # Search horizons
    max_steps: int = Field(256, ge=1, description="B'_t sweep horizon for PST/periodicity")
    variant_max_steps: int = Field(32, ge=1, description="horizon for reverse / vertex-face PST")
    rational_identity_cap: int = Field(12, ge=1, description="U^s = I cap under rational spectrum")

    # Floating-point tolerances
    tol: float = Field(1e-9, description="eigensolver residual tolerance")
    cluster_radius: float = Field(1e-7, description="eigenvalue clustering radius")
    cluster_gap: float = Field(1e-6, description="minimum gap between clusters")

    # Switches
    general_pst: bool = False
    verify_operators: bool = True
    exact_power_max_arcs: int = Field(512, ge=0)
    log_level: str = "INFO"

    @field_validator("tol", "cluster_radius", "cluster_gap")
    @classmethod
    def _positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError(f"tolerance must be positive, got {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _level_name(cls, value: str) -> str:
        return value.upper()

    @model_validator(mode="after")
    def _gap_exceeds_radius(self) -> "MapwalkSettings":
        if self.cluster_gap <= self.cluster_radius:
            raise ValueError(
                f"cluster_gap ({self.cluster_gap}) must exceed "
                f"cluster_radius ({self.cluster_radius})"
            )
        return self

    # -------------------------------------------------------------------------

    @classmethod
    def from_yaml(cls, path: Optional[Union[str, Path]] = None) -> "MapwalkSettings":
        """
        Load settings with a YAML file underneath the environment.

        Args:
            path: YAML mapping of field names to values; ``None`` skips the file

        Returns:
            Validated settings
        """
        if path is None:
            return cls()

        path = Path(path)
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except (OSError, yaml.YAMLError) as exc:
            raise PreconditionError(f"cannot read config file {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise PreconditionError(f"config file {path} must contain a mapping")

        from_env = cls().model_fields_set
        layered = {key: value for key, value in data.items() if key not in from_env}
        logger.debug(f"Loaded {len(layered)} setting(s) from {path}")
        return cls(**layered)

    def with_overrides(self, **overrides: Any) -> "MapwalkSettings":
        """Return a copy with the non-``None`` overrides applied and re-validated."""
        updates = {key: value for key, value in overrides.items() if value is not None}
        if not updates:
            return self
        return type(self)(**{**self.model_dump(), **updates})

    def echo(self) -> Dict[str, Any]:
        """Settings as a plain dict for report headers."""
        return dict(sorted(self.model_dump().items()))


def default_settings() -> MapwalkSettings:
    return MapwalkSettings()
