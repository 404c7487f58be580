"""
Settings and configuration management for the simultaneous root finder.

This module provides centralized configuration with dataclasses for
solver settings, oracle (cross-validation) settings, and output settings.
"""

from dataclasses import dataclass, field, fields, replace as dc_replace
from enum import Enum
from typing import Optional
import json
import os


class Method(str, Enum):
    """Simultaneous iteration to run."""
    WEIERSTRASS_KERNER = "weierstrass_kerner"
    CHEBYSHEV = "chebyshev"

    @classmethod
    def parse(cls, value: str) -> "Method":
        """Accept the enum value or the short CLI spelling ("wdk")."""
        aliases = {
            "wdk": cls.WEIERSTRASS_KERNER,
            "durand_kerner": cls.WEIERSTRASS_KERNER,
            "newton": cls.WEIERSTRASS_KERNER,
            "tanabe": cls.CHEBYSHEV,
        }
        key = str(value).strip().lower().replace("-", "_")
        if key in aliases:
            return aliases[key]
        return cls(key)


@dataclass(frozen=True)
class SolverConfig:
    """Iteration loop configuration."""
    tol: float = 1e-15  # 1-norm of the step
    max_iter: int = 1000
    collision_eps: float = 1e-12  # relative to 1 + max|x_i|
    method: Method = Method.WEIERSTRASS_KERNER

    # Re-seed a colliding entry instead of aborting
    jitter_retry: bool = False
    max_jitter_retries: int = 3

    record_trace: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if int(self.max_iter) < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.collision_eps < 0:
            raise ValueError(f"collision_eps must be >= 0, got {self.collision_eps}")
        if self.max_jitter_retries < 0:
            raise ValueError("max_jitter_retries must be >= 0")
        if not isinstance(self.method, Method):
            object.__setattr__(self, "method", Method.parse(self.method))

    def replace(self, **changes) -> "SolverConfig":
        """Return a validated copy with the given fields changed."""
        return dc_replace(self, **changes)


@dataclass
class OracleSettings:
    """Randomized cross-validation settings."""
    fd_step: float = 1e-6  # scaled by (1 + |x_k|)
    max_perturbation: float = 0.3
    n_jobs: int = 1

    # Suite tolerances
    step_tolerance: float = 1e-9
    inverse_tolerance: float = 1e-9
    fd_jacobian_tolerance: float = 1e-6
    fd_hessian_tolerance: float = 1e-5
    identity_tolerance: float = 1e-12
    kronecker_tolerance: float = 1e-10
    premultiply_tolerance: float = 1e-11


@dataclass
class OutputSettings:
    """Report and export settings."""
    format: str = "text"  # text | jsonl
    significant_digits: int = 16
    export_dir: str = "outputs"


@dataclass
class Settings:
    """Main application settings container."""
    solver: SolverConfig = field(default_factory=SolverConfig)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    app_name: str = "vieta-roots"
    version: str = "1.0.0"

    def save_to_file(self, filepath: str = "settings.json"):
        """Save current settings to JSON file."""
        data = {
            "solver": {
                "tol": self.solver.tol,
                "max_iter": self.solver.max_iter,
                "collision_eps": self.solver.collision_eps,
                "method": self.solver.method.value,
                "jitter_retry": self.solver.jitter_retry,
                "max_jitter_retries": self.solver.max_jitter_retries,
                "record_trace": self.solver.record_trace
            },
            "oracle": {f.name: getattr(self.oracle, f.name) for f in fields(self.oracle)},
            "output": {f.name: getattr(self.output, f.name) for f in fields(self.output)}
        }
        with open(filepath, 'w') as f:
            json.dump(data, f, indent=2)

    @classmethod
    def load_from_file(cls, filepath: str = "settings.json", logger=None) -> 'Settings':
        """
        Load settings from JSON file.

        Missing files yield defaults; unknown keys are ignored.

        Args:
            filepath: Path to the JSON settings file
            logger: Optional Logger for load errors

        Returns:
            Settings instance
        """
        settings = cls()

        if not os.path.exists(filepath):
            return settings

        try:
            with open(filepath, 'r') as f:
                data = json.load(f)

            # Solver config is frozen, so collect changes first
            if "solver" in data:
                known = {f.name for f in fields(SolverConfig)}
                changes = {k: v for k, v in data["solver"].items() if k in known}
                if "method" in changes:
                    changes["method"] = Method.parse(changes["method"])
                settings.solver = settings.solver.replace(**changes)

            if "oracle" in data:
                for key, value in data["oracle"].items():
                    if hasattr(settings.oracle, key):
                        setattr(settings.oracle, key, value)

            if "output" in data:
                for key, value in data["output"].items():
                    if hasattr(settings.output, key):
                        setattr(settings.output, key, value)

        except Exception as e:
            message = f"Error loading settings from {filepath}: {e}"
            if logger is not None:
                logger.error(message)
            else:
                from utils.logging import default_logger
                default_logger().error(message)
            return cls()

        return settings


def resolve_settings(filepath: Optional[str], logger=None) -> Settings:
    """Load settings from ``filepath`` or return defaults when no path is given."""
    if not filepath:
        return Settings()
    return Settings.load_from_file(filepath, logger=logger)
