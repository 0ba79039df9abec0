import json
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Optional


def _to_int(val, name):
    try:
        return int(val)
    except (TypeError, ValueError) as e:
        raise ValueError(f"Invalid integer for '{name}': {val}") from e


def _to_float(val, name):
    try:
        return float(val)
    except (TypeError, ValueError) as e:
        raise ValueError(f"Invalid float for '{name}': {val}") from e


def _to_bool(val, name):
    if isinstance(val, bool):
        return val
    if isinstance(val, str) and val.lower() in ("true", "false"):
        return val.lower() == "true"
    raise ValueError(f"Invalid boolean for '{name}': {val}")


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical tolerances, relative to the natural scale of the quantity
    they bound (largest eigenvalue magnitude, largest singular value, ...).

    ``symmetry`` is absolute: it bounds the curvature symmetry residuals
    checked when a tensor is loaded and verified. ``duality`` is the
    residual bound of the duality check run by ``verify``.
    """
    cluster: float = 1e-9
    rank: float = 1e-8
    factor: float = 1e-9
    frame: float = 1e-8
    angle: float = 1e-9
    reconstruction: float = 1e-8
    symmetry: float = 1e-10
    duality: float = 1e-9

    def __post_init__(self):
        for f in fields(self):
            if not getattr(self, f.name) > 0:
                raise ValueError(f"tolerance '{f.name}' must be positive")

    @classmethod
    def from_dict(cls, data: dict) -> "Tolerances":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"Unknown tolerance keys: {sorted(unknown)}")
        return cls(**{k: _to_float(v, k) for k, v in data.items()})


@dataclass(frozen=True)
class RecoveryConfig:
    """
    Settings for the recovery pipeline.

    Args:
        samples: unit vectors drawn by the Osserman check.
        seed: seed of the PCG64 generator shared by every sampling step.
        tolerances: numerical tolerances.
        max_redraws: basis re-draw budget of the frame assembly.
        triple_samples: sampled triples tested for genericity per draw.
        check_samples: random vectors used to verify the assembled frame.
        subspace_samples: random vectors used to certify the stable subspace.
        retries: extra attempts (fresh seeds) after a stage failure.
        force: attempt recovery outside the dimension hypotheses.
    """
    samples: int = 200
    seed: int = 0
    tolerances: Tolerances = field(default_factory=Tolerances)
    max_redraws: int = 50
    triple_samples: int = 32
    check_samples: int = 100
    subspace_samples: int = 50
    retries: int = 2
    force: bool = False

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError("samples must be >= 2")
        if self.max_redraws < 1:
            raise ValueError("max_redraws must be >= 1")
        if self.retries < 0:
            raise ValueError("retries must be >= 0")

    def with_overrides(self, **kwargs) -> "RecoveryConfig":
        """Return a copy with the non-None keyword values applied."""
        tol_keys = {f.name for f in fields(Tolerances)}
        tol_updates = {k: v for k, v in kwargs.items() if k in tol_keys and v is not None}
        updates = {k: v for k, v in kwargs.items() if k not in tol_keys and v is not None}
        if tol_updates:
            updates["tolerances"] = replace(self.tolerances, **tol_updates)
        return replace(self, **updates)

    @classmethod
    def from_dict(cls, data: dict) -> "RecoveryConfig":
        converters = {
            "samples": _to_int,
            "seed": _to_int,
            "max_redraws": _to_int,
            "triple_samples": _to_int,
            "check_samples": _to_int,
            "subspace_samples": _to_int,
            "retries": _to_int,
            "force": _to_bool,
        }
        kwargs = {}
        for key, value in data.items():
            if key == "tolerances":
                kwargs[key] = Tolerances.from_dict(value)
            elif key in converters:
                kwargs[key] = converters[key](value, key)
            else:
                raise ValueError(f"Unknown configuration key '{key}'")
        return cls(**kwargs)

    @classmethod
    def from_json(cls, filename) -> "RecoveryConfig":
        path = Path(filename)
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ValueError(f"Failed to read configuration from '{path}': {e}") from e
        if not isinstance(data, dict):
            raise ValueError(f"Configuration '{path}' must hold a JSON object")
        return cls.from_dict(data)


class Command(str, Enum):
    GENERATE = "generate"
    VERIFY = "verify"
    RECOVER = "recover"
    CAYLEY = "cayley"
    RADON = "radon"


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


@dataclass(frozen=True)
class RunConfig:
    command: Command
    input_path: Optional[Path] = None
    samples: int = 200
    rel_tol: float = 1e-9
    seed: int = 0
    format: OutputFormat = OutputFormat.TEXT

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError("samples must be >= 2")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
