"""Run configuration shared by the verification suites and the command line."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .params import ModelParams, ParameterDomainError

SUITES = ("fock", "daha", "laplacian", "integrals", "pieri", "completeness", "poincare")
FORMATS = ("json", "csv", "coo")


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration (maps to exit status 2)."""


@dataclass(frozen=True)
class Tolerances:
    newton: float = 1e-10
    eigen: float = 1e-8
    relation: float = 1e-12
    laplacian: float = 1e-10
    integrals: float = 1e-10
    rank: float = 1e-8

    def __post_init__(self):
        for f in fields(self):
            if not getattr(self, f.name) > 0:
                raise ConfigError(f"tolerance {f.name} must be positive")


@dataclass(frozen=True)
class RunConfig:
    n: int = 2
    m: int = 2
    params: ModelParams = field(default_factory=ModelParams)
    tolerances: Tolerances = field(default_factory=Tolerances)
    suites: tuple = ("all",)
    output: str | None = None
    format: str = "json"
    seed: int = 0
    grid_points: int = 3
    trials: int = 2
    max_iter: int = 50
    mp_dps: int = 30

    def __post_init__(self):
        if self.n < 0 or self.m < 1:
            raise ConfigError(f"need n >= 0 and m >= 1, got n={self.n}, m={self.m}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}; choose from {FORMATS}")
        unknown = [s for s in self.suites if s != "all" and s not in SUITES]
        if unknown:
            raise ConfigError(f"unknown suite(s) {unknown}; choose from {SUITES + ('all',)}")
        if self.grid_points < 0 or self.trials < 1 or self.max_iter < 1:
            raise ConfigError("grid_points >= 0, trials >= 1 and max_iter >= 1 required")

    @property
    def suite_names(self):
        if "all" in self.suites:
            return SUITES
        return tuple(dict.fromkeys(self.suites))

    def to_dict(self):
        d = asdict(self)
        d["suites"] = list(self.suites)
        return d

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        try:
            if "params" in data:
                data["params"] = ModelParams.from_dict(data["params"])
            if "tolerances" in data:
                data["tolerances"] = Tolerances(**data["tolerances"])
        except (TypeError, ParameterDomainError) as exc:
            raise ConfigError(str(exc)) from exc
        if "suites" in data:
            suites = data["suites"]
            data["suites"] = (suites,) if isinstance(suites, str) else tuple(suites)
        return cls(**data)

    @classmethod
    def load(cls, path):
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def worker_count(default=None):
    """Thread cap from QBETHE_THREADS, else ``default`` or the CPU count."""
    raw = os.environ.get("QBETHE_THREADS")
    if raw:
        try:
            value = int(raw)
        except ValueError as exc:
            raise ConfigError(f"QBETHE_THREADS must be an integer, got {raw!r}") from exc
        if value < 1:
            raise ConfigError("QBETHE_THREADS must be >= 1")
        return value
    return default or os.cpu_count() or 1
