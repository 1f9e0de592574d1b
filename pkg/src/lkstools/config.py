"""Run-wide configuration: the constant ladder, seed and thread budget.

The asymptotic arguments behind the algorithms order their constants as

    beta << gamma << alpha << sigma << eta << omega

with eps/tau as regularity and granularity knobs.  No canonical numeric
values exist; the defaults below keep the ordering and are echoed into
every run report so results stay reproducible.  Callers relying on a
particular "<<" separation must pick their own values; whatever is used
is recorded in run metadata.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class ToolkitConfig:
    q: float = 0.25        # lower bound assumed for the density ratio k/n
    beta: float = 1e-4
    gamma: float = 1e-3
    alpha: float = 1e-2
    sigma: float = 5e-2
    eta: float = 1e-1
    omega: float = 2e-1
    eps: float = 2e-2      # regularity precision
    tau: float = 1e-2      # packedness imbalance tolerance / shrublet granularity knob
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        for name in ("q", "beta", "gamma", "alpha", "sigma", "eta", "omega", "eps", "tau"):
            if getattr(self, name) <= 0:
                raise ValueError(f"constant {name} must be strictly positive")
        if self.threads < 1:
            raise ValueError("thread budget must be >= 1")

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def seed_from_env(default: int) -> int:
    """LKS_SEED environment variable overrides any explicitly passed seed."""
    raw = os.environ.get("LKS_SEED")
    if raw is None:
        return default
    return int(raw)
