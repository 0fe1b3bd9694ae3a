"""Seeded samplers shared by the verification command and the test suite."""

from __future__ import annotations

import numpy as np

from .css_opt import DEFAULT_SEED
from .monogamy import WParams
from .xfamily import XState

__all__ = ["DEFAULT_SEED", "random_interior_xstate", "random_wparams"]


def random_interior_xstate(rng: np.random.Generator, floor: float = 1e-3) -> XState:
    """Uniform simplex point with every coordinate at least `floor`."""
    while True:
        a, b, c = (float(p) for p in rng.dirichlet((1.0, 1.0, 1.0)))
        if min(a, b, c) >= floor:
            return XState(a, b, 1.0 - a - b)


def random_wparams(rng: np.random.Generator) -> WParams:
    """Normalized absolute Gaussian triple of amplitudes."""
    v = np.abs(rng.normal(size=3))
    while float(np.linalg.norm(v)) < 1e-12:
        v = np.abs(rng.normal(size=3))
    v = v / float(np.linalg.norm(v))
    return WParams(float(v[0]), float(v[1]), float(v[2]))
