"""Generalized W states, their two-qubit reductions, and the monogamy audit.

A generalized W state is alpha|001> + beta|010> + gamma|100> with real
normalized amplitudes.  Its two-qubit reductions land in the rank-2 X
family, so their relative entropy of entanglement has a closed form, and
the monogamy slack

    delta = E(A:BC) - E(AB) - E(AC)

can be evaluated over the whole amplitude simplex.  `sweep` produces the
barycentric grid of records behind the CSV/SVG emitters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmat import DensityMatrix
from .xfamily import XState, ree_closed_form
from .css_opt import ree_numeric_restricted

__all__ = [
    "WParams",
    "MonogamyRecord",
    "CkwCheck",
    "w_state_vector",
    "reduced_ab",
    "reduced_ac",
    "ree_a_bc",
    "delta",
    "concurrence_ckw_check",
    "sweep",
    "ENGINES",
]

NORM_TOL = 1e-12
ENGINES = ("closed", "numeric")

_ENGINE_FN = {
    "closed": ree_closed_form,
    "numeric": ree_numeric_restricted,
}


@dataclass(frozen=True)
class WParams:
    """Amplitudes (alpha, beta, gamma) of a generalized W state.

    Sign flips of the amplitudes are local unitaries, so the canonical
    form stores absolute values; construction rejects vectors whose norm
    is off by more than 1e-12.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        norm_sq = self.alpha**2 + self.beta**2 + self.gamma**2
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"amplitudes have squared norm {norm_sq}, not 1")
        object.__setattr__(self, "alpha", abs(self.alpha))
        object.__setattr__(self, "beta", abs(self.beta))
        object.__setattr__(self, "gamma", abs(self.gamma))


@dataclass(frozen=True)
class MonogamyRecord:
    """One simplex point: squared amplitudes, the three entropies, the slack.

    delta is stored exactly as e_abc - e_ab - e_ac evaluated on the
    stored fields, so a reader can recompute it from the row.
    """

    alpha_sq: float
    beta_sq: float
    gamma_sq: float
    e_ab: float
    e_ac: float
    e_abc: float
    delta: float


@dataclass(frozen=True)
class CkwCheck:
    """Squared concurrences and the slack of the tangle inequality."""

    c2_ab: float
    c2_ac: float
    c2_abc: float
    slack: float


def w_state_vector(w: WParams) -> np.ndarray:
    """8-component vector alpha|001> + beta|010> + gamma|100> (A leftmost)."""
    vec = np.zeros(8, dtype=complex)
    vec[1] = w.alpha
    vec[2] = w.beta
    vec[4] = w.gamma
    return vec


def reduced_ab(w: WParams) -> XState:
    """Reduction onto qubits A,B: the X state (alpha^2, beta^2, gamma^2)."""
    return _simplex_xstate(w.alpha**2, w.beta**2, w.gamma**2)


def reduced_ac(w: WParams) -> XState:
    """Reduction onto qubits A,C: the X state (beta^2, alpha^2, gamma^2)."""
    return _simplex_xstate(w.beta**2, w.alpha**2, w.gamma**2)


def _simplex_xstate(a: float, b: float, c: float) -> XState:
    # squared amplitudes can miss the simplex by an ulp; fold the slack
    # into the largest entry so XState's exact-sum check passes
    total = a + b + c
    gap = 1.0 - total
    if gap != 0.0:
        entries = [a, b, c]
        entries[entries.index(max(entries))] += gap
        a, b, c = (max(e, 0.0) for e in entries)
    return XState(a, b, c)


def _binary_entropy(p: float) -> float:
    out = 0.0
    for q in (p, 1.0 - p):
        if q > 1e-14:
            out -= q * math.log(q)
    return out


def ree_a_bc(w: WParams) -> float:
    """Entanglement across the A : BC cut, nats.

    The state is pure, so this is the entropy of the single-qubit
    reduction of A: the binary entropy of gamma^2.
    """
    return _binary_entropy(w.gamma**2)


def delta(w: WParams) -> MonogamyRecord:
    """Monogamy record of one W state (closed-form pairwise entropies)."""
    return _record(w.alpha**2, w.beta**2, w.gamma**2, ree_closed_form)


def _record(alpha_sq: float, beta_sq: float, gamma_sq: float, engine_fn) -> MonogamyRecord:
    e_ab = engine_fn(_simplex_xstate(alpha_sq, beta_sq, gamma_sq))
    e_ac = engine_fn(_simplex_xstate(beta_sq, alpha_sq, gamma_sq))
    e_abc = _binary_entropy(gamma_sq)
    return MonogamyRecord(
        alpha_sq=alpha_sq,
        beta_sq=beta_sq,
        gamma_sq=gamma_sq,
        e_ab=e_ab,
        e_ac=e_ac,
        e_abc=e_abc,
        delta=e_abc - e_ab - e_ac,
    )


def concurrence_ckw_check(w: WParams) -> CkwCheck:
    """Squared concurrences of the reductions and of the A:BC cut.

    For this family C^2(AB) = 4 b^2 g^2, C^2(AC) = 4 a^2 g^2 and
    C^2(A:BC) = 4 g^2 (1 - g^2), so the tangle slack vanishes
    identically (zero three-tangle).
    """
    a2, b2, g2 = w.alpha**2, w.beta**2, w.gamma**2
    c2_ab = 4.0 * b2 * g2
    c2_ac = 4.0 * a2 * g2
    c2_abc = 4.0 * g2 * (1.0 - g2)
    return CkwCheck(
        c2_ab=c2_ab,
        c2_ac=c2_ac,
        c2_abc=c2_abc,
        slack=c2_abc - c2_ab - c2_ac,
    )


def sweep(resolution: int, engine: str = "closed") -> list[MonogamyRecord]:
    """Monogamy records over the barycentric grid of squared amplitudes.

    Iterates beta^2 = i/n, gamma^2 = j/n over {(i, j): i + j <= n} in
    row-major (i, j) order with alpha^2 the remainder, giving
    (n+1)(n+2)/2 records.  `engine` picks the pairwise-entropy evaluator:
    "closed" for the closed form, "numeric" for the two-angle oracle.
    """
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    if engine not in _ENGINE_FN:
        raise ValueError(f"engine must be one of {ENGINES}, got {engine!r}")
    fn = _ENGINE_FN[engine]
    n = resolution
    records = []
    for i in range(n + 1):
        beta_sq = i / n
        for j in range(n + 1 - i):
            gamma_sq = j / n
            alpha_sq = max(1.0 - beta_sq - gamma_sq, 0.0)
            records.append(_record(alpha_sq, beta_sq, gamma_sq, fn))
    return records


def reduction_matrices(w: WParams) -> tuple[DensityMatrix, DensityMatrix]:
    """Density matrices of both reductions, for cross-checks against qmat."""
    return reduced_ab(w).to_density(), reduced_ac(w).to_density()
