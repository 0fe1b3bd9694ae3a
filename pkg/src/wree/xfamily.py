"""Rank-2 two-qubit X states (a, b, c) and their closed-form relative
entropy of entanglement.

The family consists of the states

    [[a, 0,      0,      0],
     [0, b,      sqrt(bc), 0],
     [0, sqrt(bc), c,      0],
     [0, 0,      0,      0]],     a + b + c = 1,

whose off-diagonal coherence is pinned at sqrt(bc), making them rank 2.
These are exactly the two-qubit reductions of generalized W states.  The
closed form below evaluates their relative entropy of entanglement in
nats; `css_opt` provides independent numerical oracles for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmat import DensityMatrix

__all__ = [
    "NotInFamily",
    "DegenerateInput",
    "OutOfRange",
    "UnsupportedCoherence",
    "XState",
    "ClosedFormParts",
    "UxConjugateState",
    "from_density",
    "closed_form_parts",
    "ree_closed_form",
    "ree_vedral_plenio",
    "ux_conjugate_to_ux",
]

SIMPLEX_TOL = 1e-12
DEGENERATE_TOL = 1e-12  # parameters below this are treated as exactly zero


class NotInFamily(ValueError):
    """Density matrix does not match the rank-2 X-state pattern."""

    def __init__(self, message: str, max_deviation: float):
        super().__init__(f"{message} (max entry deviation {max_deviation:.3e})")
        self.max_deviation = max_deviation


class DegenerateInput(ValueError):
    """Operation requires an interior simplex point (a in (0,1), b,c > 0)."""


class OutOfRange(ValueError):
    """Scalar argument outside its documented domain."""


class UnsupportedCoherence(ValueError):
    """Corner-form state with coherence f != sqrt(bc); outside this family."""


@dataclass(frozen=True)
class XState:
    """Point (a, b, c) of the probability simplex labelling the X family."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name, p in (("a", self.a), ("b", self.b), ("c", self.c)):
            if not (p >= 0.0 and math.isfinite(p)):
                raise ValueError(f"{name} must be a nonnegative finite number, got {p}")
        total = self.a + self.b + self.c
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"a + b + c = {total} is not 1 within {SIMPLEX_TOL}")

    def to_density(self) -> DensityMatrix:
        """The literal rank-2 X matrix; eigenvalues are {a, b+c, 0, 0}."""
        s = math.sqrt(self.b * self.c)
        m = np.array(
            [
                [self.a, 0.0, 0.0, 0.0],
                [0.0, self.b, s, 0.0],
                [0.0, s, self.c, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ],
            dtype=complex,
        )
        return DensityMatrix(m)

    def swapped(self) -> "XState":
        return XState(self.a, self.c, self.b)

    def is_interior(self) -> bool:
        return (
            self.a > DEGENERATE_TOL
            and self.b > DEGENERATE_TOL
            and self.c > DEGENERATE_TOL
            and self.a < 1.0 - DEGENERATE_TOL
        )


def from_density(rho: DensityMatrix, tol: float = 1e-10) -> XState:
    """Pattern-match a 2-qubit density matrix against the rank-2 X family.

    Raises NotInFamily (carrying the maximal entry deviation) whenever any
    entry, including the sqrt(bc) off-diagonal, deviates by more than tol.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if rho.dim != 4:
        raise NotInFamily("not a 2-qubit state", math.inf)
    m = rho.matrix
    a = float(m[0, 0].real)
    b = float(m[1, 1].real)
    c = float(m[2, 2].real)
    a, b, c = (max(x, 0.0) for x in (a, b, c))
    total = a + b + c
    if total <= 0.0:
        raise NotInFamily("diagonal has no weight", 1.0)
    candidate = XState(a / total, b / total, c / total)
    deviation = float(np.abs(m - candidate.to_density().matrix).max())
    if deviation > tol:
        raise NotInFamily("entries deviate from the X pattern", deviation)
    return candidate


@dataclass(frozen=True)
class ClosedFormParts:
    """Discriminant and the two weights entering the closed form.

    delta_disc = (b-c)^2 + 4 a^2 b c
    m_param    = (sqrt(delta_disc) + b - c - 2 a^2 b) / (2 a b (1+a))
    n_param    = (sqrt(delta_disc) - b + c - 2 a^2 c) / (2 a c (1+a))
    """

    delta_disc: float
    m_param: float
    n_param: float


def closed_form_parts(s: XState) -> ClosedFormParts:
    """Evaluate the closed form's discriminant and weights at an interior point.

    The returned m_param / n_param agree with the quotient formulas above
    but are computed in a cancellation-free rearrangement, so they stay
    accurate when b and c are far apart or a is small.
    """
    if not s.is_interior():
        raise DegenerateInput(
            f"closed-form parts need a in (0,1) and b,c > 0, got {s}"
        )
    a, b, c = s.a, s.b, s.c
    disc = (b - c) ** 2 + 4.0 * a * a * b * c
    root = math.sqrt(disc)
    # Stable equivalents of the quotient formulas: multiply through by the
    # conjugate of whichever difference (root -|b-c|) would cancel.
    if b >= c:
        m = (1.0 - a) * (root + b - c) / (a * (root + b + c))
        n = 4.0 * a * b * c * (1.0 - a) / ((root + b + c) * (root + b - c))
    else:
        n = (1.0 - a) * (root + c - b) / (a * (root + b + c))
        m = 4.0 * a * b * c * (1.0 - a) / ((root + b + c) * (root + c - b))
    return ClosedFormParts(delta_disc=disc, m_param=m, n_param=n)


def _pure_state_ree(b: float, c: float) -> float:
    out = 0.0
    for p in (b, c):
        if p > DEGENERATE_TOL:
            out -= p * math.log(p)
    return out


def ree_closed_form(s: XState) -> float:
    """Closed-form relative entropy of entanglement of the X state, nats.

    Interior points use the (M, N) weights; the degenerate boundaries are
    the analytic limits of the same expression:

      a = 1 or bc = 0  ->  0            (diagonal, hence separable)
      a = 0            ->  -b ln b - c ln c   (pure-state entanglement)
    """
    a, b, c = s.a, s.b, s.c
    if a <= DEGENERATE_TOL:
        return _pure_state_ree(b, c)
    if b <= DEGENERATE_TOL or c <= DEGENERATE_TOL or a >= 1.0 - DEGENERATE_TOL:
        return 0.0
    parts = closed_form_parts(s)
    m, n = parts.m_param, parts.n_param
    root = math.sqrt(parts.delta_disc)
    # 2 sqrt(bc * M * N) simplifies to 4bc(1-a)/(root + b + c)
    cross = 4.0 * b * c * (1.0 - a) / (root + b + c)
    value = (
        a * math.log(a)
        + 2.0 * (1.0 - a) * math.log(1.0 - a)
        + math.log1p(m)
        + math.log1p(n)
        - (b + c) * math.log(b * m + cross + c * n)
    )
    return max(value, 0.0)


def ree_vedral_plenio(lam: float) -> float:
    """Relative entropy of entanglement of (1-L)|00><00| + L|Psi+><Psi+|, nats.

    (1-L) ln(1-L) + (L-2) ln(1 - L/2), with 0 ln 0 := 0 at the endpoints.
    """
    if not 0.0 <= lam <= 1.0:
        raise OutOfRange(f"mixing parameter {lam} outside [0, 1]")
    first = (1.0 - lam) * math.log(1.0 - lam) if lam < 1.0 else 0.0
    value = first + (lam - 2.0) * math.log(1.0 - lam / 2.0)
    return max(value, 0.0)


@dataclass(frozen=True)
class UxConjugateState:
    """Corner-form state [[b,0,0,f],[0,a,0,0],[0,0,0,0],[f,0,0,c]].

    Local-unitary mirror of the X family: a bit flip on the second qubit
    (basis relabeling 00<->01, 10<->11) carries it onto the (a, b, c)
    pattern when the coherence sits at f = sqrt(bc).
    """

    a: float
    b: float
    c: float
    f: float

    def __post_init__(self):
        for name, p in (("a", self.a), ("b", self.b), ("c", self.c)):
            if not (p >= 0.0 and math.isfinite(p)):
                raise ValueError(f"{name} must be a nonnegative finite number, got {p}")
        total = self.a + self.b + self.c
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"a + b + c = {total} is not 1 within {SIMPLEX_TOL}")
        if self.f * self.f > self.b * self.c + 1e-12:
            raise ValueError(f"coherence f={self.f} violates f^2 <= bc")

    def to_density(self) -> DensityMatrix:
        m = np.array(
            [
                [self.b, 0.0, 0.0, self.f],
                [0.0, self.a, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [self.f, 0.0, 0.0, self.c],
            ],
            dtype=complex,
        )
        return DensityMatrix(m)


def ux_conjugate_to_ux(s: UxConjugateState) -> XState:
    """Relabel the corner form onto the X family (bit flip on qubit B).

    Only the rank-2 slice f = sqrt(bc) is covered; anything else raises
    UnsupportedCoherence.  The closed form of the result is the relative
    entropy of entanglement of the input (entanglement is invariant under
    local unitaries).
    """
    expected = math.sqrt(s.b * s.c)
    if abs(s.f - expected) > 1e-10:
        raise UnsupportedCoherence(
            f"coherence f={s.f} differs from sqrt(bc)={expected}; "
            "general-coherence corner states are not handled"
        )
    return XState(s.a, s.b, s.c)
