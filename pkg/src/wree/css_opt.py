"""Numerical oracles for the relative entropy of entanglement of the X family.

Three independent routes are provided:

* `minimize_g` / `ree_numeric_restricted` - the two-angle reduction: the
  candidate closest separable states on the boundary of the separable set
  are parametrized by (theta1, theta2) and the scalar objective g is
  minimized by a dense grid plus coordinate-wise golden-section descent.

* `ree_numeric_general` - direct minimization of S(rho||sigma) over
  explicit mixtures of product states (an inner approximation of the
  separable set, hence always an upper bound on the true value).

* `verify_css` - diagnostics for a separable candidate: minimum
  eigenvalues of sigma and of its partial transpose, the distance from
  the separable-set boundary, and S(rho||sigma).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .qmat import (
    DensityMatrix,
    DimensionMismatch,
    WrongDimension,
    partial_transpose,
    relative_entropy,
)
from .xfamily import DegenerateInput, OutOfRange, XState, DEGENERATE_TOL

__all__ = [
    "AngleParams",
    "SeparableCandidate",
    "ProductMixtureAnsatz",
    "CssReport",
    "GeneralOracleConfig",
    "ConvergenceFailure",
    "g_objective",
    "minimize_g",
    "css_from_angles",
    "ree_numeric_restricted",
    "ree_numeric_general",
    "verify_css",
    "epsilon_monotonicity_probe",
]

_HALF_PI = 0.5 * math.pi
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_GRID_N = 256          # dense-scan resolution per angle for minimize_g
_GS_WIDTH = 1e-12      # golden-section bracket width at termination
_LOG_FLOOR = 1e-300    # arguments below this make a log term +inf

DEFAULT_SEED = 1729


class ConvergenceFailure(UserWarning):
    """Restart budget exhausted while the best value was still moving."""


@dataclass(frozen=True)
class AngleParams:
    """Pair (theta1, theta2) in [0, pi/2]^2 parametrizing boundary candidates."""

    theta1: float
    theta2: float

    def __post_init__(self):
        for name, t in (("theta1", self.theta1), ("theta2", self.theta2)):
            if not 0.0 <= t <= _HALF_PI:
                raise OutOfRange(f"{name}={t} outside [0, pi/2]")

    def xuvy(self) -> tuple[float, float, float, float]:
        c1, s1 = math.cos(self.theta1), math.sin(self.theta1)
        c2, s2 = math.cos(self.theta2), math.sin(self.theta2)
        return (
            (c1 * c2) ** 2,
            (s1 * c2) ** 2,
            (c1 * s2) ** 2,
            (s1 * s2) ** 2,
        )


@dataclass(frozen=True)
class SeparableCandidate:
    """X-patterned separable state (x, u, v, y, r, theta).

    Matrix form [[x,0,0,0],[0,u,re^{i theta},0],[0,re^{-i theta},v,0],
    [0,0,0,y]].  Positivity needs uv >= r^2, separability (PPT) adds
    xy >= r^2.
    """

    x: float
    u: float
    v: float
    y: float
    r: float
    theta: float = 0.0

    def __post_init__(self):
        for name, p in (("x", self.x), ("u", self.u), ("v", self.v), ("y", self.y)):
            if not (p >= 0.0 and math.isfinite(p)):
                raise ValueError(f"{name} must be a nonnegative finite number, got {p}")
        if self.r < 0.0:
            raise ValueError(f"r must be nonnegative, got {self.r}")
        if not 0.0 <= self.theta < 2.0 * math.pi:
            raise OutOfRange(f"theta={self.theta} outside [0, 2*pi)")
        total = self.x + self.u + self.v + self.y
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"x+u+v+y = {total} is not 1 within 1e-12")
        r2 = self.r * self.r
        if self.u * self.v - r2 < -1e-12:
            raise ValueError(f"uv - r^2 = {self.u * self.v - r2:.3e} < 0 (not PSD)")
        if self.x * self.y - r2 < -1e-12:
            raise ValueError(f"xy - r^2 = {self.x * self.y - r2:.3e} < 0 (not PPT)")

    def to_density(self) -> DensityMatrix:
        off = self.r * complex(math.cos(self.theta), math.sin(self.theta))
        m = np.array(
            [
                [self.x, 0.0, 0.0, 0.0],
                [0.0, self.u, off, 0.0],
                [0.0, off.conjugate(), self.v, 0.0],
                [0.0, 0.0, 0.0, self.y],
            ],
            dtype=complex,
        )
        return DensityMatrix(m)


@dataclass(frozen=True, eq=False)
class ProductMixtureAnsatz:
    """Explicit convex mixture of k product states.

    `weights` is a length-k probability vector; `angles` has shape (k, 4)
    holding (polar_a, azimuth_a, polar_b, azimuth_b) per term, each
    single-qubit state being (cos(polar/2), e^{i azimuth} sin(polar/2)).
    Separable by construction.
    """

    weights: np.ndarray
    angles: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        ang = np.asarray(self.angles, dtype=float)
        if w.ndim != 1 or ang.shape != (w.shape[0], 4):
            raise ValueError(f"inconsistent shapes: weights {w.shape}, angles {ang.shape}")
        if (w < 0).any():
            raise ValueError("weights must be nonnegative")
        if abs(float(w.sum()) - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {w.sum()}, not 1")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "angles", ang)

    @property
    def k(self) -> int:
        return int(self.weights.shape[0])

    def to_density(self) -> DensityMatrix:
        p = _product_vectors(self.angles[None])[0]
        sigma = np.einsum("k,ki,kj->ij", self.weights, p, p.conj())
        return DensityMatrix(sigma)


@dataclass(frozen=True)
class CssReport:
    """Diagnostics of a separable candidate against a target state."""

    ppt_min_eigenvalue: float
    sigma_min_eigenvalue: float
    boundary_gap: float
    relative_entropy_value: float


@dataclass(frozen=True)
class GeneralOracleConfig:
    """Knobs of the product-mixture oracle.

    max_iters counts refinement passes per restart; tol is both the
    pass-level early-stopping threshold and the restart-convergence
    threshold behind the ConvergenceFailure warning.
    """

    k: int = 16
    restarts: int = 8
    seed: int = DEFAULT_SEED
    max_iters: int = 4
    tol: float = 1e-6

    def __post_init__(self):
        if self.k < 1 or self.restarts < 1 or self.max_iters < 1:
            raise ValueError("k, restarts and max_iters must all be >= 1")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")


# ---------------------------------------------------------------------------
# Two-angle reduction
# ---------------------------------------------------------------------------


def _require_interior(s: XState) -> None:
    if not s.is_interior():
        raise DegenerateInput(f"operation needs an interior simplex point, got {s}")


def _cos_exact(t: float) -> float:
    # the wall of the square sits at the float representative of pi/2,
    # where math.cos returns ~6e-17 instead of the limit value 0
    return 0.0 if t == _HALF_PI else math.cos(t)


def g_objective(s: XState, angles: AngleParams) -> float:
    """Scalar objective of the two-angle reduction.

    g = a ln a + 2(1-a) ln(1-a) - a ln(cos^2 t1 cos^2 t2)
        - (1-a) ln[(sqrt(b) sin t1 cos t2 + sqrt(c) cos t1 sin t2)^2]

    Returns math.inf when either log argument underflows (the walls of
    the square), keeping the minimization total.
    """
    _require_interior(s)
    a, b, c = s.a, s.b, s.c
    c1, s1 = _cos_exact(angles.theta1), math.sin(angles.theta1)
    c2, s2 = _cos_exact(angles.theta2), math.sin(angles.theta2)
    x = (c1 * c2) ** 2
    w = math.sqrt(b) * s1 * c2 + math.sqrt(c) * c1 * s2
    w2 = w * w
    if x < _LOG_FLOOR or w2 < _LOG_FLOOR:
        return math.inf
    return (
        a * math.log(a)
        + 2.0 * (1.0 - a) * math.log(1.0 - a)
        - a * math.log(x)
        - (1.0 - a) * math.log(w2)
    )


class _GGrid:
    """Precomputed trig tables for the dense scan (shared across calls)."""

    def __init__(self, n: int):
        t = np.linspace(0.0, _HALF_PI, n)
        t1, t2 = np.meshgrid(t, t, indexing="ij")
        c1, s1 = np.cos(t1), np.sin(t1)
        c2, s2 = np.cos(t2), np.sin(t2)
        self.t = t
        self.sc = s1 * c2
        self.cs = c1 * s2
        with np.errstate(divide="ignore"):
            self.log_x = np.log((c1 * c2) ** 2)


_GRID: _GGrid | None = None


def _grid() -> _GGrid:
    global _GRID
    if _GRID is None:
        _GRID = _GGrid(_GRID_N)
    return _GRID


def _golden_scalar(f, lo: float, hi: float) -> tuple[float, float]:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > _GS_WIDTH:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    mid = 0.5 * (lo + hi)
    return mid, f(mid)


def minimize_g(s: XState, max_passes: int = 200) -> tuple[AngleParams, float]:
    """Global minimum of g over [0, pi/2]^2.

    Dense 256x256 scan to locate the basin, then alternating per-angle
    golden-section refinement (bracket +-2 grid steps around the current
    point, re-centered each pass) until the value stops improving.
    """
    _require_interior(s)
    a, b, c = s.a, s.b, s.c
    grid = _grid()
    with np.errstate(divide="ignore"):
        vals = -a * grid.log_x - (1.0 - a) * 2.0 * np.log(
            math.sqrt(b) * grid.sc + math.sqrt(c) * grid.cs
        )
    flat = int(np.argmin(vals))
    i, j = divmod(flat, _GRID_N)
    const = a * math.log(a) + 2.0 * (1.0 - a) * math.log(1.0 - a)
    t1, t2 = float(grid.t[i]), float(grid.t[j])
    best = const + float(vals[i, j])

    def g_raw(u1: float, u2: float) -> float:
        c1, s1 = _cos_exact(u1), math.sin(u1)
        c2, s2 = _cos_exact(u2), math.sin(u2)
        x = (c1 * c2) ** 2
        w = math.sqrt(b) * s1 * c2 + math.sqrt(c) * c1 * s2
        w2 = w * w
        if x < _LOG_FLOOR or w2 < _LOG_FLOOR:
            return math.inf
        return const - a * math.log(x) - (1.0 - a) * math.log(w2)

    window = 2.0 * (_HALF_PI / (_GRID_N - 1))
    for p in range(max_passes):
        t1n, v1 = _golden_scalar(
            lambda t: g_raw(t, t2), max(0.0, t1 - window), min(_HALF_PI, t1 + window)
        )
        if v1 < best:
            t1, best = t1n, v1
        t2n, v2 = _golden_scalar(
            lambda t: g_raw(t1, t), max(0.0, t2 - window), min(_HALF_PI, t2 + window)
        )
        improvement = best - v2
        if v2 < best:
            t2, best = t2n, v2
        if p >= 2 and improvement < 1e-15:
            break
    return AngleParams(t1, t2), max(best, 0.0)


def css_from_angles(angles: AngleParams) -> SeparableCandidate:
    """Boundary separable candidate induced by (theta1, theta2).

    x = cos^2 t1 cos^2 t2, u = sin^2 t1 cos^2 t2, v = cos^2 t1 sin^2 t2,
    y = sin^2 t1 sin^2 t2, r = sqrt(xy), theta = 0.  By construction
    xy = uv = r^2, so both sigma and its partial transpose are singular:
    the candidate sits exactly on the separable-set boundary.
    """
    x, u, v, y = angles.xuvy()
    return SeparableCandidate(x=x, u=u, v=v, y=y, r=math.sqrt(x * y), theta=0.0)


def ree_numeric_restricted(s: XState) -> float:
    """Two-angle oracle, total on the simplex.

    Interior points run minimize_g; degenerate points take the forced
    analytic limits (separable -> 0, pure -> entanglement entropy).
    """
    a, b, c = s.a, s.b, s.c
    if a <= DEGENERATE_TOL:
        out = 0.0
        for p in (b, c):
            if p > DEGENERATE_TOL:
                out -= p * math.log(p)
        return out
    if b <= DEGENERATE_TOL or c <= DEGENERATE_TOL or a >= 1.0 - DEGENERATE_TOL:
        return 0.0
    return minimize_g(s)[1]


# ---------------------------------------------------------------------------
# Product-mixture oracle
# ---------------------------------------------------------------------------


def _product_vectors(angles: np.ndarray) -> np.ndarray:
    """(..., k, 4) product vectors from (..., k, 4) Bloch angles."""
    th_a, ph_a = angles[..., 0], angles[..., 1]
    th_b, ph_b = angles[..., 2], angles[..., 3]
    qa = np.stack([np.cos(th_a / 2), np.exp(1j * ph_a) * np.sin(th_a / 2)], axis=-1)
    qb = np.stack([np.cos(th_b / 2), np.exp(1j * ph_b) * np.sin(th_b / 2)], axis=-1)
    return np.einsum("...i,...j->...ij", qa, qb).reshape(*th_a.shape, 4)


def _mixture_objective(rho: np.ndarray, tr_rho_ln_rho: float,
                       weights: np.ndarray, angles: np.ndarray) -> np.ndarray:
    """Batched S(rho||sigma(weights, angles)); +inf on support violation."""
    p = _product_vectors(angles)
    sigma = np.einsum("...k,...ki,...kj->...ij", weights, p, p.conj())
    ev, vec = np.linalg.eigh(sigma)
    q = np.einsum("...ia,...ij,...ja->...a", vec.conj(), rho, vec).real
    bad = ((ev <= 1e-15) & (q > 1e-10)).any(axis=-1)
    logs = np.log(np.clip(ev, _LOG_FLOOR, None))
    contrib = np.where(ev > 1e-15, q * logs, 0.0)
    out = tr_rho_ln_rho - contrib.sum(axis=-1)
    return np.where(bad, np.inf, out)


def _project_simplex(w: np.ndarray) -> np.ndarray:
    """Euclidean projection of each row onto the probability simplex."""
    rows, k = w.shape
    u = np.sort(w, axis=1)[:, ::-1]
    cumulative = np.cumsum(u, axis=1)
    idx = np.arange(1, k + 1)
    feasible = u + (1.0 - cumulative) / idx > 0
    last = k - np.argmax(feasible[:, ::-1], axis=1) - 1
    shift = (1.0 - cumulative[np.arange(rows), last]) / (last + 1)
    out = np.maximum(w + shift[:, None], 0.0)
    return out / out.sum(axis=1, keepdims=True)


def _weight_gradient(rho: np.ndarray, weights: np.ndarray, angles: np.ndarray) -> np.ndarray:
    """d/dw_i of -tr(rho ln sigma) via the Frechet derivative of the log."""
    p = _product_vectors(angles)
    sigma = np.einsum("rk,rki,rkj->rij", weights, p, p.conj())
    ev, vec = np.linalg.eigh(sigma)
    ev = np.clip(ev, 1e-30, None)
    logs = np.log(ev)
    dv = ev[:, :, None] - ev[:, None, :]
    dl = logs[:, :, None] - logs[:, None, :]
    kernel = np.where(
        np.abs(dv) > 1e-14, dl / np.where(dv == 0.0, 1.0, dv), 1.0 / ev[:, :, None]
    )
    rho_t = np.einsum("ria,rij,rjb->rab", vec.conj(), rho[None], vec)
    comp = np.einsum("ria,rki->rka", vec.conj(), p)
    return -np.einsum("rba,rab,rka,rkb->rk", rho_t, kernel, comp, comp.conj()).real


def _descend_weights(rho, tr_rho_ln_rho, weights, angles, value, iters):
    """Projected-gradient descent on the mixture weights; monotone by construction."""
    for _ in range(iters):
        grad = _weight_gradient(rho, weights, angles)
        grad -= grad.mean(axis=1, keepdims=True)
        scale = np.abs(grad).max(axis=1)
        grad /= np.where(scale > 0.0, scale, 1.0)[:, None]
        eta = np.full(weights.shape[0], 0.25)
        accepted = np.zeros(weights.shape[0], dtype=bool)
        for _bt in range(22):
            trial = _project_simplex(weights - eta[:, None] * grad)
            trial_val = _mixture_objective(rho, tr_rho_ln_rho, trial, angles)
            newly = (trial_val < value) & ~accepted
            weights[newly] = trial[newly]
            value = np.where(newly, trial_val, value)
            accepted |= newly
            if accepted.all() or eta.max() < 1e-14:
                break
            eta = np.where(accepted, eta, eta * 0.3)
        if not accepted.any():
            break
    return weights, value


_ANGLE_RANGES = ((0.0, math.pi), (0.0, 2.0 * math.pi), (0.0, math.pi), (0.0, 2.0 * math.pi))


def _sweep_angles(rho, tr_rho_ln_rho, weights, angles, value, shrink, grid_pts, gs_iters):
    """One coordinate-descent pass over every term angle.

    Each coordinate is probed on a small window grid (window width set by
    `shrink`) and the best bracket is refined by golden section, batched
    over restarts.  Updates are accepted only when they improve, so the
    best value is non-increasing.
    """
    restarts, k = weights.shape
    rr = np.arange(restarts)
    lin = np.linspace(0.0, 1.0, grid_pts)[:, None]
    for t in range(k):
        if weights[:, t].max() < 1e-9:
            continue  # dead term in every restart
        for coord in range(4):
            lo0, hi0 = _ANGLE_RANGES[coord]
            half = 0.5 * (hi0 - lo0) * shrink
            cur = angles[:, t, coord]
            lo = np.clip(cur - half, lo0, hi0)
            hi = np.clip(cur + half, lo0, hi0)
            pts = lo[None] + (hi - lo)[None] * lin
            probe = np.repeat(angles[None], grid_pts, axis=0)
            probe[:, :, t, coord] = pts
            probe_val = _mixture_objective(
                rho,
                tr_rho_ln_rho,
                np.broadcast_to(weights, (grid_pts, restarts, k)).reshape(-1, k),
                probe.reshape(-1, k, 4),
            ).reshape(grid_pts, restarts)
            best_idx = np.argmin(probe_val, axis=0)
            grid_z = pts[best_idx, rr]
            grid_v = probe_val[best_idx, rr]
            step = (hi - lo) / (grid_pts - 1)
            blo = np.clip(grid_z - step, lo0, hi0)
            bhi = np.clip(grid_z + step, lo0, hi0)

            def eval_at(z):
                trial = angles.copy()
                trial[:, t, coord] = z
                return _mixture_objective(rho, tr_rho_ln_rho, weights, trial)

            cc = bhi - _INVPHI * (bhi - blo)
            dd = blo + _INVPHI * (bhi - blo)
            fc, fd = eval_at(cc), eval_at(dd)
            for _ in range(gs_iters):
                left = fc < fd
                bhi = np.where(left, dd, bhi)
                blo = np.where(left, blo, cc)
                ncc = bhi - _INVPHI * (bhi - blo)
                ndd = blo + _INVPHI * (bhi - blo)
                fp = eval_at(np.where(left, ncc, ndd))
                cc, dd, fc, fd = (
                    np.where(left, ncc, dd),
                    np.where(left, cc, ndd),
                    np.where(left, fp, fd),
                    np.where(left, fc, fp),
                )
            zb = np.where(fc < fd, cc, dd)
            fb = np.minimum(fc, fd)
            use_grid = grid_v < fb
            zb = np.where(use_grid, grid_z, zb)
            fb = np.minimum(fb, grid_v)
            improved = fb < value
            angles[improved, t, coord] = zb[improved]
            value = np.where(improved, fb, value)
    return angles, value


def _sweep_phase_pairs(rho, tr_rho_ln_rho, weights, angles, value, gs_iters=10):
    """Joint golden-section moves along (azimuth_a + d, azimuth_b +- d).

    Product decompositions of coherent states need correlated azimuths;
    per-coordinate moves alone zigzag badly there.
    """
    restarts, k = weights.shape
    two_pi = 2.0 * math.pi
    for t in range(k):
        if weights[:, t].max() < 1e-9:
            continue
        for sign in (1.0, -1.0):
            lo = np.full(restarts, -math.pi)
            hi = np.full(restarts, math.pi)

            def eval_at(d):
                trial = angles.copy()
                trial[:, t, 1] = np.mod(angles[:, t, 1] + d, two_pi)
                trial[:, t, 3] = np.mod(angles[:, t, 3] + sign * d, two_pi)
                return trial, _mixture_objective(rho, tr_rho_ln_rho, weights, trial)

            cc = hi - _INVPHI * (hi - lo)
            dd = lo + _INVPHI * (hi - lo)
            _, fc = eval_at(cc)
            _, fd = eval_at(dd)
            for _ in range(gs_iters):
                left = fc < fd
                hi = np.where(left, dd, hi)
                lo = np.where(left, lo, cc)
                ncc = hi - _INVPHI * (hi - lo)
                ndd = lo + _INVPHI * (hi - lo)
                _, fp = eval_at(np.where(left, ncc, ndd))
                cc, dd, fc, fd = (
                    np.where(left, ncc, dd),
                    np.where(left, cc, ndd),
                    np.where(left, fp, fd),
                    np.where(left, fc, fp),
                )
            db = np.where(fc < fd, cc, dd)
            fb = np.minimum(fc, fd)
            improved = fb < value
            if improved.any():
                trial, _ = eval_at(db)
                angles[improved] = trial[improved]
                value = np.where(improved, fb, value)
    return angles, value


def _seed_restarts(rho: np.ndarray, k: int, restarts: int, seed: int):
    """Deterministic per-restart initialization.

    Restart i draws from default_rng([seed, i]); restart 0 additionally
    starts at the computational-basis dephasing of rho (a separable state
    that is often already close to the target basin).
    """
    all_w, all_a = [], []
    for i in range(restarts):
        rng = np.random.default_rng([seed, i])
        all_w.append(rng.dirichlet(np.ones(k)))
        all_a.append(
            np.stack(
                [
                    rng.uniform(0.0, math.pi, k),
                    rng.uniform(0.0, 2.0 * math.pi, k),
                    rng.uniform(0.0, math.pi, k),
                    rng.uniform(0.0, 2.0 * math.pi, k),
                ],
                axis=-1,
            )
        )
    weights = np.stack(all_w)
    angles = np.stack(all_a)
    if k >= 4:
        diagonal = np.clip(np.diag(rho).real, 0.0, None)
        diagonal = diagonal / max(float(diagonal.sum()), _LOG_FLOOR)
        for term, (qa, qb) in enumerate([(0, 0), (0, 1), (1, 0), (1, 1)]):
            angles[0, term] = (math.pi * qa, 0.0, math.pi * qb, 0.0)
        weights[0, :4] = diagonal
        weights[0, 4:] = 1e-6
        weights[0] /= weights[0].sum()
    return weights, angles


def ree_numeric_general(
    rho: DensityMatrix,
    cfg: GeneralOracleConfig | None = None,
    return_history: bool = False,
):
    """Upper bound on the relative entropy of entanglement of a 2-qubit state.

    Minimizes S(rho||sigma) over mixtures of cfg.k product states by
    iterated local search: coordinate-wise golden-section moves on the
    Bloch angles (windows shrinking each pass), joint azimuth-pair moves,
    and projected-gradient descent on the mixture weights.  cfg.restarts
    independent restarts (seeded from (cfg.seed, index)) run through the
    same schedule; the result is their minimum, so it is deterministic
    for a fixed seed and non-increasing over iterations.

    Emits a ConvergenceFailure warning when the final restart still
    improved the running best by more than cfg.tol.  With
    return_history=True also returns the per-iteration best values.
    """
    if rho.qubits != 2:
        raise WrongDimension("the product-mixture oracle handles 2-qubit states")
    cfg = cfg or GeneralOracleConfig()
    target = np.asarray(rho.matrix)
    tr_rho_ln_rho = 0.0
    for lam in np.linalg.eigvalsh(target):
        if lam > 1e-14:
            tr_rho_ln_rho += float(lam) * math.log(float(lam))

    weights, angles = _seed_restarts(target, cfg.k, cfg.restarts, cfg.seed)
    value = _mixture_objective(target, tr_rho_ln_rho, weights, angles)
    history = [float(value.min())]

    for p in range(cfg.max_iters):
        previous = value.copy()
        grid_pts = 7 if p == 0 else 5
        angles, value = _sweep_angles(
            target, tr_rho_ln_rho, weights, angles, value, 0.3**p, grid_pts, 7
        )
        if p > 0:
            angles, value = _sweep_phase_pairs(target, tr_rho_ln_rho, weights, angles, value)
        weights, value = _descend_weights(target, tr_rho_ln_rho, weights, angles, value, 4)
        history.append(float(value.min()))
        if float((previous - value).max()) < min(cfg.tol * 0.1, 1e-8):
            break

    # polish the best restart alone: tight windows, then a long convex
    # clean-up on the weights
    champion = int(np.argmin(value))
    w1 = weights[champion : champion + 1].copy()
    a1 = angles[champion : champion + 1].copy()
    v1 = value[champion : champion + 1].copy()
    for p in range(3):
        a1, v1 = _sweep_angles(target, tr_rho_ln_rho, w1, a1, v1, 0.02 * 0.25**p, 5, 8)
        a1, v1 = _sweep_phase_pairs(target, tr_rho_ln_rho, w1, a1, v1)
        w1, v1 = _descend_weights(target, tr_rho_ln_rho, w1, a1, v1, 8)
        history.append(float(min(value.min(), v1[0])))
    w1, v1 = _descend_weights(target, tr_rho_ln_rho, w1, a1, v1, 50)
    history.append(float(min(value.min(), v1[0])))

    final = value.copy()
    final[champion] = min(final[champion], float(v1[0]))
    running = np.minimum.accumulate(final)
    if cfg.restarts >= 2 and running[-2] - running[-1] > cfg.tol:
        warnings.warn(
            ConvergenceFailure(
                f"best value still moved by {running[-2] - running[-1]:.3e} "
                f"on the final restart (tol {cfg.tol})"
            )
        )
    best = max(float(running[-1]), 0.0)
    if return_history:
        return best, [max(h, 0.0) for h in history]
    return best


# ---------------------------------------------------------------------------
# Candidate diagnostics and proof-step probes
# ---------------------------------------------------------------------------


def verify_css(rho: DensityMatrix, sigma: SeparableCandidate) -> CssReport:
    """Boundary diagnostics plus S(rho||sigma) for a separable candidate."""
    if rho.dim != 4:
        raise DimensionMismatch("verify_css needs a 2-qubit target state")
    sigma_dm = sigma.to_density()
    sigma_min = float(np.linalg.eigvalsh(sigma_dm.matrix).min())
    ppt_min = float(np.linalg.eigvalsh(partial_transpose(sigma_dm, "A")).min())
    return CssReport(
        ppt_min_eigenvalue=ppt_min,
        sigma_min_eigenvalue=sigma_min,
        boundary_gap=min(ppt_min, sigma_min),
        relative_entropy_value=relative_entropy(rho, sigma_dm),
    )


def epsilon_monotonicity_probe(
    s: XState,
    theta: float,
    epsilons,
    u: float = 0.25,
    v: float = 0.25,
    x: float = 0.25,
) -> list[float]:
    """Evaluate f(theta, eps) on an ascending eps grid at a fixed reference.

    f = -a ln x - (1-a) ln[b u + 2 sqrt(bc) sqrt(uv - eps) cos(theta) + c v]

    The reference (x, u, v) defaults to the maximally mixed candidate's
    entries.  eps must stay inside [0, uv]; the returned list is
    non-decreasing whenever cos(theta) > 0 (the coherence term can only
    shrink as eps grows).
    """
    _require_interior(s)
    eps = [float(e) for e in epsilons]
    if any(e2 < e1 for e1, e2 in zip(eps, eps[1:])):
        raise OutOfRange("epsilons must be ascending")
    cap = u * v
    if any(e < 0.0 or e > cap + 1e-15 for e in eps):
        raise OutOfRange(f"epsilons must lie in [0, uv] = [0, {cap}]")
    a, b, c = s.a, s.b, s.c
    cos_t = math.cos(theta)
    out = []
    for e in eps:
        inner = b * u + 2.0 * math.sqrt(b * c) * math.sqrt(max(cap - e, 0.0)) * cos_t + c * v
        if x < _LOG_FLOOR or inner < _LOG_FLOOR:
            out.append(math.inf)
        else:
            out.append(-a * math.log(x) - (1.0 - a) * math.log(inner))
    return out
