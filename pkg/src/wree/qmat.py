"""Dense complex-matrix core for one-, two- and three-qubit operators.

Everything downstream (state families, separability oracles, monogamy
sweeps) is built on the handful of primitives here: Hermitian
eigensystems, partial trace / partial transpose, and the two entropy
functionals (von Neumann and quantum relative entropy, both in nats).

Qubit ordering convention: basis label |q0 q1 q2> has q0 leftmost and
most significant, so |001> is index 1 and |100> is index 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NotHermitian",
    "IndexOutOfRange",
    "WrongDimension",
    "DimensionMismatch",
    "InvalidDensityMatrix",
    "EigenSystem",
    "DensityMatrix",
    "hermitian_eigensystem",
    "partial_trace",
    "partial_transpose",
    "is_ppt",
    "von_neumann_entropy",
    "relative_entropy",
]

# Tolerances used throughout the package.
HERMITIAN_TOL = 1e-12   # max |M - M^dag| allowed for "Hermitian"
TRACE_TOL = 1e-12       # |tr rho - 1| allowed for a density matrix
PSD_TOL = 1e-10         # eigenvalues >= -PSD_TOL count as positive semidefinite
EIG_ZERO_TOL = 1e-14    # eigenvalues below this contribute 0 to entropy sums
SUPPORT_TOL = 1e-12     # support-inclusion threshold for relative entropy

_ALLOWED_DIMS = (2, 4, 8)


class NotHermitian(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class IndexOutOfRange(IndexError):
    """Qubit index outside the valid range for the given register."""


class WrongDimension(ValueError):
    """Operation requires a state on a different number of qubits."""


class DimensionMismatch(ValueError):
    """Two operands live on Hilbert spaces of different dimension."""


class InvalidDensityMatrix(ValueError):
    """Matrix fails the Hermitian / unit-trace / PSD density-matrix checks."""


def _as_operator(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise WrongDimension(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in _ALLOWED_DIMS:
        raise WrongDimension(
            f"dimension {m.shape[0]} not supported (allowed: {_ALLOWED_DIMS})"
        )
    return m


def _hermiticity_defect(m: np.ndarray) -> float:
    return float(np.abs(m - m.conj().T).max())


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator on 1-3 qubits."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _as_operator(self.matrix)
        defect = _hermiticity_defect(m)
        if defect > HERMITIAN_TOL:
            raise InvalidDensityMatrix(f"not Hermitian: defect {defect:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidDensityMatrix(f"trace {tr} differs from 1")
        lo = float(np.linalg.eigvalsh(m).min())
        if lo < -PSD_TOL:
            raise InvalidDensityMatrix(f"negative eigenvalue {lo:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def qubits(self) -> int:
        return self.dim.bit_length() - 1

    @classmethod
    def from_state_vector(cls, psi) -> "DensityMatrix":
        v = np.asarray(psi, dtype=complex).reshape(-1)
        if v.shape[0] not in _ALLOWED_DIMS:
            raise WrongDimension(f"state vector length {v.shape[0]} not supported")
        nrm = float(np.linalg.norm(v))
        if abs(nrm - 1.0) > 1e-9:
            raise InvalidDensityMatrix(f"state vector norm {nrm} differs from 1")
        v = v / nrm
        return cls(np.outer(v, v.conj()))

    @classmethod
    def maximally_mixed(cls, qubits: int) -> "DensityMatrix":
        d = 2**qubits
        return cls(np.eye(d, dtype=complex) / d)


def hermitian_eigensystem(matrix) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian when the Hermiticity defect exceeds 1e-12.
    Deterministic: identical input yields identical output.
    """
    m = _as_operator(matrix)
    defect = _hermiticity_defect(m)
    if defect > HERMITIAN_TOL:
        raise NotHermitian(f"Hermiticity defect {defect:.3e} exceeds {HERMITIAN_TOL}")
    w, v = np.linalg.eigh(m)
    return EigenSystem(eigenvalues=w, eigenvectors=v)


def partial_trace(rho: DensityMatrix, traced_qubit: int) -> DensityMatrix:
    """Trace out one qubit of a 2- or 3-qubit state.

    Qubit 0 is the leftmost label in |q0 q1 q2>.
    """
    n = rho.qubits
    if n < 2:
        raise WrongDimension("cannot trace out the only qubit of a 1-qubit state")
    if not 0 <= traced_qubit < n:
        raise IndexOutOfRange(f"qubit {traced_qubit} out of range for {n} qubits")
    t = rho.matrix.reshape((2,) * (2 * n))
    reduced = np.trace(t, axis1=traced_qubit, axis2=traced_qubit + n)
    d = 2 ** (n - 1)
    return DensityMatrix(reduced.reshape(d, d))


def partial_transpose(rho, subsystem: str = "A") -> np.ndarray:
    """Partial transpose of a 2-qubit operator over subsystem "A" or "B".

    Accepts a DensityMatrix or a raw 4x4 array (the output need not be
    PSD, so composing the map requires the raw form).  Pure index
    permutation of the stored entries: applying it twice returns the
    input bit for bit.
    """
    matrix = rho.matrix if isinstance(rho, DensityMatrix) else _as_operator(rho)
    if matrix.shape[0] != 4:
        raise WrongDimension("partial transpose is defined here for 2-qubit operators")
    sub = subsystem.upper()
    if sub not in ("A", "B"):
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    t = matrix.reshape(2, 2, 2, 2)
    axes = (2, 1, 0, 3) if sub == "A" else (0, 3, 2, 1)
    return t.transpose(axes).reshape(4, 4).copy()


def is_ppt(rho: DensityMatrix, tol: float = 1e-9) -> bool:
    """Positivity of the partial transpose; separability test for 2 qubits."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    pt = partial_transpose(rho, "A")
    return float(np.linalg.eigvalsh(pt).min()) >= -tol


def _entropy_of_eigenvalues(eigvals: np.ndarray) -> float:
    s = 0.0
    for lam in eigvals:
        if lam > EIG_ZERO_TOL:
            s -= lam * math.log(lam)
    return max(s, 0.0)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-tr(rho ln rho) in nats; eigenvalues at or below 1e-14 contribute 0."""
    return _entropy_of_eigenvalues(np.linalg.eigvalsh(rho.matrix))


def relative_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Quantum relative entropy S(rho||sigma) = tr(rho ln rho - rho ln sigma), nats.

    Returns math.inf when the support of rho is not contained in the
    support of sigma: sigma is compressed onto rho's support eigenspace
    and any eigenvalue of the compression at or below 1e-12 trips the
    sentinel.
    """
    if rho.dim != sigma.dim:
        raise DimensionMismatch(f"dimensions differ: {rho.dim} vs {sigma.dim}")
    er, vr = np.linalg.eigh(rho.matrix)
    keep = er > SUPPORT_TOL
    basis = vr[:, keep]
    compressed = basis.conj().T @ sigma.matrix @ basis
    if compressed.shape[0] == 0 or float(np.linalg.eigvalsh(compressed).min()) <= SUPPORT_TOL:
        return math.inf

    tr_rho_ln_rho = 0.0
    for lam in er:
        if lam > EIG_ZERO_TOL:
            tr_rho_ln_rho += lam * math.log(lam)

    es, vs = np.linalg.eigh(sigma.matrix)
    weights = np.einsum("ia,ij,ja->a", vs.conj(), rho.matrix, vs).real
    tr_rho_ln_sigma = 0.0
    for lam, w in zip(es, weights):
        if lam > SUPPORT_TOL:
            tr_rho_ln_sigma += w * math.log(lam)
        elif w > SUPPORT_TOL:
            # sigma's kernel carries rho-weight: the -w ln(0) term diverges
            return math.inf

    value = tr_rho_ln_rho - tr_rho_ln_sigma
    if -1e-9 < value < 0.0:
        return 0.0
    return value
