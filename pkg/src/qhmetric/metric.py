"""Hermitian solutions of the intertwining equation ``Θ H = H† Θ``.

The solution set is a real-linear subspace of the N²-dimensional real space
of Hermitian N×N matrices. :func:`solve_metric_space` returns an orthonormal
basis of it (orthonormal under ``Re tr(A† B)``); positive-definite metrics
form an open convex cone inside that subspace.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, NoPositiveMetricError, PreconditionError
from .linalg import DEFAULT_TOL, as_matrix, eig_hermitian, fro, hermitian_part
from .spectral import DEGENERACY_GAP, BiorthogonalSystem

__all__ = [
    "RANK_RTOL",
    "MetricSpace",
    "hermitian_basis",
    "solve_metric_space",
    "metric_from_weights",
    "normalize_trace",
    "positivity_region",
    "check_quasi_hermiticity",
    "intertwining_residual",
]

RANK_RTOL = 1e-10


def hermitian_basis(n):
    """Frobenius-orthonormal real basis of the N×N Hermitian matrices.

    Order: the N diagonal units, then for each upper-triangular (i, j) the
    symmetric real unit followed by the antisymmetric imaginary unit.
    """
    basis = []
    for i in range(n):
        e = np.zeros((n, n), dtype=np.complex128)
        e[i, i] = 1.0
        basis.append(e)
    r = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), dtype=np.complex128)
            e[i, j] = e[j, i] = r
            basis.append(e)
            e = np.zeros((n, n), dtype=np.complex128)
            e[i, j], e[j, i] = 1j * r, -1j * r
            basis.append(e)
    return basis


def _realify(m):
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def _kernel(columns, scale):
    """Orthonormal kernel of the real matrix with the given columns.

    Singular values at or below ``RANK_RTOL * max(σ_max, scale)`` count as zero;
    ``scale`` guards the case of an operator that vanishes up to round-off.
    """
    mat = np.column_stack(columns)
    _, s, vh = np.linalg.svd(mat, full_matrices=True)
    cutoff = RANK_RTOL * max(s[0] if s.size else 0.0, scale)
    rank = int(np.sum(s > cutoff))
    return vh[rank:].T


def intertwining_residual(h, theta):
    """``‖Θ H − H† Θ‖_F / (‖Θ‖_F ‖H‖_F)``; zero when either factor vanishes identically."""
    h = np.asarray(h)
    theta = np.asarray(theta)
    num = fro(theta @ h - h.conj().T @ theta)
    den = fro(theta) * fro(h)
    if den == 0:
        return 0.0
    return num / den


@dataclass(frozen=True)
class MetricSpace:
    """Orthonormal basis of the Hermitian solutions of ``Θ H = H† Θ``."""

    basis: tuple
    hamiltonian: np.ndarray
    residual: float

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def size(self):
        return self.hamiltonian.shape[0]

    def combine(self, coefficients):
        """``Σ_k c_k B_k``."""
        c = np.asarray(coefficients, dtype=float).ravel()
        if c.size != self.dimension:
            raise DimensionError(f"expected {self.dimension} coefficients, got {c.size}")
        out = np.zeros((self.size, self.size), dtype=np.complex128)
        for ck, b in zip(c, self.basis):
            out += ck * b
        return out

    def coefficients(self, theta):
        """Coordinates of the orthogonal projection of ``theta`` onto the space."""
        t = as_matrix(theta, square=True, name="theta")
        if t.shape != self.hamiltonian.shape:
            raise DimensionError("theta and the Hamiltonian differ in size")
        return np.array([np.real(np.vdot(b, t)) for b in self.basis])

    def projection_residual(self, theta):
        """Frobenius distance between ``theta`` and its projection onto the space."""
        t = as_matrix(theta, square=True, name="theta")
        return fro(t - self.combine(self.coefficients(t)))

    def to_dict(self):
        return {"dimension": self.dimension, "residual": self.residual, "basis": list(self.basis)}


def _space(h, basis):
    basis = tuple(hermitian_part(b) for b in basis)
    residual = max((intertwining_residual(h, b) for b in basis), default=0.0)
    return MetricSpace(basis=basis, hamiltonian=h, residual=float(residual))


def solve_metric_space(h, tol=DEFAULT_TOL):
    """All Hermitian ``Θ`` with ``Θ H = H† Θ``, as an orthonormal real basis.

    The map ``Θ ↦ Θ H − H† Θ`` is assembled on :func:`hermitian_basis` and its
    kernel taken by singular-value thresholding. An empty kernel is reported
    as dimension 0, not raised.
    """
    a = as_matrix(h, square=True, name="h")
    herm = hermitian_basis(a.shape[0])
    columns = [_realify(e @ a - a.conj().T @ e) for e in herm]
    null = _kernel(columns, fro(a))
    basis = [sum(v[k] * herm[k] for k in range(len(herm))) for v in null.T]
    return _space(a, basis)


def normalize_trace(theta):
    """Rescale so that ``trace(Θ) = N``."""
    t = as_matrix(theta, square=True, name="theta")
    tr = np.real(np.trace(t))
    if tr == 0:
        raise PreconditionError("cannot trace-normalize a traceless matrix")
    return t * (t.shape[0] / tr)


def metric_from_weights(sys: BiorthogonalSystem, weights, tol=DEFAULT_TOL, *, normalize=False):
    """``Σ_m s_m |m>><<m|`` for strictly positive weights ``s_m``.

    Raises
    ------
    NoPositiveMetricError
        When the spectrum is complex or degenerate.
    """
    s = np.asarray(weights, dtype=float).ravel()
    if s.size != sys.dimension:
        raise DimensionError(f"expected {sys.dimension} weights, got {s.size}")
    if not np.all(np.isfinite(s)) or np.any(s <= 0):
        raise PreconditionError("weights must be finite and strictly positive")
    e = sys.eigenvalues
    emax = float(np.max(np.abs(e)))
    if np.max(np.abs(e.imag)) > tol.bound(emax):
        raise NoPositiveMetricError("complex spectrum admits no positive-definite metric")
    gap = DEGENERACY_GAP * (1.0 + emax)
    for i in range(len(e)):
        for j in range(i + 1, len(e)):
            if abs(e[i] - e[j]) <= gap:
                raise NoPositiveMetricError(f"degenerate eigenvalues at indices ({i}, {j})")
    left = sys.left_vectors
    theta = hermitian_part((left * s) @ left.conj().T)
    return normalize_trace(theta) if normalize else theta


class PositivityResult(NamedTuple):
    theta: np.ndarray
    positive: bool
    min_eigenvalue: float


def positivity_region(space: MetricSpace, coefficients, tol=DEFAULT_TOL):
    """Assemble ``Σ c_k B_k`` and test it for positive definiteness."""
    theta = space.combine(coefficients)
    w, _ = eig_hermitian(theta, tol)
    return PositivityResult(theta, bool(w[0] > tol.abs_eps), float(w[0]))


class QuasiHermiticity(NamedTuple):
    residual: float
    holds: bool


def check_quasi_hermiticity(h, theta, tol=DEFAULT_TOL):
    a = as_matrix(h, square=True, name="h")
    t = as_matrix(theta, square=True, name="theta")
    if a.shape != t.shape:
        raise DimensionError(f"h {a.shape} and theta {t.shape} differ in size")
    r = intertwining_residual(a, t)
    return QuasiHermiticity(float(r), bool(r <= tol.rel_eps))
