"""Dense complex matrix helpers: adjoints, Hermiticity, eigensolvers, positivity.

Matrices are plain two-dimensional ``numpy`` arrays of dtype ``complex128``.
:func:`as_matrix` is the single entry point that validates shape and
finiteness; every public routine of the package funnels its inputs through it.
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceError, DimensionError, InvertibilityError, PreconditionError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_matrix",
    "adjoint",
    "fro",
    "hermitian_part",
    "is_hermitian",
    "eig_general",
    "eig_hermitian",
    "is_positive_definite",
    "checked_inverse",
]


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative thresholds used for every equality or sign verdict."""

    abs_eps: float = 1e-10
    rel_eps: float = 1e-10

    def __post_init__(self):
        for name in ("abs_eps", "rel_eps"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and non-negative, got {value!r}")
        if self.abs_eps == 0 and self.rel_eps == 0:
            raise ValueError("at least one of abs_eps, rel_eps must be positive")

    def bound(self, scale):
        """Return ``abs_eps + rel_eps * scale``."""
        return self.abs_eps + self.rel_eps * scale


DEFAULT_TOL = Tolerance()


def as_matrix(m, *, square=False, name="matrix"):
    """Convert ``m`` to a finite complex 2-D array, optionally requiring squareness."""
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionError(f"{name} must be a non-empty 2-D array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise PreconditionError(f"{name} contains non-finite entries")
    if square and a.shape[0] != a.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {a.shape}")
    return a


def adjoint(m):
    """Conjugate transpose."""
    return np.conj(as_matrix(m)).T.copy()


def fro(m):
    """Frobenius norm."""
    return float(np.linalg.norm(m, "fro"))


def hermitian_part(m):
    """``(m + m†)/2``."""
    a = as_matrix(m, square=True)
    return 0.5 * (a + a.conj().T)


def is_hermitian(m, tol=DEFAULT_TOL):
    a = as_matrix(m, square=True)
    return fro(a - a.conj().T) <= tol.bound(fro(a))


def _fix_phase(vectors):
    # make the largest-modulus entry of each column real positive;
    # near-ties resolve to the lowest row index so the choice is reproducible
    out = vectors.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        mags = np.abs(col)
        top = mags.max()
        if top == 0:
            continue
        idx = int(np.flatnonzero(mags >= top * (1 - 1e-9))[0])
        out[:, k] = col * (np.conj(col[idx]) / mags[idx])
    return out


def _lex_order(values):
    return np.lexsort((values.imag, values.real))


def eig_general(m):
    """Eigenvalues and unit-norm right eigenvectors of a general square matrix.

    Eigenvalues are sorted lexicographically by (real, imag). Defective
    matrices are not rejected; their eigenvectors simply come out nearly
    parallel.

    Returns
    -------
    eigenvalues : (N,) complex ndarray
    right_vectors : (N, N) complex ndarray
        Column ``k`` pairs with ``eigenvalues[k]``.
    """
    a = as_matrix(m, square=True)
    try:
        w, v = scipy.linalg.eig(a)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    order = _lex_order(w)
    w, v = w[order], v[:, order]
    v = _fix_phase(v / np.linalg.norm(v, axis=0))
    residual = float(np.max(np.linalg.norm(a @ v - v * w, axis=0)))
    if residual > 1e-8 * max(fro(a), np.finfo(float).tiny):
        raise ConvergenceError("eigenpair residual above 1e-8 * ||m||_F", residual)
    return w, v


def eig_hermitian(m, tol=DEFAULT_TOL):
    """Ascending real eigenvalues and an orthonormal eigenbasis of a Hermitian matrix."""
    a = as_matrix(m, square=True)
    if not is_hermitian(a, tol):
        raise PreconditionError("eig_hermitian requires a Hermitian matrix")
    w, v = np.linalg.eigh(hermitian_part(a))
    return w, _fix_phase(v)


def is_positive_definite(m, tol=DEFAULT_TOL):
    """True iff the smallest eigenvalue of the Hermitian matrix ``m`` exceeds ``tol.abs_eps``."""
    w, _ = eig_hermitian(m, tol)
    return bool(w[0] > tol.abs_eps)


def checked_inverse(m, tol=DEFAULT_TOL, name="matrix"):
    """Inverse of ``m``; refuses when the smallest singular value is at most ``tol.abs_eps``."""
    a = as_matrix(m, square=True, name=name)
    smin = np.linalg.svd(a, compute_uv=False)[-1]
    if smin <= tol.abs_eps:
        raise InvertibilityError(f"{name} is singular (smallest singular value {smin:.3e})")
    return np.linalg.inv(a)
