"""Pseudo-Hermiticity, the symmetry induced by a non-Hermitian η, and charge factorization."""
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, DomainError, PreconditionError
from .linalg import DEFAULT_TOL, as_matrix, checked_inverse, fro, is_hermitian
from .metric import intertwining_residual
from .toy import PARITY, ToyParameters, toy_metric

__all__ = [
    "ChargeReport",
    "check_pseudo_hermiticity",
    "check_eta_symmetry",
    "charge_factorization",
    "charge_nonexistence_scan",
]


def _pair(h, eta):
    a = as_matrix(h, square=True, name="h")
    e = as_matrix(eta, square=True, name="eta")
    if a.shape != e.shape:
        raise DimensionError(f"h {a.shape} and eta {e.shape} differ in size")
    return a, e


class PseudoHermiticity(NamedTuple):
    residual: float
    holds: bool
    eta_hermitian: bool


def check_pseudo_hermiticity(h, eta, tol=DEFAULT_TOL):
    """Test ``η H = H† η`` for an invertible (not necessarily Hermitian) ``η``."""
    a, e = _pair(h, eta)
    checked_inverse(e, tol, name="eta")
    r = intertwining_residual(a, e)
    return PseudoHermiticity(float(r), bool(r <= tol.rel_eps), is_hermitian(e, tol))


class EtaSymmetry(NamedTuple):
    s_matrix: np.ndarray
    commutes: bool
    nontrivial: bool


def check_eta_symmetry(h, eta, tol=DEFAULT_TOL):
    """Form ``S = (η⁻¹)† η`` and test whether it commutes with ``H``."""
    a, e = _pair(h, eta)
    checked_inverse(e, tol, name="eta")
    s = np.linalg.solve(e.conj().T, e)
    n = a.shape[0]
    commutes = fro(s @ a - a @ s) <= tol.rel_eps * fro(s) * fro(a)
    nontrivial = fro(s - np.eye(n)) > tol.bound(math.sqrt(n))
    return EtaSymmetry(s, bool(commutes), bool(nontrivial))


@dataclass(frozen=True)
class ChargeReport:
    charge: np.ndarray
    quasi_parity: np.ndarray
    involution_residual_c: float
    involution_residual_q: float
    involutive: bool

    def to_dict(self):
        return {
            "charge": self.charge,
            "quasi_parity": self.quasi_parity,
            "involution_residual_c": self.involution_residual_c,
            "involution_residual_q": self.involution_residual_q,
            "involutive": self.involutive,
        }


def charge_factorization(theta, parity, tol=DEFAULT_TOL):
    """Split a metric as ``Θ = C P`` and test whether ``C² = I``.

    Also returns the quasi-parity ``Q = P⁻¹ Θ``.
    """
    t = as_matrix(theta, square=True, name="theta")
    p = as_matrix(parity, square=True, name="parity")
    if t.shape != p.shape:
        raise DimensionError(f"theta {t.shape} and parity {p.shape} differ in size")
    n = t.shape[0]
    eye = np.eye(n)
    if not is_hermitian(t, tol):
        raise PreconditionError("theta must be Hermitian")
    if fro(p @ p - eye) > tol.bound(math.sqrt(n)):
        raise PreconditionError("parity must be an involution (P^2 = I)")
    p_inv = np.linalg.inv(p)
    c = t @ p_inv
    q = p_inv @ t
    res_c = fro(c @ c - eye)
    res_q = fro(q @ q - eye)
    return ChargeReport(c, q, float(res_c), float(res_q), bool(res_c <= tol.bound(math.sqrt(n))))


class ScanResult(NamedTuple):
    min_residual: float
    witness_xi: float


def charge_nonexistence_scan(alpha, grid, tol=DEFAULT_TOL):
    """Minimize ``‖C² − I‖_F`` over admissible ``ξ`` for the 2×2 model at fixed ``alpha``.

    ``ξ`` runs over ``grid`` cell midpoints of the open interval
    ``(-sin α, sin α)``; ties keep the smallest ``ξ``.
    """
    if not (math.isfinite(alpha) and 0.0 < alpha < math.pi):
        raise DomainError(f"alpha must lie in the open interval (0, pi), got {alpha!r}")
    if isinstance(grid, bool) or int(grid) != grid or grid < 3:
        raise DomainError(f"grid must be an integer >= 3, got {grid!r}")
    grid = int(grid)
    half = math.sin(alpha)
    best = (math.inf, math.nan)
    for k in range(grid):
        xi = half * (2 * k + 1 - grid) / grid
        report = charge_factorization(toy_metric(ToyParameters(alpha=alpha, xi=xi)), PARITY, tol)
        if report.involution_residual_c < best[0]:
            best = (report.involution_residual_c, xi)
    return ScanResult(*best)
