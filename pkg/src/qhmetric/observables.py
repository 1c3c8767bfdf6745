"""Fixing the metric by requiring extra observables to be quasi-Hermitian too.

Each observable ``A`` adds the real-linear condition ``Θ A = A† Θ`` on the
coefficient vector of ``Θ`` over a :class:`~qhmetric.metric.MetricSpace`
basis. Intersecting these kernels shrinks the space; a one-dimensional
result fixes the metric up to scale.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionError, DomainError, TrivialityError
from .linalg import DEFAULT_TOL, as_matrix, fro, is_positive_definite
from .metric import MetricSpace, _kernel, _realify, _space, normalize_trace

__all__ = ["FixResult", "constrain_metric", "fix_xi_closed_form"]


@dataclass(frozen=True)
class FixResult:
    reduced: MetricSpace
    unique_ray: bool
    theta_phys: Optional[np.ndarray] = None
    diagnostic: Optional[str] = None

    def to_dict(self):
        out = {
            "dimension": self.reduced.dimension,
            "unique_ray": self.unique_ray,
            "theta_phys": self.theta_phys,
            "diagnostic": self.diagnostic,
        }
        out.update(residual=self.reduced.residual, basis=list(self.reduced.basis))
        return out


def constrain_metric(space: MetricSpace, observables, tol=DEFAULT_TOL):
    """Restrict ``space`` to metrics under which every observable is quasi-Hermitian.

    When the result is a single ray with a positive-definite member, that
    member (trace-normalized to N) is returned as ``theta_phys``. A ray with
    no positive member yields ``theta_phys=None`` and a diagnostic string.
    """
    n = space.size
    mats = [as_matrix(a, square=True, name="observable") for a in observables]
    for a in mats:
        if a.shape != (n, n):
            raise DimensionError(f"observable of shape {a.shape} does not match N = {n}")

    if mats and space.dimension:
        columns = []
        for b in space.basis:
            columns.append(np.concatenate([_realify(b @ a - a.conj().T @ b) for a in mats]))
        null = _kernel(columns, max(fro(a) for a in mats))
        basis = [sum(v[k] * space.basis[k] for k in range(space.dimension)) for v in null.T]
        reduced = _space(space.hamiltonian, basis)
    else:
        reduced = space

    unique = reduced.dimension == 1
    if not unique:
        return FixResult(reduced, False)
    ray = reduced.basis[0]
    for sign in (1.0, -1.0):
        if is_positive_definite(sign * ray, tol):
            return FixResult(reduced, True, normalize_trace(sign * ray))
    return FixResult(reduced, True, None, "unique ray has no positive-definite representative")


def fix_xi_closed_form(a, b, d, alpha):
    """``ξ = (d − a) / (2 b) · cos α`` for the observable ``[[a, b], [b, d]]``."""
    if b == 0:
        raise TrivialityError("b = 0: the observable is diagonal and does not fix xi")
    if not (math.isfinite(alpha) and 0.0 < alpha < math.pi):
        raise DomainError(f"alpha must lie in the open interval (0, pi), got {alpha!r}")
    return (d - a) / (2.0 * b) * math.cos(alpha)
