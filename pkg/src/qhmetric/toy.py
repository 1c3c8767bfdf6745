"""Closed forms for the two-level PT-symmetric family ``H = D [[-1, cos α], [-cos α, 1]]``.

Every quantity here is exact and serves as the reference for the general
numerical routines: energies ``±D sin α``, the metric family
``Θ(ξ) = [[1+ξ, -cos α], [-cos α, 1-ξ]]`` with eigenvalues
``1 ± sqrt(ξ² + cos² α)``, and the square of the would-be charge ``C = Θ P⁻¹``.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError

__all__ = [
    "PARITY",
    "ToyParameters",
    "pt_hamiltonian",
    "toy_hamiltonian",
    "toy_energies",
    "toy_metric",
    "toy_metric_eigenvalues",
    "toy_charge_squared",
    "xi_of_metric",
]

PARITY = np.diag([1.0, -1.0]).astype(np.complex128)


@dataclass(frozen=True)
class ToyParameters:
    """Parameters of the 2×2 model.

    ``alpha`` must lie strictly inside (0, π); the endpoints are exceptional
    points. Pass ``gamma`` instead of ``xi`` to get ``xi = sin α sin γ``,
    which is always admissible.
    """

    alpha: float
    xi: float = 0.0
    gamma: Optional[float] = None
    d_scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < math.pi):
            raise DomainError(f"alpha must lie in the open interval (0, pi), got {self.alpha!r}")
        if not (math.isfinite(self.d_scale) and self.d_scale > 0):
            raise DomainError(f"d_scale must be positive, got {self.d_scale!r}")
        if not math.isfinite(self.xi):
            raise DomainError(f"xi must be finite, got {self.xi!r}")
        if self.gamma is not None:
            if not (0.0 <= self.gamma < math.pi / 2):
                raise DomainError(f"gamma must lie in [0, pi/2), got {self.gamma!r}")
            object.__setattr__(self, "xi", math.sin(self.alpha) * math.sin(self.gamma))

    @classmethod
    def from_gamma(cls, alpha, gamma, d_scale=1.0):
        return cls(alpha=alpha, gamma=gamma, d_scale=d_scale)

    @property
    def admissible(self):
        """Whether ``Θ(ξ)`` is positive definite, i.e. ``ξ² + cos² α < 1``."""
        return self.xi ** 2 + math.cos(self.alpha) ** 2 < 1.0


def pt_hamiltonian(d, b):
    """``[[-d, b], [-b, d]]`` for arbitrary real ``d`` and ``b`` (no domain checks)."""
    return np.array([[-d, b], [-b, d]], dtype=np.complex128)


def toy_hamiltonian(p: ToyParameters):
    return pt_hamiltonian(p.d_scale, p.d_scale * math.cos(p.alpha))


def toy_energies(p: ToyParameters):
    e = p.d_scale * math.sin(p.alpha)
    return -e, e


def toy_metric(p: ToyParameters):
    c = math.cos(p.alpha)
    return np.array([[1.0 + p.xi, -c], [-c, 1.0 - p.xi]], dtype=np.complex128)


def toy_metric_eigenvalues(p: ToyParameters):
    r = math.hypot(p.xi, math.cos(p.alpha))
    return 1.0 - r, 1.0 + r


def toy_charge_squared(p: ToyParameters):
    xi, c = p.xi, math.cos(p.alpha)
    return np.array(
        [[(1 + xi) ** 2 - c * c, 2 * xi * c], [-2 * xi * c, (1 - xi) ** 2 - c * c]],
        dtype=np.complex128,
    )


def xi_of_metric(theta):
    """Read off ``ξ`` from any nonzero multiple of ``Θ(ξ)``: ``(θ11 - θ22) / (θ11 + θ22)``."""
    t = np.asarray(theta)
    total = np.real(t[0, 0] + t[1, 1])
    if total == 0:
        raise DomainError("traceless 2x2 matrix has no xi")
    return float(np.real(t[0, 0] - t[1, 1]) / total)
