"""Biorthogonal eigensystems and spectrum classification for non-Hermitian matrices.

Right eigenvectors ``|n>`` solve ``H|n> = E_n|n>``; left eigenvectors ``|n>>``
solve ``H†|n>> = conj(E_n)|n>>``. After normalization ``<<n|m> = δ_nm``.
"""
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import ConvergenceError, ExceptionalPointError
from .linalg import DEFAULT_TOL, _fix_phase, _lex_order, as_matrix, fro

__all__ = [
    "EXCEPTIONAL_THRESHOLD",
    "DEGENERACY_GAP",
    "BiorthogonalSystem",
    "SpectrumReport",
    "biorthogonal_system",
    "classify_spectrum",
    "spectral_reconstruct",
]

EXCEPTIONAL_THRESHOLD = 1e-6
DEGENERACY_GAP = 1e-8


@dataclass(frozen=True)
class BiorthogonalSystem:
    eigenvalues: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray

    @property
    def dimension(self):
        return len(self.eigenvalues)

    def overlap(self):
        """The matrix ``<<n|m>`` (identity for a valid system)."""
        return self.left_vectors.conj().T @ self.right_vectors


@dataclass(frozen=True)
class SpectrumReport:
    all_real: bool
    max_imag: float
    degenerate_pairs: list = field(default_factory=list)
    exceptional: bool = False
    condition_estimate: float = 1.0

    def to_dict(self):
        return {
            "all_real": self.all_real,
            "max_imag": self.max_imag,
            "degenerate_pairs": [list(p) for p in self.degenerate_pairs],
            "exceptional": self.exceptional,
            "condition_estimate": self.condition_estimate,
        }


def _clusters(w, gap):
    # single-linkage grouping of the sorted eigenvalues
    scale = gap * (1.0 + float(np.max(np.abs(w))))
    n = len(w)
    labels = list(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if abs(w[i] - w[j]) <= scale:
                old, new = labels[j], labels[i]
                labels = [new if lab == old else lab for lab in labels]
    groups = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return sorted(groups.values()), scale


def _raw_eigensystem(a):
    try:
        w, vl, vr = scipy.linalg.eig(a, left=True, right=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    order = _lex_order(w)
    w, vl, vr = w[order], vl[:, order], vr[:, order]
    vr = _fix_phase(vr / np.linalg.norm(vr, axis=0))
    vl = _fix_phase(vl / np.linalg.norm(vl, axis=0))
    return w, vl, vr


def _cluster_overlaps(w, vl, vr, gap):
    groups, _ = _clusters(w, gap)
    result = []
    for idx in groups:
        block = vl[:, idx].conj().T @ vr[:, idx]
        smin = float(np.linalg.svd(block, compute_uv=False)[-1])
        result.append((idx, block, smin))
    return result


def biorthogonal_system(h, tol=DEFAULT_TOL, *, threshold=EXCEPTIONAL_THRESHOLD, gap=DEGENERACY_GAP):
    """Paired, biorthonormal left/right eigenvectors of ``h``.

    Raises
    ------
    ExceptionalPointError
        If the pre-normalization overlap of some eigenpair (or the smallest
        singular value of the overlap block of a degenerate cluster) falls
        below ``threshold``.
    """
    a = as_matrix(h, square=True, name="h")
    w, vl, vr = _raw_eigensystem(a)
    scale = max(fro(a), np.finfo(float).tiny)
    left = vl.copy()
    for idx, block, smin in _cluster_overlaps(w, vl, vr, gap):
        if smin < threshold:
            raise ExceptionalPointError("left/right eigenvectors are numerically orthogonal",
                                        (idx[0], idx[-1]))
        left[:, idx] = vl[:, idx] @ np.linalg.inv(block).conj().T
    res_r = np.max(np.linalg.norm(a @ vr - vr * w, axis=0)) / scale
    res_l = np.max(np.linalg.norm(a.conj().T @ left - left * w.conj(), axis=0)
                   / np.linalg.norm(left, axis=0)) / scale
    if max(res_r, res_l) > 1e-8:
        raise ConvergenceError("biorthogonal eigenpairs inaccurate", max(res_r, res_l) * scale)
    return BiorthogonalSystem(eigenvalues=w, right_vectors=vr, left_vectors=left)


def classify_spectrum(h, tol=DEFAULT_TOL, *, threshold=EXCEPTIONAL_THRESHOLD, gap=DEGENERACY_GAP):
    """Reality, degeneracy and exceptional-point report; never raises on defective input."""
    a = as_matrix(h, square=True, name="h")
    w, vl, vr = _raw_eigensystem(a)
    max_imag = float(np.max(np.abs(w.imag)))
    groups = _cluster_overlaps(w, vl, vr, gap)
    _, scale = _clusters(w, gap)
    pairs = [(i, j) for i in range(len(w)) for j in range(i + 1, len(w))
             if abs(w[i] - w[j]) <= scale]
    smallest = min(smin for _, _, smin in groups)
    condition = 1.0 / smallest if smallest > 0 else np.finfo(float).max
    return SpectrumReport(
        all_real=bool(max_imag <= tol.bound(fro(a))),
        max_imag=max_imag,
        degenerate_pairs=pairs,
        exceptional=bool(smallest < threshold),
        condition_estimate=float(condition),
    )


def spectral_reconstruct(sys):
    """``Σ_n E_n |n><<n|``."""
    r, l = sys.right_vectors, sys.left_vectors
    return (r * sys.eigenvalues) @ l.conj().T
