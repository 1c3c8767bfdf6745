import numpy as np
import pytest

_ACCEPTANCE = []


def random_similarity(rng, n, *, complex_=True, max_cond=1e3, min_gap=0.1):
    """Return (H, V, r) with H = V diag(r) V^-1, distinct real r and cond(V) < max_cond."""
    while True:
        v = rng.standard_normal((n, n))
        if complex_:
            v = v + 1j * rng.standard_normal((n, n))
        if np.linalg.cond(v) >= max_cond:
            continue
        r = np.sort(rng.uniform(-3.0, 3.0, n))
        if n > 1 and np.min(np.diff(r)) < min_gap:
            continue
        return v @ np.diag(r) @ np.linalg.inv(v), v, r


def brute_force_hermitian_kernel_dim(h, rtol=1e-9):
    """Complex dimension of {X : X H - H^† X = 0} via Kronecker vectorization.

    The map commutes with X -> -X^†, so its complex kernel is the
    complexification of the Hermitian kernel and the two dimensions agree.
    """
    n = h.shape[0]
    eye = np.eye(n)
    # column-major vec: vec(X H) = (H^T ⊗ I) vec X, vec(H^† X) = (I ⊗ H^†) vec X
    op = np.kron(h.T, eye) - np.kron(eye, h.conj().T)
    s = np.linalg.svd(op, compute_uv=False)
    return int(np.sum(s <= rtol * max(s[0], 1.0)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def criterion():
    def record(name, passed, detail=""):
        _ACCEPTANCE.append((name, bool(passed), detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {name} {detail}")
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
