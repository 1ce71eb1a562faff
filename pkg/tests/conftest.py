import numpy as np
import pytest

from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def record_acceptance():
    def record(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def sylvester_pd(M):
    """Leading principal minors all positive: independent of eigensolvers."""
    A = np.asarray(M)
    return all(np.linalg.det(A[:k, :k]).real > 0 for k in range(1, A.shape[0] + 1))


def dense_shift(w, first_col):
    """Truncated block matrix of the shift: column block i maps to row block i+1 via S_{i+1}."""
    N, H = w.dim, len(w)
    T = np.zeros(((H + 1) * N, (H + 1) * N), dtype=complex)
    for k, S in enumerate(w.weights):
        T[(k + 1) * N:(k + 2) * N, k * N:(k + 1) * N] = S
    return T
