from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from misoshift import errors, fixtures as F
from misoshift.analyze import weights_commute
from misoshift.completion import (alpha_bound, can_start_2isometry, complete_weights,
                                  completion_polynomial, falling_factorial_polynomial,
                                  lagrange_basis, prefix_grams)
from misoshift.shiftcore import gram


def test_lagrange_basis_reexported():
    assert lagrange_basis([0, 1]) == [[Fraction(1), Fraction(-1)], [Fraction(0), Fraction(1)]]


def test_falling_factorial():
    f = falling_factorial_polynomial(2, 1)  # z(z-1)(z-2) = z^3 - 3z^2 + 2z
    assert np.allclose(f.coeffs.ravel(), [0, 2, -3, 1])
    for n in range(3):
        assert f(n)[0, 0] == 0


def test_scalar_two_bound():
    # p(z) = 1 + 3z and sup_n 4(2n-1)/(n(n-1)) = 6 at n = 2
    q, alpha = completion_polynomial([np.array([[2.0]])])
    assert alpha_bound(prefix_grams([np.array([[2.0]])])) == pytest.approx(6.0)
    assert alpha == pytest.approx(6.6)
    assert q(0)[0, 0] == pytest.approx(1.0)
    assert q(1)[0, 0] == pytest.approx(4.0)


def test_hand_evaluated_ratio_sequence_is_decreasing():
    vals = [4 * (2 * n - 1) / (n * (n - 1)) for n in range(2, 50)]
    assert max(vals) == pytest.approx(6.0)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_identity_prefix():
    q, alpha = completion_polynomial([np.eye(2)])
    assert np.allclose(q(1), np.eye(2))
    assert np.allclose(q(0), np.eye(2))


def test_interpolates_prefix_grams(rng):
    A = [F.random_invertible(rng, 2), F.random_invertible(rng, 2)]
    q, _ = completion_polynomial(A)
    assert np.allclose(q(1), A[0].T @ A[0], atol=1e-10)
    P = A[1] @ A[0]
    assert np.allclose(q(2), P.T @ P, atol=1e-10)


def test_scalar_completion_recursion():
    res = complete_weights([np.array([[2.0]])], horizon=20)
    lam = res.weights.weights[:, 0, 0]
    assert lam[0] == 2.0
    for n in range(2, 21):
        assert lam[n - 1] ** 2 == pytest.approx(res.q(n)[0, 0] / res.q(n - 1)[0, 0], rel=1e-12)
    assert res.report.verdict and res.report.m == 3


def test_non_hermitian_prefix_kept_verbatim():
    A1 = np.array([[1.0, 2.0], [0.0, 1.5]])
    res = complete_weights([A1], horizon=16)
    assert np.array_equal(res.weights[1], A1)
    for j in range(2, 17):
        S = res.weights[j]
        assert np.allclose(S, S.conj().T) and np.linalg.eigvalsh(S)[0] > 0
    assert res.report.verdict


def test_noncommuting_prefix_gives_noncommuting_weights():
    A = [np.array([[2.0, 1.0], [1.0, 2.0]]), np.array([[3.0, 0.0], [0.0, 1.0]])]
    res = complete_weights(A, horizon=16)
    assert res.report.verdict and res.report.m == 4
    assert not weights_commute(res.weights).commute


def test_singular_prefix_and_short_horizon():
    with pytest.raises(errors.SingularInput):
        complete_weights([np.ones((2, 2))])
    with pytest.raises(errors.SingularInput):
        complete_weights([np.eye(2), np.eye(3)])
    with pytest.raises(errors.HorizonTooShort):
        complete_weights([np.eye(2)] * 3, horizon=5)


@given(st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(1, 3), st.booleans())
def test_random_completions(seed, dim, m, complex_):
    rng = np.random.default_rng(seed)
    A = [F.random_invertible(rng, dim, complex_) for _ in range(m)]
    res = complete_weights(A, horizon=m + 12)
    for j, M in enumerate(A, 1):
        assert np.array_equal(res.weights[j], M)
    assert res.report.verdict
    for n in range(m + 1, m + 13):
        ref = res.q(n)
        assert np.allclose(gram(res.weights, 0, n), ref, rtol=1e-8, atol=1e-8 * np.abs(ref).max())


def test_can_start_2isometry():
    assert can_start_2isometry(np.eye(2))
    assert can_start_2isometry(np.diag([1.0, 3.0]))
    assert not can_start_2isometry(np.diag([0.5, 3.0]))
