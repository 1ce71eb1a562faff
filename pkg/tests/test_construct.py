import numpy as np
import pytest
from hypothesis import given, strategies as st

from misoshift import errors, fixtures as F
from misoshift.construct import construct_bilateral, construct_unilateral, negative_branch
from misoshift.matcore import psd_sqrt
from misoshift.oppoly import MatrixPolynomial, check_preconditions, fit_from_values
from misoshift.shiftcore import adjoint_flip, gram, verify_m_isometry


def scalar(*coeffs):
    return MatrixPolynomial(np.array(coeffs, dtype=float)[:, None, None])


def test_identity_gives_identity_weights():
    for m in (1, 2, 4):
        res = construct_unilateral(MatrixPolynomial.identity(3), m, 10)
        assert np.allclose(res.weights.weights, np.eye(3))
        assert res.report.verdict


def test_scalar_dirichlet_closed_form():
    res = construct_unilateral(scalar(1, 1), 2, 30)
    n = np.arange(1, 31)
    assert np.allclose(res.weights.weights[:, 0, 0], np.sqrt((n + 1) / n), rtol=1e-13)
    assert res.weights[1][0, 0] == pytest.approx(np.sqrt(2))


def test_diagonal_decoupling():
    p = MatrixPolynomial(np.stack([np.eye(2), np.diag([1.0, 2.0])]))
    S = construct_unilateral(p, 2, 25).weights
    for n in range(1, 26):
        expected = np.diag([np.sqrt((n + 1) / n), np.sqrt((2 * n + 1) / (2 * n - 1))])
        assert np.allclose(S[n], expected, rtol=1e-12)


def test_weights_are_positive_definite(rng):
    p = F.random_noncommuting_polynomial(rng, 3, 3)
    w = construct_unilateral(p, 3, 20).weights
    for S in w.weights:
        assert np.allclose(S, S.conj().T)
        assert np.linalg.eigvalsh(S)[0] > 0


def test_bilateral_identity_and_failures():
    res = construct_bilateral(MatrixPolynomial.identity(2), 1, 6)
    assert np.allclose(res.weights.weights, np.eye(2))
    with pytest.raises(errors.PreconditionFailed) as exc:
        construct_bilateral(scalar(1, 1), 2, 5)
    assert exc.value.item == "positivity"
    with pytest.raises(errors.PreconditionFailed):
        construct_bilateral(F.divergent_3x3_polynomial(), 4, 10)


def test_bilateral_2x2_example_and_its_adjoint():
    res = construct_bilateral(F.invertible_2x2_polynomial(), 3, 32)
    assert res.report.verdict
    assert verify_m_isometry(adjoint_flip(res.weights), 3).verdict


def test_negative_side_gram_identity():
    # |S_{-n+1}^* ... S_0^*|^{-2} = p(-n)
    p = F.invertible_2x2_polynomial()
    neg = negative_branch(p, 10)
    R = np.eye(2)
    for n, S in enumerate(neg, 1):
        R = R @ S  # S_0 S_{-1} ... S_{-n+1}
        G = R @ R.conj().T
        assert np.allclose(np.linalg.inv(G), p(-n), rtol=1e-9, atol=1e-9)


def test_precondition_errors():
    with pytest.raises(errors.PreconditionFailed) as exc:
        construct_unilateral(F.divergent_3x3_polynomial(), 3, 10)
    assert exc.value.item == "degree"
    with pytest.raises(errors.PreconditionFailed) as exc:
        construct_unilateral(F.divergent_3x3_polynomial(), 4, 200)
    assert exc.value.item == "divergence"
    res = construct_unilateral(F.divergent_3x3_polynomial(), 4, 200, allow_divergence=True)
    assert res.preconditions.divergence_suspected
    with pytest.raises(errors.PreconditionFailed) as exc:
        construct_unilateral(scalar(2, 1), 2, 5)
    assert exc.value.item == "p0"


def test_capacity_matches_preconditions(rng):
    p = F.random_commuting_polynomial(rng, 2, 3)
    res = construct_unilateral(p, 3, 20)
    assert res.capacity_estimate == check_preconditions(p, 20).capacity


@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.integers(1, 4), st.booleans())
def test_construction_reproduces_grams(seed, dim, m, commuting):
    rng = np.random.default_rng(seed)
    if commuting or m < 3 or dim < 2:
        p = F.random_commuting_polynomial(rng, dim, m)
    else:
        p = F.random_noncommuting_polynomial(rng, dim, m)
    res = construct_unilateral(p, m, 16)
    assert res.report.verdict
    for n in (1, 5, 16):
        ref = p(n)
        assert np.allclose(gram(res.weights, 0, n), ref, rtol=1e-9, atol=1e-9 * np.abs(ref).max())
    fitted = fit_from_values([gram(res.weights, 0, k) for k in range(m)])
    assert np.allclose(fitted.coeffs, p.coeffs, atol=1e-9)


@given(st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_weight_spectra_match_similarity(seed, dim):
    # S_n^2 is unitarily equivalent to p(n-1)^{-1/2} p(n) p(n-1)^{-1/2}
    rng = np.random.default_rng(seed)
    p = F.random_commuting_polynomial(rng, dim, 3)
    w = construct_unilateral(p, 3, 10).weights
    for n in range(1, 11):
        R = np.linalg.inv(psd_sqrt(p(n - 1)))
        target = np.linalg.eigvalsh(R @ p(n) @ R)
        assert np.allclose(np.linalg.eigvalsh(w[n] @ w[n]), target, rtol=1e-10)
