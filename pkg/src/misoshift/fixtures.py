"""Named example polynomials and weight sequences, plus random families.

The random generators build polynomials that satisfy the construction
hypotheses by design: ``p(0) = I``, ``p(n)`` positive definite, bounded
capacity.
"""
import numpy as np

from .oppoly import MatrixPolynomial
from .shiftcore import WeightSequence


def divergent_3x3_polynomial():
    """Degree-3 polynomial, positive on every natural number, unbounded ratios.

    ``tr(p(n+1) p(n)^{-1}) = (n^2 + 208 n + 81) / (4 + 65 n)``.
    """
    A0 = np.eye(3)
    A1 = np.array([[16.0, 0.0, 2.0], [0.0, 0.25, 0.0], [2.0, 0.0, 0.0]])
    A2 = np.array([[0.0, 0.5, 0.0], [0.5, 0.0, 0.0], [0.0, 0.0, 0.0]])
    A3 = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    return MatrixPolynomial(np.stack([A0, A1, A2, A3]))


def divergent_3x3_trace(n):
    return (n * n + 208 * n + 81) / (4 + 65 * n)


def invertible_2x2_polynomial():
    """``[[1, z], [z, z^2 + 1]]``: unit determinant, ``p(n+1)p(n)^{-1}`` has char. poly z^2 - 3z + 1."""
    return MatrixPolynomial(np.array([
        [[1.0, 0.0], [0.0, 1.0]],
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, 0.0], [0.0, 1.0]],
    ]))


def invertible_2x2_inverse():
    """``[[z^2 + 1, -z], [-z, 1]]``."""
    return MatrixPolynomial(np.array([
        [[1.0, 0.0], [0.0, 1.0]],
        [[0.0, -1.0], [-1.0, 0.0]],
        [[1.0, 0.0], [0.0, 0.0]],
    ]))


GOLDEN_RATIO_SQUARED = (3.0 + 5.0 ** 0.5) / 2.0


def diagonal_ratio_coefficients(k):
    """Ascending coefficients of ``q_k(z) = (z - a)(z - b) / (a b)``.

    ``a = k + 1/(k+1)``, ``b = k + 2/3``; ``q_k(0) = 1`` and the ratio
    ``q_n(n+1) / q_n(n)`` equals ``n / 2``.
    """
    a = k + 1.0 / (k + 1)
    b = k + 2.0 / 3.0
    return [1.0, -(a + b) / (a * b), 1.0 / (a * b)]


def diagonal_ratio_polynomial(dim):
    """Diagonal truncation ``diag(q_1, ..., q_dim)`` of the unbounded-capacity example."""
    return MatrixPolynomial.diagonal([diagonal_ratio_coefficients(k) for k in range(1, dim + 1)])


def dirichlet_weights(horizon):
    """Scalar weights ``sqrt((n+1)/n)``, n = 1..horizon; 2-isometric, not isometric."""
    n = np.arange(1, horizon + 1, dtype=float)
    return WeightSequence("unilateral", np.sqrt((n + 1) / n)[:, None, None], 1)


def identity_weights(dim, horizon, bilateral=False):
    count = 2 * horizon if bilateral else horizon
    W = np.broadcast_to(np.eye(dim), (count, dim, dim))
    if bilateral:
        return WeightSequence("bilateral", W, -horizon + 1)
    return WeightSequence("unilateral", W, 1)


def random_unitary(rng, dim):
    Z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_pd(rng, dim, lo=0.5, hi=2.0, complex_=True):
    """Random positive definite matrix with spectrum in ``[lo, hi]``."""
    U = random_unitary(rng, dim) if complex_ else np.linalg.qr(rng.normal(size=(dim, dim)))[0]
    lam = rng.uniform(lo, hi, size=dim)
    M = (U * lam) @ U.conj().T
    return 0.5 * (M + M.conj().T)


def random_commuting_polynomial(rng, dim, m, rotate=True):
    """Simultaneously diagonalisable ``p`` of degree m-1 with non-negative spectra.

    Each eigen-polynomial has coefficients in ``[0.1, 1]`` after the constant
    term 1, so it is positive on the naturals with ratios tending to 1.
    """
    diag = rng.uniform(0.1, 1.0, size=(m - 1, dim))
    U = random_unitary(rng, dim) if rotate else np.eye(dim)
    coeffs = [np.eye(dim)] + [(U * d) @ U.conj().T for d in diag]
    coeffs = [0.5 * (A + A.conj().T) for A in coeffs]
    return MatrixPolynomial(np.stack(coeffs))


def random_single_coefficient_polynomial(rng, dim, m):
    """``I + A z^{m-1}`` with ``A`` positive definite (just ``I`` when m = 1)."""
    coeffs = np.zeros((m, dim, dim), dtype=complex)
    coeffs[0] = np.eye(dim)
    if m > 1:
        coeffs[m - 1] = random_pd(rng, dim, 0.1, 2.0)
    return MatrixPolynomial(coeffs)


def random_noncommuting_polynomial(rng, dim, m, lo=0.5, hi=2.0):
    """``I + A_1 z + ... + A_{m-1} z^{m-1}`` with independent positive definite ``A_j``.

    Needs ``m >= 3`` and ``dim >= 2`` for the coefficients to fail to commute.
    """
    if m < 3 or dim < 2:
        raise ValueError("non-commuting coefficients need m >= 3 and dim >= 2")
    coeffs = [np.eye(dim, dtype=complex)] + [random_pd(rng, dim, lo, hi) for _ in range(m - 1)]
    return MatrixPolynomial(np.stack(coeffs))


def random_invertible(rng, dim, complex_=False, min_singular=0.3):
    """Random matrix with singular values in ``[min_singular, 2]``."""
    if complex_:
        U, V = random_unitary(rng, dim), random_unitary(rng, dim)
    else:
        U = np.linalg.qr(rng.normal(size=(dim, dim)))[0]
        V = np.linalg.qr(rng.normal(size=(dim, dim)))[0]
    s = rng.uniform(min_singular, 2.0, size=dim)
    return (U * s) @ V.conj().T
