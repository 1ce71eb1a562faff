"""Completing a finite list of invertible weights to an (m+2)-isometric shift.

For prescribed ``A_1..A_m`` let ``G_0 = I`` and ``G_j = |A_j ... A_1|^2``.  The
interpolant ``p = sum_j G_j l_j`` (Lagrange basis on nodes ``0..m``) is bent
upwards by a multiple of ``z(z-1)...(z-m)``:

    q(z) = alpha * z(z-1)...(z-m) * I + p(z).

``q`` agrees with the prescribed Gram products on ``0..m`` and is positive
definite for ``n >= m+1`` as soon as

    alpha > sup_{n >= m+1} max_j ||G_j|| * sum_j |l_j(n)| / (n(n-1)...(n-m)).

The remaining weights come from the positive construction run against ``q``.
"""
from dataclasses import dataclass
from math import prod

import numpy as np

from .construct import positive_branch
from .errors import HorizonTooShort, NoConvergence, PreconditionFailed, SingularInput
from .matcore import as_square, eig_hermitian, is_invertible, operator_norm
from .oppoly import MatrixPolynomial, evaluate, fit_from_values, lagrange_basis, lagrange_value
from .shiftcore import IsometryReport, WeightSequence, verify_m_isometry

__all__ = ["CompletionResult", "alpha_bound", "can_start_2isometry", "complete_weights",
           "completion_polynomial", "lagrange_basis"]

ALPHA_MARGIN = 1.1
SCAN_CEILING = 10_000


@dataclass
class CompletionResult:
    q: MatrixPolynomial
    alpha: float
    weights: WeightSequence
    report: IsometryReport
    sup_bound: float


def _prefix(A):
    mats = [as_square(M) for M in A]
    if not mats:
        raise ValueError("at least one prescribed weight is required")
    if len({M.shape for M in mats}) != 1:
        raise SingularInput("prescribed weights do not share a dimension")
    for j, M in enumerate(mats, 1):
        if not is_invertible(M):
            raise SingularInput(f"A_{j} is not invertible")
    return mats


def prefix_grams(A):
    """``[I, |A_1|^2, |A_2 A_1|^2, ...]``."""
    mats = _prefix(A)
    P = np.eye(mats[0].shape[0], dtype=np.result_type(*mats))
    out = [P.copy()]
    for M in mats:
        P = M @ P
        G = P.conj().T @ P
        out.append(0.5 * (G + G.conj().T))
    return out


def alpha_bound(grams, ceiling=SCAN_CEILING):
    """The supremum in the positivity condition on ``alpha``.

    The ratio tends to 0, so the scan stops once it has decreased for
    ``3(m+1)`` consecutive ``n``; the returned value is the maximum seen.
    """
    m = len(grams) - 1
    nodes = list(range(m + 1))
    top = max(operator_norm(G) for G in grams)
    need = 3 * (m + 1)
    best, prev, run = -np.inf, np.inf, 0
    for n in range(m + 1, ceiling + 1):
        lsum = sum(abs(lagrange_value(nodes, j, n)) for j in nodes)
        val = top * lsum / prod(n - i for i in range(m + 1))
        best = max(best, val)
        run = run + 1 if val < prev else 0
        prev = val
        if run >= need:
            return float(best)
    raise NoConvergence(f"alpha bound did not settle below n = {ceiling}")


def falling_factorial_polynomial(m, dim):
    """``z(z-1)...(z-m) * I`` as a matrix polynomial."""
    coeffs = [1.0]
    for i in range(m + 1):
        shifted = [0.0] + coeffs
        coeffs = [a - i * b for a, b in zip(shifted, coeffs + [0.0])]
    return MatrixPolynomial(np.array(coeffs)[:, None, None] * np.eye(dim))


def completion_polynomial(A, margin=ALPHA_MARGIN):
    """``(q, alpha)`` for the prescribed weights ``A``; also see :func:`alpha_bound`."""
    grams = prefix_grams(A)
    m = len(grams) - 1
    p = fit_from_values(grams)
    sup = alpha_bound(grams)
    alpha = margin * sup
    bump = falling_factorial_polynomial(m, p.dim)
    q = p + MatrixPolynomial(alpha * bump.coeffs)
    return q, alpha


def complete_weights(A, horizon=32, margin=ALPHA_MARGIN, rtol=None):
    """Weights ``S_1..S_horizon`` with ``S_j = A_j`` (j <= m), (m+2)-isometric."""
    mats = _prefix(A)
    m = len(mats)
    if horizon < m + 3:
        raise HorizonTooShort(f"horizon {horizon} < m + 3 = {m + 3}")
    q, alpha = completion_polynomial(mats, margin)
    for n in range(m + 1, horizon + 1):
        Q = evaluate(q, n)
        if not eig_hermitian(0.5 * (Q + Q.conj().T)).eigenvalues[0] > 0:
            raise PreconditionFailed("positivity", f"q({n}) is not positive definite")
    P = np.eye(q.dim, dtype=np.result_type(*mats))
    for M in mats:
        P = M @ P
    tail = positive_branch(q, horizon, start=P, start_index=m)
    dtype = np.result_type(*mats, *tail)
    weights = np.empty((horizon, q.dim, q.dim), dtype=dtype)
    for j, M in enumerate(mats):
        weights[j] = M
    for j, S in enumerate(tail, m):
        weights[j] = S
    w = WeightSequence("unilateral", weights, 1)
    kw = {} if rtol is None else {"rtol": rtol}
    report = verify_m_isometry(w, m + 2, **kw)
    return CompletionResult(q, alpha, w, report, alpha / margin)


def can_start_2isometry(A1, tol=1e-12):
    """Whether ``A1`` can be the first weight of a 2-isometric unilateral shift.

    The criterion is ``A1^* A1 >= I``.
    """
    A = as_square(A1)
    return bool(eig_hermitian(A.conj().T @ A).eigenvalues[0] >= 1.0 - tol)
