"""Positive weights of an m-isometric shift from its polynomial.

Given ``p`` with ``p(0) = I`` and ``p(n)`` positive definite, the weights are
defined one at a time so that ``|S_n ... S_1|^2 = p(n)``.  Writing
``P_k = S_k ... S_1`` and ``Q_k = P_k^{-1}``, the next weight is

    S_{k+1} = (Q_k^* p(k+1) Q_k)^{1/2},      Q_{k+1} = Q_k S_{k+1}^{-1}.

The bilateral negative branch keeps ``R_k = S_0 S_{-1} ... S_{-k+1}`` and sets

    S_{-k} = (R_k^* p(-k-1) R_k)^{-1/2},     R_{k+1} = R_k S_{-k},

which gives ``|S_{-n+1}^* ... S_0^*|^{-2} = p(-n)``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionFailed, SqrtFailure
from .matcore import eig_hermitian
from .oppoly import MatrixPolynomial, PreconditionReport, check_preconditions, evaluate
from .shiftcore import IsometryReport, WeightSequence, verify_m_isometry

SQRT_CLIFF = 1e-12
UNILATERAL_HORIZON = 64
BILATERAL_HORIZON = 32


@dataclass
class ConstructionResult:
    weights: WeightSequence
    polynomial: MatrixPolynomial
    capacity_estimate: float
    report: IsometryReport
    preconditions: PreconditionReport


def _root_pair(M, k):
    """``(M^{1/2}, M^{-1/2})`` for positive definite ``M``; ``k`` labels failures."""
    w, V = eig_hermitian(0.5 * (M + M.conj().T))
    if not w[0] > SQRT_CLIFF * abs(w[-1]):
        raise SqrtFailure(f"step {k}: eigenvalue ratio {w[0] / w[-1]:.3e} below {SQRT_CLIFF}")
    r = np.sqrt(w)
    root = (V * r) @ V.conj().T
    inv_root = (V / r) @ V.conj().T
    return 0.5 * (root + root.conj().T), 0.5 * (inv_root + inv_root.conj().T)


def positive_branch(p, horizon, start=None, start_index=0):
    """Weights ``S_{start_index+1}..S_horizon`` matching ``p`` on the positive side.

    ``start`` is the product ``P = S_{start_index} ... S_1`` of already fixed
    weights (identity by default).
    """
    Q = np.eye(p.dim) if start is None else np.linalg.inv(start)
    out = []
    for k in range(start_index, horizon):
        St = Q.conj().T @ evaluate(p, k + 1) @ Q
        S, S_inv = _root_pair(St, k + 1)
        out.append(S)
        Q = Q @ S_inv
    return out


def negative_branch(p, horizon):
    """Weights ``S_0, S_{-1}, ..., S_{-horizon+1}`` (in that order)."""
    R = np.eye(p.dim)
    out = []
    for k in range(horizon):
        St = R.conj().T @ evaluate(p, -k - 1) @ R
        _, S = _root_pair(St, -k)
        out.append(S)
        R = R @ S
    return out


def _require(p, m, pre, allow_divergence):
    if p.degree() > m - 1:
        raise PreconditionFailed("degree", f"deg p = {p.degree()} exceeds m-1 = {m - 1}")
    if pre.failure == "divergence" and allow_divergence:
        return
    if pre.failure is not None:
        if pre.failure == "positivity":
            detail = f"min eigenvalue {pre.min_eigenvalue:.3e} at n={pre.min_eigenvalue_node}"
        elif pre.failure == "p0":
            detail = f"||p(0) - I|| = {pre.p0_defect:.3e}"
        else:
            detail = pre.status
        raise PreconditionFailed(pre.failure, detail)


def construct_unilateral(p, m, horizon=UNILATERAL_HORIZON, allow_divergence=False, rtol=None):
    """Positive weights ``S_1..S_horizon`` of an m-isometric unilateral shift."""
    pre = check_preconditions(p, horizon, "unilateral")
    _require(p, m, pre, allow_divergence)
    w = WeightSequence("unilateral", np.stack(positive_branch(p, horizon)), 1)
    kw = {} if rtol is None else {"rtol": rtol}
    report = verify_m_isometry(w, m, **kw)
    return ConstructionResult(w, p, pre.capacity, report, pre)


def construct_bilateral(p, m, horizon=BILATERAL_HORIZON, allow_divergence=False, rtol=None):
    """Positive weights ``S_{-horizon+1}..S_horizon`` of an m-isometric bilateral shift."""
    pre = check_preconditions(p, horizon, "bilateral")
    _require(p, m, pre, allow_divergence)
    neg = negative_branch(p, horizon)
    pos = positive_branch(p, horizon)
    w = WeightSequence("bilateral", np.stack(neg[::-1] + pos), -horizon + 1)
    kw = {} if rtol is None else {"rtol": rtol}
    report = verify_m_isometry(w, m, **kw)
    return ConstructionResult(w, p, pre.capacity, report, pre)
