"""Executable checks of structural facts about m-isometric shifts.

Each check returns numbers alongside the verdict so callers can see how far
from the threshold a case sits.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

import numpy as np

from .construct import BILATERAL_HORIZON, UNILATERAL_HORIZON, construct_bilateral, construct_unilateral
from .matcore import commutator_norm, hermitian_defect
from .oppoly import MatrixPolynomial, invert_in_degree, vandermonde_weights
from .shiftcore import gram

COMMUTE_RTOL = 1e-8
INDETERMINATE_FACTOR = 10.0


class Commutativity(NamedTuple):
    commute: bool
    max_commutator: float


def _pairwise(mats, tol):
    worst = 0.0
    for A, B in combinations(mats, 2):
        scale = np.linalg.norm(A) * np.linalg.norm(B)
        if scale == 0.0:
            continue
        worst = max(worst, commutator_norm(A, B) / scale)
    return Commutativity(bool(worst <= tol), float(worst))


def weights_commute(w, tol=COMMUTE_RTOL):
    """Pairwise commutators of all stored weights, relative to ``||A|| ||B||``."""
    return _pairwise(list(w.weights), tol)


def coefficients_commute(p, tol=COMMUTE_RTOL):
    """Pairwise commutators of the non-constant coefficients of ``p``."""
    return _pairwise(list(p.coeffs[1:]), tol)


@dataclass
class CommutativityReport:
    all_weights: Commutativity
    first_weights: Commutativity
    coefficients: Commutativity
    tol: float

    @property
    def verdicts(self):
        return (self.all_weights.commute, self.first_weights.commute, self.coefficients.commute)

    @property
    def status(self):
        """``"agree"``, ``"disagree"`` or ``"indeterminate"``.

        A split verdict whose commutators all sit below ``10 * tol`` is
        rounding noise near the threshold, not a counterexample.
        """
        if len(set(self.verdicts)) == 1:
            return "agree"
        values = (self.all_weights.max_commutator, self.first_weights.max_commutator,
                  self.coefficients.max_commutator)
        if max(values) <= INDETERMINATE_FACTOR * self.tol:
            return "indeterminate"
        return "disagree"

    @property
    def agree(self):
        return self.status == "agree"


def commutativity_equivalence_check(p, m, horizon=None, bilateral=False, tol=COMMUTE_RTOL):
    """Construct the positive shift of ``p`` and test the three commutativity conditions.

    The conditions are: all weights commute; ``S_1..S_{m-1}`` commute; the
    non-constant coefficients of ``p`` commute.  For an m-isometric shift with
    positive weights they are equivalent.
    """
    if bilateral:
        res = construct_bilateral(p, m, horizon or BILATERAL_HORIZON)
    else:
        res = construct_unilateral(p, m, horizon or UNILATERAL_HORIZON)
    w = res.weights
    first = [w[j] for j in range(1, min(m - 1, w.last_index) + 1)]
    return CommutativityReport(
        all_weights=weights_commute(w, tol),
        first_weights=_pairwise(first, tol),
        coefficients=coefficients_commute(p, tol),
        tol=tol)


class AdjointVerdict(NamedTuple):
    adjoint_m_isometric: bool
    inverse: Optional[MatrixPolynomial]
    adjoint_polynomial: Optional[MatrixPolynomial]


def adjoint_is_m_isometric(p, m):
    """Whether the adjoint of the bilateral shift of ``p`` is m-isometric.

    That happens exactly when ``p`` has a two-sided inverse ``q`` of degree
    at most ``m - 1``; the adjoint's own polynomial is then ``q(-z)``.
    """
    q = invert_in_degree(p, m - 1)
    if q is None:
        return AdjointVerdict(False, None, None)
    return AdjointVerdict(True, q, q.reflected())


@dataclass
class CoefficientStructureReport:
    weights_matrix: np.ndarray
    residuals: np.ndarray
    hermitian_defects: np.ndarray
    tol: float

    @property
    def max_residual(self):
        return float(self.residuals.max())

    @property
    def ok(self):
        return bool(self.max_residual <= self.tol and self.hermitian_defects.max() <= self.tol)


def coefficient_structure_check(p, w, rtol=1e-9):
    """Check that each coefficient of ``p`` is the real combination of Gram products.

    ``A_j = sum_l M[j, l] |S_l ... S_1|^2`` with ``M`` the inverse Vandermonde
    matrix on nodes ``0..deg``; each ``A_j`` must also be Hermitian.
    """
    d = p.degree_bound
    M = vandermonde_weights(list(range(d + 1)))
    grams = np.stack([gram(w, 0, l) for l in range(d + 1)])
    rebuilt = np.einsum("jl,lab->jab", M, grams)
    scale = 1.0 + max(float(np.linalg.norm(G)) for G in grams)
    residuals = np.linalg.norm(rebuilt - p.coeffs, axis=(1, 2)) / scale
    herm = np.array([hermitian_defect(A) for A in p.coeffs]) / scale
    return CoefficientStructureReport(M, residuals, herm, rtol)
