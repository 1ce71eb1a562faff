"""Polynomials with square-matrix coefficients.

A :class:`MatrixPolynomial` stores its coefficients as an array of shape
``(degree_bound + 1, N, N)``; ``coeffs[j]`` multiplies ``z**j``.  Products are
matrix products, so ``p * q`` and ``q * p`` differ in general.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

import numpy as np

from .errors import DimMismatch, Singular
from .matcore import (as_square, eig_hermitian, hermitian_defect, inverse,
                      pencil_spectral_radius)

POLY_RTOL = 1e-8
MAX_EXACT_NODES = 13


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    coeffs: np.ndarray

    def __post_init__(self):
        C = np.asarray(self.coeffs)
        C = C.astype(np.complex128 if C.dtype.kind == "c" else np.float64)
        if C.ndim != 3 or C.shape[1] != C.shape[2] or C.shape[0] == 0 or C.shape[1] == 0:
            raise DimMismatch(f"coefficient array must have shape (d+1, N, N), got {C.shape}")
        if not np.all(np.isfinite(C)):
            raise ValueError("coefficients must be finite")
        C = C.copy()
        C.flags.writeable = False
        object.__setattr__(self, "coeffs", C)

    @classmethod
    def from_coefficients(cls, matrices):
        mats = [as_square(M) for M in matrices]
        if len({M.shape for M in mats}) != 1:
            raise DimMismatch("coefficients do not share a dimension")
        return cls(np.stack(mats))

    @classmethod
    def constant(cls, M):
        return cls(as_square(M)[None])

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim)[None])

    @classmethod
    def diagonal(cls, scalar_coeffs):
        """Diagonal polynomial from one ascending coefficient list per entry."""
        d = max(len(c) for c in scalar_coeffs)
        C = np.zeros((d, len(scalar_coeffs), len(scalar_coeffs)),
                     dtype=np.result_type(*[np.asarray(c) for c in scalar_coeffs], float))
        for i, c in enumerate(scalar_coeffs):
            C[: len(c), i, i] = c
        return cls(C)

    @property
    def dim(self):
        return self.coeffs.shape[1]

    @property
    def degree_bound(self):
        return self.coeffs.shape[0] - 1

    def degree(self, tol=0.0):
        """Exact degree after discarding trailing coefficients with norm <= tol."""
        norms = np.linalg.norm(self.coeffs, axis=(1, 2))
        nz = np.nonzero(norms > tol)[0]
        return int(nz[-1]) if nz.size else 0

    def normalize(self, tol=0.0):
        return MatrixPolynomial(self.coeffs[: self.degree(tol) + 1])

    def padded(self, degree_bound):
        if degree_bound < self.degree_bound:
            return self.normalize()
        extra = np.zeros((degree_bound - self.degree_bound,) + self.coeffs.shape[1:],
                         dtype=self.coeffs.dtype)
        return MatrixPolynomial(np.concatenate([self.coeffs, extra]))

    def coefficient_norm(self):
        return float(np.max(np.linalg.norm(self.coeffs, axis=(1, 2))))

    def reflected(self):
        """The polynomial ``z -> p(-z)``."""
        signs = (-1.0) ** np.arange(self.degree_bound + 1)
        return MatrixPolynomial(self.coeffs * signs[:, None, None])

    def __call__(self, t):
        return evaluate(self, t)

    def __mul__(self, other):
        return multiply(self, other)

    def __add__(self, other):
        d = max(self.degree_bound, other.degree_bound)
        if self.dim != other.dim:
            raise DimMismatch(f"{self.dim} vs {other.dim}")
        return MatrixPolynomial(self.padded(d).coeffs + other.padded(d).coeffs)

    def __repr__(self):
        return f"MatrixPolynomial(dim={self.dim}, degree_bound={self.degree_bound})"


def evaluate(p, t):
    """Horner evaluation of ``sum_j A_j t**j``."""
    C = p.coeffs
    out = C[-1].copy()
    for A in C[-2::-1]:
        out = out * t + A
    return out


def multiply(p, q):
    if p.dim != q.dim:
        raise DimMismatch(f"{p.dim} vs {q.dim}")
    dp, dq = p.degree_bound, q.degree_bound
    out = np.zeros((dp + dq + 1, p.dim, p.dim), dtype=np.result_type(p.coeffs, q.coeffs))
    for i in range(dp + 1):
        for j in range(dq + 1):
            out[i + j] += p.coeffs[i] @ q.coeffs[j]
    return MatrixPolynomial(out)


def _fraction_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def lagrange_basis(nodes):
    """Lagrange basis polynomials over distinct integer (or rational) nodes.

    Returns one ascending list of exact ``Fraction`` coefficients per node,
    so that ``l_j(nodes[j]) == 1`` and ``l_j(nodes[k]) == 0`` for ``k != j``.
    """
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise ValueError("nodes must be distinct")
    basis = []
    for j, xj in enumerate(xs):
        num = [Fraction(1)]
        den = Fraction(1)
        for k, xk in enumerate(xs):
            if k != j:
                num = _fraction_poly_mul(num, [-xk, Fraction(1)])
                den *= xj - xk
        basis.append([c / den for c in num])
    return basis


def lagrange_value(nodes, j, t):
    """``l_j(t)`` evaluated in floating point straight from the product form."""
    xj = nodes[j]
    return prod((t - xk) / (xj - xk) for k, xk in enumerate(nodes) if k != j)


def vandermonde_weights(nodes):
    """Real matrix ``M`` with ``coeff_j = sum_l M[j, l] * value_l``.

    This is the inverse of the Vandermonde matrix on ``nodes``; its columns are
    the coefficient vectors of the Lagrange basis, computed exactly.
    """
    if len(nodes) > MAX_EXACT_NODES:
        raise ValueError(f"at most {MAX_EXACT_NODES} interpolation nodes are supported")
    basis = lagrange_basis(nodes)
    return np.array([[float(basis[l][j]) for l in range(len(nodes))]
                     for j in range(len(nodes))])


def fit_from_values(values, nodes=None):
    """Unique polynomial of degree <= d taking ``values[k]`` at ``nodes[k]``.

    ``nodes`` defaults to ``0, 1, ..., d``.  Coefficients are real linear
    combinations of the given matrices, so Hermitian data give Hermitian
    coefficients.
    """
    V = np.stack([as_square(v) for v in values])
    if nodes is None:
        nodes = list(range(len(V)))
    if len(nodes) != len(V):
        raise DimMismatch(f"{len(nodes)} nodes for {len(V)} values")
    M = vandermonde_weights(nodes)
    return MatrixPolynomial(np.einsum("jl,lab->jab", M, V))


def interpolated_inverse(p, degree_bound):
    """Interpolant of ``p(n)^{-1}`` at nodes ``0..degree_bound``.

    Raises :class:`Singular` naming the first node where ``p`` is singular.
    """
    values = []
    for n in range(degree_bound + 1):
        try:
            values.append(inverse(evaluate(p, n)))
        except Singular as exc:
            raise Singular(f"p({n}) is singular") from exc
    return fit_from_values(values)


def inverse_residual(p, q):
    """Largest coefficient norm of ``p*q - I`` and ``q*p - I``."""
    worst = 0.0
    eye = MatrixPolynomial.identity(p.dim)
    for prodpoly in (multiply(p, q), multiply(q, p)):
        diff = prodpoly.coeffs.copy()
        diff[0] -= eye.coeffs[0]
        worst = max(worst, float(np.max(np.linalg.norm(diff, axis=(1, 2)))))
    return worst


def invert_in_degree(p, degree_bound, rtol=POLY_RTOL):
    """Two-sided inverse of ``p`` among polynomials of degree <= degree_bound.

    A two-sided inverse of that degree must coincide with the interpolant of
    the node inverses, and both products have degree <= 2*degree_bound, so a
    coefficientwise identity check certifies the result.  Returns ``None``
    when no such inverse exists.
    """
    if p.degree() > degree_bound:
        return None
    try:
        q = interpolated_inverse(p, degree_bound)
    except Singular:
        return None
    tol = rtol * (1.0 + p.coefficient_norm())
    if inverse_residual(p, q) > tol:
        return None
    return q


@dataclass
class PreconditionReport:
    side: str
    nodes: np.ndarray
    p0_defect: float
    hermitian_defect: float
    min_eigenvalues: np.ndarray
    ratio_nodes: np.ndarray = field(default_factory=lambda: np.zeros(0, int))
    ratios: np.ndarray = field(default_factory=lambda: np.zeros(0))
    capacity: float = float("nan")
    capacity_node: int = -1
    divergence_suspected: bool = False
    p0_tol: float = 1e-10
    pd_tol: float = 0.0
    value_scale: float = 1.0

    @property
    def min_eigenvalue(self):
        return float(np.min(self.min_eigenvalues))

    @property
    def min_eigenvalue_node(self):
        return int(self.nodes[int(np.argmin(self.min_eigenvalues))])

    @property
    def failure(self):
        """Name of the first failing item, or ``None`` when all hold."""
        if self.p0_defect > self.p0_tol:
            return "p0"
        if self.hermitian_defect > self.p0_tol * max(1.0, self.value_scale):
            return "hermitian"
        if not self.min_eigenvalue > self.pd_tol:
            return "positivity"
        if self.divergence_suspected:
            return "divergence"
        return None

    @property
    def ok(self):
        return self.failure is None

    @property
    def status(self):
        if self.failure == "divergence":
            return "divergence suspected"
        if self.failure is None:
            return "bounded on horizon"
        return f"failed: {self.failure}"


def _window_diverges(ratios, growth=1.1, min_window=4):
    window = ratios[-max(min_window, len(ratios) // 4):]
    if len(window) < min_window:
        return False
    return bool(np.all(np.diff(window) > 0) and window[-1] >= growth * window[0])


def check_preconditions(p, horizon, side="unilateral", p0_tol=1e-10, growth=1.1):
    """Evaluate the construction hypotheses of ``p`` on a finite node set.

    Nodes are ``0..horizon`` (unilateral) or ``-horizon..horizon``
    (bilateral).  The capacity estimate is the largest ``r(p(n+1) p(n)^{-1})``
    over consecutive checked nodes.  ``divergence_suspected`` is set when the
    last quarter of that ratio sequence increases strictly and grows by at
    least the factor ``growth``; it is a heuristic on a truncated horizon.
    """
    if side not in ("unilateral", "bilateral"):
        raise ValueError(f"unknown side {side!r}")
    lo = 0 if side == "unilateral" else -horizon
    nodes = np.arange(lo, horizon + 1)
    vals = [evaluate(p, int(n)) for n in nodes]
    herm = max(hermitian_defect(v) for v in vals)
    sym = [0.5 * (v + v.conj().T) for v in vals]
    mins = np.array([eig_hermitian(v).eigenvalues[0] for v in sym])
    report = PreconditionReport(
        side=side, nodes=nodes,
        p0_defect=float(np.linalg.norm(evaluate(p, 0) - np.eye(p.dim))),
        hermitian_defect=herm, min_eigenvalues=mins, p0_tol=p0_tol,
        value_scale=max(float(np.linalg.norm(v)) for v in vals))
    if not np.all(mins > 0):
        return report
    ratios = np.array([pencil_spectral_radius(sym[i + 1], sym[i]) for i in range(len(sym) - 1)])
    report.ratio_nodes = nodes[:-1]
    report.ratios = ratios
    if ratios.size:
        k = int(np.argmax(ratios))
        report.capacity = float(ratios[k])
        report.capacity_node = int(nodes[k])
        report.divergence_suspected = _window_diverges(ratios, growth)
    return report
