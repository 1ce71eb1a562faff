"""Weight sequences of shift operators and the m-isometry test.

An infinite shift is represented by a finite window of its weights.  For a
unilateral shift the window is ``S_1..S_H``; for a bilateral shift it is any
contiguous index range, by default ``S_{-H+1}..S_H``.  Because
``beta_m(S)`` is block diagonal with blocks

    sum_k (-1)**(m-k) * C(m, k) * |S_{j+k} ... S_{j+1}|**2,

a window checks exactly the blocks it contains.
"""
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import (DimMismatch, HorizonTooShort, IndexOutOfHorizon, Singular,
                     WrongKind, ZeroVector)
from .matcore import INV_RTOL, as_square, operator_norm

ISO_RTOL = 1e-8
KINDS = ("unilateral", "bilateral")


def default_workers():
    try:
        return max(1, int(os.environ.get("MISOSHIFT_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True, eq=False)
class WeightSequence:
    kind: str
    weights: np.ndarray
    first_index: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise WrongKind(f"kind must be one of {KINDS}, got {self.kind!r}")
        W = np.asarray(self.weights)
        W = W.astype(np.complex128 if W.dtype.kind == "c" else np.float64)
        if W.ndim != 3 or W.shape[1] != W.shape[2] or W.shape[0] == 0 or W.shape[1] == 0:
            raise DimMismatch(f"weights must have shape (count, N, N), got {W.shape}")
        if self.kind == "unilateral" and self.first_index != 1:
            raise WrongKind("unilateral weights start at index 1")
        if not np.all(np.isfinite(W)):
            raise ValueError("weights must be finite")
        s = np.linalg.svd(W, compute_uv=False)
        bad = np.nonzero(~(s[:, -1] > INV_RTOL * s[:, 0]))[0]
        if bad.size:
            raise Singular(f"weight S_{self.first_index + int(bad[0])} is not invertible")
        W = W.copy()
        W.flags.writeable = False
        object.__setattr__(self, "weights", W)
        object.__setattr__(self, "first_index", int(self.first_index))

    @classmethod
    def unilateral(cls, matrices):
        return cls("unilateral", np.stack([as_square(M) for M in matrices]), 1)

    @classmethod
    def bilateral(cls, matrices, first_index):
        return cls("bilateral", np.stack([as_square(M) for M in matrices]), first_index)

    @property
    def dim(self):
        return self.weights.shape[1]

    @property
    def last_index(self):
        return self.first_index + len(self.weights) - 1

    @property
    def indices(self):
        return range(self.first_index, self.last_index + 1)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, j):
        if not self.first_index <= j <= self.last_index:
            raise IndexOutOfHorizon(
                f"weight index {j} outside stored range {self.first_index}..{self.last_index}")
        return self.weights[j - self.first_index]

    def uniform_bound(self):
        return shift_norm(self)

    def __repr__(self):
        return (f"WeightSequence({self.kind!r}, dim={self.dim}, "
                f"indices={self.first_index}..{self.last_index})")


@dataclass
class IsometryReport:
    m: int
    block_indices: np.ndarray
    block_residuals: np.ndarray
    max_residual: float
    scale: float
    tolerance: float
    verdict: bool
    norm_estimate: float

    @property
    def relative_residual(self):
        """``max_residual`` divided by the Gram scale ``1 + max ||gram||``."""
        return self.max_residual / self.scale

    @property
    def checked_range(self):
        return int(self.block_indices[0]), int(self.block_indices[-1])

    def summary(self):
        lo, hi = self.checked_range
        word = "m-isometric" if self.verdict else "NOT m-isometric"
        return (f"m={self.m}: {word} on blocks {lo}..{hi}; max residual {self.max_residual:.3e} "
                f"(relative {self.relative_residual:.3e}, tol {self.tolerance:.3e}); "
                f"norm lower bound {self.norm_estimate:.6g}")


def _check_window(w, j, n):
    if n > 0 and (j + 1 < w.first_index or j + n > w.last_index):
        raise IndexOutOfHorizon(
            f"gram({j}, {n}) needs weights {j + 1}..{j + n}, "
            f"stored {w.first_index}..{w.last_index}")


def _product(w, j, n):
    P = np.eye(w.dim, dtype=w.weights.dtype)
    for i in range(j + 1, j + n + 1):
        P = w[i] @ P
    return P


def gram(w, j, n):
    """``(S_{j+n} ... S_{j+1})^* (S_{j+n} ... S_{j+1})``; the identity for n = 0."""
    _check_window(w, j, n)
    P = _product(w, j, n)
    G = P.conj().T @ P
    return 0.5 * (G + G.conj().T)


def _grams_from(w, j, m):
    """``gram(w, j, k)`` for ``k = 0..m``, sharing one running product."""
    _check_window(w, j, m)
    P = np.eye(w.dim, dtype=w.weights.dtype)
    out = [P.copy()]
    for i in range(j + 1, j + m + 1):
        P = w[i] @ P
        G = P.conj().T @ P
        out.append(0.5 * (G + G.conj().T))
    return out


def _beta_from_grams(grams, m):
    return sum((-1) ** (m - k) * comb(m, k) * grams[k] for k in range(m + 1))


def beta_block(w, m, j):
    """Diagonal block ``j`` of ``beta_m`` of the shift."""
    return _beta_from_grams(_grams_from(w, j, m), m)


def admissible_blocks(w, m):
    return range(w.first_index - 1, w.last_index - m + 1)


def verify_m_isometry(w, m, tol=None, rtol=ISO_RTOL, workers=None):
    """Check every ``beta_m`` block the stored window supports.

    With ``tol=None`` the tolerance is ``rtol * (1 + max ||gram||_F)``, the
    maximum taken over all Gram products entering the check.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    blocks = admissible_blocks(w, m)
    if len(blocks) == 0:
        raise HorizonTooShort(f"{len(w)} weights cannot support an m={m} block")
    workers = default_workers() if workers is None else workers

    def one(j):
        grams = _grams_from(w, j, m)
        return (float(np.linalg.norm(_beta_from_grams(grams, m))),
                max(float(np.linalg.norm(G)) for G in grams))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, blocks))
    else:
        results = [one(j) for j in blocks]
    residuals = np.array([r for r, _ in results])
    scale = 1.0 + max(g for _, g in results)
    if tol is None:
        tol = rtol * scale
    max_res = float(residuals.max())
    return IsometryReport(
        m=m, block_indices=np.array(blocks), block_residuals=residuals,
        max_residual=max_res, scale=scale, tolerance=float(tol),
        verdict=bool(max_res <= tol), norm_estimate=shift_norm(w))


def shift_norm(w):
    """Largest weight norm in the window.

    For the infinite shift this is a lower bound of the true norm.
    """
    return max(operator_norm(S) for S in w.weights)


def adjoint_flip(w):
    """Weights ``T_j = S_{-j+1}^*`` of the shift unitarily equivalent to ``S^*``."""
    if w.kind != "bilateral":
        raise WrongKind("adjoint_flip needs a bilateral weight sequence")
    flipped = np.conj(np.swapaxes(w.weights[::-1], 1, 2))
    return WeightSequence("bilateral", flipped, -w.last_index + 1)


def scalar_compression(w, x):
    """Weights ``alpha_j(x) = ||S_j...S_1 x|| / ||S_{j-1}...S_1 x||`` for j = 1..H."""
    if w.kind != "unilateral":
        raise WrongKind("scalar compression is defined for unilateral shifts")
    v = np.asarray(x)
    if v.shape != (w.dim,):
        raise DimMismatch(f"vector of length {w.dim} expected, got shape {v.shape}")
    prev = float(np.linalg.norm(v))
    if prev == 0.0:
        raise ZeroVector("x must be non-zero")
    alphas = []
    for S in w.weights:
        v = S @ v
        cur = float(np.linalg.norm(v))
        alphas.append(cur / prev)
        prev = cur
    return np.array(alphas)
