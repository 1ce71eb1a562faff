"""Dense matrix kernel used by every other module.

Matrices are plain 2-d numpy arrays.  Real inputs stay real, complex inputs
stay complex; nothing here mutates its arguments.
"""
from typing import NamedTuple

import numpy as np

from .errors import (DimMismatch, NegativeEigenvalue, NoConvergence,
                     NonHermitianInput, Singular)

HERM_RTOL = 1e-10
EIG_TOL = 1e-11
SQRT_TOL = 1e-9
INV_RTOL = 1e-12


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_square(M):
    """Return ``M`` as a finite square ndarray (float64 or complex128)."""
    A = np.asarray(M)
    if A.dtype.kind == "c":
        A = A.astype(np.complex128, copy=False)
    else:
        A = A.astype(np.float64, copy=False)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise DimMismatch(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def hermitian_defect(M):
    A = as_square(M)
    return float(np.max(np.abs(A - A.conj().T)))


def is_hermitian(M, tol=None):
    A = as_square(M)
    if tol is None:
        tol = HERM_RTOL * max(np.linalg.norm(A), 1.0)
    return hermitian_defect(A) <= tol


def as_hermitian(M, tol=None):
    """Validate conjugate symmetry and return the exactly symmetrised matrix."""
    A = as_square(M)
    if tol is None:
        tol = HERM_RTOL * max(np.linalg.norm(A), 1.0)
    defect = hermitian_defect(A)
    if defect > tol:
        raise NonHermitianInput(f"conjugate-symmetry defect {defect:.3e} exceeds {tol:.3e}")
    return 0.5 * (A + A.conj().T)


def eig_hermitian(M, tol=None):
    """Eigen-decomposition of a Hermitian matrix, eigenvalues ascending."""
    A = as_hermitian(M, tol)
    try:
        w, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return EigenDecomposition(w, V)


def min_eigenvalue(M):
    return float(eig_hermitian(M).eigenvalues[0])


def is_positive_definite(M, tol=0.0):
    """True iff the smallest eigenvalue of the Hermitian ``M`` exceeds ``tol``."""
    return min_eigenvalue(M) > tol


def _spectral_function(M, f, neg_tol):
    w, V = eig_hermitian(M)
    scale = max(float(np.max(np.abs(w))), np.finfo(float).tiny)
    if neg_tol is None:
        neg_tol = 1e-12 * scale
    if w[0] < -neg_tol:
        raise NegativeEigenvalue(f"eigenvalue {w[0]:.3e} below -{neg_tol:.3e}")
    w = np.clip(w, 0.0, None)
    R = (V * f(w)) @ V.conj().T
    return 0.5 * (R + R.conj().T)


def psd_sqrt(M, tol=None):
    """Principal square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` are treated as rounding noise and clamped.
    """
    return _spectral_function(M, np.sqrt, tol)


def pd_inverse_sqrt(M, rtol=INV_RTOL):
    """``M**(-1/2)`` for a positive definite ``M``."""
    w, V = eig_hermitian(M)
    if w[0] <= rtol * abs(w[-1]):
        raise Singular(f"matrix is not safely positive definite (min eigenvalue {w[0]:.3e})")
    R = (V / np.sqrt(w)) @ V.conj().T
    return 0.5 * (R + R.conj().T)


def singular_values(M):
    return np.linalg.svd(as_square(M), compute_uv=False)


def is_invertible(M, rtol=INV_RTOL):
    s = singular_values(M)
    return bool(s[-1] > rtol * s[0])


def inverse(M, rtol=INV_RTOL):
    A = as_square(M)
    s = np.linalg.svd(A, compute_uv=False)
    if not s[-1] > rtol * s[0]:
        raise Singular(f"condition test failed: smallest singular value {s[-1]:.3e}")
    return np.linalg.inv(A)


def operator_norm(M):
    """Largest singular value, as the square root of the top eigenvalue of M*M."""
    A = as_square(M)
    w = np.linalg.eigvalsh(A.conj().T @ A)
    return float(np.sqrt(max(w[-1], 0.0)))


def spectral_radius(M):
    A = as_square(M)
    try:
        return float(np.max(np.abs(np.linalg.eigvals(A))))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def pencil_spectral_radius(numerator, denominator):
    """``r(A B^{-1})`` for Hermitian ``A`` and positive definite ``B``.

    Evaluated through the congruence ``L^{-1} A L^{-*}`` with ``B = L L^*``,
    which has the same spectrum and stays accurate for badly conditioned
    ``B`` where an eigenvalue-based ``B^{-1/2}`` would not.
    """
    A = as_hermitian(numerator)
    B = as_hermitian(denominator)
    if A.shape != B.shape:
        raise DimMismatch(f"{A.shape} vs {B.shape}")
    try:
        L = np.linalg.cholesky(B)
    except np.linalg.LinAlgError as exc:
        raise Singular("denominator is not numerically positive definite") from exc
    X = np.linalg.solve(L, A)
    C = np.linalg.solve(L, X.conj().T)
    w = eig_hermitian(0.5 * (C + C.conj().T)).eigenvalues
    return float(max(abs(w[0]), abs(w[-1])))


def commutator_norm(A, B):
    """Frobenius norm of ``AB - BA``."""
    A = as_square(A)
    B = as_square(B)
    if A.shape != B.shape:
        raise DimMismatch(f"{A.shape} vs {B.shape}")
    return float(np.linalg.norm(A @ B - B @ A))


def trace(M):
    return complex(np.trace(as_square(M)))
