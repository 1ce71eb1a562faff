"""A 2x2 polynomial with a polynomial inverse gives a shift whose adjoint is also 3-isometric.

p(z) = [[1, z], [z, z^2 + 1]] has determinant 1 and inverse
[[z^2 + 1, -z], [-z, 1]].  Every ratio p(n+1) p(n)^{-1} has characteristic
polynomial z^2 - 3z + 1, so the capacity is the golden ratio squared and the
bilateral shift has norm equal to the golden ratio.
"""
import numpy as np

from misoshift import fixtures as F
from misoshift.analyze import adjoint_is_m_isometric
from misoshift.construct import construct_bilateral
from misoshift.oppoly import fit_from_values
from misoshift.shiftcore import adjoint_flip, gram, shift_norm, verify_m_isometry

p = F.invertible_2x2_polynomial()
res = construct_bilateral(p, 3, 32)
print(res.weights)
print("capacity estimate", res.capacity_estimate, "vs", F.GOLDEN_RATIO_SQUARED)
print("shift norm       ", shift_norm(res.weights), "vs", np.sqrt(F.GOLDEN_RATIO_SQUARED))
print(res.report.summary())

flipped = adjoint_flip(res.weights)
print("adjoint:", verify_m_isometry(flipped, 3).summary())

verdict = adjoint_is_m_isometric(p, 3)
print("\ninverse polynomial coefficients:")
print(np.round(verdict.inverse.coeffs, 12))
fitted = fit_from_values([gram(flipped, 0, k) for k in range(3)])
err = np.max(np.abs(fitted.coeffs - verdict.adjoint_polynomial.coeffs))
print(f"adjoint's own polynomial is q(-z): max coefficient error {err:.2e}")
