"""In one dimension only unitary shifts have m-isometric adjoints.

For p(z) = 1 + z^2 the bilateral shift is 3-isometric, but no scalar
polynomial of positive degree has a polynomial inverse, so the adjoint cannot
be m-isometric.  The flipped weights fail the identity by a wide margin.
"""
import numpy as np

from misoshift.analyze import adjoint_is_m_isometric
from misoshift.construct import construct_bilateral
from misoshift.oppoly import MatrixPolynomial, invert_in_degree
from misoshift.shiftcore import adjoint_flip, verify_m_isometry

p = MatrixPolynomial(np.array([1.0, 0.0, 1.0])[:, None, None])
res = construct_bilateral(p, 3, 32)
print("shift:", res.report.summary())
print("polynomial inverse within degree 2:", invert_in_degree(p, 2))
print("adjoint verdict:", adjoint_is_m_isometric(p, 3).adjoint_m_isometric)
for m in (2, 3, 4):
    print("adjoint,", verify_m_isometry(adjoint_flip(res.weights), m).summary())
