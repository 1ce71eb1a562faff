"""Random polynomials with bounded capacity, their shifts, and three consistency checks.

For each polynomial we build 64 weights, verify the m-isometry identity,
compare the norm with the capacity estimate, and match the spectrum of
S_n^2 with that of p(n-1)^{-1/2} p(n) p(n-1)^{-1/2}.
"""
import numpy as np

from misoshift import fixtures as F
from misoshift.analyze import coefficient_structure_check
from misoshift.construct import construct_unilateral
from misoshift.matcore import psd_sqrt
from misoshift.shiftcore import shift_norm

rng = np.random.default_rng(2024)
print("dim  m   rel.residual  |norm^2-C|   spectra err  coeff fit")
for dim, m in [(1, 2), (2, 3), (3, 4), (4, 5), (6, 3)]:
    p = F.random_commuting_polynomial(rng, dim, m)
    res = construct_unilateral(p, m, 64)
    gap = abs(shift_norm(res.weights) ** 2 - res.capacity_estimate)
    spec = 0.0
    for n in range(1, 21):
        R = np.linalg.inv(psd_sqrt(p(n - 1)))
        S = res.weights[n]
        spec = max(spec, np.max(np.abs(np.linalg.eigvalsh(S @ S) - np.linalg.eigvalsh(R @ p(n) @ R))))
    fit = coefficient_structure_check(p, res.weights).max_residual
    print(f"{dim:<4} {m:<3} {res.report.relative_residual:<13.2e} {gap:<12.2e} {spec:<12.2e} {fit:.2e}")
