"""Extending a few prescribed weights to an (m+2)-isometric shift.

The prefix is kept exactly; the rest comes from the polynomial
q(z) = alpha z(z-1)...(z-m) I + (interpolant of the prefix Gram products).
"""
import numpy as np

from misoshift.analyze import weights_commute
from misoshift.completion import can_start_2isometry, complete_weights

res = complete_weights([np.array([[2.0]])], horizon=12)
print("scalar prefix 2: alpha =", res.alpha, "(bound", res.sup_bound, ")")
print("weights:", np.round(res.weights.weights[:, 0, 0], 6))
print(res.report.summary())

A = [np.array([[2.0, 1.0], [1.0, 2.0]]), np.array([[3.0, 0.0], [0.0, 1.0]])]
res = complete_weights(A, horizon=24)
print("\nnon-commuting prefix:", res.report.summary())
print("prefix preserved:", all(np.array_equal(res.weights[j], M) for j, M in enumerate(A, 1)))
print("weights commute:", weights_commute(res.weights))

for A1 in (np.eye(2), np.diag([0.5, 3.0])):
    print(f"\ncan {A1.tolist()} start a 2-isometric shift? {can_start_2isometry(A1)}")
