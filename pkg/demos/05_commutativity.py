"""Commuting weights, commuting leading weights and commuting coefficients go together.

Commuting and single-coefficient polynomials give three true verdicts; generic
positive definite coefficients give three false ones.
"""
import numpy as np

from misoshift import fixtures as F
from misoshift.analyze import commutativity_equivalence_check

rng = np.random.default_rng(5)
families = {
    "commuting": lambda: F.random_commuting_polynomial(rng, 3, 4),
    "single coefficient": lambda: F.random_single_coefficient_polynomial(rng, 3, 4),
    "non-commuting": lambda: F.random_noncommuting_polynomial(rng, 3, 4),
}
for name, make in families.items():
    rep = commutativity_equivalence_check(make(), 4, 32)
    sizes = ", ".join(f"{c.max_commutator:.1e}" for c in
                      (rep.all_weights, rep.first_weights, rep.coefficients))
    print(f"{name:<19} verdicts {rep.verdicts}  status {rep.status:<6} commutators {sizes}")
