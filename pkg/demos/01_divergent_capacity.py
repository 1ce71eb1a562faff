"""A polynomial that is positive on every natural number but has no bounded shift.

The 3x3 cubic below has p(0) = I and p(n) positive definite for n >= 0, yet
the ratios r(p(n+1) p(n)^{-1}) grow without bound, so no bounded weighted
shift realises it.  We watch the trace formula hold, the ratios dip and then
climb, and the precondition check raise its divergence flag.
"""
import numpy as np

from misoshift import fixtures as F
from misoshift.construct import construct_unilateral
from misoshift.errors import PreconditionFailed
from misoshift.matcore import pencil_spectral_radius, trace
from misoshift.oppoly import check_preconditions

p = F.divergent_3x3_polynomial()

print("n   tr(p(n+1)p(n)^-1)   closed form")
for n in (0, 1, 2, 10, 50):
    got = trace(p(n + 1) @ np.linalg.inv(p(n))).real
    print(f"{n:<3} {got:<19.12f} {F.divergent_3x3_trace(n):.12f}")

r = [pencil_spectral_radius(p(n + 1), p(n)) for n in range(2001)]
low = int(np.argmin(r))
print(f"\nratio starts at {r[0]:.3f}, bottoms out at {r[low]:.3f} (n={low}), "
      f"reaches {r[-1]:.3f} at n=2000")

for horizon in (20, 200):
    print(f"horizon {horizon:>3}: {check_preconditions(p, horizon).status}")

# A short horizon cannot see the growth, so a truncated construction still verifies.
res = construct_unilateral(p, 4, 20)
print("\ntruncated construction:", res.report.summary())
try:
    construct_unilateral(p, 4, 200)
except PreconditionFailed as exc:
    print("horizon 200 refused:", exc)
