#!/usr/bin/env python3
"""The headline machinery: odd power moments of Kloosterman sums with
trace-one arguments, generated recursively from code weight data.

The recursion consumes D_j, the difference between the weight counts of the
orthogonal-cell code and the symplectic-cell code, plus lower odd moments.
Every value it produces is checked against the direct power sum over the
field, an entirely independent computation.
"""

from kloosterman import Field, moments
from kloosterman.ksum import ktable
from kloosterman.pmi import full_moment_identity, mk_via_identity, pless_check, t1k_recursive
from kloosterman.wcode import dual_enumerate, weight_prefix_closed

print("trace-one moments T1K^h, recursive vs direct:")
for n, deg in ((1, 3), (1, 4), (1, 5), (3, 1), (3, 2)):
    f = Field(deg)
    row = []
    for h in (1, 3, 5, 7):
        rep = t1k_recursive(n, f, h, compare=True)
        assert rep.match
        row.append(f"h={h}: {rep.recursive}")
    print(f"  (n={n}, q={f.q:2d})  " + "   ".join(row))

# one recursion unpacked
f8 = Field(3)
rep = t1k_recursive(1, f8, 3, compare=True)
print(f"\n(n=1, q=8), h=3 in detail:")
print(f"  D_j (orthogonal minus symplectic weight counts): {rep.d_values}")
print(f"  recursive value {rep.recursive}, direct power sum {rep.direct}")
trace_one = sorted(k for a, k in ktable(f8).items() if f8.trace(a) == 1)
print(f"  direct route: trace-one values {trace_one}, sum of cubes "
      f"{sum(k**3 for k in trace_one)}")

# the Pless identity that powers the recursion, at its smallest worked case
weights = [w for _, w in dual_enumerate(1, f8)]
lhs, rhs = pless_check(56, 3, weights, weight_prefix_closed(1, f8, 1), 1)
print(f"\nPless identity at (n=1, q=8), h=1: {lhs} == {rhs}")

# full moments: the symplectic-side identity solved for MK^h
print("\nfull moments MK^h recovered from the symplectic cell identity:")
for deg in (3, 4, 5):
    f = Field(deg)
    solved = [mk_via_identity(1, f, h) for h in (1, 2, 3, 4)]
    direct = [moments(f, h).mk for h in (1, 2, 3, 4)]
    assert solved == direct
    print(f"  q={f.q:2d}: MK^1..MK^4 = {solved}")
lhs, rhs = full_moment_identity(3, Field(1), 5)
print(f"  (n=3, q=2), h=5 identity: {lhs} == {rhs}")
