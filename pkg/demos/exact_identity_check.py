#!/usr/bin/env python3
"""Check the SAT-probability identity exactly at desk scale.

Three independent routes to P(SAT) over the uniform (n, L, k) model
must coincide as exact rationals:

  1. truth tables over every ordered clause sequence,
  2. sum_r 2^(r-L) P(rank = r) over the support-matrix ensemble,
  3. E(1/Y), with Y counted as the transpose-kernel size.

The analytic E(Y) formula is then compared against exact enumeration.
"""

from xorsat import bounds, oracle

print("identity P(SAT) = sum_r 2^(r-L) P_(r) = E(1/Y), k = 3")
print(f"{'n':>2} {'L':>2}  {'truth-table':>14} {'rank-sum':>14} {'1/Y-mean':>14}  match")
for n in (3, 4, 5):
    for L in range(4):
        a = oracle.exact_sat_probability(n, L, 3).value
        b = oracle.sat_probability_via_rank(n, L, 3)
        c = oracle.expected_inverse_y(n, L, 3)
        print(f"{n:>2} {L:>2}  {str(a):>14} {str(b):>14} {str(c):>14}  {a == b == c}")

print()
print("analytic E(Y) vs exact enumeration, k = 3")
print(f"{'n':>2} {'L':>2}  {'exact':>12} {'analytic':>18} {'rel err':>10}")
for n in (4, 5, 6):
    for L in (1, 2, 3, 4):
        exact = oracle.exact_expected_y(n, L, 3)
        analytic = bounds.expected_y(n, L, 3)
        rel = abs(analytic - float(exact)) / float(exact)
        print(f"{n:>2} {L:>2}  {str(exact):>12} {analytic:>18.12f} {rel:>10.2e}")

print()
print("Jensen direction: P(SAT) >= 1/E(Y) on every instance above:")
ok = all(
    oracle.exact_sat_probability(n, L, 3).value >= 1 / oracle.exact_expected_y(n, L, 3)
    for n in (3, 4, 5)
    for L in range(4)
)
print(f"  holds exactly: {ok}")
