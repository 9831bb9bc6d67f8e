"""Dedekind sums, their classical reciprocity, and Dedekind-type DC sums.

Run: python demos/dedekind_and_dc_sums.py
"""

import sys
from fractions import Fraction
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dcsums import (
    dc_sum,
    dedekind_sum,
    format_rational,
    gen_dedekind_sum,
    lattice_partition,
    theorem8_rhs,
)

print("Classical Dedekind sums S(h,k):")
for h, k in [(1, 3), (2, 3), (3, 7), (5, 12)]:
    print(f"  S({h},{k}) = {format_rational(dedekind_sum(h, k))}")

print("\nReciprocity S(h,k) + S(k,h) = -1/4 + (h^2+k^2+1)/(12hk), checked exactly:")
for h, k in [(3, 7), (5, 12), (11, 25)]:
    lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
    rhs = Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k)
    assert lhs == rhs
    print(f"  (h,k)=({h},{k}): both sides {format_rational(lhs)}")

print("\nGeneralized Dedekind sums S_p(h,k) with the periodic Bernoulli function:")
for p, h, k in [(1, 1, 3), (2, 3, 5), (3, 2, 7)]:
    print(f"  S_{p}({h},{k}) = {format_rational(gen_dedekind_sum(p, h, k))}")

print("\nDC sums T_p(h,k) built on the antiperiodic Euler function:")
for p, h, k in [(1, 1, 3), (3, 1, 3), (1, 2, 3), (5, 3, 7)]:
    print(f"  T_{p}({h},{k}) = {format_rational(dc_sum(p, h, k))}")

print("\nReciprocity combination vs the periodic double sum (exact equality):")
for p, h, k in [(3, 1, 3), (3, 3, 5), (5, 7, 9)]:
    lhs = k**p * dc_sum(p, h, k) + h**p * dc_sum(p, k, h)
    rhs = theorem8_rhs(p, h, k, periodic=True)
    assert lhs == rhs
    print(f"  p={p}, (h,k)=({h},{k}): {format_rational(lhs)}")

print("\nSame double sum with the plain polynomial instead (as printed) drifts")
print("as soon as some u/k + v/h reaches 1:")
p, h, k = 3, 3, 5
lhs = k**p * dc_sum(p, h, k) + h**p * dc_sum(p, k, h)
rhs = theorem8_rhs(p, h, k, periodic=False)
print(f"  p=3, (h,k)=(3,5): lhs {format_rational(lhs)}, printed rhs {format_rational(rhs)},"
      f" residual {format_rational(lhs - rhs)}")

print("\nLattice split of uh+vk over [0,hk) and [hk+1,2hk) for (h,k)=(3,5):")
low, high = lattice_partition(3, 5)
print(f"  low  = {low}")
print(f"  high = {high}")
assert sorted(v % 15 for v in low + high) == list(range(15))
print("  together they form a complete residue system mod 15")
