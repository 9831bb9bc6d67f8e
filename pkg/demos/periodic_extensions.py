"""Sawtooth, periodic Bernoulli function, antiperiodic Euler function.

The Euler function flips sign on every unit shift; the table below makes
the pattern visible on thirds.  Run: python demos/periodic_extensions.py
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dcsums import (
    bernoulli_function,
    euler_function,
    floor_frac,
    format_rational,
    sawtooth,
)

print("floor/fractional split (floor toward -infinity):")
for x in (Fraction(7, 3), Fraction(-1, 2), Fraction(4)):
    fl, fr = floor_frac(x)
    print(f"  {format_rational(x):>4} -> floor {fl}, frac {format_rational(fr)}")

print("\nSawtooth ((x)) on a period, zero at integers and half-integers:")
for num in range(-3, 7):
    x = Fraction(num, 3)
    print(f"  (({format_rational(x):>4})) = {format_rational(sawtooth(x))}")

print("\nPeriodic Bernoulli function Bbar_2 repeats with period 1:")
for num in (-5, 1, 7, 13):
    x = Fraction(num, 3)
    print(f"  Bbar_2({format_rational(x):>4}) = {format_rational(bernoulli_function(2, x))}")

print("\nAntiperiodic Euler function Ebar_3 flips sign on each unit shift:")
for num in (1, 4, 7, 10):
    x = Fraction(num, 3)
    print(f"  Ebar_3({format_rational(x):>4}) = {format_rational(euler_function(3, x))}")

print("\nDistribution relation for odd h: Ebar_p(hx) = h^p sum_v (-1)^v Ebar_p(x + v/h)")
h, p, x = 3, 3, Fraction(1, 9)
lhs = euler_function(p, h * x)
rhs = h**p * sum((-1) ** v * euler_function(p, x + Fraction(v, h)) for v in range(h))
print(f"  h=3, p=3, x=1/9: both sides = {format_rational(lhs)}")
assert lhs == rhs
