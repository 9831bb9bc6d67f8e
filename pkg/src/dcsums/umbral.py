"""Umbral evaluation: powers of linear forms in independent Euler umbrae.

An umbral expression is a sum of terms a_i * (E_i + x_i) over distinct
umbrae E_i.  Raising it to the p-th power expands multinomially and then
replaces each E_i^s by the Euler polynomial value E_s(x_i):

    (a(E + x) + b(E' + y))^p = sum_s C(p,s) a^s E_s(x) b^(p-s) E_{p-s}(y)

and so on for more umbrae.  A single unshifted umbra recovers the plain
Euler numbers: (E + 0)^p = E_p.  Duplicate umbra ids are rejected — there
is no defined semantics for adding two shifted copies of one umbra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

from .appell import euler_number, euler_poly
from .rationals import Rational

__all__ = ["UmbralTerm", "umbral_power", "theorem9_rhs"]


@dataclass(frozen=True)
class UmbralTerm:
    """One summand a * (E + shift) of an umbral linear form."""

    coeff: Rational
    shift: Rational
    umbra: int


def _as_terms(terms: Iterable[UmbralTerm | tuple]) -> list[UmbralTerm]:
    out: list[UmbralTerm] = []
    for t in terms:
        if isinstance(t, UmbralTerm):
            out.append(UmbralTerm(Fraction(t.coeff), Fraction(t.shift), t.umbra))
        else:
            coeff, shift, umbra = t
            out.append(UmbralTerm(Fraction(coeff), Fraction(shift), umbra))
    ids = [t.umbra for t in out]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate umbra ids in {ids}")
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # All (s_1, ..., s_parts) with sum == total, lexicographic.
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def umbral_power(terms: Sequence[UmbralTerm | tuple], p: int) -> Rational:
    """Evaluate (sum_i a_i (E_i + x_i))^p with independent umbrae."""
    if p < 0:
        raise ValueError(f"power must be nonnegative, got {p}")
    ts = _as_terms(terms)
    if not ts:
        return Fraction(1) if p == 0 else Fraction(0)
    total = Fraction(0)
    for comp in _compositions(p, len(ts)):
        coef = factorial(p)
        for s in comp:
            coef //= factorial(s)
        prod = Fraction(coef)
        for t, s in zip(ts, comp):
            if prod == 0:
                break
            prod *= Fraction(t.coeff) ** s * euler_poly(s).eval(t.shift)
        total += prod
    return total


def theorem9_rhs(p: int, h: int, k: int) -> Rational:
    """Right side of the umbral reciprocity statement, for odd p.

    Assembles, entirely from umbral powers,

        2 * sum over u in [0, k) with u - floor(hu/k) odd of
              (kh(E + u/k) + k(E' + h - floor(hu/k)))^p
        + (hE + kE')^p + (p+2) E_p.
    """
    if h < 1 or k < 1:
        raise ValueError(f"h and k must be positive, got ({h}, {k})")
    if p < 1 or p % 2 == 0:
        raise ValueError(f"power must be odd and positive, got {p}")
    total = Fraction(0)
    for u in range(k):
        j = (h * u) // k
        if (u - j) % 2 == 1:
            total += umbral_power(
                [(k * h, Fraction(u, k), 0), (k, Fraction(h - j), 1)], p
            )
    mixed = umbral_power([(h, 0, 0), (k, 0, 1)], p)
    return 2 * total + mixed + (p + 2) * euler_number(p)
