"""Euler and Bernoulli numbers and polynomials with exact coefficients.

Two genuinely different code paths are kept alive on purpose.  The
production path builds the numbers from their defining recurrences

    E_0 = 1,  E_n = -(1/2) * sum_{l<n} C(n,l) E_l
    B_0 = 1,  sum_{k<=n} C(n+1,k) B_k = 0          (n >= 1)

and the polynomials from the binomial expansion around those numbers,
E_n(x) = sum_l C(n,l) E_l x^(n-l).  ``series_coeffs_oracle`` re-derives the
same values by truncated power-series division of the generating functions
2e^{xt}/(e^t+1) and t e^{xt}/(e^t-1); the tests and the audit engine use it
to cross-check the recurrence path.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable

from .rationals import Rational, binomial, format_rational

__all__ = [
    "Poly",
    "SequenceCache",
    "euler_number",
    "bernoulli_number",
    "euler_poly",
    "bernoulli_poly",
    "eval_poly",
    "poly_derivative",
    "poly_integral",
    "series_coeffs_oracle",
]


class Poly:
    """Dense univariate polynomial over Rational, lowest degree first.

    The highest stored coefficient is nonzero (the zero polynomial stores
    nothing), so coefficient tuples compare as polynomials.  Instances are
    treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def eval(self, x: Rational | int) -> Rational:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | Rational | int") -> "Poly":
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly(Fraction(other) * c for c in self.coeffs)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        """Text form in descending powers, e.g. ``x^3 - 3/2*x^2 + 1/4``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                term = mag
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                term = xpow if mag == "1" else f"{mag}*{xpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts) if parts else "0"


class SequenceCache:
    """Grow-only memo for a number sequence; prefix values never change.

    Reads are lock-free (the list only ever gains entries); extension is
    serialized through a single writer lock.
    """

    def __init__(self, rule: Callable[[list[Fraction]], Fraction]):
        self._rule = rule
        self._values: list[Fraction] = []
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._rule(self._values))
            return self._values[n]

    def known(self) -> int:
        """Number of cached entries (for tests of prefix stability)."""
        return len(self._values)


def _next_euler(values: list[Fraction]) -> Fraction:
    n = len(values)
    if n == 0:
        return Fraction(1)
    acc = sum(binomial(n, l) * values[l] for l in range(n))
    return Fraction(-1, 2) * acc


def _next_bernoulli(values: list[Fraction]) -> Fraction:
    n = len(values)
    if n == 0:
        return Fraction(1)
    acc = sum(binomial(n + 1, k) * values[k] for k in range(n))
    return -acc / (n + 1)


_EULER_NUMBERS = SequenceCache(_next_euler)
_BERNOULLI_NUMBERS = SequenceCache(_next_bernoulli)


def euler_number(n: int) -> Rational:
    """n-th Euler number E_n = E_n(0); E_1 = -1/2 and E_{2k} = 0 for k >= 1."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return _EULER_NUMBERS.get(n)


def bernoulli_number(n: int) -> Rational:
    """n-th Bernoulli number with B_1 = -1/2."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return _BERNOULLI_NUMBERS.get(n)


@lru_cache(maxsize=None)
def euler_poly(n: int) -> Poly:
    """Euler polynomial E_n(x) = sum_l C(n,l) E_l x^(n-l)."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        coeffs[n - l] = binomial(n, l) * euler_number(l)
    return Poly(coeffs)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    """Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * bernoulli_number(k)
    return Poly(coeffs)


def eval_poly(p: Poly, x: Rational | int) -> Rational:
    """Exact value p(x) for rational x."""
    return p.eval(x)


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative.  For Euler polynomials, E_n' = n * E_{n-1}."""
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_integral(p: Poly) -> Poly:
    """Antiderivative q with q(0) = 0.

    The zero constant pins down the corrected integral identity
    int_0^x E_n = (E_{n+1}(x) - E_{n+1}) / (n+1); the commonly printed form
    omits the -E_{n+1} term and already fails at n = 0.
    """
    if not p.coeffs:
        return Poly()
    return Poly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(p.coeffs)])


def _series_div(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    # Truncated power-series quotient; den[0] must be nonzero.
    q: list[Fraction] = []
    for n in range(len(num)):
        s = num[n]
        for i in range(n):
            s -= q[i] * den[n - i]
        q.append(s / den[0])
    return q


def series_coeffs_oracle(n_max: int, kind: str, x: Rational | int = 0) -> list[Rational]:
    """Values [E_0(x), ..., E_{n_max}(x)] (or B_n(x)) from the generating series.

    Computes the first n_max+1 Taylor coefficients of 2e^{xt}/(e^t+1)
    (kind='euler') or t e^{xt}/(e^t-1) (kind='bernoulli', rewritten as
    e^{xt} / ((e^t-1)/t)) by exact truncated power-series division, then
    scales by n!.  This never touches the recurrence path above, so the two
    can validate each other.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    x = Fraction(x)
    xpow = [Fraction(1)]
    for _ in range(n_max):
        xpow.append(xpow[-1] * x)
    if kind == "euler":
        num = [2 * xpow[n] / factorial(n) for n in range(n_max + 1)]
        den = [Fraction(1, factorial(n)) for n in range(n_max + 1)]
        den[0] += 1
    elif kind == "bernoulli":
        num = [xpow[n] / factorial(n) for n in range(n_max + 1)]
        den = [Fraction(1, factorial(n + 1)) for n in range(n_max + 1)]
    else:
        raise ValueError(f"kind must be 'euler' or 'bernoulli', got {kind!r}")
    q = _series_div(num, den)
    return [q[n] * factorial(n) for n in range(n_max + 1)]
