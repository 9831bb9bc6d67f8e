"""Registry of identity checks, evaluated exactly over parameter grids.

Each registered check pins one claim: a left side, a right side, and the
hypotheses under which the claim is asserted.  Checks come in ``_printed``
form (the claim exactly as printed in the source material, typos and all)
and, where the printed form is falsified by exact computation, a clearly
separated ``_corrected`` variant established by brute-force oracle.  The
engine never conflates the two: the point of a sweep is the exact rational
residual of each instance, zero or not.

Residuals are always lhs - rhs, with lhs the side holding the sum being
characterized (a DC sum, a lattice sum, or the audited integral), so signs
are comparable across reports.  Tuples that violate a check's hypotheses
become ``skipped`` entries rather than failures, keeping grids rectangular.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Mapping, Sequence

from .appell import Poly, euler_number, euler_poly, eval_poly, poly_integral
from .periodic import euler_function
from .rationals import Rational, binomial
from .sums import alt_power_sum, dc_sum, dedekind_sum, theorem8_rhs
from .umbral import theorem9_rhs

__all__ = [
    "IdentityCheck",
    "CheckResult",
    "AuditReport",
    "ParamGrid",
    "REGISTRY",
    "registry_ids",
    "get_check",
    "run_check",
    "sweep",
    "standard_audit_grid",
]

PARAM_NAMES = ("p", "h", "k", "n", "l", "m", "s")


@dataclass(frozen=True)
class IdentityCheck:
    """One auditable claim: named integer params, hypotheses, two sides."""

    id: str
    param_names: tuple[str, ...]
    hypotheses: Callable[..., bool]
    lhs: Callable[..., Rational]
    rhs: Callable[..., Rational]
    description: str = ""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check instance; lhs/rhs/residual are None iff skipped."""

    id: str
    params: dict[str, int]
    lhs: Rational | None
    rhs: Rational | None
    residual: Rational | None
    holds: bool
    skipped: bool = False


@dataclass(frozen=True)
class AuditReport:
    """Deterministic collection of results plus per-id pass/fail/skip tallies."""

    grid: dict
    results: tuple[CheckResult, ...]
    summary: dict[str, dict[str, int]]


@dataclass(frozen=True)
class ParamGrid:
    """Finite value ranges per parameter name, with optional filters.

    ``odd_only`` restricts the modulus-like parameters h, k, m to odd
    values; ``coprime_only`` keeps only (h, k) pairs with gcd 1.  Tuples
    are enumerated lexicographically in each check's declared name order.
    """

    p_values: tuple[int, ...] = ()
    h_values: tuple[int, ...] = ()
    k_values: tuple[int, ...] = ()
    n_values: tuple[int, ...] = ()
    l_values: tuple[int, ...] = ()
    m_values: tuple[int, ...] = ()
    s_values: tuple[int, ...] = ()
    odd_only: bool = False
    coprime_only: bool = False

    @classmethod
    def from_maxima(
        cls,
        pmax: int = 7,
        hmax: int = 9,
        kmax: int = 9,
        nmax: int = 12,
        lmax: int = 8,
        mmax: int = 9,
        smax: int = 8,
        odd_only: bool = False,
        coprime_only: bool = False,
    ) -> "ParamGrid":
        return cls(
            p_values=tuple(range(1, pmax + 1)),
            h_values=tuple(range(1, hmax + 1)),
            k_values=tuple(range(1, kmax + 1)),
            n_values=tuple(range(1, nmax + 1)),
            l_values=tuple(range(0, lmax + 1)),
            m_values=tuple(range(1, mmax + 1)),
            s_values=tuple(range(2, smax + 1)),
            odd_only=odd_only,
            coprime_only=coprime_only,
        )

    def values_for(self, name: str) -> tuple[int, ...]:
        values: tuple[int, ...] = getattr(self, f"{name}_values")
        if self.odd_only and name in ("h", "k", "m"):
            values = tuple(v for v in values if v % 2 == 1)
        return values

    def iter_params(self, param_names: Sequence[str]) -> Iterator[dict[str, int]]:
        def rec(i: int, acc: dict[str, int]) -> Iterator[dict[str, int]]:
            if i == len(param_names):
                yield dict(acc)
                return
            name = param_names[i]
            for v in self.values_for(name):
                acc[name] = v
                if (
                    self.coprime_only
                    and name == "k"
                    and "h" in acc
                    and gcd(acc["h"], v) != 1
                ):
                    continue
                yield from rec(i + 1, acc)
            acc.pop(name, None)

        yield from rec(0, {})

    def description(self) -> dict:
        """JSON-ready description embedded in reports (lists, not tuples)."""
        out: dict = {name: list(self.values_for(name)) for name in PARAM_NAMES}
        out["odd_only"] = self.odd_only
        out["coprime_only"] = self.coprime_only
        return out


# ---------------------------------------------------------------------------
# Shared building blocks for the registered checks.

def _euler_value(n: int, x) -> Fraction:
    return euler_poly(n).eval(Fraction(x))


def _integral_01_x_times_euler(p: int) -> Fraction:
    # Exact int_0^1 x E_p(x) dx by term-wise polynomial integration.
    q = poly_integral(Poly([0, 1]) * euler_poly(p))
    return q.eval(1) - q.eval(0)


def _binomial_euler_sum(p: int) -> Fraction:
    return sum(
        (binomial(p, s) * euler_number(s) / Fraction(p - s + 2) for s in range(p + 1)),
        Fraction(0),
    )


def _lemma1_corrected_value(p: int) -> Fraction:
    return 2 * euler_number(p + 2) / Fraction((p + 1) * (p + 2))


def _reciprocity_lhs(p: int, h: int, k: int) -> Fraction:
    return k**p * dc_sum(p, h, k) + h**p * dc_sum(p, k, h)


def _derivative_sum_lhs(p: int, s: int) -> Fraction:
    return sum(
        (
            Fraction(binomial(p, v) * binomial(p - v + 1, s)) * euler_number(v)
            for v in range(p + 1)
        ),
        Fraction(0),
    )


def _derivative_sum_rhs(p: int, s: int) -> Fraction:
    c = binomial(p, s)
    if c == 0:
        # The vanishing binomial kills the term before the (negative-index)
        # Euler factor would ever be consulted.
        return Fraction(0)
    return -c * euler_number(p - s)


def _dc_closed_form_rhs(p: int, m: int) -> Fraction:
    total = Fraction(0)
    for v in range(p + 1):
        diff = _euler_value(p - v + 1, m) - euler_number(p - v + 1)
        total += (
            binomial(p, v)
            * euler_number(v)
            * Fraction(1, m ** (p + 1 - v))
            * diff
        )
    return total


def _dc_double_sum_rhs(p: int, m: int) -> Fraction:
    total = Fraction(0)
    for v in range(p + 1):
        inner = sum(
            (
                Fraction(binomial(p - v + 1, i)) * euler_number(i) * m ** (p - i)
                for i in range(p - v + 1)
            ),
            Fraction(0),
        )
        total += binomial(p, v) * euler_number(v) * inner
    return total


def _dc_split_sum_rhs(p: int, m: int) -> Fraction:
    lead = sum(
        (Fraction(binomial(p, v)) * euler_number(v) for v in range(p + 1)),
        Fraction(0),
    ) * m**p
    middle = Fraction(0)
    for i in range(1, p - 1):
        for v in range(p - i + 1):
            middle += (
                binomial(p, v)
                * euler_number(v)
                * binomial(p - v + 1, i)
                * euler_number(i)
                * m ** (p - i)
            )
    return lead + middle + (p + 1) * euler_number(p)


def _dc_eval1_rhs(p: int, m: int) -> Fraction:
    total = sum(
        (
            binomial(p, i) * _euler_value(p - i, 1) * euler_number(i) * m ** (p - i)
            for i in range(p + 1)
        ),
        Fraction(0),
    )
    return total + p * euler_number(p)


def _mixed_closed_lhs(p: int, h: int, k: int) -> Fraction:
    return sum(
        (
            binomial(p, s)
            * k ** (p - s)
            * euler_number(s)
            * h ** (p - s)
            * _euler_value(p - s, 1)
            for s in range(p + 1)
        ),
        Fraction(0),
    )


def _mixed_double_rhs(p: int, h: int, k: int) -> Fraction:
    total = Fraction(0)
    for u in range(k):
        inner = Fraction(0)
        for s in range(p + 1):
            inner += (
                binomial(p, s)
                * h**s
                * _euler_value(s, Fraction(u, k))
                * _euler_value(p - s, h - (h * u) // k)
            )
        total += inner if u % 2 == 0 else -inner
    return k**p * total


def _addition_lhs(p: int, h: int, k: int) -> Fraction:
    x, y = Fraction(h, k), Fraction(k, h)
    return _euler_value(p, x + y)


def _addition_rhs(p: int, h: int, k: int) -> Fraction:
    x, y = Fraction(h, k), Fraction(k, h)
    return sum(
        (binomial(p, s) * _euler_value(s, x) * y ** (p - s) for s in range(p + 1)),
        Fraction(0),
    )


def _multiplication_lhs(p: int, m: int) -> Fraction:
    x = Fraction(1, 2 * m)
    return _euler_value(p, m * x)


def _multiplication_rhs(p: int, m: int) -> Fraction:
    x = Fraction(1, 2 * m)
    total = Fraction(0)
    for s in range(m):
        term = _euler_value(p, x + Fraction(s, m))
        total += term if s % 2 == 0 else -term
    return m**p * total


def _dedekind_recip_lhs(h: int, k: int) -> Fraction:
    return dedekind_sum(h, k) + dedekind_sum(k, h)


def _dedekind_recip_rhs(h: int, k: int) -> Fraction:
    return Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k)


# ---------------------------------------------------------------------------
# The registry.

REGISTRY: dict[str, IdentityCheck] = {}


def _register(
    check_id: str,
    param_names: tuple[str, ...],
    hypotheses: Callable[..., bool],
    lhs: Callable[..., Rational],
    rhs: Callable[..., Rational],
    description: str,
) -> None:
    if check_id in REGISTRY:
        raise ValueError(f"duplicate check id {check_id!r}")
    REGISTRY[check_id] = IdentityCheck(
        check_id, param_names, hypotheses, lhs, rhs, description
    )


_register(
    "eq7_printed",
    ("n", "l"),
    lambda n, l: n >= 1 and l >= 0,
    lambda n, l: alt_power_sum(n, l),
    lambda n, l: (-1) ** (n % 2) * _euler_value(l, n) + euler_number(l),
    "alternating power sum vs printed (-1)^n E_l(n) + E_l",
)

_register(
    "eq7_corrected",
    ("n", "l"),
    lambda n, l: n >= 1 and l >= 0,
    lambda n, l: alt_power_sum(n, l),
    lambda n, l: (-1) ** ((n + 1) % 2) * _euler_value(l, n) + euler_number(l),
    "alternating power sum vs corrected (-1)^(n+1) E_l(n) + E_l",
)

_register(
    "eq10",
    ("p", "h", "k"),
    lambda p, h, k: p >= 0 and h >= 1 and k >= 1,
    _addition_lhs,
    _addition_rhs,
    "addition theorem E_p(x+y) = sum C(p,s) E_s(x) y^(p-s) at x=h/k, y=k/h",
)

_register(
    "eq11",
    ("p", "m"),
    lambda p, m: p >= 0 and m >= 1 and m % 2 == 1,
    _multiplication_lhs,
    _multiplication_rhs,
    "multiplication theorem for odd m, instantiated at x = 1/(2m)",
)

_register(
    "eq12_13_printed",
    ("p",),
    lambda p: p >= 1 and p % 2 == 1,
    lambda p: _integral_01_x_times_euler(p),
    lambda p: Fraction(0),
    "exact int_0^1 x E_p(x) dx vs the printed value 0",
)

_register(
    "eq12_13_corrected",
    ("p",),
    lambda p: p >= 1 and p % 2 == 1,
    lambda p: _integral_01_x_times_euler(p),
    _lemma1_corrected_value,
    "exact int_0^1 x E_p(x) dx vs corrected 2E_(p+2)/((p+1)(p+2))",
)

_register(
    "lemma1_printed",
    ("p",),
    lambda p: p >= 1 and p % 2 == 1,
    _binomial_euler_sum,
    lambda p: Fraction(0),
    "sum C(p,s) E_s/(p-s+2) vs the printed value 0",
)

_register(
    "lemma1_corrected",
    ("p",),
    lambda p: p >= 1 and p % 2 == 1,
    _binomial_euler_sum,
    _lemma1_corrected_value,
    "sum C(p,s) E_s/(p-s+2) vs corrected 2E_(p+2)/((p+1)(p+2))",
)

_register(
    "thm2_printed",
    ("p", "s"),
    lambda p, s: p >= 1 and p % 2 == 1 and s >= 2 and s % 2 == 0 and s > p,
    _derivative_sum_lhs,
    _derivative_sum_rhs,
    "derivative-at-1 sum identity under the printed range s > p",
)

_register(
    "thm2_slt",
    ("p", "s"),
    lambda p, s: p >= 1 and p % 2 == 1 and s >= 2 and s % 2 == 0 and s < p,
    _derivative_sum_lhs,
    _derivative_sum_rhs,
    "derivative-at-1 sum identity under the s < p range the derivation uses",
)

_register(
    "thm3",
    ("p", "m"),
    lambda p, m: p >= 1 and p % 2 == 1 and m >= 1 and m % 2 == 1,
    lambda p, m: dc_sum(p, 1, m),
    _dc_closed_form_rhs,
    "T_p(1,m) vs closed form in E_v and E_(p-v+1)(m) - E_(p-v+1)",
)

_register(
    "cor4",
    ("p", "m"),
    lambda p, m: p >= 1 and p % 2 == 1 and m >= 1 and m % 2 == 1,
    lambda p, m: m**p * dc_sum(p, 1, m),
    _dc_double_sum_rhs,
    "m^p T_p(1,m) vs the expanded double sum",
)

_register(
    "prop5",
    ("p", "m"),
    lambda p, m: p >= 1 and p % 2 == 1 and m >= 1 and m % 2 == 1,
    lambda p, m: m**p * dc_sum(p, 1, m),
    _dc_split_sum_rhs,
    "m^p T_p(1,m) vs the split form ending in (p+1) E_p",
)

_register(
    "thm6",
    ("p", "m"),
    lambda p, m: p > 1 and p % 2 == 1 and m >= 1 and m % 2 == 1,
    lambda p, m: m**p * dc_sum(p, 1, m),
    _dc_eval1_rhs,
    "m^p T_p(1,m) vs sum C(p,i) E_(p-i)(1) E_i m^(p-i) + p E_p",
)

_register(
    "thm7",
    ("p", "h", "k"),
    lambda p, h, k: p > 1 and p % 2 == 1 and h >= 1 and k >= 1
    and k % 2 == 1 and gcd(h, k) == 1,
    _mixed_closed_lhs,
    _mixed_double_rhs,
    "closed mixed Euler sum vs the k^p weighted double sum",
)

_register(
    "thm8_periodic",
    ("p", "h", "k"),
    lambda p, h, k: p > 1 and p % 2 == 1 and h >= 1 and k >= 1
    and h % 2 == 1 and k % 2 == 1,
    _reciprocity_lhs,
    lambda p, h, k: theorem8_rhs(p, h, k, periodic=True),
    "k^p T_p(h,k) + h^p T_p(k,h) vs the double sum with the periodic Euler function",
)

_register(
    "thm8_poly",
    ("p", "h", "k"),
    lambda p, h, k: p > 1 and p % 2 == 1 and h >= 1 and k >= 1
    and h % 2 == 1 and k % 2 == 1,
    _reciprocity_lhs,
    lambda p, h, k: theorem8_rhs(p, h, k, periodic=False),
    "k^p T_p(h,k) + h^p T_p(k,h) vs the double sum as printed (plain E_p)",
)

_register(
    "thm9",
    ("p", "h", "k"),
    lambda p, h, k: p > 1 and p % 2 == 1 and h >= 1 and k >= 1 and gcd(h, k) == 1,
    _reciprocity_lhs,
    theorem9_rhs,
    "k^p T_p(h,k) + h^p T_p(k,h) vs the umbral right side",
)

_register(
    "dedekind_recip",
    ("h", "k"),
    lambda h, k: h >= 1 and k >= 1 and gcd(h, k) == 1,
    _dedekind_recip_lhs,
    _dedekind_recip_rhs,
    "classical reciprocity S(h,k) + S(k,h) = -1/4 + (h^2+k^2+1)/(12hk)",
)


def standard_audit_grid() -> ParamGrid:
    """The reference grid behind the bundled findings document.

    p in {3, 5, 7}; odd coprime h, k <= 15; n <= 20; l <= 10;
    odd m <= 15; even s <= 8.
    """
    return ParamGrid(
        p_values=(3, 5, 7),
        h_values=tuple(range(1, 16)),
        k_values=tuple(range(1, 16)),
        n_values=tuple(range(1, 21)),
        l_values=tuple(range(0, 11)),
        m_values=tuple(range(1, 16)),
        s_values=(2, 4, 6, 8),
        odd_only=True,
        coprime_only=True,
    )


def registry_ids() -> list[str]:
    """All registered check ids, sorted."""
    return sorted(REGISTRY)


def get_check(check_id: str) -> IdentityCheck:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}") from None


def _evaluate(check: IdentityCheck, params: Mapping[str, int]) -> CheckResult:
    ordered = {name: int(params[name]) for name in check.param_names}
    if not check.hypotheses(**ordered):
        return CheckResult(check.id, ordered, None, None, None, False, True)
    lhs = Fraction(check.lhs(**ordered))
    rhs = Fraction(check.rhs(**ordered))
    residual = lhs - rhs
    return CheckResult(check.id, ordered, lhs, rhs, residual, residual == 0, False)


def run_check(check_id: str, params: Mapping[str, int]) -> CheckResult:
    """Evaluate one check instance exactly.

    Unknown ids raise ValueError; params must name exactly the check's
    parameters.  A tuple violating the hypotheses yields a skipped result.
    """
    check = get_check(check_id)
    if set(params) != set(check.param_names):
        raise ValueError(
            f"check {check_id!r} takes params {check.param_names}, got {tuple(params)}"
        )
    return _evaluate(check, params)


def sweep(
    ids: Sequence[str],
    grid: ParamGrid,
    max_workers: int | None = None,
) -> AuditReport:
    """Evaluate every (id, tuple) over the grid into a deterministic report.

    Results are ordered lexicographically by (id, params); the per-id
    summary tallies pass/fail/skip.  Evaluations are independent, so a
    worker pool may fan them out; assembly is an ordered reduce either way.
    """
    checks = [get_check(check_id) for check_id in ids]
    jobs = [
        (check, params)
        for check in checks
        for params in grid.iter_params(check.param_names)
    ]
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda job: _evaluate(*job), jobs))
    else:
        results = [_evaluate(check, params) for check, params in jobs]
    results.sort(key=lambda r: (r.id, tuple(r.params.values())))
    summary: dict[str, dict[str, int]] = {
        check.id: {"pass": 0, "fail": 0, "skip": 0} for check in checks
    }
    for r in results:
        bucket = "skip" if r.skipped else ("pass" if r.holds else "fail")
        summary[r.id][bucket] += 1
    return AuditReport(grid=grid.description(), results=tuple(results), summary=summary)
