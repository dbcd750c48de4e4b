"""Sandwich bounds for p_d(n) and the thresholds on d that force the sign of Delta_d(n).

All bounds are exact :class:`~fractions.Fraction` values built from the largest
(and, for n = 2 mod 3, second largest) partition products.  Sign certificates
compare those rationals by exact arithmetic only; logarithms appear only in
the real-valued threshold constants.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .maxprod import max_product_closed, second_max_product_closed
from .series import CoeffRow, ExponentSequence

NEAR_INTEGER = 1e-9
GUARD_DPS = 50


def _p1_value(p1_row: CoeffRow | Sequence[int], n: int) -> int:
    if isinstance(p1_row, CoeffRow):
        if p1_row.seq != ExponentSequence.power(1):
            raise ValueError(f"bounds need the p_1 row, got {p1_row.seq.describe()}")
        coeffs = p1_row.coeffs
    else:
        coeffs = p1_row
    if len(coeffs) <= n:
        raise ValueError(f"p_1 row stops at n={len(coeffs) - 1}, need n={n}")
    return coeffs[n]


@dataclass(frozen=True)
class BoundSet:
    n: int
    d: int
    residue: int
    lower: Fraction
    upper: Fraction
    improved_upper: Fraction | None = None

    @property
    def best_upper(self) -> Fraction:
        if self.improved_upper is None:
            return self.upper
        return min(self.upper, self.improved_upper)

    def contains(self, value: int) -> bool:
        return self.lower < value <= self.best_upper


def pd_bounds(n: int, d: int, p1_row: CoeffRow | Sequence[int]) -> BoundSet:
    """Lower and upper bounds for p_d(n) by the residue of n mod 3.

    Residue 1 needs n >= 4 (the maximal product 4 * 3^((n-4)/3) must exist).
    The improved upper bound is attached for n = 2 mod 3, n >= 8.
    """
    if n < 2:
        raise ValueError(f"bounds need n >= 2, got {n}")
    if d < 1:
        raise ValueError(f"bounds need d >= 1, got {d}")
    r = n % 3
    if r == 1 and n < 4:
        raise ValueError(f"residue-1 bounds need n >= 4, got {n}")
    p1 = _p1_value(p1_row, n)
    top = max_product_closed(n) ** (d - 1)
    if r == 0:
        lower = Fraction(top, math.factorial(n // 3))
    elif r == 1:
        lower = Fraction(3 * top, 2 * math.factorial((n - 4) // 3))
    else:
        lower = Fraction(top, math.factorial((n - 2) // 3))
    improved = None
    if r == 2 and n >= 8:
        improved = Fraction(top, math.factorial((n - 2) // 3)) + second_max_product_closed(n) ** (d - 1) * p1
    return BoundSet(n, d, r, lower, Fraction(top * p1), improved)


# bounds used only for the n = 8 neighbourhood, where the generic chain cannot close


def special_lower_p7(d: int) -> Fraction:
    """p_d(7) > 3/2 * 12^(d-1)."""
    return Fraction(3, 2) * 12 ** (d - 1)


def special_lower_p9(d: int) -> Fraction:
    """p_d(9) > 1/6 * 27^(d-1) + 7/6 * 24^(d-1) from the two largest products."""
    return Fraction(1, 6) * 27 ** (d - 1) + Fraction(7, 6) * 24 ** (d - 1)


def special_upper_p8(d: int) -> Fraction:
    """p_d(8) < 1/2 * 18^(d-1) + 25/24 * 16^(d-1) + 21 * 15^(d-1) from the three largest products."""
    return Fraction(1, 2) * 18 ** (d - 1) + Fraction(25, 24) * 16 ** (d - 1) + 21 * 15 ** (d - 1)


def _lower(n: int, d: int, p1_row) -> Fraction:
    value = pd_bounds(n, d, p1_row).lower
    if n == 9:
        value = max(value, special_lower_p9(d))
    return value


def _upper(n: int, d: int, p1_row) -> Fraction:
    value = pd_bounds(n, d, p1_row).best_upper
    if n == 8:
        value = min(value, special_upper_p8(d))
    return value


class Certificate(enum.Enum):
    CERTIFIED_POSITIVE = "certified-positive"
    CERTIFIED_NEGATIVE = "certified-negative"
    INCONCLUSIVE = "inconclusive"


def bound_ratio_certificate(n: int, d: int, p1_row: CoeffRow | Sequence[int]) -> Certificate:
    """Decide the sign of Delta_d(n) from the bounds alone, if they are tight enough.

    n = 0 mod 3: lower(n)^2 > upper(n-1) upper(n+1) certifies Delta > 0.
    Otherwise:   upper(n)^2 < lower(n-1) lower(n+1) certifies Delta < 0.
    """
    if n < 6:
        raise ValueError(f"certificates need n >= 6, got {n}")
    if n % 3 == 0:
        lo = _lower(n, d, p1_row)
        if lo * lo > _upper(n - 1, d, p1_row) * _upper(n + 1, d, p1_row):
            return Certificate.CERTIFIED_POSITIVE
    else:
        up = _upper(n, d, p1_row)
        if up * up < _lower(n - 1, d, p1_row) * _lower(n + 1, d, p1_row):
            return Certificate.CERTIFIED_NEGATIVE
    return Certificate.INCONCLUSIVE


# ---------------------------------------------------------------------------
# threshold constants


def _formulas(n, ln, num):
    """All threshold constants at n as {name: value}, using ``ln``/``num`` of one backend."""
    ln98 = ln(num(9) / num(8))
    ln2, ln3 = ln(num(2)), ln(num(3))
    out = {}
    r = n % 3
    if r == 0:
        out["C0"] = 1 + 2 * (ln2 + ln(num(n) / 3) / 3) / ln98 * n
        out["C0_star"] = 1 + num("5.67") * (1 + ln(num(n))) * n
    elif r == 1:
        out["C1"] = 1 + 2 * (ln2 + ln(num(n - 1) / 3) / 3) / ln98 * n
        out["C1_tilde"] = 1 + 6 * (1 + ln(num(n - 1))) * n
        out["C1_star"] = 1 + num("5.67") * (1 + ln(num(n - 1))) * n
    else:
        out["C2"] = 1 + (ln3 + ln(num(n + 1) / 3) / 3) / ln98 * n
        out["C2_tilde"] = 1 + 3 * (3 + ln(num(n + 1))) * n
        out["C2_star"] = 1 + num("2.84") * (num("2.2") + ln(num(n + 1))) * n
    return out


def constants_float(n: int) -> dict[str, float]:
    return _formulas(n, math.log, float)


def constants_mp(n: int, dps: int = GUARD_DPS) -> dict[str, mpmath.mpf]:
    with mpmath.workdps(dps):
        return {k: +v for k, v in _formulas(n, mpmath.log, mpmath.mpf).items()}


@dataclass(frozen=True)
class ThresholdConstants:
    n: int
    c0: float | None = None
    c1: float | None = None
    c2: float | None = None
    c1_tilde: float | None = None
    c2_tilde: float | None = None
    c0_star: float | None = None
    c1_star: float | None = None
    c2_star: float | None = None
    ceilings: dict[str, int] | None = None

    @property
    def residue(self) -> int:
        return self.n % 3

    def values(self) -> dict[str, float]:
        names = ("C0", "C1", "C2", "C1_tilde", "C2_tilde", "C0_star", "C1_star", "C2_star")
        return {k: getattr(self, k.lower()) for k in names if getattr(self, k.lower()) is not None}

    def ceiling(self, name: str) -> int:
        return self.ceilings[name]


def guarded_ceiling(n: int, name: str, value: float) -> int:
    """ceil(value), re-evaluated at high precision when value sits near an integer."""
    if abs(value - round(value)) < NEAR_INTEGER:
        precise = constants_mp(n)[name]
        return int(mpmath.ceil(precise))
    return math.ceil(value)


def threshold_constants(n: int) -> ThresholdConstants:
    if n < 6:
        raise ValueError(f"threshold constants need n >= 6, got {n}")
    values = constants_float(n)
    ceilings = {k: guarded_ceiling(n, k, v) for k, v in values.items()}
    return ThresholdConstants(n, **{k.lower(): v for k, v in values.items()}, ceilings=ceilings)


def stated_threshold(n: int) -> int:
    """The integer d at which the certificate must close: ceil(C0) for n = 0 mod 3, ceil(C~_r) otherwise."""
    tc = threshold_constants(n)
    name = {0: "C0", 1: "C1_tilde", 2: "C2_tilde"}[n % 3]
    return tc.ceiling(name)


@dataclass
class DominanceReport:
    n_from: int
    n_to: int
    star_failures: list[tuple[int, str, float, float]]
    tilde_above: list[tuple[int, str, int, int]]
    tilde_not_above: list[tuple[int, str, int, int]]

    @property
    def star_holds(self) -> bool:
        return not self.star_failures


def dominance_check(n_from: int, n_to: int) -> DominanceReport:
    """Check C*_r(n) > C_r(n) on [n_from, n_to]; also tabulate ceil(C~_r) against ceil(C_r).

    The tilde comparison is informational only.
    """
    if not 6 <= n_from <= n_to <= 10**6:
        raise ValueError(f"range must lie within [6, 10^6], got [{n_from}, {n_to}]")
    fails, above, not_above = [], [], []
    for n in range(n_from, n_to + 1):
        tc = threshold_constants(n)
        v = tc.values()
        r = n % 3
        base, star = f"C{r}", f"C{r}_star"
        if not v[star] > v[base]:
            fails.append((n, base, v[star], v[base]))
        if r:
            tilde = f"C{r}_tilde"
            entry = (n, tilde, tc.ceilings[tilde], tc.ceilings[base])
            (above if v[tilde] > tc.ceilings[base] else not_above).append(entry)
    return DominanceReport(n_from, n_to, fails, above, not_above)


FIGURE2_HEADER = ("n", "C1", "C2", "C1_tilde", "C2_tilde")


def figure2_data(n_from: int, n_to: int, step: int = 1) -> list[tuple]:
    """Rows (n, C1, C2, C1_tilde, C2_tilde) with None where the residue does not apply."""
    if n_from < 6 or n_to < n_from or step < 1:
        raise ValueError(f"bad range: from={n_from} to={n_to} step={step}")
    rows = []
    for n in range(n_from, n_to + 1, step):
        v = constants_float(n)
        rows.append((n, *(v.get(k) for k in FIGURE2_HEADER[1:])))
    return rows


def figure2_csv(rows: list[tuple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIGURE2_HEADER)
    for row in rows:
        w.writerow([row[0], *("" if x is None else repr(x) for x in row[1:])])
    return buf.getvalue()
