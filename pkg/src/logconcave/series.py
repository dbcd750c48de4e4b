"""Coefficients of prod_{n>=1} (1 - q^n)^(-alpha_n) and their log-concavity.

The production path is the logarithmic-derivative recurrence

    n * p(n) = sum_{j=1..n} c_j * p(n - j),   c_j = sum_{t | j} t * alpha_t,

which for alpha_t = t^(d-1) gives c_j = sigma_d(j).  ``oracle_row`` expands the
exponential of the logarithm directly over partitions and exists only to
cross-check the recurrence on small inputs.
"""

from __future__ import annotations

import enum
import logging
import operator
import os
import threading
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path

log = logging.getLogger(__name__)

ORACLE_CAP = 24
CLOSED_FORM_MAX_N = 8


# ---------------------------------------------------------------------------
# divisor sums


def sigma(n: int, d: int) -> int:
    """Sum of t**d over the positive divisors t of n."""
    if n < 1:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    if d < 1:
        raise ValueError(f"sigma needs d >= 1, got {d}")
    total = 0
    t = 1
    while t * t <= n:
        if n % t == 0:
            total += t**d
            u = n // t
            if u != t:
                total += u**d
        t += 1
    return total


def sigma_table(n_max: int, d: int) -> list[int]:
    """``[sigma(1, d), ..., sigma(n_max, d)]`` by a divisor sieve."""
    if n_max < 1:
        raise ValueError(f"sigma_table needs n_max >= 1, got {n_max}")
    if d < 1:
        raise ValueError(f"sigma_table needs d >= 1, got {d}")
    acc = [0] * (n_max + 1)
    for t in range(1, n_max + 1):
        tp = t**d
        for m in range(t, n_max + 1, t):
            acc[m] += tp
    return acc[1:]


# ---------------------------------------------------------------------------
# exponent sequences and rows


@dataclass(frozen=True, eq=False)
class ExponentSequence:
    """Exponent rule n -> alpha_n.

    Use :meth:`power` for alpha_n = n**(d-1) and :meth:`custom` for anything
    else.  A custom rule is either a callable or a sequence ``[alpha_1,
    alpha_2, ...]``.
    """

    d: int | None = None
    rule: Callable[[int], int] | Sequence[int] | None = None

    def __post_init__(self):
        if (self.d is None) == (self.rule is None):
            raise ValueError("exactly one of d or rule must be given")
        if self.d is not None and (not isinstance(self.d, int) or self.d < 1):
            raise ValueError(f"power family needs an integer d >= 1, got {self.d!r}")

    def __eq__(self, other):
        if not isinstance(other, ExponentSequence):
            return NotImplemented
        if self.d is not None or other.d is not None:
            return self.d == other.d
        if callable(self.rule) or callable(other.rule):
            return self.rule is other.rule
        return self.rule == other.rule

    def __hash__(self):
        if self.d is not None:
            return hash(("power", self.d))
        return hash(("custom", id(self.rule) if callable(self.rule) else self.rule))

    @classmethod
    def power(cls, d: int) -> ExponentSequence:
        return cls(d=d)

    @classmethod
    def custom(cls, rule: Callable[[int], int] | Sequence[int]) -> ExponentSequence:
        if not callable(rule):
            rule = tuple(rule)
        return cls(rule=rule)

    @property
    def is_power(self) -> bool:
        return self.d is not None

    def __call__(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"exponent index must be >= 1, got {n}")
        if self.d is not None:
            return n ** (self.d - 1)
        if callable(self.rule):
            value = self.rule(n)
        else:
            if n > len(self.rule):
                raise ValueError(
                    f"custom exponent sequence has {len(self.rule)} terms, alpha_{n} requested"
                )
            value = self.rule[n - 1]
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"alpha_{n} must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"alpha_{n} = {value} is negative")
        return value

    def describe(self) -> str:
        return f"power(d={self.d})" if self.is_power else "custom"

    def log_coefficients(self, n_max: int) -> list[int]:
        """``[c_0, c_1, ..., c_n_max]`` with c_j = sum_{t | j} t * alpha_t (c_0 = 0)."""
        if n_max < 1:
            return [0] * (n_max + 1)
        if self.is_power:
            return [0, *sigma_table(n_max, self.d)]
        c = [0] * (n_max + 1)
        for t in range(1, n_max + 1):
            w = t * self(t)
            if w:
                for m in range(t, n_max + 1, t):
                    c[m] += w
        return c


@dataclass(frozen=True)
class CoeffRow:
    """Exact coefficients p(0..n_max) of one product."""

    seq: ExponentSequence
    coeffs: tuple[int, ...]
    method: str = "recurrence"

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncated(self, n_max: int) -> CoeffRow:
        if n_max > self.n_max:
            raise ValueError(f"row covers n <= {self.n_max}, cannot truncate to {n_max}")
        return CoeffRow(self.seq, self.coeffs[: n_max + 1], self.method)


def _extend(coeffs: list[int], c: Sequence[int], n_max: int) -> list[int]:
    mul = operator.mul
    for n in range(len(coeffs), n_max + 1):
        acc = sum(map(mul, c[1 : n + 1], reversed(coeffs)))
        q, r = divmod(acc, n)
        if r:
            raise ArithmeticError(f"recurrence sum at n={n} is not divisible by {n}")
        coeffs.append(q)
    return coeffs


def compute_row(
    seq: ExponentSequence, n_max: int, prefix: Sequence[int] | None = None
) -> CoeffRow:
    """Coefficients p(0..n_max) by the log-derivative recurrence.

    ``prefix`` may hold already known leading coefficients of the same
    product; only the missing tail is computed.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if prefix is not None and len(prefix) > n_max:
        return CoeffRow(seq, tuple(prefix[: n_max + 1]))
    c = seq.log_coefficients(n_max)
    coeffs = list(prefix) if prefix else [1]
    return CoeffRow(seq, tuple(_extend(coeffs, c, n_max)))


def partitions(n: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first, *rest)


def oracle_row(seq: ExponentSequence, n_max: int, cap: int = ORACLE_CAP) -> CoeffRow:
    """Coefficients from the exponential sum over partitions (slow, exact).

    p(n) = sum over multisets {m_1..m_k} of n of prod_m (c_m/m)^{k_m} / k_m!,
    which is the ordered-composition sum with its 1/k! weight collapsed.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if n_max > cap:
        raise ValueError(
            f"oracle_row enumerates partitions and is capped at n_max={cap}; "
            f"use compute_row for n_max={n_max}"
        )
    c = seq.log_coefficients(n_max)
    ratio = [Fraction(0)] + [Fraction(c[m], m) for m in range(1, n_max + 1)]
    out = [1]
    for n in range(1, n_max + 1):
        total = Fraction(0)
        for part in partitions(n):
            term = Fraction(1)
            for m, k in Counter(part).items():
                term *= ratio[m] ** k / factorial(k)
            total += term
        if total.denominator != 1:
            raise ArithmeticError(f"oracle sum at n={n} is not an integer: {total}")
        out.append(int(total))
    return CoeffRow(seq, tuple(out), method="oracle")


def closed_form_pd(n: int, d: int) -> int:
    """p_d(n) for n <= 8 from the explicit step formulas p_d(n) - p_d(n-1)."""
    if not 0 <= n <= CLOSED_FORM_MAX_N:
        raise ValueError(f"closed forms exist only for 0 <= n <= {CLOSED_FORM_MAX_N}, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    e = d - 1
    F = Fraction
    steps = {
        2: [(1, 2)],
        3: [(1, 3)],
        4: [(F(3, 2), 4), (F(1, 2), 2)],
        5: [(1, 5), (1, 6)],
        6: [(F(1, 2), 9), (F(7, 6), 8), (1, 6), (F(1, 2), 4), (F(1, 2), 3), (F(1, 3), 2)],
        7: [(F(3, 2), 12), (1, 10), (1, 7), (F(1, 2), 6)],
        8: [
            (F(1, 2), 18), (F(25, 24), 16), (1, 15), (1, 12),
            (F(7, 4), 8), (F(1, 2), 6), (F(23, 24), 4), (F(1, 4), 2),
        ],
    }
    value = F(1)
    for m in range(2, n + 1):
        value += sum(F(coef) * base**e for coef, base in steps[m])
    if value.denominator != 1:
        raise ArithmeticError(f"closed form for p_{d}({n}) is not an integer: {value}")
    return int(value)


# ---------------------------------------------------------------------------
# log-concavity


class Shape(enum.Enum):
    LOG_CONCAVE = "log-concave"
    FLAT = "flat"
    STRICTLY_LOG_CONVEX = "strictly log-convex"

    @classmethod
    def of(cls, delta: int) -> Shape:
        if delta > 0:
            return cls.LOG_CONCAVE
        if delta < 0:
            return cls.STRICTLY_LOG_CONVEX
        return cls.FLAT


@dataclass(frozen=True)
class DeltaClassification:
    n: int
    d: int
    delta: int
    shape: Shape

    @property
    def is_exception(self) -> bool:
        return self.shape is Shape.STRICTLY_LOG_CONVEX


def delta_value(coeffs: Sequence[int], n: int) -> int:
    return coeffs[n] * coeffs[n] - coeffs[n - 1] * coeffs[n + 1]


def delta(d: int, n: int, row: CoeffRow | None = None) -> DeltaClassification:
    """Delta_d(n) = p_d(n)^2 - p_d(n-1) p_d(n+1) with its sign class.

    Without ``row`` the coefficients come from the shared cache.
    """
    if n < 1:
        raise ValueError(f"Delta needs n >= 1, got {n}")
    if row is None:
        row = power_row(d, n + 1)
    if row.seq != ExponentSequence.power(d):
        raise ValueError(f"row is for {row.seq.describe()}, not power(d={d})")
    if row.n_max < n + 1:
        raise ValueError(f"Delta_{d}({n}) needs the row up to n={n + 1}, row stops at {row.n_max}")
    value = delta_value(row.coeffs, n)
    shape = Shape.of(value)
    if shape is Shape.FLAT:
        log.warning("Delta_%d(%d) = 0: flat point", d, n)
    return DeltaClassification(n, d, value, shape)


def find_first_exception(n: int, d_floor: int, d_cap: int, cache: RowCache | None = None) -> int | None:
    """Least d in (d_floor, d_cap] with Delta_d(n) < 0, or None if there is none in range."""
    if d_floor > d_cap:
        raise ValueError(f"d_floor={d_floor} exceeds d_cap={d_cap}")
    cache = cache or default_cache
    for d in range(d_floor + 1, d_cap + 1):
        if delta_value(cache.get(d, n + 1).coeffs, n) < 0:
            return d
    return None


# ---------------------------------------------------------------------------
# row cache

HEADER_PREFIX = "pdrow v1"


def format_row(row: CoeffRow) -> str:
    if not row.seq.is_power:
        raise ValueError("custom rows are not persisted")
    lines = [f"{HEADER_PREFIX} kind=power d={row.seq.d} nmax={row.n_max}"]
    lines.extend(str(c) for c in row.coeffs)
    return "\n".join(lines) + "\n"


def parse_row(text: str) -> CoeffRow:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty row file")
    head = lines[0].split()
    if head[:2] != HEADER_PREFIX.split() or len(head) != 5:
        raise ValueError(f"bad row header: {lines[0]!r}")
    fields = dict(tok.split("=", 1) for tok in head[2:] if "=" in tok)
    if fields.get("kind") != "power" or set(fields) != {"kind", "d", "nmax"}:
        raise ValueError(f"bad row header: {lines[0]!r}")
    d, n_max = int(fields["d"]), int(fields["nmax"])
    body = lines[1:]
    if len(body) != n_max + 1:
        raise ValueError(f"row header says nmax={n_max} but file has {len(body)} coefficients")
    coeffs = tuple(int(x) for x in body)
    if coeffs[0] != 1:
        raise ValueError("row file does not start with p(0) = 1")
    return CoeffRow(ExponentSequence.power(d), coeffs)


def write_row(path: str | os.PathLike, row: CoeffRow) -> None:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(format_row(row))
    tmp.replace(path)


def read_row(path: str | os.PathLike) -> CoeffRow:
    return parse_row(Path(path).read_text())


class RowCache:
    """Power-family rows keyed by d, with prefix reuse.

    A cached row of length M answers any request up to M and seeds the
    recurrence beyond it.  With ``directory`` set, rows are also loaded from
    and written to ``pd_d<d>.txt`` files there.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else None
        self._rows: dict[int, CoeffRow] = {}
        self._locks: dict[int, threading.Lock] = {}
        self._guard = threading.Lock()

    def path_for(self, d: int) -> Path:
        assert self.directory is not None
        return self.directory / f"pd_d{d}.txt"

    def _lock(self, d: int) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(d, threading.Lock())

    def get(self, d: int, n_max: int) -> CoeffRow:
        row = self._rows.get(d)
        if row is not None and row.n_max >= n_max:
            return row if row.n_max == n_max else row.truncated(n_max)
        with self._lock(d):
            row = self._rows.get(d)
            if row is None and self.directory is not None and self.path_for(d).exists():
                row = read_row(self.path_for(d))
            if row is None or row.n_max < n_max:
                prefix = row.coeffs if row is not None else None
                row = compute_row(ExponentSequence.power(d), n_max, prefix)
                if self.directory is not None:
                    self.directory.mkdir(parents=True, exist_ok=True)
                    write_row(self.path_for(d), row)
            self._rows[d] = row
        return row if row.n_max == n_max else row.truncated(n_max)

    def put(self, row: CoeffRow) -> None:
        if not row.seq.is_power:
            raise ValueError("only power-family rows are cached")
        d = row.seq.d
        with self._lock(d):
            old = self._rows.get(d)
            if old is None or old.n_max < row.n_max:
                self._rows[d] = row
                if self.directory is not None:
                    self.directory.mkdir(parents=True, exist_ok=True)
                    write_row(self.path_for(d), row)

    def clear(self) -> None:
        with self._guard:
            self._rows.clear()


default_cache = RowCache()


def power_row(d: int, n_max: int, cache: RowCache | None = None) -> CoeffRow:
    """p_d(0..n_max), served from ``cache`` (the module cache by default)."""
    return (cache or default_cache).get(d, n_max)


def _power_coeffs(args: tuple[int, int]) -> tuple[int, ...]:
    d, n_max = args
    return compute_row(ExponentSequence.power(d), n_max).coeffs


def power_rows(
    ds: Iterable[int], n_max: int, jobs: int = 1, cache: RowCache | None = None
) -> dict[int, CoeffRow]:
    """Rows for several d, computed in worker processes when ``jobs > 1``."""
    cache = cache or default_cache
    ds = list(dict.fromkeys(ds))
    if jobs <= 1 or len(ds) <= 1:
        return {d: cache.get(d, n_max) for d in ds}
    missing = [d for d in ds if cache._rows.get(d) is None or cache._rows[d].n_max < n_max]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for d, coeffs in zip(missing, pool.map(_power_coeffs, [(d, n_max) for d in missing])):
            cache.put(CoeffRow(ExponentSequence.power(d), coeffs))
    return {d: cache.get(d, n_max) for d in ds}
