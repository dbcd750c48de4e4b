"""Largest products m_1 * ... * m_k over partitions m_1 + ... + m_k = n."""

from __future__ import annotations

import enum
from dataclasses import dataclass

ENUMERATION_CAP = 60


class Rank(enum.IntEnum):
    MAX = 1
    SECOND_MAX = 2
    THIRD_MAX = 3


@dataclass(frozen=True)
class PartitionProductRecord:
    n: int
    rank: int
    value: int
    witnesses: tuple[tuple[int, ...], ...]


def max_product_closed(n: int) -> int:
    if n < 2:
        raise ValueError(f"max product needs n >= 2, got {n}")
    r = n % 3
    if r == 0:
        return 3 ** (n // 3)
    if r == 1:
        return 4 * 3 ** ((n - 4) // 3)
    return 2 * 3 ** ((n - 2) // 3)


def second_max_product_closed(n: int) -> int:
    """Second largest product value for n >= 8, n = 2 mod 3."""
    if n < 8 or n % 3 != 2:
        raise ValueError(f"second max product is known for n >= 8 with n = 2 mod 3, got {n}")
    return 16 * 3 ** ((n - 8) // 3)


def _best_products(n: int) -> list[int]:
    # best[r] bounds the product of any partition of r (parts of size 1 allowed)
    best = [1] * (n + 1)
    for r in range(2, n + 1):
        best[r] = max_product_closed(r)
    return best


def product_spectrum(n: int, top_k: int = 1, cap: int = ENUMERATION_CAP) -> list[PartitionProductRecord]:
    """The ``top_k`` largest distinct products over partitions of n, with all witnesses.

    Partitions are walked with non-increasing parts; a branch is dropped as
    soon as its best possible completion falls below the current k-th value.
    """
    if n < 2:
        raise ValueError(f"product spectrum needs n >= 2, got {n}")
    if n > cap:
        raise ValueError(f"product spectrum enumerates partitions and is capped at n={cap}, got {n}")
    if top_k < 1:
        raise ValueError(f"top_k must be >= 1, got {top_k}")

    best = _best_products(n)
    found: dict[int, list[tuple[int, ...]]] = {}
    floor = 0  # k-th largest value seen so far, 0 while fewer than k values

    def record(parts: tuple[int, ...], value: int) -> None:
        nonlocal floor
        if value < floor:
            return
        found.setdefault(value, []).append(parts)
        if len(found) > top_k:
            del found[min(found)]
        if len(found) == top_k:
            floor = min(found)

    def walk(remaining: int, largest: int, parts: tuple[int, ...], product: int) -> None:
        if remaining == 0:
            record(parts, product)
            return
        if product * best[remaining] < floor:
            return
        for part in range(min(remaining, largest), 0, -1):
            walk(remaining - part, part, parts + (part,), product * part)

    walk(n, n, (), 1)
    values = sorted(found, reverse=True)
    return [
        PartitionProductRecord(n, rank, v, tuple(sorted(found[v], reverse=True)))
        for rank, v in enumerate(values, 1)
    ]


def max_witness_multiplicity(n: int, oracle: bool = False) -> int:
    """Number of distinct partitions of n that reach the maximal product.

    Closed rule: two for n = 1 mod 3 (a 4 or two 2s beside the 3s), one otherwise.
    """
    if n < 2:
        raise ValueError(f"max product needs n >= 2, got {n}")
    if oracle:
        return len(product_spectrum(n, 1)[0].witnesses)
    return 2 if n % 3 == 1 else 1
