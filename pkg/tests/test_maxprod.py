from collections import Counter
from math import prod

import pytest

from logconcave.maxprod import (
    max_product_closed,
    max_witness_multiplicity,
    product_spectrum,
    second_max_product_closed,
)
from logconcave.series import partitions


def brute_products(n):
    """value -> sorted partitions, by exhaustive enumeration (no pruning)."""
    out = {}
    for part in partitions(n):
        out.setdefault(prod(part), []).append(part)
    return out


def test_max_product_examples():
    assert max_product_closed(6) == 9
    assert max_product_closed(8) == 18
    assert max_product_closed(10) == 36 == max(brute_products(10))


def test_max_product_rejects_small():
    with pytest.raises(ValueError):
        max_product_closed(1)


def test_second_max_examples():
    assert second_max_product_closed(8) == 16
    assert second_max_product_closed(11) == 48 == sorted(brute_products(11))[-2]
    assert second_max_product_closed(14) == 144 == sorted(brute_products(14))[-2]


@pytest.mark.parametrize("n", [7, 9, 10, 5])
def test_second_max_rejects_other_residues(n):
    with pytest.raises(ValueError):
        second_max_product_closed(n)


def test_spectrum_examples():
    assert [r.value for r in product_spectrum(8, 3)] == [18, 16, 15]
    (rec,) = product_spectrum(2, 1)
    assert rec.value == 2 and rec.witnesses == ((2,),)
    assert [r.value for r in product_spectrum(11, 2)] == [54, 48]


def test_spectrum_bounds():
    with pytest.raises(ValueError):
        product_spectrum(61, 1)
    with pytest.raises(ValueError):
        product_spectrum(10, 0)


@pytest.mark.parametrize("n", range(2, 31))
def test_spectrum_matches_brute_force(n):
    brute = brute_products(n)
    values = sorted(brute, reverse=True)[:4]
    spec = product_spectrum(n, 4)
    assert [r.value for r in spec] == values
    for rec in spec:
        assert sorted(rec.witnesses) == sorted(brute[rec.value])


def test_closed_forms_against_spectrum_to_60():
    for n in range(2, 61):
        spec = product_spectrum(n, 2)
        assert spec[0].value == max_product_closed(n)
        if n >= 8 and n % 3 == 2:
            assert spec[1].value == second_max_product_closed(n)


def test_witnesses_sum_and_multiply():
    for n in range(2, 61):
        for rec in product_spectrum(n, 3):
            assert rec.witnesses
            assert len(set(rec.witnesses)) == len(rec.witnesses)
            for w in rec.witnesses:
                assert sum(w) == n and prod(w) == rec.value


def test_maximizer_structure():
    for n in range(2, 61):
        for w in product_spectrum(n, 1)[0].witnesses:
            c = Counter(w)
            if n >= 2 and n != 2 and n != 3:
                assert set(c) <= {2, 3, 4}, w
            assert c[2] <= 2 and c[4] <= 1
            assert not (c[2] and c[4])


def test_witness_multiplicity_examples():
    assert max_witness_multiplicity(7) == 2
    assert max_witness_multiplicity(6) == 1
    assert max_witness_multiplicity(4) == 2
    assert max_witness_multiplicity(4, oracle=True) == 2


def test_witness_multiplicity_closed_vs_oracle():
    for n in range(2, 61):
        assert max_witness_multiplicity(n) == max_witness_multiplicity(n, oracle=True)
