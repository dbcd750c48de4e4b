import logging
import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logconcave.series import (
    CoeffRow,
    ExponentSequence,
    RowCache,
    Shape,
    closed_form_pd,
    compute_row,
    delta,
    delta_value,
    find_first_exception,
    format_row,
    oracle_row,
    parse_row,
    power_row,
    power_rows,
    read_row,
    sigma,
    sigma_table,
    write_row,
)


def divisor_power_sum(n, d):
    return sum(t**d for t in range(1, n + 1) if n % t == 0)


def euler_partitions(n_max):
    """p(0..n_max) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


# -- sigma ------------------------------------------------------------------


@pytest.mark.parametrize("d", [1, 2, 7, 30])
def test_sigma_of_one(d):
    assert sigma(1, d) == 1


def test_sigma_examples():
    assert sigma(6, 1) == 12
    assert sigma(4, 2) == divisor_power_sum(4, 2) == 21


def test_sigma_rejects_zero():
    with pytest.raises(ValueError):
        sigma(0, 1)


def test_sigma_table_examples():
    assert sigma_table(3, 1) == [1, 3, 4]
    assert sigma_table(5, 2) == [divisor_power_sum(j, 2) for j in range(1, 6)] == [1, 5, 10, 21, 26]
    assert sigma_table(1, 7) == [1]


@given(st.integers(1, 300), st.integers(1, 12))
def test_sieve_matches_direct(n_max, d):
    table = sigma_table(n_max, d)
    for j in (1, n_max, (n_max + 1) // 2):
        assert table[j - 1] == sigma(j, d) == divisor_power_sum(j, d)


# -- exponent sequences -----------------------------------------------------


def test_power_family_values():
    assert [ExponentSequence.power(1)(n) for n in range(1, 6)] == [1] * 5
    assert [ExponentSequence.power(3)(n) for n in range(1, 5)] == [1, 4, 9, 16]


def test_custom_negative_rejected_with_index():
    seq = ExponentSequence.custom([1, 2, -1, 4])
    with pytest.raises(ValueError, match="alpha_3"):
        compute_row(seq, 4)


def test_custom_callable_negative_rejected():
    seq = ExponentSequence.custom(lambda n: 5 - n)
    with pytest.raises(ValueError, match="alpha_6"):
        compute_row(seq, 8)


def test_custom_too_short():
    with pytest.raises(ValueError, match="3 terms"):
        compute_row(ExponentSequence.custom([1, 1, 1]), 5)


def test_custom_equality():
    assert ExponentSequence.custom([1, 2]) == ExponentSequence.custom((1, 2))
    assert ExponentSequence.custom([1, 2]) != ExponentSequence.power(1)
    assert ExponentSequence.power(4) == ExponentSequence.power(4)


# -- rows -------------------------------------------------------------------


@pytest.mark.parametrize(
    "d, expected",
    [
        (1, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]),
        (2, [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]),
        (3, [1, 1, 5, 14, 40, 101, 266, 649, 1593, 3765, 8813]),
    ],
)
def test_compute_row_small_table(d, expected):
    assert list(compute_row(ExponentSequence.power(d), 10).coeffs) == expected


def test_row_leading_entries():
    for d in range(1, 10):
        row = compute_row(ExponentSequence.power(d), 3)
        assert row[0] == 1 and row[1] == 1 and row.n_max == 3


def test_custom_row_first_coefficient_is_alpha1():
    row = compute_row(ExponentSequence.custom([4, 0, 2]), 3)
    assert row[0] == 1 and row[1] == 4


def test_compute_row_deterministic():
    seq = ExponentSequence.power(4)
    assert compute_row(seq, 60) == compute_row(seq, 60)


def test_compute_row_zero():
    assert compute_row(ExponentSequence.power(5), 0).coeffs == (1,)


def test_prefix_extension_matches_full():
    seq = ExponentSequence.power(3)
    head = compute_row(seq, 15).coeffs
    assert compute_row(seq, 40, prefix=head) == compute_row(seq, 40)


def test_euler_identity():
    assert list(compute_row(ExponentSequence.power(1), 200).coeffs) == euler_partitions(200)


def test_plane_partitions_by_naive_product():
    n_max = 30
    poly = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        for _ in range(k):  # multiply by 1/(1-q^k), k times
            for i in range(k, n_max + 1):
                poly[i] += poly[i - k]
    assert list(compute_row(ExponentSequence.power(2), n_max).coeffs) == poly


def test_positivity_and_monotonicity():
    for d in range(1, 12):
        c = power_row(d, 120).coeffs
        assert all(x >= 1 for x in c)
        assert all(c[n + 1] >= c[n] for n in range(1, len(c) - 1))


# -- oracle -----------------------------------------------------------------


def test_oracle_examples():
    assert list(oracle_row(ExponentSequence.power(1), 5).coeffs) == [1, 1, 2, 3, 5, 7]
    assert oracle_row(ExponentSequence.power(2), 0).coeffs == (1,)
    assert oracle_row(ExponentSequence.power(3), 8).coeffs[-1] == 1593


def test_oracle_cap():
    with pytest.raises(ValueError, match="compute_row"):
        oracle_row(ExponentSequence.power(1), 25)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 10])
def test_oracle_equivalence_power(d):
    seq = ExponentSequence.power(d)
    assert oracle_row(seq, 20).coeffs == compute_row(seq, 20).coeffs


def test_oracle_equivalence_custom():
    rng = random.Random(7)
    for _ in range(5):
        alpha = [rng.randint(0, 6) for _ in range(16)]
        seq = ExponentSequence.custom(alpha)
        assert oracle_row(seq, 16).coeffs == compute_row(seq, 16).coeffs


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=12, max_size=12))
def test_oracle_equivalence_property(alpha):
    seq = ExponentSequence.custom(alpha)
    assert oracle_row(seq, 12).coeffs == compute_row(seq, 12).coeffs


# -- closed forms -----------------------------------------------------------


def test_closed_form_examples():
    assert closed_form_pd(2, 3) == 5
    assert all(closed_form_pd(0, d) == 1 for d in (1, 2, 9))
    assert closed_form_pd(8, 2) == compute_row(ExponentSequence.power(2), 8)[8] == 160


def test_closed_form_equivalence():
    for d in range(1, 65):
        row = compute_row(ExponentSequence.power(d), 8).coeffs
        assert [closed_form_pd(n, d) for n in range(9)] == list(row)


def test_closed_form_range():
    with pytest.raises(ValueError):
        closed_form_pd(9, 2)


# -- delta ------------------------------------------------------------------


def test_delta_partition_nine():
    res = delta(1, 9, power_row(1, 10))
    assert res.delta == 30**2 - 22 * 42 == -24
    assert res.shape is Shape.STRICTLY_LOG_CONVEX and res.is_exception


@pytest.mark.parametrize("d", range(1, 30))
def test_delta_at_one_always_exception(d):
    assert delta(d, 1).shape is Shape.STRICTLY_LOG_CONVEX


def test_delta_plane_two():
    res = delta(2, 2, power_row(2, 3))
    assert res.delta == 9 - 1 * 6 == 3
    assert res.shape is Shape.LOG_CONCAVE


def test_delta_rejects_short_or_wrong_row():
    with pytest.raises(ValueError, match="needs the row"):
        delta(2, 5, power_row(2, 5))
    with pytest.raises(ValueError, match="power"):
        delta(2, 3, power_row(3, 6))
    with pytest.raises(ValueError):
        delta(2, 0)


def test_flat_delta_for_custom_row():
    # alpha = (1, 0, 0, ...) gives 1/(1-q): every coefficient is 1, so Delta vanishes
    row = compute_row(ExponentSequence.custom([1] + [0] * 9), 10)
    assert delta_value(row.coeffs, 5) == 0
    assert Shape.of(0) is Shape.FLAT


def test_flat_warning_from_delta(caplog):
    flat = CoeffRow(ExponentSequence.power(1), (1, 1, 1, 1))
    with caplog.at_level(logging.WARNING, logger="logconcave.series"):
        res = delta(1, 2, flat)
    assert res.shape is Shape.FLAT
    assert "flat" in caplog.text


def test_find_first_exception():
    assert find_first_exception(7, 3, 20) == 11
    assert find_first_exception(8, 3, 20) == 9
    assert find_first_exception(6, 3, 200) is None
    assert find_first_exception(7, 3, 10) is None
    with pytest.raises(ValueError):
        find_first_exception(7, 10, 3)


# -- cache ------------------------------------------------------------------


def test_cache_prefix_reuse(fresh_cache):
    short = fresh_cache.get(5, 10)
    long = fresh_cache.get(5, 30)
    assert long.coeffs[:11] == short.coeffs
    assert fresh_cache.get(5, 20).coeffs == long.coeffs[:21]
    assert fresh_cache._rows[5].n_max == 30


def test_cache_file_round_trip(tmp_path):
    row = compute_row(ExponentSequence.power(4), 50)
    path = tmp_path / "row.txt"
    write_row(path, row)
    text = path.read_text()
    assert text.splitlines()[0] == "pdrow v1 kind=power d=4 nmax=50"
    assert len(text.splitlines()) == 52
    assert read_row(path) == row
    assert format_row(read_row(path)) == text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "pdrow v2 kind=power d=1 nmax=1\n1\n1\n",
        "pdrow v1 kind=custom d=1 nmax=1\n1\n1\n",
        "pdrow v1 kind=power d=1 nmax=3\n1\n1\n2\n",
        "pdrow v1 kind=power d=1 nmax=1\n1\n1\n2\n",
    ],
)
def test_cache_file_validation(text):
    with pytest.raises(ValueError):
        parse_row(text)


def test_custom_rows_not_persisted():
    with pytest.raises(ValueError):
        format_row(compute_row(ExponentSequence.custom([1, 2]), 2))


def test_disk_cache_reload_identical(tmp_path):
    first = RowCache(tmp_path).get(6, 40)
    again = RowCache(tmp_path)
    assert again.path_for(6).exists()
    assert again.get(6, 40) == first == compute_row(ExponentSequence.power(6), 40)
    assert again.get(6, 60) == compute_row(ExponentSequence.power(6), 60)
    assert read_row(again.path_for(6)).n_max == 60


def test_concurrent_cache_access(fresh_cache):
    results = {}

    def work(d, n):
        results[d, n] = fresh_cache.get(d, n).coeffs

    threads = [threading.Thread(target=work, args=(d, n)) for d in (2, 3, 4) for n in (30, 60, 90)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for (d, n), coeffs in results.items():
        assert coeffs == compute_row(ExponentSequence.power(d), n).coeffs


def test_power_rows_parallel_matches_serial():
    serial = power_rows(range(1, 6), 40, jobs=1, cache=RowCache())
    parallel = power_rows(range(1, 6), 40, jobs=2, cache=RowCache())
    assert serial == parallel
