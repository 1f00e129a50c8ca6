import random

import pytest

from phifib import (
    OpCounters,
    SymFibMatrix,
    digit_count,
    fib_fast_doubling,
    fib_float,
    fib_iterative,
    fib_lucas_linear,
    fib_matrix,
    fib_pair_fast,
    float_breakdown,
    float_max_n,
    lucas,
    mat_mul_M,
    mat_pow_M,
    mat_square,
)

from oracles import bitlen, fib_digits_closed_form, fib_lucas_table, fib_mod

F, L = fib_lucas_table(2000)


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (8, 21)])
def test_fib_iterative(n, expected):
    assert fib_iterative(n) == expected


@pytest.mark.parametrize("n, expected", [(0, (0, 2)), (3, (2, 4)), (8, (21, 47))])
def test_fib_lucas_linear(n, expected):
    assert fib_lucas_linear(n) == expected


@pytest.mark.parametrize("n, expected", [(7, (13, 29)), (0, (0, 2))])
def test_fib_pair_fast(n, expected):
    assert fib_pair_fast(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (8, 21), (10, 55)])
def test_fib_fast_doubling(n, expected):
    assert fib_fast_doubling(n) == expected


def test_fast_doubling_counts_per_step():
    c = OpCounters()
    fib_fast_doubling(1000, c)
    assert (c.squarings, c.mults) == (2 * bitlen(1000), bitlen(1000))


@pytest.mark.parametrize(
    "x, expected", [((1, 1, 0), (2, 1, 1)), ((2, 1, 1), (3, 2, 1)), ((1, 0, 1), (1, 1, 0))]
)
def test_mat_mul_M(x, expected):
    assert tuple(mat_mul_M(SymFibMatrix(*x))) == expected


def test_mat_mul_M_rejects_non_power():
    with pytest.raises(AssertionError):
        mat_mul_M(SymFibMatrix(5, 1, 1))


@pytest.mark.parametrize(
    "x, expected", [((1, 0, 1), (1, 0, 1)), ((1, 1, 0), (2, 1, 1)), ((2, 1, 1), (5, 3, 2))]
)
def test_mat_square(x, expected):
    c = OpCounters()
    assert tuple(mat_square(SymFibMatrix(*x), c)) == expected
    assert (c.squarings, c.mults) == (3, 2)


@pytest.mark.parametrize("n, expected", [(1, 1), (8, 21), (0, 0)])
def test_fib_matrix(n, expected):
    assert fib_matrix(n) == expected


def test_matrix_powers_keep_the_sum_condition():
    for n in range(1, 500):
        a, b, c = mat_pow_M(n)
        assert a == b + c
        assert (a, b, c) == (F[n + 1], F[n], F[n - 1])


@pytest.mark.parametrize("n, g, rounded", [(4, 3.0652, 3), (0, 0.4472, 0), (7, 12.9846, 13)])
def test_fib_float_table_rows(n, g, rounded):
    est = fib_float(n)
    assert est.g == pytest.approx(g, abs=5e-5)
    assert est.rounded == rounded
    assert est.exact


def test_fib_float_range_error_names_max():
    top = float_max_n()
    assert top == 1474
    fib_float(top)
    with pytest.raises(OverflowError, match=str(top)):
        fib_float(top + 1)


def test_float_breakdown():
    assert float_breakdown(8) is None
    assert float_breakdown(70) is None
    n = float_breakdown(200)
    assert n is not None and 71 <= n <= 200
    assert not fib_float(n).exact


@pytest.mark.parametrize("n, expected", [(0, 2), (5, 11), (7, 29)])
def test_lucas(n, expected):
    assert lucas(n) == expected


def test_negative_index_rejected():
    for fn in (fib_iterative, fib_lucas_linear, fib_pair_fast, fib_fast_doubling, fib_matrix, fib_float):
        with pytest.raises(ValueError):
            fn(-1)


def test_all_exact_algorithms_agree_small():
    for n in range(2001):
        assert fib_pair_fast(n)[0] == fib_fast_doubling(n) == fib_matrix(n) == F[n]
    for n in range(2001):
        assert fib_lucas_linear(n) == (F[n], L[n])


def test_fast_algorithms_agree_large():
    rng = random.Random(1)
    for n in rng.sample(range(2000, 10**6), 20):
        fib_n, _ = fib_pair_fast(n)
        assert fib_n == fib_fast_doubling(n) == fib_matrix(n)
    n = 123_457
    assert fib_pair_fast(n)[0] % 10**9 == fib_mod(n, 10**9)


def test_lucas_linear_e_sequence_is_fibonacci_like():
    e = [fib_lucas_linear(n)[1] for n in range(2001)]
    assert all(e[n] == e[n - 1] + e[n - 2] for n in range(2, 2001))


def test_cross_identity_f2n():
    for n in range(1001):
        fib_n, lucas_n = fib_pair_fast(n)
        assert fib_n * lucas_n == F[2 * n]


def test_norm_identity():
    for n in range(2001):
        fib_n, lucas_n = fib_pair_fast(n)
        assert lucas_n**2 - 5 * fib_n**2 == 4 * (-1) ** n


def test_doubling_formulas_against_oracle():
    for n in range(1, 1001):
        fn, fm = fib_iterative(n), fib_iterative(n - 1)
        assert fn * fn + fm * fm == F[2 * n - 1]
        assert (2 * fm + fn) * fn == F[2 * n]


def test_float_agrees_to_70():
    assert all(fib_float(n).rounded == F[n] for n in range(71))


def test_million_digit_count_and_tail():
    fib_n, _ = fib_pair_fast(10**6)
    assert digit_count(fib_n) == fib_digits_closed_form(10**6) == 208988
    assert fib_n % 10**9 == 242546875
