import pytest
from hypothesis import given
import hypothesis.strategies as st

from dnacodes.series import (
    BiSeries,
    TransferMatrix,
    TruncatedSeries,
    run_polynomial,
    weighted_run_polynomial,
)

small_poly = st.lists(st.integers(-9, 9), min_size=1, max_size=8)


def test_univariate_basics():
    f = TruncatedSeries([1, 2, 3], 4)
    assert f.coefficient(1) == 2
    assert f.coefficient(4) == 0
    with pytest.raises(ValueError):
        f.coefficient(5)


def test_univariate_geometric_series():
    x = TruncatedSeries([0, 1], 10)
    inv = x.quasi_inverse()
    assert inv.coeffs == (1,) * 11  # 1/(1-x)


def test_quasi_inverse_needs_zero_constant():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1], 3).quasi_inverse()


@given(small_poly, small_poly, small_poly)
def test_univariate_distributive(a, b, c):
    n = 10
    fa, fb, fc = (TruncatedSeries(v, n) for v in (a, b, c))
    assert fa * (fb + fc) == fa * fb + fa * fc


@given(small_poly)
def test_univariate_quasi_inverse_identity(coeffs):
    n = 9
    f = TruncatedSeries([0] + coeffs, n)  # force f(0) = 0
    g = f.quasi_inverse()
    one = TruncatedSeries([1], n)
    assert (one - f) * g == one


def test_biseries_terms_and_extraction():
    f = BiSeries.from_terms({(1, 1): 2, (3, 0): 5}, 4)
    assert f.coefficient(1, 1) == 2
    assert f.coefficient(3, 0) == 5
    assert f.coefficient(2, 2) == 0
    with pytest.raises(ValueError):
        f.coefficient(5, 0)


def test_biseries_product_matches_hand_expansion():
    # (xy + x)(x + x^2) = x^2 y + x^3 y + x^2 + x^3
    f = BiSeries.from_terms({(1, 1): 1, (1, 0): 1}, 3)
    g = BiSeries.from_terms({(1, 0): 1, (2, 0): 1}, 3)
    h = f * g
    assert h.coefficient(2, 1) == 1
    assert h.coefficient(3, 1) == 1
    assert h.coefficient(2, 0) == 1
    assert h.coefficient(3, 0) == 1


def test_biseries_quasi_inverse_identity():
    f = BiSeries.from_terms({(1, 1): 1, (2, 0): 3, (2, 2): -2}, 8)
    g = f.quasi_inverse()
    one = BiSeries.from_terms({(0, 0): 1}, 8)
    assert (one - f) * g == one


def test_biseries_scalar_multiplication():
    f = BiSeries.from_terms({(1, 1): 1}, 2)
    assert (3 * f).coefficient(1, 1) == 3


def test_run_polynomials():
    t = run_polynomial(3, 5)
    t1 = weighted_run_polynomial(3, 5)
    assert [t.coefficient(k, 0) for k in range(1, 4)] == [1, 1, 1]
    assert [t1.coefficient(k, k) for k in range(1, 4)] == [1, 1, 1]
    assert t1.coefficient(2, 1) == 0


def test_transfer_matrix_structure():
    d = TransferMatrix.build(2, 6)
    a0 = run_polynomial(2, 6)
    a1 = weighted_run_polynomial(2, 6)
    for i in range(4):
        assert d.entries[i][i].is_zero()
        for j in range(4):
            if i != j:
                assert d.entries[i][j] == (a0 if i < 2 else a1)


def _matrix_power_entry_sum(m: int, n: int) -> BiSeries:
    """Independent check: sum entries of D + D^2 + ... + D^n by direct products."""
    d = TransferMatrix.build(m, n)
    zero = BiSeries([], n)
    one = BiSeries.from_terms({(0, 0): 1}, n)
    power = [[one if i == j else zero for j in range(4)] for i in range(4)]
    total = zero
    for _ in range(n):
        power = [
            [
                sum(
                    (power[i][k] * d.entries[k][j] for k in range(4)),
                    start=zero,
                )
                for j in range(4)
            ]
            for i in range(4)
        ]
        for row in power:
            for entry in row:
                total = total + entry
    return total


@pytest.mark.parametrize("m,n", [(1, 4), (2, 5), (3, 6)])
def test_cumulative_entry_sum_matches_direct_powers(m, n):
    fast = TransferMatrix.build(m, n).cumulative_entry_sum()
    assert fast == _matrix_power_entry_sum(m, n)


def test_cumulative_entry_sum_hand_case():
    # m=1, length 2: the doubly-weighted path count is 3 * (2, 8, 2) by weight.
    acc = TransferMatrix.build(1, 2).cumulative_entry_sum()
    assert acc.row(2) == (6, 24, 6)


@pytest.mark.parametrize("m", (1, 2, 3))
def test_entry_sum_always_divisible_by_three(m):
    acc = TransferMatrix.build(m, 8).cumulative_entry_sum()
    for d in range(1, 9):
        assert all(c % 3 == 0 for c in acc.row(d))
