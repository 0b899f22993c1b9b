import pytest

from halfcube.triangle import (
    gf_coefficients,
    predicted_betti,
    strehl_identity_check,
    triangle_alternating,
    triangle_positive,
    triangle_recurrence,
)

ROWS_0_TO_6 = [
    (1,),
    (1, 1),
    (1, 3, 1),
    (1, 5, 7, 1),
    (1, 7, 17, 15, 1),
    (1, 9, 31, 49, 31, 1),
    (1, 11, 49, 111, 129, 63, 1),
]


def test_recurrence_rows_verbatim():
    table = triangle_recurrence(6)
    assert list(table.rows) == ROWS_0_TO_6


def test_row_zero_and_boundaries():
    table = triangle_recurrence(10)
    assert table.rows[0] == (1,)
    for n in range(11):
        assert table.value(n, 0) == 1
        assert table.value(n, n) == 1
        assert table.value(n, -1) == 0
        assert table.value(n, n + 1) == 0


def test_rows_are_not_palindromic():
    # guards against accidentally implementing the ordinary Pascal triangle
    table = triangle_recurrence(6)
    assert table.rows[4] != tuple(reversed(table.rows[4]))
    assert table.value(4, 1) == 7 != 15 == table.value(4, 3)


def test_alternating_sum_values():
    assert triangle_alternating(6, 3) == 111
    assert triangle_alternating(4, 1) == 7
    for n in range(21):
        assert triangle_alternating(n, n) == 1


def test_positive_sum_values():
    assert triangle_positive(5, 2) == 31
    for n in range(21):
        assert triangle_positive(n, 0) == 1


def test_all_four_routes_agree_to_20():
    table = triangle_recurrence(20)
    for n in range(21):
        for k in range(n + 1):
            v = table.value(n, k)
            assert triangle_alternating(n, k) == v
            assert triangle_positive(n, k) == v
    for k in range(21):
        coeffs = gf_coefficients(k, 20)
        for n in range(21):
            assert coeffs[n] == (table.value(n, n - k) if n >= k else 0)


def test_gf_low_k():
    assert gf_coefficients(0, 8) == [1] * 9
    assert gf_coefficients(3, 6)[6] == 111


def test_strehl_identity():
    assert strehl_identity_check(30)
    table = triangle_recurrence(20)
    assert table.value(6, 2) + table.value(6, 3) == 160 == 8 * 20
    # the k = n case forces T(n, n-1) = 2^n - 1
    for n in range(1, 21):
        assert table.value(n, n - 1) == 2**n - 1
    # and k = 1 forces T(n, 1) = 2n - 1
    for n in range(1, 21):
        assert table.value(n, 1) == 2 * n - 1


def test_predicted_betti_values_and_range():
    assert predicted_betti(4, 3) == 7
    assert predicted_betti(6, 3) == 111
    assert predicted_betti(5, 3) == 31
    for n in range(4, 10):
        assert predicted_betti(n, n) == 1
    with pytest.raises(ValueError):
        predicted_betti(5, 2)
    with pytest.raises(ValueError):
        predicted_betti(4, 5)


def test_input_validation():
    with pytest.raises(ValueError):
        triangle_recurrence(-1)
    with pytest.raises(ValueError):
        triangle_alternating(3, 4)
    with pytest.raises(ValueError):
        triangle_positive(3, -1)
    with pytest.raises(ValueError):
        gf_coefficients(-1, 5)
