import math

import pytest

from altruns.algebra import Polynomial
from altruns.errors import UnsupportedIndex
from altruns.families import family_poly, special_number
from altruns.oracles import oracle_row


def coeffs(family, n):
    return family_poly(family, n).integer_coeffs()


def test_known_r_rows():
    assert coeffs("R", 2) == [0, 2]
    assert coeffs("R", 3) == [0, 2, 4]
    assert coeffs("R", 4) == [0, 2, 12, 10]
    assert coeffs("R", 5) == [0, 2, 28, 58, 32]


def test_known_phat_rows():
    assert coeffs("PHAT", 2) == [1, 1]
    assert coeffs("PHAT", 3) == [1, 5]
    assert coeffs("PHAT", 4) == [1, 18, 5]
    assert coeffs("PHAT", 5) == [1, 58, 61]


def test_derivative_polys_by_hand():
    # Q_1 = 1+x^2, Q_2 = 2x+2x^3, Q_3 = (1+x^2)(2+6x^2)
    assert coeffs("Q", 3) == [2, 0, 8, 0, 6]
    assert coeffs("QHAT", 2) == [1, 0, 2]


def test_rhat2():
    assert coeffs("RHAT", 2) == [0, 1, 3]


def test_conventions():
    assert family_poly("R", 1) == Polynomial([1])
    assert family_poly("Q", 0) == Polynomial([0, 1])
    assert family_poly("QHAT", 0) == Polynomial([1])
    with pytest.raises(UnsupportedIndex):
        family_poly("R", 0)
    with pytest.raises(ValueError):
        family_poly("Z", 3)


@pytest.mark.parametrize("n", range(2, 10))
def test_against_symmetric_oracles(n):
    assert tuple(coeffs("R", n)) == oracle_row(n, "alt_runs").counts
    assert tuple(coeffs("P", n)) == oracle_row(n, "pk").counts
    assert tuple(coeffs("PHAT", n)) == oracle_row(n, "lpk").counts


@pytest.mark.parametrize("n", range(1, 8))
def test_against_signed_oracle(n):
    assert tuple(coeffs("RHAT", n)) == oracle_row(n, "signed_runs_up").counts


@pytest.mark.parametrize("n", range(2, 30))
def test_values_at_one(n):
    assert family_poly("R", n)(1) == math.factorial(n)
    assert family_poly("PHAT", n)(1) == math.factorial(n)
    assert family_poly("P", n)(1) == math.factorial(n)
    assert family_poly("RHAT", n)(1) == 2 ** (n - 1) * math.factorial(n)


@pytest.mark.parametrize("n", range(2, 30))
def test_degrees(n):
    assert family_poly("P", n).degree == (n - 1) // 2
    assert family_poly("PHAT", n).degree == n // 2
    assert family_poly("R", n).degree == n - 1


@pytest.mark.parametrize("n", range(0, 25))
def test_parity(n):
    q = family_poly("Q", n)
    qh = family_poly("QHAT", n)
    assert all(c == 0 for i, c in enumerate(q.coeffs) if i % 2 == n % 2)
    assert all(c == 0 for i, c in enumerate(qh.coeffs) if i % 2 != n % 2)


def test_special_numbers():
    assert [special_number("EULER", n) for n in range(6)] == [1, 1, 1, 2, 5, 16]
    assert special_number("SPRINGER", 4) == 57
    with pytest.raises(ValueError):
        special_number("BERNOULLI", 2)


@pytest.mark.parametrize("n", range(0, 8))
def test_springer_is_snake_count(n):
    assert special_number("SPRINGER", n) == oracle_row(n, "snake_count").total


@pytest.mark.parametrize("n", range(0, 10))
def test_euler_is_zigzag_count(n):
    assert special_number("EULER", n) == oracle_row(n, "zigzag_count").total
