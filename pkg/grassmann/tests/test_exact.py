from fractions import Fraction

import numpy as np
import pytest

from grassmann.exact import (IntPolynomial, bracket, bracket_index, chi,
                             gaussian_binomial, is_prime_power, plain)


def test_bracket():
    assert bracket(0, 2) == 0
    assert bracket(1, 5) == 1
    assert bracket(3, 2) == 7
    assert bracket(4, 3) == 40
    with pytest.raises(ValueError):
        bracket(-1, 2)
    with pytest.raises(ValueError):
        bracket(2, 1)


def test_bracket_index_inverts_bracket():
    for b in (2, 3, 7):
        for j in range(8):
            assert bracket_index(bracket(j, b), b) == j
    assert bracket_index(5, 2) is None


@pytest.mark.parametrize('n, m, q, expected', [
    (4, 2, 2, 35),
    (4, 2, 3, 130),
    (6, 3, 2, 1395),
    (5, 0, 4, 1),
    (5, 5, 4, 1),
    (3, 1, 2, 7),
])
def test_gaussian_binomial(n, m, q, expected):
    assert gaussian_binomial(n, m, q) == expected


def test_gaussian_binomial_symmetry_and_bignum():
    assert gaussian_binomial(10, 3, 7) == gaussian_binomial(10, 7, 7)
    big = gaussian_binomial(40, 20, 16)
    assert big > 2 ** 64
    assert isinstance(big, int)


def test_gaussian_binomial_out_of_range():
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(ValueError):
        gaussian_binomial(3, -1, 2)


@pytest.mark.parametrize('q, expected', [
    (2, 9), (3, 8), (4, 7), (5, 7), (6, 7), (7, 6), (8, 6), (9, 6), (10, 6),
    (16, 6), (100, 6),
])
def test_chi(q, expected):
    assert chi(q) == expected


def test_chi_needs_q_at_least_2():
    with pytest.raises(ValueError):
        chi(1)


def test_is_prime_power():
    assert is_prime_power(2) == (2, 1)
    assert is_prime_power(16) == (2, 4)
    assert is_prime_power(9) == (3, 2)
    assert is_prime_power(6) is None
    assert is_prime_power(1) is None


def test_polynomial_roots():
    poly = IntPolynomial.from_roots((11, -1, -3, 11), leading=-3)
    assert poly.degree == 4
    assert poly.leading == -3
    assert poly.integer_roots() == [-3, -1, 11, 11]
    assert poly(11) == 0
    assert poly(Fraction(1, 2)) != 0


def test_polynomial_without_integer_roots():
    # z^2 + 1
    assert IntPolynomial((1, 0, 1)).integer_roots() == []
    assert IntPolynomial((0, 0, 2)).integer_roots() == [0, 0]
    with pytest.raises(ValueError):
        IntPolynomial(()).integer_roots()


def test_polynomial_trailing_zeros_dropped():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert str(IntPolynomial((-1, 0, 1))) == '1*z^2 + -1'


def test_plain():
    value = {1: Fraction(3, 2), 'a': (np.int64(4), Fraction(6, 3)),
             'm': np.arange(3)}
    assert plain(value) == {'1': '3/2', 'a': [4, 2], 'm': [0, 1, 2]}


@pytest.mark.parametrize('b', range(2, 17))
def test_bracket_sums_a_geometric_series(b):
    for j in range(65):
        assert bracket(j, b) * (b - 1) + 1 == b ** j


@pytest.mark.parametrize('q', [2, 3, 4, 5, 7])
def test_gaussian_binomial_q_pascal(q):
    for n in range(2, 13):
        for m in range(1, n):
            assert gaussian_binomial(n, m, q) == \
                gaussian_binomial(n - 1, m - 1, q) + \
                q ** m * gaussian_binomial(n - 1, m, q)
