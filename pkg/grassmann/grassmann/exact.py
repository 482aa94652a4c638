"""
Exact integer and rational arithmetic shared by the whole toolkit.

Python integers are unbounded, so they play the role of BigInt directly;
fractions.Fraction is the BigRat (always in lowest terms, positive
denominator). Nothing in here ever touches a float.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import Poly, divisors, factorint, symbols

logger = logging.getLogger(__name__)

zeta = symbols('zeta')


def bracket(j, b):
    """
    The q-number [j 1]_b = 1 + b + ... + b^(j-1) = (b^j - 1)/(b - 1).

    bracket(0, b) is the empty sum, 0.

    :param j: non-negative integer
    :param b: integer base, at least 2
    :return: int
    """
    if j < 0:
        raise ValueError('bracket needs j >= 0, got {}'.format(j))
    if b < 2:
        raise ValueError('bracket needs b >= 2, got {}'.format(b))
    return (b ** j - 1) // (b - 1)


@lru_cache(maxsize=4096)
def gaussian_binomial(n, m, q):
    """
    The q-ary Gaussian binomial coefficient [n m]_q, i.e. the number of
    m-dimensional subspaces of an n-dimensional space over GF(q).

    The numerator product is formed first and then divided exactly by the
    denominator product; divisibility is asserted.

    :param n: dimension of the ambient space
    :param m: dimension of the subspaces, 0 <= m <= n
    :param q: integer at least 2
    :return: int
    """
    if m < 0 or m > n:
        raise ValueError(
            'gaussian_binomial needs 0 <= m <= n, got n={}, m={}'.format(n, m))
    if q < 2:
        raise ValueError('gaussian_binomial needs q >= 2, got {}'.format(q))
    numerator = 1
    denominator = 1
    for i in range(m):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    value, remainder = divmod(numerator, denominator)
    assert remainder == 0, 'inexact Gaussian binomial [{} {}]_{}'.format(n, m, q)
    return value


def chi(q):
    """
    Smallest diameter from which J_q(2D,D) is known to be determined by its
    intersection numbers.
    """
    if q < 2:
        raise ValueError('chi is defined for q >= 2, got {}'.format(q))
    if q == 2:
        return 9
    if q == 3:
        return 8
    if q <= 6:
        return 7
    return 6


def is_prime_power(q):
    """
    :return: (p, e) with q = p^e, or None when q is not a prime power.
    """
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    (p, e), = factors.items()
    return p, e


def bracket_index(value, b):
    """
    Inverse of bracket in its first argument: the j with bracket(j, b) equal
    to value, or None if there is none.
    """
    j = 0
    while bracket(j, b) < value:
        j += 1
    return j if bracket(j, b) == value else None


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class IntPolynomial:
    """
    A polynomial with integer coefficients, lowest degree first.

    The zero polynomial is the empty tuple; otherwise the last coefficient
    is nonzero.
    """
    coefficients: tuple = ()

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients = coefficients[:-1]
        object.__setattr__(self, 'coefficients', coefficients)

    @classmethod
    def from_roots(cls, roots, leading=1):
        poly = cls((leading,))
        for root in roots:
            poly = poly * cls((-root, 1))
        return poly

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else 0

    def to_sympy(self):
        return Poly(list(reversed(self.coefficients)) or [0], zeta)

    @classmethod
    def from_sympy(cls, poly):
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def __mul__(self, other):
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    def __call__(self, x):
        # Horner; exact for int and Fraction arguments
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def deflate(self, root):
        """
        Divide by (z - root); the remainder must vanish.
        """
        quotient, remainder = self.to_sympy().div(Poly([1, -root], zeta))
        assert remainder.is_zero, '{} is not a root'.format(root)
        return IntPolynomial.from_sympy(quotient)

    def integer_roots(self):
        """
        All integer roots, with multiplicity, sorted ascending.

        Rational-root search: an integer root divides the lowest nonzero
        coefficient once the factor x^k is split off.
        """
        if not self.coefficients:
            raise ValueError('the zero polynomial has every integer as a root')
        roots = []
        poly = self
        while poly.degree > 0 and poly.coefficients[0] == 0:
            roots.append(0)
            poly = IntPolynomial(poly.coefficients[1:])
        found = True
        while poly.degree > 0 and found:
            found = False
            for d in divisors(abs(poly.coefficients[0])):
                for candidate in (d, -d):
                    if poly(candidate) == 0:
                        roots.append(candidate)
                        poly = poly.deflate(candidate)
                        found = True
                        break
                if found:
                    break
        logger.debug('integer roots of degree-%d polynomial: %s',
                     self.degree, roots)
        return sorted(roots)

    def __str__(self):
        terms = []
        for power, c in enumerate(self.coefficients):
            if c:
                terms.append('{}*z^{}'.format(c, power) if power else str(c))
        return ' + '.join(reversed(terms)) or '0'


def plain(value):
    """
    JSON-friendly copy of a value: numpy scalars become ints, rationals their
    'p/q' string, tuples lists; dicts are converted value by value.
    """
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    return value
