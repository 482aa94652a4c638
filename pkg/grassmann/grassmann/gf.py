"""
Small finite fields GF(q), q <= 16, as dense lookup tables.

Elements are the integers 0..q-1. For q = p^e the index i stands for the
polynomial sum c_j x^j with i = sum c_j p^j, reduced modulo a fixed
irreducible polynomial:

    GF(4)   x^2 + x + 1
    GF(8)   x^3 + x + 1
    GF(9)   x^2 + 1
    GF(16)  x^4 + x + 1

so 0 is the additive and 1 the multiplicative identity in every field, and
canonical forms are reproducible across runs.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from grassmann.exact import is_prime_power
from grassmann.exceptions import NotPrimePower, UnsupportedOrder

logger = logging.getLogger(__name__)

MAX_ORDER = 16

# coefficients lowest degree first, monic
MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
}


@dataclass(frozen=True, eq=False)
class Field:
    q: int
    p: int
    e: int
    modulus: tuple
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray

    @property
    def sub(self):
        return self.add[:, self.neg]

    def div(self, a, b):
        if np.any(np.asarray(b) == 0):
            raise ZeroDivisionError('division by zero in GF({})'.format(self.q))
        return self.mul[a, self.inv[b]]

    def check_axioms(self):
        """
        Exhaustive field-axiom check over all triples of elements.

        :return: list with the names of the violated axioms, empty if none
        """
        q = self.q
        idx = np.arange(q)
        a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
        add, mul = self.add, self.mul
        failures = []
        if not (add == add.T).all():
            failures.append('additive commutativity')
        if not (mul == mul.T).all():
            failures.append('multiplicative commutativity')
        if not (add[add[a, b], c] == add[a, add[b, c]]).all():
            failures.append('additive associativity')
        if not (mul[mul[a, b], c] == mul[a, mul[b, c]]).all():
            failures.append('multiplicative associativity')
        if not (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all():
            failures.append('distributivity')
        if not ((add[0] == idx).all() and (mul[1] == idx).all()):
            failures.append('identities')
        if not (add[idx, self.neg] == 0).all():
            failures.append('additive inverses')
        if not (mul[idx[1:], self.inv[1:]] == 1).all():
            failures.append('multiplicative inverses')
        return failures

    def __repr__(self):
        return 'GF({})'.format(self.q)


def _digits(i, p, e):
    return [(i // p ** j) % p for j in range(e)]


def _index(digits, p):
    return sum(int(c) * p ** j for j, c in enumerate(digits))


def _poly_mul_mod(a, b, modulus, p):
    e = len(modulus) - 1
    product = np.convolve(a, b) % p
    for degree in range(len(product) - 1, e - 1, -1):
        c = product[degree]
        if c:
            shift = degree - e
            for j, m in enumerate(modulus):
                product[shift + j] = (product[shift + j] - c * m) % p
    return product[:e]


@lru_cache(maxsize=None)
def make_field(q):
    """
    Build the addition, multiplication, negation and inversion tables of
    GF(q).

    :raises NotPrimePower: if q is not a prime power
    :raises UnsupportedOrder: if q > 16
    """
    factors = is_prime_power(q)
    if factors is None:
        raise NotPrimePower('{} is not a prime power'.format(q))
    if q > MAX_ORDER:
        raise UnsupportedOrder('GF({}) is beyond the supported order {}'.format(
            q, MAX_ORDER))
    p, e = factors
    if e == 1:
        idx = np.arange(q)
        add = (idx[:, None] + idx[None, :]) % q
        mul = (idx[:, None] * idx[None, :]) % q
        modulus = (0, 1)
    else:
        modulus = MODULI[q]
        digits = np.array([_digits(i, p, e) for i in range(q)])
        add = np.array([[_index((digits[i] + digits[j]) % p, p)
                         for j in range(q)] for i in range(q)])
        mul = np.array([[_index(_poly_mul_mod(digits[i], digits[j], modulus, p), p)
                         for j in range(q)] for i in range(q)])
    neg = np.argmin(add, axis=1)
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = np.argmax(mul[1:] == 1, axis=1)
    field = Field(q, p, e, modulus, add.astype(np.int64), mul.astype(np.int64),
                  neg.astype(np.int64), inv)
    logger.debug('built %r with modulus %s', field, modulus)
    return field


def rref(matrix, field):
    """
    Reduced row-echelon form over GF(q).

    Pivots are scaled to 1 and cleared above and below, so the result is the
    unique canonical form of the row space (zero rows at the bottom).

    :param matrix: 2-d array of field element indices
    :param field: Field
    :return: (rank, reduced matrix as a new int64 array)
    """
    A = np.array(matrix, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError('rref needs a 2-d matrix, got shape {}'.format(A.shape))
    n_rows, n_cols = A.shape
    mul, sub = field.mul, field.sub
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if not nonzero.size:
            continue
        pivot = r + nonzero[0]
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = mul[field.inv[A[r, c]], A[r]]
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = sub[A[others], mul[A[others, c][:, None], A[r][None, :]]]
        r += 1
    return r, A


def rank(matrix, field):
    return rref(matrix, field)[0]
