"""
Classical-parameter engine: intersection arrays, the full table of
intersection numbers p^h_ij, closed-form spectra of Grassmann graphs, and the
reference spectra of grids and their clique extensions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pandas as pd

from grassmann.exact import bracket, bracket_index, chi, gaussian_binomial
from grassmann.exceptions import InconsistentArray, InfeasibleParameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassicalParams:
    """
    The quadruple (D, b, alpha, beta) of a distance-regular graph with
    classical parameters. Only b >= 2 is supported.
    """
    D: int
    b: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.D < 2:
            raise ValueError('classical parameters need D >= 2, got {}'.format(
                self.D))
        if self.b < 2:
            raise ValueError('classical parameters need b >= 2, got {}'.format(
                self.b))

    def __str__(self):
        return '({},{},{},{})'.format(self.D, self.b, self.alpha, self.beta)


@dataclass(frozen=True)
class IntersectionArray:
    """
    The array {b_0,...,b_{D-1}; c_1,...,c_D}. Indices outside the stored
    ranges follow the usual conventions b_D = c_0 = 0.
    """
    b_list: tuple
    c_list: tuple

    def __post_init__(self):
        object.__setattr__(self, 'b_list', tuple(int(x) for x in self.b_list))
        object.__setattr__(self, 'c_list', tuple(int(x) for x in self.c_list))
        if len(self.b_list) != len(self.c_list) or not self.b_list:
            raise InconsistentArray(
                'b and c lists must have the same positive length: {}'.format(
                    self))
        if any(x <= 0 for x in self.b_list + self.c_list):
            raise InconsistentArray('non-positive entry in {}'.format(self))
        if self.c_list[0] != 1:
            raise InconsistentArray('c_1 must be 1 in {}'.format(self))
        for i in range(1, self.D + 1):
            if self.a(i) < 0:
                raise InconsistentArray('a_{} < 0 in {}'.format(i, self))
        self.valencies

    @property
    def D(self):
        return len(self.b_list)

    @property
    def k(self):
        return self.b_list[0]

    def b(self, i):
        return self.b_list[i] if i < self.D else 0

    def c(self, i):
        return self.c_list[i - 1] if i > 0 else 0

    def a(self, i):
        return self.k - self.b(i) - self.c(i)

    @property
    def valencies(self):
        """
        k_0, ..., k_D; each k_i = (b_0...b_{i-1})/(c_1...c_i) must be an
        integer.
        """
        result = [1]
        numerator, denominator = 1, 1
        for i in range(1, self.D + 1):
            numerator *= self.b(i - 1)
            denominator *= self.c(i)
            k_i, remainder = divmod(numerator, denominator)
            if remainder:
                raise InconsistentArray(
                    'k_{} = {}/{} is not an integer'.format(
                        i, numerator, denominator))
            result.append(k_i)
        return tuple(result)

    @property
    def v(self):
        return sum(self.valencies)

    def __str__(self):
        return '{{{};{}}}'.format(','.join(str(x) for x in self.b_list),
                                   ','.join(str(x) for x in self.c_list))


@dataclass(frozen=True)
class Spectrum:
    """
    Distinct eigenvalues with their multiplicities, largest eigenvalue
    first. Equal eigenvalues are merged and zero multiplicities dropped on
    construction.
    """
    pairs: tuple

    def __post_init__(self):
        merged = {}
        for theta, mult in self.pairs:
            merged[theta] = merged.get(theta, 0) + int(mult)
        pairs = tuple((theta, mult) for theta, mult in
                      sorted(merged.items(), key=lambda p: p[0], reverse=True)
                      if mult != 0)
        if any(mult < 0 for _, mult in pairs):
            raise ValueError('negative multiplicity in {}'.format(pairs))
        object.__setattr__(self, 'pairs', pairs)

    @property
    def eigenvalues(self):
        return [theta for theta, _ in self.pairs]

    @property
    def v(self):
        return sum(mult for _, mult in self.pairs)

    def multiplicity(self, theta):
        return dict(self.pairs).get(theta, 0)

    def moment(self, power):
        """Sum of m * theta^power, i.e. Tr(A^power)."""
        return sum(mult * theta ** power for theta, mult in self.pairs)

    def as_frame(self):
        return pd.DataFrame(self.pairs, columns=['theta', 'multiplicity'])

    def __str__(self):
        return '{' + ', '.join('[{}]^{}'.format(t, m)
                               for t, m in self.pairs) + '}'


class PTable:
    """
    All intersection numbers p^h_ij, 0 <= h,i,j <= D, held in a numpy object
    array indexed [h, i, j]. The array is read-only; p_table hands out cached
    instances.
    """

    def __init__(self, table):
        table.setflags(write=False)
        self.table = table

    @property
    def D(self):
        return self.table.shape[0] - 1

    def __getitem__(self, hij):
        h, i, j = hij
        if min(h, i, j) < 0 or max(h, i, j) > self.D:
            return 0
        return self.table[h, i, j]

    def as_frame(self, h):
        """The matrix (p^h_ij)_{i,j} as a DataFrame."""
        frame = pd.DataFrame(self.table[h].tolist())
        frame.index.name = 'i'
        frame.columns.name = 'j'
        return frame


def array_from_classical(cp):
    """
    Intersection array of a graph with classical parameters (D,b,alpha,beta):

        c_i = [i 1](1 + alpha [i-1 1]),
        b_i = ([D 1] - [i 1])(beta - alpha [i 1]),

    brackets taken in base b.

    :raises InfeasibleParameters: if some b_i, c_i is not positive or some
        a_i is negative.
    """
    D, b = cp.D, cp.b
    b_list = [(bracket(D, b) - bracket(i, b)) * (cp.beta - cp.alpha * bracket(i, b))
              for i in range(D)]
    c_list = [bracket(i, b) * (1 + cp.alpha * bracket(i - 1, b))
              for i in range(1, D + 1)]
    if any(x <= 0 for x in b_list + c_list):
        raise InfeasibleParameters(
            'classical parameters {} give b={} c={}'.format(cp, b_list, c_list))
    try:
        return IntersectionArray(tuple(b_list), tuple(c_list))
    except InconsistentArray as error:
        raise InfeasibleParameters(
            'classical parameters {}: {}'.format(cp, error)) from error


def grassmann_classical(n, D, q):
    """
    Classical parameters (D, q, q, [n-D+1 1]_q - 1) of J_q(n, D).
    """
    if D < 2:
        raise ValueError('J_q(n,D) needs D >= 2, got {}'.format(D))
    if n < 2 * D:
        raise ValueError('J_q(n,D) needs n >= 2D, got n={}, D={}'.format(n, D))
    if q < 2:
        raise ValueError('J_q(n,D) needs q >= 2, got {}'.format(q))
    return ClassicalParams(D, q, q, bracket(n - D + 1, q) - 1)


def grassmann_dimension(cp):
    """
    The n for which cp are the classical parameters of J_b(n, D), or None.
    """
    if cp.alpha != cp.b:
        return None
    j = bracket_index(cp.beta + 1, cp.b)
    if j is None:
        return None
    n = j + cp.D - 1
    return n if n >= 2 * cp.D else None


def grassmann_array(n, D, q):
    """
    Intersection array of J_q(n, D) straight from the Grassmann formulas

        b_{j-1} = q^(2j-1) [n-D-j+1 1] [D-j+1 1],  c_j = [j 1]^2,

    a path independent of array_from_classical.
    """
    b_list = [q ** (2 * j - 1) * bracket(n - D - j + 1, q) * bracket(D - j + 1, q)
              for j in range(1, D + 1)]
    c_list = [bracket(j, q) ** 2 for j in range(1, D + 1)]
    return IntersectionArray(tuple(b_list), tuple(c_list))


@lru_cache(maxsize=256)
def p_table(ia):
    """
    Intersection numbers from the array.

    Seeds: p^h_0j = delta_hj and p^h_{1,h-1} = c_h, p^h_{1,h} = a_h,
    p^h_{1,h+1} = b_h. Then, from A A_i = b_{i-1} A_{i-1} + a_i A_i +
    c_{i+1} A_{i+1} and A_i A_j = sum_h p^h_ij A_h,

        c_{i+1} p^h_{i+1,j} = sum_l p^l_ij p^h_1l - b_{i-1} p^h_{i-1,j}
                              - a_i p^h_ij.

    :raises InconsistentArray: if a value is negative or not an integer.
    """
    D = ia.D
    p = np.zeros((D + 1, D + 1, D + 1), dtype=object)
    for h in range(D + 1):
        p[h, 0, h] = 1
        if h >= 1:
            p[h, 1, h - 1] = ia.c(h)
        p[h, 1, h] = ia.a(h)
        if h + 1 <= D:
            p[h, 1, h + 1] = ia.b(h)
    for i in range(1, D):
        for h in range(D + 1):
            for j in range(D + 1):
                total = sum(p[l, i, j] * p[h, 1, l] for l in range(D + 1))
                total -= ia.b(i - 1) * p[h, i - 1, j] + ia.a(i) * p[h, i, j]
                value, remainder = divmod(total, ia.c(i + 1))
                if remainder or value < 0:
                    raise InconsistentArray(
                        'p^{}_{{{},{}}} = {}/{} in {}'.format(
                            h, i + 1, j, total, ia.c(i + 1), ia))
                p[h, i + 1, j] = value
    valencies = ia.valencies
    for h in range(D + 1):
        assert (p[h] == p[h].T).all(), 'p^{}_ij not symmetric'.format(h)
        for i in range(D + 1):
            assert sum(p[h, i]) == valencies[i], 'row sum of p^{}_{}j'.format(h, i)
    logger.debug('p-table of %s computed', ia)
    return PTable(p)


def classical_eigenvalues(cp):
    """
    theta_i = b_i / b^i - [i 1]_b for 0 <= i <= D (with b_D = 0), as exact
    rationals.
    """
    ia = array_from_classical(cp)
    return [Fraction(ia.b(i), cp.b ** i) - bracket(i, cp.b)
            for i in range(cp.D + 1)]


def multiplicity(ia, theta):
    """
    Multiplicity of an eigenvalue theta of a distance-regular graph, by
    v / sum_i k_i u_i^2 over the standard sequence of theta.
    """
    theta = Fraction(theta)
    u = [Fraction(1), theta / ia.k]
    for i in range(1, ia.D):
        u.append(((theta - ia.a(i)) * u[i] - ia.c(i) * u[i - 1]) / ia.b(i))
    norm = sum(k_i * u_i ** 2 for k_i, u_i in zip(ia.valencies, u))
    return Fraction(ia.v) / norm


def classical_spectrum(n, D, q):
    """
    Spectrum of J_q(n, D):

        theta_j = q^(j+1) [n-D-j 1] [D-j 1] - [j 1],
        m_j = [n j]_q - [n j-1]_q  (m_0 = 1).
    """
    if n < 2 * D or D < 2 or q < 2:
        raise ValueError('classical_spectrum needs n >= 2D >= 4, q >= 2, '
                         'got n={}, D={}, q={}'.format(n, D, q))
    pairs = []
    for j in range(D + 1):
        theta = (q ** (j + 1) * bracket(n - D - j, q) * bracket(D - j, q)
                 - bracket(j, q))
        mult = 1 if j == 0 else (gaussian_binomial(n, j, q)
                                 - gaussian_binomial(n, j - 1, q))
        pairs.append((theta, mult))
    return Spectrum(tuple(pairs))


def grid_spectrum(s, t=None):
    """
    Spectrum of the (s x t)-grid, K_s x K_t. With t omitted, the square
    grid: [2(s-1)]^1, [s-2]^{2(s-1)}, [-2]^{(s-1)^2}.
    """
    t = s if t is None else t
    if s < 2 or t < 2:
        raise ValueError('grids need s, t >= 2, got {}x{}'.format(s, t))
    return Spectrum(((s + t - 2, 1), (t - 2, s - 1), (s - 2, t - 1),
                     (-2, (s - 1) * (t - 1))))


def clique_extension_spectrum(sp, q):
    """
    Spectrum of the q-clique extension of a graph with spectrum sp: each
    theta != -1 becomes q(theta+1)-1 with the same multiplicity and every
    other eigenvalue is -1.
    """
    if q < 1:
        raise ValueError('clique extension needs q >= 1, got {}'.format(q))
    pairs = [(q * (theta + 1) - 1, mult) for theta, mult in sp.pairs
             if theta != -1]
    pairs.append((-1, (q - 1) * sp.v + sp.multiplicity(-1)))
    return Spectrum(tuple(pairs))


def clique_ext_grid_spectrum(q, r):
    """
    Spectrum of the q-clique extension of the (r x r)-grid:
    [q(2r-1)-1]^1, [q(r-1)-1]^{2(r-1)}, [-1]^{(q-1)r^2}, [-q-1]^{(r-1)^2}.
    """
    return clique_extension_spectrum(grid_spectrum(r), q)


def check_moments(sp, v, k):
    """
    True iff sum m = v, sum m theta = 0 and sum m theta^2 = v k.
    """
    return sp.moment(0) == v and sp.moment(1) == 0 and sp.moment(2) == v * k


def characterization_scope(n, D, q):
    """
    Whether a distance-regular graph with the intersection numbers of
    J_q(n, D) is known to be J_q(n, D): n = 2D with D >= chi(q), or
    n >= 2D + max(6-q, 2) with D >= 3.
    """
    if n == 2 * D:
        return D >= chi(q)
    return D >= 3 and n >= 2 * D + max(6 - q, 2)
