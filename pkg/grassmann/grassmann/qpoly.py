"""
Constraints that a Q-polynomial distance-regular graph with classical
parameters puts on its local structure: triple intersection numbers, the
congruences they imply for the local graphs of J_q(2D,D), the window for
local eigenvalues, the Terwilliger polynomial and the local spectrum that
all of these force.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import sympy

from grassmann.exact import IntPolynomial, bracket, gaussian_binomial
from grassmann.exceptions import NonIntegralCount
from grassmann.params import (array_from_classical, classical_eigenvalues,
                              clique_ext_grid_spectrum, grassmann_dimension,
                              multiplicity, p_table)

logger = logging.getLogger(__name__)


class Relation(enum.Enum):
    """How two neighbours y, z of a vertex x relate to each other."""
    same = 0
    adjacent = 1
    distance2 = 2

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str) and value in cls.__members__:
            return cls[value]
        return None


@dataclass(frozen=True)
class TripleConstants:
    i: int
    sigma: int
    rho_1: Fraction
    rho_2: Fraction
    p1_i_iplus1: int

    def rho(self, j):
        return self.rho_1 if j == 1 else self.rho_2


@dataclass(frozen=True)
class LemmaDDDConstants:
    gamma: Fraction
    adjacent_offset: int
    distance2_offset: int


@dataclass(frozen=True)
class LocalBound:
    theta_hat_1: Fraction
    theta_hat_D: int
    min_mult_theta_hat_1: int

    def admits(self, eta):
        """eta in [theta_hat_1, -1] or eta == theta_hat_D."""
        return self.theta_hat_1 <= eta <= -1 or eta == self.theta_hat_D


@dataclass(frozen=True)
class TerwilligerReport:
    i: int
    poly: IntPolynomial
    roots: tuple
    leading_negative: bool

    def __call__(self, eta):
        return self.poly(eta)


class Congruence(NamedTuple):
    modulus: int
    residue_adjacent: int
    residue_distance2: int
    exact_distance2: bool


@dataclass(frozen=True)
class TraceDifference:
    """
    The three trace-difference equations between the local graph and the
    clique-extended grid, over the unknowns (e_D, e_-1, e_1), each with the
    contribution of one extra eigenvalue eta as a polynomial in eta.
    """
    theta_hat_1: Fraction
    theta_hat_D: int
    rows: sympy.Matrix
    eta_terms: tuple
    combined_row: sympy.Matrix
    combined_eta_term: sympy.Expr
    e1_coefficient: Fraction
    eta_term_positive: bool
    determinant: int
    solution: tuple


def as_count(value):
    """
    Interpret an exact value as a vertex count.

    :raises NonIntegralCount: unless value is a non-negative integer
    """
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise NonIntegralCount('{} is not a count'.format(value), witness=value)
    return int(value)


def _require_level(cp, i):
    if not 1 <= i <= cp.D - 1:
        raise ValueError('level i must lie in 1..{}, got {}'.format(cp.D - 1, i))


def triple_constants(cp, i):
    """sigma_i, rho_i1, rho_i2 and p^1_{i,i+1} at level i."""
    _require_level(cp, i)
    ia = array_from_classical(cp)
    b = cp.b
    sigma = bracket(i, b)
    rho_1 = Fraction(-b * bracket(i - 1, b))
    rho_2 = rho_1 + Fraction(b, ia.b(1)) * (ia.c(i) - sigma)
    return TripleConstants(i, sigma, rho_1, rho_2, p_table(ia)[1, i, i + 1])


def triple_122_from_111(cp, relation, t111=0):
    """
    [1,2,2] from [1,1,1] for y, z in Gamma(x):
    b_1 if y = z, b_1 - a_1 + 1 + [1,1,1] if y ~ z, b_1 - a_1 - 1 + [1,1,1]
    at distance 2.
    """
    relation = Relation(relation)
    ia = array_from_classical(cp)
    if relation is Relation.same:
        return ia.b(1)
    if t111 < 0:
        raise ValueError('[1,1,1] must be non-negative, got {}'.format(t111))
    if relation is Relation.adjacent:
        return ia.b(1) - ia.a(1) + 1 + t111
    return ia.b(1) - ia.a(1) - 1 + t111


def triple_spear(cp, i, j, t122):
    """
    [i,i+1,i+1] = p^1_{i,i+1} (sigma_i / b_1 [1,2,2] + rho_ij) for y, z in
    Gamma(x) at distance j in {1, 2}. The value is exact; pass it through
    as_count to read it as a number of vertices.
    """
    if j not in (1, 2):
        raise ValueError('j must be 1 or 2, got {}'.format(j))
    constants = triple_constants(cp, i)
    b_1 = array_from_classical(cp).b(1)
    return constants.p1_i_iplus1 * (Fraction(constants.sigma, b_1) * t122
                                    + constants.rho(j))


def _grassmann_n(cp):
    n = grassmann_dimension(cp)
    if n is None:
        raise ValueError('{} are not the classical parameters of a Grassmann '
                         'graph'.format(cp))
    return n


def lemma_ddd_constants(cp):
    """
    gamma = q^(D^2-4) [n-D-1 D-1]_q / [n-D-1 1]_q and the offsets added to
    [1,1,1] for adjacent and distance-2 pairs.
    """
    n, D, q = _grassmann_n(cp), cp.D, cp.b
    gamma = Fraction(q ** (D * D - 4) * gaussian_binomial(n - D - 1, D - 1, q),
                     bracket(n - D - 1, q))
    adjacent = (q ** 3 * bracket(n - D - 1, q) * (bracket(D - 1, q) + 1)
                - q * bracket(n - D, q) * bracket(D, q) + 2)
    distance2 = q ** 2 * (q ** (n - D - 1) - 1) - q * (q ** (D - 1) + 1)
    return LemmaDDDConstants(gamma, adjacent, distance2)


def lemma_ddd(cp, relation, t111):
    """
    [D-1,D,D] over y, z in Gamma(x) of J_q(n,D) as gamma ([1,1,1] + offset).
    """
    relation = Relation(relation)
    if relation is Relation.same:
        raise ValueError('lemma_ddd needs an adjacent or distance-2 pair')
    constants = lemma_ddd_constants(cp)
    offset = (constants.adjacent_offset if relation is Relation.adjacent
              else constants.distance2_offset)
    return constants.gamma * (t111 + offset)


def congruence_obstruction(cp):
    """
    For J_q(2D,D), D >= 3: |Delta(y,z)| is q-2 modulo [D-1 1]_q on adjacent
    pairs of a local graph Delta and 2q modulo [D-1 1]_q at distance 2; from
    D >= 4 on the distance-2 value is exactly 2q.
    """
    n, D, q = _grassmann_n(cp), cp.D, cp.b
    if n != 2 * D or D < 3:
        raise ValueError('the congruences hold for J_q(2D,D) with D >= 3, got '
                         'n={}, D={}'.format(n, D))
    modulus = bracket(D - 1, q)
    return Congruence(modulus, (q - 2) % modulus, (2 * q) % modulus, D >= 4)


def root_coincidence(q, D):
    """q^2 [D-1 1]_q - 1 == [D+1 1]_q - q - 2."""
    return q * q * bracket(D - 1, q) - 1 == bracket(D + 1, q) - q - 2


def terwilliger_poly(cp, i):
    """
    T_i(z) = -(b^i - 1)(b^(i-1) - 1)(z - beta + alpha + 1)(z + 1)(z + b + 1)
             (z - alpha b [D-1 1]_b + 1),

    non-negative at every non-principal eigenvalue of a local graph.
    """
    D, b = cp.D, cp.b
    if D < 3 or not 2 <= i <= D - 1:
        raise ValueError('terwilliger_poly needs D >= 3 and 2 <= i <= D-1, got '
                         'D={}, i={}'.format(D, i))
    leading = -(b ** i - 1) * (b ** (i - 1) - 1)
    roots = (cp.beta - cp.alpha - 1, -1, -b - 1,
             cp.alpha * b * bracket(D - 1, b) - 1)
    poly = IntPolynomial.from_roots(roots, leading)
    found = tuple(poly.integer_roots())
    assert found == tuple(sorted(roots)), 'roots {} != {}'.format(found, roots)
    return TerwilligerReport(i, poly, found, poly.leading < 0)


def local_eigenvalue_window(cp):
    """
    theta_hat_1 = -1 - b_1 / (theta_1 + 1), the least local eigenvalue;
    theta_hat_D = alpha b [D-1 1] - 1; theta_hat_1 has multiplicity at least
    b_0 - m_1 in every local graph.
    """
    if cp.D < 3:
        raise ValueError('local_eigenvalue_window needs D >= 3, got {}'.format(
            cp.D))
    ia = array_from_classical(cp)
    theta_1 = classical_eigenvalues(cp)[1]
    theta_hat_1 = -1 - Fraction(ia.b(1)) / (theta_1 + 1)
    theta_hat_D = cp.alpha * cp.b * bracket(cp.D - 1, cp.b) - 1
    m_1 = multiplicity(ia, theta_1)
    assert m_1.denominator == 1, 'm_1 = {} is not an integer'.format(m_1)
    return LocalBound(theta_hat_1, theta_hat_D, ia.k - int(m_1))


def admissible_local_eigenvalue(cp, eta):
    return local_eigenvalue_window(cp).admits(eta)


def trace_difference_argument(cp):
    """
    Compare the first three trace moments of a local graph with those of the
    clique-extended grid. Writing e_D, e_-1, e_1 for the multiplicity
    differences at theta_hat_D, -1, theta_hat_1 and eta for an eigenvalue
    strictly between theta_hat_1 and -1:

        e_D + e_-1 + e_1 + sum 1 = 0
        theta_hat_D e_D - e_-1 + theta_hat_1 e_1 + sum eta = 0
        theta_hat_D^2 e_D + e_-1 + theta_hat_1^2 e_1 + sum eta^2 = 0

    The third minus theta_hat_D times the first minus (theta_hat_D - 1) times
    the second leaves only e_1 and the eta terms, both with positive
    coefficients, so both vanish; the first two rows then force
    e_D = e_-1 = 0.
    """
    bound = local_eigenvalue_window(cp)
    t1 = sympy.Rational(bound.theta_hat_1.numerator, bound.theta_hat_1.denominator)
    tD = sympy.Integer(bound.theta_hat_D)
    eta = sympy.Symbol('eta')
    rows = sympy.Matrix([[1, 1, 1], [tD, -1, t1], [tD ** 2, 1, t1 ** 2]])
    eta_terms = (sympy.Integer(1), eta, eta ** 2)
    weights = sympy.Matrix([[-tD, -(tD - 1), 1]])
    combined_row = sympy.simplify(weights * rows)
    combined_eta = sympy.factor(sum(w * t for w, t in zip(weights, eta_terms)))
    assert combined_row[0] == 0 and combined_row[1] == 0
    e1_coefficient = combined_row[2]
    assert sympy.simplify(e1_coefficient - (t1 + 1) * (t1 - tD)) == 0

    # convex with roots -1 and theta_hat_D >= -1: positive below -1
    eta_roots = sympy.roots(sympy.Poly(combined_eta, eta))
    eta_positive = (sympy.Poly(combined_eta, eta).LC() > 0
                    and all(root >= -1 for root in eta_roots))

    reduced = rows[:2, :2]
    determinant = reduced.det()
    if determinant == 0:
        raise ValueError('e_D, e_-1 are not determined for {}'.format(cp))
    solution = tuple(reduced.LUsolve(sympy.zeros(2, 1)))
    logger.debug('trace differences for %s: e_1 coefficient %s, eta term %s',
                 cp, e1_coefficient, combined_eta)
    return TraceDifference(
        theta_hat_1=bound.theta_hat_1, theta_hat_D=bound.theta_hat_D,
        rows=rows, eta_terms=eta_terms, combined_row=combined_row,
        combined_eta_term=combined_eta,
        e1_coefficient=Fraction(int(sympy.numer(e1_coefficient)),
                                int(sympy.denom(e1_coefficient))),
        eta_term_positive=bool(eta_positive), determinant=int(determinant),
        solution=tuple(int(x) for x in solution) + (0,))


def forced_local_spectrum(cp):
    """
    The spectrum every local graph of a distance-regular graph with the
    parameters of J_q(2D,D), D >= 3, must have: that of the q-clique
    extension of the ([D 1]_q x [D 1]_q)-grid.
    """
    n, D, q = _grassmann_n(cp), cp.D, cp.b
    if n != 2 * D or D < 3:
        raise ValueError('forced_local_spectrum needs J_q(2D,D) with D >= 3, '
                         'got n={}, D={}'.format(n, D))
    argument = trace_difference_argument(cp)
    assert argument.e1_coefficient > 0 and argument.eta_term_positive
    assert argument.solution == (0, 0, 0)
    r = bracket(D, q)
    spectrum = clique_ext_grid_spectrum(q, r)
    ia = array_from_classical(cp)
    assert spectrum.eigenvalues == [ia.a(1), argument.theta_hat_D, -1,
                                    argument.theta_hat_1]
    bound = local_eigenvalue_window(cp)
    assert spectrum.multiplicity(argument.theta_hat_1) >= bound.min_mult_theta_hat_1
    return spectrum
