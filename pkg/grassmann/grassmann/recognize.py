"""
Recognition of q-clique extensions of square grids from local data, and the
hypothesis checks on mu-graphs and 3-cocliques that characterize Grassmann
graphs globally.

A negative answer is never an exception here: every check returns a result
object whose truth value is the verdict and which names the failing stage,
a reason, and a small witness.
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np
import sympy

from grassmann.exact import bracket, bracket_index, plain
from grassmann.exceptions import EmptyWindow, SingularSystem
from grassmann.graphs import (Graph, adjacency_digest, clique_extension,
                              common_neighbours, max_cliques, mu_graph, relabel,
                              verify_spectrum_exact)
from grassmann.parallel import sharded_map
from grassmann.params import clique_ext_grid_spectrum

logger = logging.getLogger(__name__)

EXHAUSTIVE_TRIPLE_LIMIT = 10 ** 7


@dataclass
class Verdict:
    """Outcome of one check: truthy iff it passed."""
    ok: bool
    reason: str = ''
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class LineSet:
    lines: tuple
    incidence: tuple
    threshold: int
    kappa: Fraction = None
    regime: str = 'window'

    def lines_through(self, x):
        return self.incidence[x]


@dataclass(frozen=True)
class NbhdPartition:
    classes: tuple
    class_of: tuple

    @property
    def class_sizes(self):
        return sorted(Counter(len(c) for c in self.classes).items())

    @property
    def uniform_size(self):
        sizes = {len(c) for c in self.classes}
        return sizes.pop() if len(sizes) == 1 else None


@dataclass
class LineStructure(Verdict):
    line_sizes: list = field(default_factory=list)
    pairwise_intersection_sizes: list = field(default_factory=list)
    delta: tuple = None


@dataclass
class RecognitionReport:
    verdict: str
    q: int
    r: int
    stage: str = ''
    reason: str = ''
    witness: object = None
    regime: str = None
    kappa: Fraction = None
    threshold: int = None
    line_count: int = None
    line_sizes: list = None
    pairwise_intersection_sizes: list = None
    delta: tuple = None
    class_sizes: list = None
    partition: NbhdPartition = None
    quotient: object = None

    @property
    def accepted(self):
        return self.verdict == 'accepted'

    def __bool__(self):
        return self.accepted

    def as_dict(self):
        """Key-value form with plain, JSON-friendly values."""
        record = {
            'verdict': self.verdict, 'q': self.q, 'r': self.r,
            'stage': self.stage, 'reason': self.reason,
            'witness': plain(self.witness), 'regime': self.regime,
            'kappa': None if self.kappa is None else str(self.kappa),
            'threshold': self.threshold, 'line_count': self.line_count,
            'line_sizes': plain(self.line_sizes),
            'pairwise_intersection_sizes': plain(self.pairwise_intersection_sizes),
            'delta': plain(self.delta), 'class_sizes': plain(self.class_sizes),
        }
        if self.quotient is not None:
            record['quotient'] = {'vertices': self.quotient.n_vertices,
                                  'edges': self.quotient.n_edges,
                                  'digest': adjacency_digest(self.quotient)}
        return record

    def to_text(self):
        return '\n'.join('{}={}'.format(key, value)
                         for key, value in sorted(self.as_dict().items()))


def kappa_window(q, r):
    """
    2/3 + (5q-4)/(3qr) < kappa <= 1 - 1/(qr); returns (lower, upper, midpoint).

    :raises EmptyWindow: if lower >= upper
    """
    lower = Fraction(2, 3) + Fraction(5 * q - 4, 3 * q * r)
    upper = 1 - Fraction(1, q * r)
    if lower >= upper:
        raise EmptyWindow('no kappa for q={}, r={}: {} >= {}'.format(
            q, r, lower, upper), witness=(lower, upper))
    return lower, upper, (lower + upper) / 2


def line_threshold(q, r):
    """
    Minimum line size ceil(kappa q r) + 1 with the midpoint kappa, or exactly
    qr when the window is empty.

    :return: (threshold, kappa or None, regime)
    """
    try:
        _, _, kappa = kappa_window(q, r)
    except EmptyWindow:
        logger.info('kappa window empty for q=%d, r=%d; lines need %d vertices',
                    q, r, q * r)
        return q * r, None, 'exact'
    return math.ceil(kappa * q * r) + 1, kappa, 'window'


def _check_shape(delta, q, r):
    v, k = q * r * r, q * (2 * r - 1) - 1
    if delta.n_vertices != v:
        return Verdict(False, 'has {} vertices, expected qr^2 = {}'.format(
            delta.n_vertices, v))
    if delta.valency != k:
        degrees = delta.degrees
        x = int(np.flatnonzero(degrees != k)[0])
        return Verdict(False, 'vertex {} has degree {}, expected q(2r-1)-1 = {}'
                       .format(x, int(degrees[x]), k), witness=x)
    return Verdict(True)


def detect_lines(delta, q, r):
    """
    Lines: maximal cliques with at least the threshold number of vertices.
    """
    shape = _check_shape(delta, q, r)
    if not shape:
        raise ValueError(shape.reason)
    threshold, kappa, regime = line_threshold(q, r)
    lines = tuple(max_cliques(delta, threshold))
    incidence = [[] for _ in range(delta.n_vertices)]
    for index, line in enumerate(lines):
        for x in line:
            incidence[x].append(index)
    logger.debug('%d lines of size >= %d in %r', len(lines), threshold, delta)
    return LineSet(lines, tuple(tuple(i) for i in incidence), threshold, kappa,
                   regime)


def solve_delta_system(q, r):
    """
    Solve for the numbers (delta_0, delta_1, delta_2) of neighbours of a vertex
    with local valency l_0 = q-2, l_1 = qr-2, l_2 = 2(qr-2)-(q-2):

        delta_0 + delta_1 + delta_2 = q(2r-1) - 1
        sum l_i delta_i             = sum of local valencies
        sum l_i^2 delta_i           = sum of squared local valencies

    :raises SingularSystem: if the l_i are not distinct
    """
    ells = [q - 2, q * r - 2, 2 * (q * r - 2) - (q - 2)]
    total = q * (2 * r - 1) - 1
    first, second = local_valency_sums(q, r)[:2]
    M = sympy.Matrix([[1, 1, 1], ells, [e * e for e in ells]])
    if M.det() == 0:
        raise SingularSystem('l = {} are not distinct for q={}, r={}'.format(
            ells, q, r), witness=tuple(ells))
    solution = M.LUsolve(sympy.Matrix([total, first, second]))
    assert all(s.is_integer for s in solution), solution
    delta = tuple(int(s) for s in solution)
    assert delta == (0, 2 * q * (r - 1), q - 1), delta
    return delta


def local_valency_sums(q, r):
    """
    For a graph cospectral with the q-clique extension of the (r x r)-grid,
    the local valencies lambda of any vertex satisfy:

    :return: (sum lambda, sum lambda^2, sum (lambda - (qr-2))^2)
    """
    first = q * q * (2 * r * r - 1) - 3 * q * (2 * r - 1) + 2
    second = (q ** 3 * (2 * r ** 3 + 2 * r ** 2 - 4 * r + 1)
              + q * q * (-12 * r * r + 4 * r + 3) + 8 * q * (2 * r - 1) - 4)
    k = q * (2 * r - 1) - 1
    centre = q * r - 2
    spread = second - 2 * centre * first + centre * centre * k
    assert spread == q * q * (r - 1) ** 2 * (q - 1)
    return first, second, spread


def clique_quotient_eigenvalue(q, r, ell):
    """
    Second eigenvalue of the quotient matrix of {L, rest} for an ell-clique L
    in a graph cospectral with the q-clique extension of the (r x r)-grid.
    """
    k = q * (2 * r - 1)
    return ell - 1 - Fraction((k - ell) * ell, q * r * r - ell)


def clique_size_bound(q, r):
    """The largest ell whose quotient eigenvalue stays at most q(r-1)-1."""
    limit = q * (r - 1) - 1
    return max(ell for ell in range(1, q * r * r)
               if clique_quotient_eigenvalue(q, r, ell) <= limit)


def coclique_bound(q):
    """The largest c with -sqrt(c) >= -q-1."""
    return (q + 1) ** 2


def check_line_structure(ls, q, r, delta):
    """
    Every vertex on exactly two lines, every line of size qr, meeting lines
    sharing exactly q vertices, and every vertex splitting its neighbourhood
    as solve_delta_system predicts.
    """
    sizes = sorted({len(line) for line in ls.lines})
    for x, through in enumerate(ls.incidence):
        if len(through) != 2:
            return LineStructure(False, 'vertex {} lies on {} lines'.format(
                x, len(through)), witness=x, line_sizes=sizes)
    for index, line in enumerate(ls.lines):
        if len(line) != q * r:
            return LineStructure(False, 'line {} has {} vertices, expected {}'
                                 .format(index, len(line), q * r),
                                 witness=line, line_sizes=sizes)
    as_sets = [frozenset(line) for line in ls.lines]
    meets = set()
    for i, j in itertools.combinations(range(len(as_sets)), 2):
        common = len(as_sets[i] & as_sets[j])
        if common:
            meets.add(common)
            if common != q:
                return LineStructure(
                    False, 'lines {} and {} share {} vertices, expected {}'
                    .format(i, j, common, q), witness=(i, j), line_sizes=sizes,
                    pairwise_intersection_sizes=sorted(meets))
    expected = solve_delta_system(q, r)
    A = delta.adjacency
    for x, (i, j) in enumerate(ls.incidence):
        L1, L2 = as_sets[i], as_sets[j]
        nb = frozenset(np.flatnonzero(A[x]).tolist())
        counts = (len(nb - (L1 | L2)), len(L1 ^ L2), len((L1 & L2) - {x}))
        if counts != expected:
            return LineStructure(False, 'vertex {} splits its neighbourhood as {},'
                                 ' expected {}'.format(x, counts, expected),
                                 witness=x, line_sizes=sizes,
                                 pairwise_intersection_sizes=sorted(meets))
    return LineStructure(True, line_sizes=sizes,
                         pairwise_intersection_sizes=sorted(meets),
                         delta=expected)


def quotient_by_closed_nbhd(delta):
    """
    Classes of x ~ x' iff {x} ∪ Delta(x) = {x'} ∪ Delta(x'), ordered by least
    vertex, and the quotient graph on the classes (adjacent iff some cross
    edge).

    :return: (NbhdPartition, quotient Graph)
    """
    closed = delta.adjacency | np.eye(delta.n_vertices, dtype=bool)
    _, first, inverse = np.unique(closed, axis=0, return_index=True,
                                  return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first)] = np.arange(len(first))
    class_of = rank[inverse]
    classes = tuple(tuple(np.flatnonzero(class_of == c).tolist())
                    for c in range(len(first)))
    membership = np.zeros((delta.n_vertices, len(classes)), dtype=np.int64)
    membership[np.arange(delta.n_vertices), class_of] = 1
    between = membership.T @ delta.adjacency.astype(np.int64) @ membership > 0
    np.fill_diagonal(between, False)
    quotient = Graph(between, name='quotient({})'.format(delta.name or ''))
    return NbhdPartition(classes, tuple(class_of.tolist())), quotient


def canonical_order(partition):
    """The vertices class by class: the labeling under which the graph is
    literally the clique extension of its quotient."""
    return [x for cls in partition.classes for x in cls]


def is_clique_extension_of(delta, partition, quotient):
    size = partition.uniform_size
    if size is None:
        return False
    return clique_extension(quotient, size).same_as(
        relabel(delta, canonical_order(partition)))


def grid_shape(g):
    """(s, t) with s <= t if vertex count and valency fit an (s x t)-grid."""
    n, k = g.n_vertices, g.valency
    if k is None or n < 4:
        return None
    discriminant = (k + 2) ** 2 - 4 * n
    if discriminant < 0:
        return None
    root = math.isqrt(discriminant)
    if root * root != discriminant or (k + 2 - root) % 2:
        return None
    s, t = (k + 2 - root) // 2, (k + 2 + root) // 2
    return (s, t) if s >= 2 else None


def certify_grid(g, s, t=None):
    """
    Krausz-style certificate that g is the (s x t)-grid: its maximal cliques
    of the right sizes form two parallel classes (rows and columns), every
    vertex lies on one row and one column, and every row meets every column
    in exactly one vertex.
    """
    t = s if t is None else t
    s, t = min(s, t), max(s, t)
    if g.n_vertices != s * t:
        return Verdict(False, 'has {} vertices, expected {}'.format(
            g.n_vertices, s * t))
    if g.valency != s + t - 2:
        return Verdict(False, 'not regular of valency {}'.format(s + t - 2))
    cliques = max_cliques(g, s)
    odd = [c for c in cliques if len(c) not in (s, t)]
    if odd or len(cliques) != s + t:
        witness = odd[0] if odd else len(cliques)
        return Verdict(False, '{} maximal cliques of size >= {}, sizes {}'.format(
            len(cliques), s, sorted({len(c) for c in cliques})), witness=witness)
    meets = nx.Graph()
    meets.add_nodes_from(range(len(cliques)))
    sets = [frozenset(c) for c in cliques]
    for i, j in itertools.combinations(range(len(sets)), 2):
        if sets[i] & sets[j]:
            meets.add_edge(i, j)
    if not nx.is_connected(meets) or not nx.is_bipartite(meets):
        return Verdict(False, 'cliques do not split into rows and columns')
    side_a, side_b = nx.bipartite.sets(meets)
    rows, columns = sorted(side_a), sorted(side_b)
    if len(rows) > len(columns):
        rows, columns = columns, rows
    if len(rows) != s or len(columns) != t:
        return Verdict(False, 'clique classes of sizes {} and {}'.format(
            len(rows), len(columns)))
    for i in rows:
        for j in columns:
            common = sets[i] & sets[j]
            if len(common) != 1:
                return Verdict(False, 'cliques {} and {} share {} vertices'.format(
                    cliques[i], cliques[j], len(common)), witness=(i, j))
    for x in range(g.n_vertices):
        on = sum(x in sets[i] for i in range(len(sets)))
        if on != 2:
            return Verdict(False, 'vertex {} lies on {} cliques'.format(x, on),
                           witness=x)
    return Verdict(True)


def check_local_conditions(delta, q, D):
    """
    Failures among: |Delta(y,z)| = q-2 mod [D-1 1]_q for adjacent y, z;
    |Delta(y,z)| = 2q for distinct non-adjacent y, z; cospectrality with the
    q-clique extension of the ([D 1]_q x [D 1]_q)-grid.

    :return: list of (condition, witness) pairs, empty if all hold
    """
    modulus = bracket(D - 1, q)
    A = delta.adjacency
    common = common_neighbours(delta)
    failures = []
    bad = np.argwhere(A & (common % modulus != (q - 2) % modulus))
    if len(bad):
        failures.append(('adjacent congruence', tuple(int(v) for v in bad[0])))
    off = ~A & ~np.eye(delta.n_vertices, dtype=bool)
    bad = np.argwhere(off & (common != 2 * q))
    if len(bad):
        failures.append(('non-adjacent count', tuple(int(v) for v in bad[0])))
    if not verify_spectrum_exact(delta, clique_ext_grid_spectrum(q, bracket(D, q))):
        failures.append(('spectrum', None))
    return failures


def _reject(report, stage, reason, witness=None):
    report.verdict = 'rejected'
    report.stage = stage
    report.reason = reason
    report.witness = witness
    logger.info('rejected at %s: %s', stage, reason)
    return report


def recognize_clique_ext_grid(delta, q, r, spectral=False, congruence=False):
    """
    Decide whether delta is the q-clique extension of the (r x r)-grid by
    detecting lines, checking their structure, quotienting by closed
    neighbourhoods and certifying the quotient as a grid.

    :param spectral: also require the spectrum of the clique-extended grid
    :param congruence: also require the local congruence conditions, for r a
        q-bracket [D 1]_q
    """
    report = RecognitionReport('rejected', q, r)
    shape = _check_shape(delta, q, r)
    if not shape:
        return _reject(report, 'hypotheses', shape.reason, shape.witness)
    if spectral and not verify_spectrum_exact(delta, clique_ext_grid_spectrum(q, r)):
        return _reject(report, 'spectrum', 'not cospectral with the {}-clique '
                       'extension of the {}x{} grid'.format(q, r, r))
    if congruence:
        D = bracket_index(r, q) if q >= 2 else None
        if D is None:
            return _reject(report, 'congruence', 'r={} is not [D 1]_{}'.format(r, q))
        failures = check_local_conditions(delta, q, D)
        if failures:
            condition, witness = failures[0]
            return _reject(report, 'congruence', condition, witness)

    ls = detect_lines(delta, q, r)
    report.regime, report.kappa, report.threshold = ls.regime, ls.kappa, ls.threshold
    report.line_count = len(ls.lines)
    structure = check_line_structure(ls, q, r, delta)
    report.line_sizes = structure.line_sizes
    report.pairwise_intersection_sizes = structure.pairwise_intersection_sizes
    if not structure:
        return _reject(report, 'lines', structure.reason, structure.witness)
    report.delta = structure.delta

    partition, quotient = quotient_by_closed_nbhd(delta)
    report.partition, report.quotient = partition, quotient
    report.class_sizes = partition.class_sizes
    if partition.uniform_size != q:
        return _reject(report, 'quotient', 'unequal class sizes {}'.format(
            partition.class_sizes))
    if not is_clique_extension_of(delta, partition, quotient):
        return _reject(report, 'quotient', 'not the {}-clique extension of its '
                       'quotient'.format(q))

    certificate = certify_grid(quotient, r)
    if not certificate:
        return _reject(report, 'grid', certificate.reason, certificate.witness)
    report.verdict = 'accepted'
    return report


def _certify_mu_graphs(pairs, g, dt):
    shapes = []
    for x, y in pairs:
        mu = mu_graph(g, dt, x, y)
        shape = grid_shape(mu)
        if shape is None or not certify_grid(mu, *shape):
            shapes.append(None)
        else:
            shapes.append(shape)
    return shapes


def _cocliques_with_edges(triples, g):
    rows = g.rows
    bad = []
    for x, y, z in triples:
        common = rows[x] & rows[y] & rows[z]
        rest = common
        found = False
        while rest:
            low = rest & -rest
            if rows[low.bit_length() - 1] & common:
                found = True
                break
            rest ^= low
        bad.append(found)
    return bad


@dataclass
class NCCReport(Verdict):
    mu_checked: int = 0
    mu_shapes: dict = field(default_factory=dict)
    mu_mode: str = 'full'
    cocliques_checked: int = 0
    coclique_mode: str = 'full'


def _distance_two_pairs(dt):
    xs, ys = np.nonzero(np.triu(dt.dist == 2, k=1))
    return list(zip(xs.tolist(), ys.tolist()))


def _all_cocliques(g):
    A = g.adjacency
    v = g.n_vertices
    for x in range(v):
        ys = [y for y in range(x + 1, v) if not A[x, y]]
        for y in ys:
            for z in ys:
                if z > y and not A[y, z]:
                    yield x, y, z


def check_ncc_hypotheses(g, dt=None, mu_sample=None, coclique_sample=100000,
                         seed=42, parallelism=1):
    """
    (i) every mu-graph is an (s x t)-grid with s, t >= 2; (ii) the common
    neighbourhood of every 3-coclique is a coclique.

    mu-graphs are all checked unless mu_sample is smaller than the number of
    distance-2 pairs; 3-cocliques are enumerated when there are at most 10^7
    candidate triples and otherwise drawn from a seeded sample of
    coclique_sample triples.
    """
    dt = dt or g.distances
    rng = np.random.default_rng(seed)
    report = NCCReport(True)

    pairs = _distance_two_pairs(dt)
    if mu_sample is not None and mu_sample < len(pairs):
        chosen = np.sort(rng.choice(len(pairs), size=mu_sample, replace=False))
        pairs = [pairs[i] for i in chosen]
        report.mu_mode = 'sample'
    shapes = sharded_map(_certify_mu_graphs, pairs, parallelism, g=g, dt=dt)
    report.mu_checked = len(pairs)
    report.mu_shapes = dict(sorted(Counter(str(s) for s in shapes).items()))
    for pair, shape in zip(pairs, shapes):
        if shape is None:
            report.ok = False
            report.reason = 'mu-graph of {} is not a grid'.format(pair)
            report.witness = pair
            return report

    v = g.n_vertices
    if math.comb(v, 3) <= EXHAUSTIVE_TRIPLE_LIMIT:
        triples = list(_all_cocliques(g))
    else:
        report.coclique_mode = 'sample'
        draws = rng.integers(0, v, size=(coclique_sample, 3))
        A = g.adjacency
        x, y, z = draws[:, 0], draws[:, 1], draws[:, 2]
        keep = ((x != y) & (y != z) & (x != z)
                & ~A[x, y] & ~A[y, z] & ~A[x, z])
        triples = [tuple(t) for t in draws[keep].tolist()]
    bad = sharded_map(_cocliques_with_edges, triples, parallelism, g=g)
    report.cocliques_checked = len(triples)
    for triple, has_edge in zip(triples, bad):
        if has_edge:
            report.ok = False
            report.reason = 'common neighbourhood of 3-coclique {} has an edge'.format(
                triple)
            report.witness = triple
            return report
    logger.info('ncc hypotheses hold on %d mu-graphs and %d 3-cocliques',
                report.mu_checked, report.cocliques_checked)
    return report
