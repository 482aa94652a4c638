"""
Explicit graphs and the brute-force machinery used as an oracle for the
formulas in params and qpoly: Grassmann graphs over small fields, grids and
their clique extensions, distance tables, empirical intersection numbers,
exact spectrum checks, triple intersection counts and clique enumeration.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import networkx as nx
import numpy as np
import pandas as pd
from scipy import sparse
from scipy.sparse import csgraph

from grassmann.exact import gaussian_binomial
from grassmann.exceptions import (CliqueExplosion, Disconnected,
                                  NonConstantCount, NotAtDistanceTwo,
                                  NotDistanceRegular, TooLarge)
from grassmann.gf import make_field, rank
from grassmann.params import IntersectionArray

logger = logging.getLogger(__name__)

MAX_SUBSPACES = 10 ** 6
MAX_AMBIENT_DIMENSION = 12
# dense bool adjacency plus int16 distances: 3 bytes per vertex pair
MAX_VERTICES = 20000
MAX_ENUMERATED_CLIQUES = 10 ** 6
QUADRANGLE_ENUMERATION_LIMIT = 200

FNV_OFFSET = 0xcbf29ce484222325
FNV_PRIME = 0x100000001b3

SHRIKHANDE_CONNECTION_SET = ((1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3))


class Graph:
    """
    A finite simple graph on vertices 0..n-1 held as a dense boolean
    adjacency matrix, with optional vertex labels.
    """

    def __init__(self, adjacency, labels=None, name=None):
        A = np.array(adjacency, dtype=bool)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError('adjacency must be square, got shape {}'.format(
                A.shape))
        if not (A == A.T).all():
            raise ValueError('adjacency is not symmetric')
        if A.diagonal().any():
            raise ValueError('adjacency has loops')
        if labels is not None and len(labels) != A.shape[0]:
            raise ValueError('{} labels for {} vertices'.format(
                len(labels), A.shape[0]))
        self.adjacency = A
        self.labels = labels
        self.name = name

    @classmethod
    def from_edges(cls, n_vertices, edges, labels=None, name=None):
        A = np.zeros((n_vertices, n_vertices), dtype=bool)
        edges = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= n_vertices):
            raise ValueError('edge endpoint outside 0..{}'.format(n_vertices - 1))
        A[edges[:, 0], edges[:, 1]] = True
        A[edges[:, 1], edges[:, 0]] = True
        return cls(A, labels=labels, name=name)

    @property
    def n_vertices(self):
        return self.adjacency.shape[0]

    @property
    def n_edges(self):
        return int(self.adjacency.sum()) // 2

    @cached_property
    def degrees(self):
        return self.adjacency.sum(axis=1)

    @property
    def valency(self):
        """The common degree, or None if the graph is not regular."""
        if not self.n_vertices:
            return 0
        degrees = self.degrees
        return int(degrees[0]) if (degrees == degrees[0]).all() else None

    def neighbors(self, x):
        return np.flatnonzero(self.adjacency[x])

    @cached_property
    def rows(self):
        """Adjacency rows as Python int bitsets, bit y set iff x ~ y."""
        packed = np.packbits(self.adjacency, axis=1, bitorder='little')
        return [int.from_bytes(row.tobytes(), 'little') for row in packed]

    @cached_property
    def distances(self):
        return distance_table(self)

    def edges(self):
        """All edges (u, v) with u < v, sorted."""
        u, v = np.nonzero(np.triu(self.adjacency, k=1))
        return list(zip(u.tolist(), v.tolist()))

    def induced(self, vertices, name=None):
        vertices = np.asarray(vertices, dtype=np.int64)
        labels = None
        if self.labels is not None:
            labels = [self.labels[x] for x in vertices]
        return Graph(self.adjacency[np.ix_(vertices, vertices)], labels=labels,
                     name=name)

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n_vertices))
        G.add_edges_from(self.edges())
        return G

    def same_as(self, other):
        """Equality as labeled graphs on 0..n-1."""
        return (self.adjacency.shape == other.adjacency.shape
                and (self.adjacency == other.adjacency).all())

    def __repr__(self):
        return 'Graph({}, v={}, e={})'.format(self.name or '', self.n_vertices,
                                              self.n_edges)


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of GF(q)^n given by its reduced row-echelon basis. Equal
    subspaces have identical bases.
    """
    basis: tuple
    q: int

    @property
    def dim(self):
        return len(self.basis)

    @property
    def ambient(self):
        return len(self.basis[0]) if self.basis else 0

    def matrix(self):
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, -1)

    def meet_dim(self, other):
        """dim(U ∩ W) = dim U + dim W - rank([U; W])."""
        field = make_field(self.q)
        stacked = np.vstack([self.matrix(), other.matrix()])
        return self.dim + other.dim - rank(stacked, field)

    def vectors(self):
        """
        All q^dim vectors of the subspace, each encoded as the integer whose
        base-q digits are its coordinates (first coordinate most significant).
        """
        field = make_field(self.q)
        M = self.matrix()
        coefficients = np.array(list(itertools.product(range(self.q),
                                                       repeat=self.dim)),
                                dtype=np.int64).reshape(-1, self.dim)
        span = np.zeros((len(coefficients), self.ambient), dtype=np.int64)
        for i in range(self.dim):
            span = field.add[span, field.mul[coefficients[:, i][:, None],
                                             M[i][None, :]]]
        weights = self.q ** np.arange(self.ambient - 1, -1, -1, dtype=np.int64)
        return span @ weights

    def __str__(self):
        return '<' + ' '.join(''.join('{:x}'.format(c) for c in row)
                              for row in self.basis) + '>'


def enumerate_subspaces(n, D, field):
    """
    All D-dimensional subspaces of GF(q)^n as canonical RREF bases, ordered
    lexicographically by pivot columns, then by free entries.

    :raises TooLarge: if n > 12 or there are more than 10^6 subspaces
    """
    if not 0 <= D <= n:
        raise ValueError('enumerate_subspaces needs 0 <= D <= n, got n={}, D={}'
                         .format(n, D))
    count = gaussian_binomial(n, D, field.q)
    if n > MAX_AMBIENT_DIMENSION or count > MAX_SUBSPACES:
        raise TooLarge('[{} {}]_{} = {} subspaces is beyond the enumeration '
                       'bound'.format(n, D, field.q, count))
    subspaces = []
    for pivots in itertools.combinations(range(n), D):
        free = [(i, c) for i, p in enumerate(pivots)
                for c in range(p + 1, n) if c not in pivots]
        for values in itertools.product(range(field.q), repeat=len(free)):
            M = [[0] * n for _ in range(D)]
            for i, p in enumerate(pivots):
                M[i][p] = 1
            for (i, c), value in zip(free, values):
                M[i][c] = value
            subspaces.append(Subspace(tuple(tuple(row) for row in M), field.q))
    assert len(subspaces) == count
    logger.debug('enumerated %d subspaces of dimension %d in GF(%d)^%d',
                 count, D, field.q, n)
    return subspaces


def grassmann_graph(n, D, q):
    """
    J_q(n, D): vertex i is the i-th subspace of enumerate_subspaces(n, D), two
    subspaces adjacent iff they meet in dimension D-1.

    Meets are read off the product of the sparse subspace/vector incidence
    matrix with its transpose: two subspaces meeting in dimension d share
    q^d - 1 nonzero vectors.

    Subspaces can be enumerated up to MAX_SUBSPACES, but a graph is held as
    dense v x v matrices, so J_q(n, D) itself is capped at MAX_VERTICES
    vertices (about 1.2 GB of adjacency and distances).

    :raises TooLarge: past either bound
    """
    field = make_field(q)
    count = gaussian_binomial(n, D, q)
    if count > MAX_VERTICES:
        raise TooLarge('J_{}({},{}) has {} vertices; dense graphs are capped at '
                       '{} vertices to bound memory'.format(q, n, D, count,
                                                            MAX_VERTICES),
                       witness=count)
    subspaces = enumerate_subspaces(n, D, field)
    columns = np.concatenate([s.vectors()[1:] for s in subspaces])
    rows = np.repeat(np.arange(len(subspaces)), q ** D - 1)
    incidence = sparse.csr_matrix(
        (np.ones(len(columns), dtype=np.int32), (rows, columns)),
        shape=(len(subspaces), q ** n))
    shared = (incidence @ incidence.T).toarray()
    A = shared == q ** (D - 1) - 1
    np.fill_diagonal(A, False)
    logger.info('constructed J_%d(%d,%d): %d vertices, %d edges', q, n, D,
                A.shape[0], int(A.sum()) // 2)
    return Graph(A, labels=subspaces, name='J_{}({},{})'.format(q, n, D))


def complete_graph(n):
    return Graph(~np.eye(n, dtype=bool), name='K_{}'.format(n))


def cocktail_party(m):
    """The complement of a perfect matching on 2m vertices; m = 3 is K_{2,2,2}."""
    A = ~np.eye(2 * m, dtype=bool)
    for i in range(m):
        A[2 * i, 2 * i + 1] = A[2 * i + 1, 2 * i] = False
    return Graph(A, name='CP({})'.format(m))


def grid_graph(s, t=None):
    """
    The (s x t)-grid K_s x K_t; vertex i*t + j is the cell (i, j).
    """
    t = s if t is None else t
    if s < 2 or t < 2:
        raise ValueError('grids need s, t >= 2, got {}x{}'.format(s, t))
    A = (np.kron(np.eye(s, dtype=int), 1 - np.eye(t, dtype=int))
         + np.kron(1 - np.eye(s, dtype=int), np.eye(t, dtype=int)))
    labels = [(i, j) for i in range(s) for j in range(t)]
    return Graph(A, labels=labels, name='grid({},{})'.format(s, t))


def clique_extension(g, q):
    """
    Replace every vertex v by the clique {v*q, ..., v*q + q-1}; copies of u
    and v are adjacent iff u = v or u ~ v.
    """
    if q < 1:
        raise ValueError('clique extension needs q >= 1, got {}'.format(q))
    if q == 1:
        return Graph(g.adjacency, labels=g.labels, name=g.name)
    closed = g.adjacency.astype(int) + np.eye(g.n_vertices, dtype=int)
    A = np.kron(closed, np.ones((q, q), dtype=int)) - np.eye(g.n_vertices * q,
                                                             dtype=int)
    labels = None
    if g.labels is not None:
        labels = [(label, c) for label in g.labels for c in range(q)]
    return Graph(A, labels=labels, name='{}-ext({})'.format(q, g.name or ''))


def shrikhande_graph():
    """
    Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
    vertex 4a + b is (a, b).
    """
    A = np.zeros((16, 16), dtype=bool)
    for a, b in itertools.product(range(4), repeat=2):
        for da, db in SHRIKHANDE_CONNECTION_SET:
            A[4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4] = True
    labels = [(a, b) for a in range(4) for b in range(4)]
    return Graph(A, labels=labels, name='Shrikhande')


def relabel(g, order):
    """The graph whose vertex i is vertex order[i] of g."""
    order = np.asarray(order, dtype=np.int64)
    if sorted(order.tolist()) != list(range(g.n_vertices)):
        raise ValueError('order is not a permutation of the vertices')
    return g.induced(order, name=g.name)


@dataclass(frozen=True, eq=False)
class DistanceTable:
    dist: np.ndarray
    diameter: int

    def layer(self, x, i):
        """Gamma_i(x)."""
        return np.flatnonzero(self.dist[x] == i)


def distance_table(g):
    """
    All-pairs path-length distances by breadth-first search.

    :raises Disconnected: if some pair of vertices has no path between them
    """
    if not g.n_vertices:
        return DistanceTable(np.zeros((0, 0), dtype=np.int16), 0)
    dist = csgraph.shortest_path(sparse.csr_matrix(g.adjacency),
                                 directed=False, unweighted=True)
    if np.isinf(dist).any():
        x, y = map(int, np.argwhere(np.isinf(dist))[0])
        raise Disconnected('{} is disconnected: no path from {} to {}'.format(
            g.name or 'graph', x, y), witness=(x, y))
    dist = dist.astype(np.int16)
    return DistanceTable(dist, int(dist.max()))


def _layer_counts(g, dt, j):
    """(x, y) -> |Gamma_j(x) ∩ Gamma(y)| for all pairs."""
    L = sparse.csr_matrix(dt.dist == j, dtype=np.int64)
    return (L @ sparse.csr_matrix(g.adjacency, dtype=np.int64)).toarray()


def common_neighbours(g):
    """(x, y) -> |Gamma(x) ∩ Gamma(y)| for all pairs, as int64."""
    A = sparse.csr_matrix(g.adjacency, dtype=np.int64)
    return (A @ A).toarray()


def _constant_on(values, mask, label):
    """The common value of values[mask], or a witness pair where it differs."""
    xs, ys = np.nonzero(mask)
    sample = values[xs, ys]
    if not sample.size:
        return None, None
    bad = np.flatnonzero(sample != sample[0])
    if bad.size:
        x, y = int(xs[bad[0]]), int(ys[bad[0]])
        return None, NotDistanceRegular(
            '{} is {} for ({},{}) but {} for ({},{})'.format(
                label, int(sample[bad[0]]), x, y, int(sample[0]), int(xs[0]),
                int(ys[0])), witness=(x, y))
    return int(round(sample[0])), None


def empirical_intersection_array(g, dt=None):
    """
    Count |Gamma(y) ∩ Gamma_{i-1}(x)| and |Gamma(y) ∩ Gamma_{i+1}(x)| for every
    ordered pair at distance i and return the array if every count is
    constant.

    :raises NotDistanceRegular: with the first violating pair as witness
    """
    dt = dt or g.distances
    D = dt.diameter
    if D == 0:
        raise NotDistanceRegular('a single vertex has no intersection array')
    b_list, c_list = [], []
    for i in range(D + 1):
        mask = dt.dist == i
        if i < D:
            value, error = _constant_on(_layer_counts(g, dt, i + 1), mask,
                                        'b_{}'.format(i))
            if error:
                raise error
            b_list.append(value)
        if i > 0:
            value, error = _constant_on(_layer_counts(g, dt, i - 1), mask,
                                        'c_{}'.format(i))
            if error:
                raise error
            c_list.append(value)
    ia = IntersectionArray(tuple(b_list), tuple(c_list))
    logger.debug('empirical intersection array of %r: %s', g, ia)
    return ia


def _exact_dtype(bound):
    """
    dtype in which integer matrix products with entries and partial sums
    bounded by `bound` stay exact.
    """
    if bound < 2 ** 63:
        return np.int64
    return object


def _exact_product(factors, bound):
    """Product of commuting integer matrices, sparse factors when int64 suffices."""
    dtype = _exact_dtype(bound)
    if dtype is object:
        logger.warning('product bound %d exceeds 64 bits; using Python '
                       'integers', bound)
    result = factors[0].astype(dtype)
    for factor in factors[1:]:
        if dtype is object:
            result = result @ factor.astype(dtype)
        else:
            result = np.asarray(sparse.csr_matrix(factor, dtype=dtype) @ result)
    return result


def verify_spectrum_exact(g, sp):
    """
    Exact check that sp is the spectrum of a connected regular graph g.

    Two stages, both in integers:
      1. annihilation: prod_{j>=1} (A - theta_j I) equals
         prod_{j>=1} (k - theta_j) / v times the all-one matrix;
      2. moments: Tr(A^l) = sum_j m_j theta_j^l for l = 0..d.
    Together they pin the multiplicities through the Vandermonde system.
    """
    thetas = sp.eigenvalues
    if any(Fraction(theta).denominator != 1 for theta in thetas):
        logger.info('non-integral eigenvalue in %s; an integer matrix cannot '
                    'have it', sp)
        return False
    thetas = [int(theta) for theta in thetas]
    v, k = g.n_vertices, g.valency
    if sp.v != v or k is None or thetas[0] != k:
        logger.info('spectrum %s does not fit v=%d, k=%s', sp, v, k)
        return False
    A = g.adjacency.astype(np.int64)
    identity = np.eye(v, dtype=np.int64)

    scale = Fraction(1)
    for theta in thetas[1:]:
        scale *= k - theta
    scale /= v
    if thetas[1:]:
        if scale.denominator != 1:
            return False
        bound = 1
        for theta in thetas[1:]:
            bound *= k + abs(theta)
        product = _exact_product([A - theta * identity for theta in thetas[1:]],
                                 bound * v)
        if not (product == int(scale)).all():
            logger.info('annihilation fails for %r against %s', g, sp)
            return False

    power = identity.astype(_exact_dtype(max(k, 1) ** len(thetas) * v))
    for ell in range(len(thetas)):
        if ell:
            power = _exact_product([power, A], max(k, 1) ** len(thetas) * v)
        trace = sum(int(x) for x in power.diagonal())
        if trace != sp.moment(ell):
            logger.info('Tr(A^%d) = %d but the spectrum gives %d', ell, trace,
                        sp.moment(ell))
            return False
    return True


def _direct_counts(g, x, common):
    nb = g.neighbors(x)
    triangles = int(g.adjacency[np.ix_(nb, nb)].sum()) // 2
    shared = common[np.ix_(nb, nb)]
    # 4-cycles x-a-b-c-x with a < c in Gamma(x) and b != x
    quadrangles = (int(shared.sum()) - int(shared.trace())) // 2
    quadrangles -= len(nb) * (len(nb) - 1) // 2
    return triangles, quadrangles


def triangle_quadrangle_check(g, sp):
    """
    Triangles and quadrangles (diagonals allowed) through a vertex of a
    connected regular graph with four distinct eigenvalues:

        triangles = Tr(A^3) / 2v,  quadrangles = Tr(A^4) / 2v - k^2 + k/2,

    taken from sp and confirmed by counting at every vertex.

    :raises NonConstantCount: with the first vertex whose count differs
    """
    if len(sp.pairs) != 4:
        raise ValueError('triangle_quadrangle_check needs 4 distinct '
                         'eigenvalues, got {}'.format(sp))
    k = g.valency
    if k is None:
        raise ValueError('{!r} is not regular'.format(g))
    v = g.n_vertices
    triangles = Fraction(sp.moment(3), 2 * v)
    quadrangles = Fraction(sp.moment(4), 2 * v) - k * k + Fraction(k, 2)
    common = common_neighbours(g)
    for x in range(v):
        counted = _direct_counts(g, x, common)
        if counted != (triangles, quadrangles):
            raise NonConstantCount(
                'vertex {} lies on {} triangles and {} quadrangles, spectrum '
                'predicts {} and {}'.format(x, counted[0], counted[1],
                                            triangles, quadrangles),
                witness=x)
    return int(triangles), int(quadrangles)


def enumerate_quadrangles(g, x):
    """
    Quadrangles through x by explicit enumeration of 4-cycles (chords
    allowed); only for graphs with at most 200 vertices.
    """
    if g.n_vertices > QUADRANGLE_ENUMERATION_LIMIT:
        raise TooLarge('explicit quadrangle enumeration is limited to {} '
                       'vertices'.format(QUADRANGLE_ENUMERATION_LIMIT))
    cycles = set()
    nb = g.neighbors(x).tolist()
    for a, c in itertools.combinations(nb, 2):
        for b in np.flatnonzero(g.adjacency[a] & g.adjacency[c]).tolist():
            if b != x:
                cycles.add(frozenset(frozenset(edge) for edge in
                                     ((x, a), (a, b), (b, c), (c, x))))
    return len(cycles)


def local_graph(g, x):
    """The subgraph induced on Gamma(x)."""
    return g.induced(g.neighbors(x), name='local({})'.format(x))


def mu_graph(g, dt, x, y):
    """
    The subgraph induced on Gamma(x) ∩ Gamma(y) for x, y at distance 2.

    :raises NotAtDistanceTwo:
    """
    if dt.dist[x, y] != 2:
        raise NotAtDistanceTwo('vertices {} and {} are at distance {}'.format(
            x, y, dt.dist[x, y]), witness=(x, y))
    common = np.flatnonzero(g.adjacency[x] & g.adjacency[y])
    return g.induced(common, name='mu({},{})'.format(x, y))


def local_valencies(g, x):
    """The valency of every vertex of Gamma(x) inside the local graph."""
    nb = g.neighbors(x)
    return g.adjacency[np.ix_(nb, nb)].sum(axis=1).astype(np.int64)


@dataclass(frozen=True, eq=False)
class TripleCounts:
    """counts[l, m, n] = |Gamma_l(x) ∩ Gamma_m(y) ∩ Gamma_n(z)|."""
    x: int
    y: int
    z: int
    counts: np.ndarray

    def __getitem__(self, lmn):
        l, m, n = lmn
        if max(lmn) >= self.counts.shape[0] or min(lmn) < 0:
            return 0
        return int(self.counts[l, m, n])

    def total(self):
        return int(self.counts.sum())


def triple_counts(g, dt, x, y, z):
    """
    Classify every vertex by its distances to x, y and z, for y, z in Gamma(x).
    """
    if not (g.adjacency[x, y] and g.adjacency[x, z]):
        raise ValueError('triple_counts needs y, z adjacent to x; got '
                         '({},{},{})'.format(x, y, z))
    size = dt.diameter + 1
    counts = np.zeros((size, size, size), dtype=np.int64)
    np.add.at(counts, (dt.dist[x], dt.dist[y], dt.dist[z]), 1)
    return TripleCounts(x, y, z, counts)


def triple_count_batch(dt, xs, ys, zs, cells):
    """
    Vectorized [l,m,n] counts.

    :return: int array of shape (len(xs), len(cells)) whose entry (t, c) is
        |Gamma_l(xs[t]) ∩ Gamma_m(ys[t]) ∩ Gamma_n(zs[t])| for cells[c] = (l,m,n)
    """
    dx, dy, dz = dt.dist[xs], dt.dist[ys], dt.dist[zs]
    out = np.zeros((len(xs), len(cells)), dtype=np.int64)
    for c, (l, m, n) in enumerate(cells):
        out[:, c] = ((dx == l) & (dy == m) & (dz == n)).sum(axis=1)
    return out


def max_cliques(g, min_size, limit=MAX_ENUMERATED_CLIQUES):
    """
    All maximal cliques with at least min_size vertices, each as a sorted
    tuple, in lexicographic order.

    :raises CliqueExplosion: if more than `limit` maximal cliques are visited
    """
    found = []
    for visited, clique in enumerate(nx.find_cliques(g.to_networkx()), 1):
        if visited > limit:
            raise CliqueExplosion('more than {} maximal cliques in {!r}'.format(
                limit, g))
        if len(clique) >= min_size:
            found.append(tuple(sorted(clique)))
    return sorted(found)


def max_coclique_size(g):
    """Size of a largest coclique, as a maximum clique of the complement."""
    if not g.n_vertices:
        return 0
    clique, _ = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    return len(clique)


def quotient_matrix(g, parts):
    """
    B[i][j] = average number of neighbours in parts[j] of a vertex of
    parts[i], as exact rationals.
    """
    cover = np.sort(np.concatenate([np.asarray(p) for p in parts]))
    if not np.array_equal(cover, np.arange(g.n_vertices)):
        raise ValueError('parts do not partition the vertex set')
    A = g.adjacency
    return [[Fraction(int(A[np.ix_(pi, pj)].sum()), len(pi)) for pj in parts]
            for pi in parts]


def clique_quotient_second_eigenvalue(g, clique):
    """
    Second eigenvalue of the quotient matrix of {clique, rest} for a regular
    graph: the trace minus the valency.
    """
    k = g.valency
    if k is None:
        raise ValueError('{!r} is not regular'.format(g))
    clique = np.asarray(clique)
    rest = np.setdiff1d(np.arange(g.n_vertices), clique)
    B = quotient_matrix(g, [clique, rest])
    return B[0][0] + B[1][1] - k


def write_graph(g, path):
    """Header `n m`, then one sorted `u v` line per edge, 0-indexed."""
    with open(path, 'w') as handle:
        handle.write('{} {}\n'.format(g.n_vertices, g.n_edges))
        for u, v in g.edges():
            handle.write('{} {}\n'.format(u, v))


def read_graph(path):
    with open(path) as handle:
        header = handle.readline().split()
    if len(header) != 2:
        raise ValueError('{}: header must be `n m`'.format(path))
    n_vertices, n_edges = map(int, header)
    if n_edges:
        edges = pd.read_csv(path, sep=' ', header=None, skiprows=1,
                            names=['u', 'v'], dtype=np.int64).values
    else:
        edges = np.zeros((0, 2), dtype=np.int64)
    if len(edges) != n_edges:
        raise ValueError('{}: header promises {} edges, found {}'.format(
            path, n_edges, len(edges)))
    if (edges[:, 0] == edges[:, 1]).any():
        raise ValueError('{}: loop in edge list'.format(path))
    g = Graph.from_edges(n_vertices, edges, name=str(path))
    if g.n_edges != n_edges:
        raise ValueError('{}: duplicate edges'.format(path))
    return g


def adjacency_digest(g):
    """FNV-1a 64 over the packed row bitsets, rows in vertex order."""
    digest = FNV_OFFSET
    for byte in np.packbits(g.adjacency, axis=1, bitorder='little').tobytes():
        digest ^= byte
        digest = (digest * FNV_PRIME) & 0xffffffffffffffff
    return '{:016x}'.format(digest)
