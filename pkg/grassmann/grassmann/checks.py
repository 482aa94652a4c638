"""
Verification suites run by the command line. Each suite takes a graph and
the parameters it is claimed to have, compares brute-force counts on the
graph with the closed formulas, and returns check records for a Report.
"""
import logging
from fractions import Fraction

import numpy as np
import pandas as pd

from grassmann.exact import bracket, gaussian_binomial
from grassmann.exceptions import (GrassmannError, NonIntegralCount,
                                  NotDistanceRegular)
from grassmann.graphs import (common_neighbours, empirical_intersection_array,
                              local_graph, mu_graph, triangle_quadrangle_check,
                              triple_count_batch, verify_spectrum_exact)
from grassmann.params import (array_from_classical, check_moments,
                              classical_spectrum, clique_ext_grid_spectrum,
                              clique_extension_spectrum, grassmann_array,
                              grassmann_classical, grid_spectrum, p_table)
from grassmann.parallel import sharded_map
from grassmann.qpoly import (Relation, as_count, congruence_obstruction,
                             lemma_ddd, local_eigenvalue_window,
                             terwilliger_poly, triple_122_from_111,
                             triple_spear)
from grassmann.recognize import (certify_grid, check_ncc_hypotheses,
                                 local_valency_sums, recognize_clique_ext_grid)
from grassmann.report import FAIL, INFO, PASS

logger = logging.getLogger(__name__)

BATCH = 2048


def record(check, ok, details=None, witness=None):
    return {'check': check, 'verdict': PASS if ok else FAIL,
            'details': details, 'witness': None if ok else witness}


def info(check, details):
    return {'check': check, 'verdict': INFO, 'details': details}


def sample_indices(total, count, rng):
    """All of range(total) if count covers it, else a sorted seeded sample."""
    if count >= total:
        return np.arange(total), 'full'
    return np.sort(rng.choice(total, size=count, replace=False)), 'sample'


def array_suite(g, n, D, q):
    records = []
    cp = grassmann_classical(n, D, q)
    ia = array_from_classical(cp)
    records.append(record('array.formulas', ia == grassmann_array(n, D, q),
                          {'classical': str(cp), 'array': str(ia)}))
    expected_v = gaussian_binomial(n, D, q)
    records.append(record('array.vertices', g.n_vertices == expected_v,
                          {'vertices': g.n_vertices, 'expected': expected_v}))
    try:
        empirical = empirical_intersection_array(g)
    except GrassmannError as error:
        records.append(record('array.empirical', False, {'error': str(error)},
                              error.witness))
        return records
    records.append(record('array.empirical', empirical == ia,
                          {'empirical': str(empirical), 'expected': str(ia)}))
    if empirical != ia:
        return records

    # p^h_ij from one pair (0, y) per distance h
    pt = p_table(ia)
    dist = g.distances.dist
    for h in range(D + 1):
        y = int(np.flatnonzero(dist[0] == h)[0])
        counted = pd.crosstab(dist[0], dist[y]).reindex(
            index=range(D + 1), columns=range(D + 1), fill_value=0)
        expected = pt.as_frame(h)
        ok = (counted.values == expected.values.astype(np.int64)).all()
        records.append(record('array.p_table', ok, {'h': h, 'pair': [0, y]},
                              witness=[0, y]))
    return records


def spectrum_suite(g, sp, label):
    ok = verify_spectrum_exact(g, sp)
    k = g.valency
    return [
        record('spectrum.exact', ok, {'against': label, 'spectrum': sp.pairs}),
        record('spectrum.moments', k is not None and check_moments(sp, g.n_vertices, k),
               {'v': g.n_vertices, 'k': k}),
    ]


def expected_local_spectrum(n, D, q):
    """Spectrum of the q-clique extension of the ([n-D 1] x [D 1])-grid."""
    return clique_extension_spectrum(grid_spectrum(bracket(n - D, q),
                                                   bracket(D, q)), q)


def _local_checks(vertices, g, n, D, q):
    sp = expected_local_spectrum(n, D, q)
    square = n == 2 * D
    r = bracket(D, q)
    sums = local_valency_sums(q, r) if square else None
    congruence = congruence_obstruction(grassmann_classical(n, D, q)) \
        if square and D >= 3 else None
    results = []
    for x in vertices:
        delta = local_graph(g, x)
        verified = verify_spectrum_exact(delta, sp)
        result = {'vertex': int(x), 'spectrum': verified,
                  'eigenvalues': list(sp.eigenvalues[1:]) if verified else None}
        if len(sp.pairs) == 4:
            try:
                result['triangles'] = triangle_quadrangle_check(delta, sp)
            except ValueError:
                result['triangles'] = None
        A = delta.adjacency.astype(np.int64)
        common = common_neighbours(delta)
        off = ~delta.adjacency & ~np.eye(delta.n_vertices, dtype=bool)
        result['adjacent'] = np.bincount(common[delta.adjacency]).tolist()
        result['distance2'] = np.bincount(common[off]).tolist()
        if square:
            s1 = (A * common).sum(axis=1)
            s2 = (A * common ** 2).sum(axis=1)
            spread = s2 - 2 * (q * r - 2) * s1 + (q * r - 2) ** 2 * delta.degrees
            result['valency_sums'] = bool((s1 == sums[0]).all()
                                          and (s2 == sums[1]).all()
                                          and (spread == sums[2]).all())
            report = recognize_clique_ext_grid(delta, q, r)
            result['recognized'] = report.accepted
            result['recognition'] = report.as_dict()
        if congruence is not None:
            m = congruence.modulus
            adjacent = common[delta.adjacency]
            result['congruence'] = bool((adjacent % m == congruence.residue_adjacent).all())
            far = common[off]
            if congruence.exact_distance2:
                result['congruence'] &= bool((far == 2 * q).all())
            else:
                result['congruence'] &= bool((far % m == congruence.residue_distance2).all())
        results.append(result)
    return results


def _histogram(counts):
    """Merge bincount lists into a {value: occurrences} dict."""
    total = pd.Series(dtype=np.int64)
    for c in counts:
        total = total.add(pd.Series(c), fill_value=0)
    return {int(k): int(v) for k, v in total.items() if v}


def _eigenvalue_records(cp, results):
    """
    Window and Terwilliger checks on the eigenvalues of the local graphs whose
    spectrum was verified. Both fail if any sampled local graph was not.
    """
    unverified = [res['vertex'] for res in results if res['eigenvalues'] is None]
    if unverified:
        reason = {'reason': 'local spectrum not verified',
                  'unverified': len(unverified)}
        return [record('local.window', False, reason, unverified[0]),
                record('local.terwilliger', False, reason, unverified[0])]
    local = sorted({theta for res in results for theta in res['eigenvalues']},
                   reverse=True)
    bound = local_eigenvalue_window(cp)
    outside = [theta for theta in local if not bound.admits(theta)]
    records = [record('local.window', not outside, {
        'theta_hat_1': bound.theta_hat_1, 'theta_hat_D': bound.theta_hat_D,
        'min_mult': bound.min_mult_theta_hat_1, 'eigenvalues': local},
        outside[0] if outside else None)]
    values = {}
    negative = []
    for i in range(2, cp.D):
        poly = terwilliger_poly(cp, i)
        values[i] = [poly(Fraction(theta)) for theta in local]
        negative += [theta for theta, v in zip(local, values[i]) if v < 0]
    records.append(record('local.terwilliger', not negative, {'values': values},
                          negative[0] if negative else None))
    return records


def local_suite(g, n, D, q, local_sample, seed, parallelism=1):
    rng = np.random.default_rng(seed)
    vertices, mode = sample_indices(g.n_vertices, local_sample, rng)
    sp = expected_local_spectrum(n, D, q)
    logger.debug('local suite on %d vertices (%s)', len(vertices), mode)
    results = sharded_map(_local_checks, vertices.tolist(), parallelism,
                          g=g, n=n, D=D, q=q)
    records = [info('local.sample', {'vertices': len(results), 'mode': mode,
                                     'seed': seed})]

    def first_failure(key):
        bad = [res['vertex'] for res in results if not res.get(key)]
        return bad[0] if bad else None

    witness = first_failure('spectrum')
    records.append(record('local.spectrum', witness is None,
                          {'expected': sp.pairs}, witness))
    if len(sp.pairs) == 4:
        witness = first_failure('triangles')
        counts = sorted({res['triangles'] for res in results if res['triangles']})
        records.append(record('local.triangles', witness is None,
                              {'triangles_quadrangles': counts}, witness))
    else:
        skipped = '{} local eigenvalues'.format(len(sp.pairs))
        records.append(info('local.triangles', {'skipped': skipped}))

    cp = grassmann_classical(n, D, q)
    if n == 2 * D and D >= 3:
        records.extend(_eigenvalue_records(cp, results))
        witness = first_failure('congruence')
        records.append(record('local.congruence', witness is None, {
            'adjacent': _histogram(res['adjacent'] for res in results),
            'distance2': _histogram(res['distance2'] for res in results)},
            witness))
    if n == 2 * D:
        witness = first_failure('valency_sums')
        records.append(record('local.valency_sums', witness is None,
                              {'sums': local_valency_sums(q, bracket(D, q))},
                              witness))
        witness = first_failure('recognized')
        deltas = sorted({tuple(res['recognition']['delta'] or ())
                         for res in results})
        records.append(record('local.recognition', witness is None,
                              {'delta': deltas}, witness))
    else:
        records.append(info('local.recognition',
                            {'skipped': 'local graphs are rectangular grids'}))
    return records


def _certify_mus(pairs, g, q):
    dt = g.distances
    out = []
    for x, y in pairs:
        mu = mu_graph(g, dt, x, y)
        out.append(mu.n_vertices == (q + 1) ** 2 and bool(certify_grid(mu, q + 1)))
    return out


def mu_suite(g, q, mu_sample, seed, parallelism=1):
    rng = np.random.default_rng(seed)
    xs, ys = np.nonzero(np.triu(g.distances.dist == 2, k=1))
    chosen, mode = sample_indices(len(xs), mu_sample, rng)
    pairs = list(zip(xs[chosen].tolist(), ys[chosen].tolist()))
    logger.debug('mu suite on %d distance-2 pairs (%s)', len(pairs), mode)
    ok = sharded_map(_certify_mus, pairs, parallelism, g=g, q=q)
    bad = [pair for pair, good in zip(pairs, ok) if not good]
    return [record('mu.grid', not bad, {'checked': len(pairs), 'mode': mode,
                                        'grid': q + 1, 'seed': seed},
                   bad[0] if bad else None)]


def _count_or_missing(value):
    """The count as an int, or -1 when value is not a vertex count."""
    try:
        return as_count(value)
    except NonIntegralCount:
        return -1


def require_regular(g):
    """
    :raises NotDistanceRegular: with two vertices of different degree
    """
    if g.valency is None:
        degrees = g.degrees
        y = int(np.flatnonzero(degrees != degrees[0])[0])
        raise NotDistanceRegular(
            '{!r} is not regular: vertex 0 has degree {}, vertex {} has {}'
            .format(g, int(degrees[0]), y, int(degrees[y])), witness=(0, y))


def _sample_triples(g, count, rng):
    """Seeded (x; y, z) with y != z both in Gamma(x); g must be regular."""
    k = g.valency
    neighbours = np.nonzero(g.adjacency)[1].reshape(g.n_vertices, k)
    xs = rng.integers(0, g.n_vertices, size=count)
    i = rng.integers(0, k, size=count)
    j = rng.integers(0, k - 1, size=count)
    j = j + (j >= i)
    return np.stack([xs, neighbours[xs, i], neighbours[xs, j]], axis=1)


def _all_triples(g):
    rows = []
    for x in range(g.n_vertices):
        nb = g.neighbors(x)
        y, z = np.meshgrid(nb, nb, indexing='ij')
        keep = y != z
        rows.append(np.stack([np.full(keep.sum(), x), y[keep], z[keep]], axis=1))
    return np.concatenate(rows)


def _count_triples(chunks, g, cells):
    dt = g.distances
    return [triple_count_batch(dt, c[:, 0], c[:, 1], c[:, 2], cells)
            for c in chunks]


def triples_suite(g, n, D, q, mode, sample, seed, parallelism=1):
    require_regular(g)
    rng = np.random.default_rng(seed)
    cp = grassmann_classical(n, D, q)
    triples = _all_triples(g) if mode == 'full' else _sample_triples(g, sample, rng)
    cells = [(1, 1, 1), (1, 2, 2)] + [(i, i + 1, i + 1) for i in range(1, D)]
    cells.append((D - 1, D, D))
    chunks = [triples[lo:lo + BATCH] for lo in range(0, len(triples), BATCH)]
    logger.debug('triple counts on %d triples in %d batches', len(triples), len(chunks))
    counts = np.concatenate(sharded_map(_count_triples, chunks, parallelism,
                                        g=g, cells=cells))
    j = g.distances.dist[triples[:, 1], triples[:, 2]]
    t111, t122 = counts[:, 0], counts[:, 1]
    records = [info('triples.sample', {'triples': len(triples), 'mode': mode,
                                       'seed': seed})]

    def first_bad(mask):
        bad = np.flatnonzero(~mask)
        return triples[bad[0]].tolist() if bad.size else None

    expected_122 = np.array([triple_122_from_111(cp, Relation(int(d)), int(t))
                             for d, t in zip(j, t111)])
    witness = first_bad(expected_122 == t122)
    records.append(record('triples.122', witness is None, {}, witness))

    cache = {}
    mismatches = {}
    for i in range(1, D):
        column = counts[:, 2 + i - 1]
        ok = np.ones(len(triples), dtype=bool)
        for row, (d, t, value) in enumerate(zip(j, t122, column)):
            key = (i, int(d), int(t))
            if key not in cache:
                cache[key] = _count_or_missing(
                    triple_spear(cp, i, int(d), int(t)))
            ok[row] = cache[key] == value
        mismatches[i] = first_bad(ok)
    witness = next((w for w in mismatches.values() if w is not None), None)
    records.append(record('triples.spear', witness is None,
                          {'levels': list(range(1, D))}, witness))

    if n == 2 * D and D >= 3:
        congruence = congruence_obstruction(cp)
        m = congruence.modulus
        adjacent, far = t111[j == 1], t111[j == 2]
        ok_adjacent = adjacent % m == congruence.residue_adjacent
        ok_far = (far == 2 * q) if congruence.exact_distance2 else \
            (far % m == congruence.residue_distance2)
        witness = None
        if not ok_adjacent.all():
            witness = triples[j == 1][np.flatnonzero(~ok_adjacent)[0]].tolist()
        elif not ok_far.all():
            witness = triples[j == 2][np.flatnonzero(~ok_far)[0]].tolist()
        records.append(record('triples.congruence', witness is None, {
            'modulus': m,
            'adjacent_residues': pd.Series(adjacent % m).value_counts().sort_index().to_dict(),
            'distance2_values': pd.Series(far).value_counts().sort_index().to_dict(),
        }, witness))

        tddd = counts[:, -1]
        expected = np.array([
            _count_or_missing(lemma_ddd(cp, Relation(int(d)), int(t)))
            for d, t in zip(j, t111)])
        witness = first_bad(expected == tddd)
        records.append(record('triples.lemma_ddd', witness is None,
                              {'cell': [D - 1, D, D]}, witness))
    return records


def ncc_suite(g, mu_sample, sample, seed, parallelism=1):
    report = check_ncc_hypotheses(g, mu_sample=mu_sample, coclique_sample=sample,
                                  seed=seed, parallelism=parallelism)
    return [record('ncc.hypotheses', report.ok, {
        'mu_checked': report.mu_checked, 'mu_mode': report.mu_mode,
        'mu_shapes': report.mu_shapes,
        'cocliques_checked': report.cocliques_checked,
        'coclique_mode': report.coclique_mode}, report.witness)]


def grid_suite(g, q, r, spectral=True):
    """For a graph claimed to be the q-clique extension of the (r x r)-grid."""
    records = []
    if spectral:
        records.extend(spectrum_suite(g, clique_ext_grid_spectrum(q, r),
                                      '{}-ext grid({})'.format(q, r)))
    report = recognize_clique_ext_grid(g, q, r)
    records.append(record('local.recognition', report.accepted,
                          report.as_dict(), report.witness))
    return records


def grassmann_spectrum_suite(g, n, D, q):
    return spectrum_suite(g, classical_spectrum(n, D, q),
                          'J_{}({},{})'.format(q, n, D))
