import pytest

from grassmann.checks import local_suite, require_regular, triples_suite
from grassmann.exceptions import NotDistanceRegular
from grassmann.graphs import Graph, complete_graph


def by_check(records):
    return {r['check']: r for r in records}


def test_local_suite_on_j2_6_3(j2_6_3):
    checks = by_check(local_suite(j2_6_3, 6, 3, 2, local_sample=3, seed=1))
    for name in ('local.spectrum', 'local.window', 'local.terwilliger',
                 'local.congruence', 'local.recognition'):
        assert checks[name]['verdict'] == 'pass', name
    assert checks['local.window']['details']['eigenvalues'] == [11, -1, -3]


def test_local_eigenvalue_checks_need_a_verified_spectrum():
    checks = by_check(local_suite(complete_graph(99), 6, 3, 2, local_sample=3,
                                  seed=1))
    assert checks['local.spectrum']['verdict'] == 'fail'
    for name in ('local.window', 'local.terwilliger'):
        assert checks[name]['verdict'] == 'fail', name
        assert checks[name]['details']['reason'] == 'local spectrum not verified'
        assert checks[name]['details']['unverified'] == 3
        assert checks[name]['witness'] == checks['local.spectrum']['witness']


def test_require_regular():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NotDistanceRegular) as error:
        require_regular(star)
    assert error.value.witness == (0, 1)
    require_regular(complete_graph(5))


def test_triples_suite_rejects_irregular_graphs():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotDistanceRegular):
        triples_suite(path, 4, 2, 2, 'sample', 100, 42)
    with pytest.raises(NotDistanceRegular):
        triples_suite(path, 4, 2, 2, 'full', 100, 42)


def test_triples_suite_full_enumeration(j2_4_2):
    checks = by_check(triples_suite(j2_4_2, 4, 2, 2, 'full', 0, 42))
    assert checks['triples.sample']['details'] == {'triples': 35 * 18 * 17,
                                                   'mode': 'full', 'seed': 42}
    assert checks['triples.122']['verdict'] == 'pass'
    assert checks['triples.spear']['verdict'] == 'pass'
    assert all(r['verdict'] != 'fail' for r in checks.values())
