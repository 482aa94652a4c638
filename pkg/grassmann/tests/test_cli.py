import json

import pytest

from grassmann.cli import main
from grassmann.graphs import (Graph, clique_extension, grid_graph,
                              shrikhande_graph, write_graph)
from grassmann.params import grassmann_array, p_table


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def by_check(out):
    return {r['check']: r for r in records(out)}


@pytest.fixture(scope='module')
def j2_4_2_file(tmp_path_factory, j2_4_2):
    path = tmp_path_factory.mktemp('graphs') / 'j2_4_2.txt'
    write_graph(j2_4_2, path)
    return str(path)


def write(tmp_path, g, name):
    path = tmp_path / name
    write_graph(g, path)
    return str(path)


def test_params(capsys):
    code, out = run(capsys, 'params', '6', '3', '2', '--format', 'json')
    assert code == 0
    checks = by_check(out)
    assert checks['params.array']['verdict'] == 'pass'
    assert checks['params.array']['details']['array'] == '{98,72,32;1,9,49}'
    assert checks['params.local']['details']['theta_hat_1'] == -3
    assert checks['params.local']['details']['local_spectrum'] == \
        [[25, 1], [11, 12], [-1, 49], [-3, 36]]
    assert checks['params.chi']['details']['scope'] is False
    assert records(out)[0]['check'] == 'command'
    assert records(out)[-1]['check'] == 'timings'


def test_params_text_report(capsys):
    code, out = run(capsys, 'params', '4', '2', '3')
    assert code == 0
    assert 'params.spectrum' in out
    assert 'summary' in out


@pytest.mark.parametrize('argv', [
    [],
    ['params', '5', '3', '2'],
    ['params', 'x', '3', '2'],
    ['params', '6', '3', '1'],
    ['construct', '4', '2', '6'],
    ['construct', '4', '2', '32'],
    ['verify', 'missing.txt', '--n', '4', '--D', '2', '--q', '2'],
    ['verify', 'missing.txt', '--q', '2', '--r', '1'],
    ['params', '6', '3', '2', '--sample', '0'],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 1


def test_recognize_needs_r(capsys, j2_4_2_file):
    assert main(['recognize', j2_4_2_file, '--q', '2']) == 1


def test_construct(capsys, tmp_path):
    out_path = tmp_path / 'j.txt'
    code, out = run(capsys, 'construct', '4', '2', '2', '--out', str(out_path),
                    '--format', 'json')
    assert code == 0
    checks = by_check(out)
    assert checks['construct.graph']['details']['vertices'] == 35
    assert checks['construct.array']['verdict'] == 'pass'
    assert out_path.read_text().splitlines()[0] == '35 315'


def test_verify_all_levels(capsys, j2_4_2_file):
    code, out = run(capsys, 'verify', j2_4_2_file, '--n', '4', '--D', '2',
                    '--q', '2', '--sample', '2000', '--format', 'json')
    assert code == 0
    checks = by_check(out)
    for name in ('array.empirical', 'array.p_table', 'spectrum.exact',
                 'local.spectrum', 'local.triangles', 'local.valency_sums',
                 'local.recognition', 'mu.grid', 'triples.122',
                 'triples.spear', 'ncc.hypotheses'):
        assert checks[name]['verdict'] == 'pass', name
    assert checks['summary']['details']['failed'] == 0


def test_verify_wrong_parameters(capsys, j2_4_2_file):
    code, out = run(capsys, 'verify', j2_4_2_file, '--n', '4', '--D', '2',
                    '--q', '3', '--level', 'array', '--format', 'json')
    assert code == 2
    checks = by_check(out)
    assert checks['array.vertices']['verdict'] == 'fail'
    assert checks['summary']['verdict'] == 'fail'


def test_verify_disconnected(capsys, tmp_path):
    path = write(tmp_path, Graph.from_edges(4, [(0, 1), (2, 3)]), 'two.txt')
    code, out = run(capsys, 'verify', path, '--n', '4', '--D', '2', '--q', '2',
                    '--format', 'json')
    assert code == 2
    assert by_check(out)['graph.connected']['witness'] == [0, 2]


def test_verify_grid_against_shrikhande(capsys, tmp_path):
    grid = write(tmp_path, grid_graph(4), 'grid.txt')
    shrikhande = write(tmp_path, shrikhande_graph(), 'shrikhande.txt')
    code, out = run(capsys, 'verify', grid, '--q', '1', '--r', '4',
                    '--format', 'json')
    assert code == 0
    code, out = run(capsys, 'verify', shrikhande, '--q', '1', '--r', '4',
                    '--format', 'json')
    assert code == 2
    checks = by_check(out)
    assert checks['spectrum.exact']['verdict'] == 'pass'
    assert checks['local.recognition']['verdict'] == 'fail'
    assert checks['local.recognition']['details']['stage'] == 'lines'


def test_recognize(capsys, tmp_path):
    path = write(tmp_path, clique_extension(grid_graph(7), 2), 'ext.txt')
    code, out = run(capsys, 'recognize', path, '--q', '2', '--r', '7',
                    '--spectral', '--congruence', '--format', 'json')
    assert code == 0
    details = by_check(out)['recognize']['details']
    assert details['verdict'] == 'accepted'
    assert details['delta'] == [0, 24, 1]
    assert details['kappa'] == '73/84'


def test_triples_on_j2_6_3(capsys, tmp_path, j2_6_3):
    path = write(tmp_path, j2_6_3, 'j2_6_3.txt')
    code, out = run(capsys, 'triples', path, '--n', '6', '--D', '3', '--q', '2',
                    '--sample', '3000', '--format', 'json')
    assert code == 0
    checks = by_check(out)
    for name in ('triples.122', 'triples.spear', 'triples.congruence',
                 'triples.lemma_ddd'):
        assert checks[name]['verdict'] == 'pass', name
    assert set(checks['triples.congruence']['details']['distance2_values']) == \
        {'4'}


def test_reports_are_deterministic(capsys, j2_4_2_file):
    argv = ['verify', j2_4_2_file, '--n', '4', '--D', '2', '--q', '2',
            '--level', 'triples', '--sample', '500', '--seed', '3',
            '--format', 'json']
    first = run(capsys, *argv)[1].splitlines()[:-1]
    second = run(capsys, *argv)[1].splitlines()[:-1]
    assert first == second


def test_parallelism_does_not_change_reports(capsys, j2_4_2_file):
    argv = ['verify', j2_4_2_file, '--n', '4', '--D', '2', '--q', '2',
            '--sample', '3000', '--mu-sample', '100', '--format', 'json']
    serial = run(capsys, *argv, '--parallelism', '1')[1].splitlines()[:-1]
    pooled = run(capsys, *argv, '--parallelism', '3')[1].splitlines()[:-1]
    assert serial == pooled


def test_full_triples_on_j2_4_2(capsys, j2_4_2_file):
    code, out = run(capsys, 'triples', j2_4_2_file, '--n', '4', '--D', '2',
                    '--q', '2', '--mode', 'full', '--format', 'json')
    assert code == 0
    checks = by_check(out)
    assert checks['triples.sample']['details'] == {'triples': 35 * 18 * 17,
                                                   'mode': 'full', 'seed': 42}
    assert checks['triples.122']['verdict'] == 'pass'
    assert checks['triples.spear']['verdict'] == 'pass'


def test_triples_on_irregular_graph(capsys, tmp_path):
    path = write(tmp_path, Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
                 'star.txt')
    code, out = run(capsys, 'triples', path, '--n', '4', '--D', '2', '--q', '2',
                    '--format', 'json')
    assert code == 2
    checks = by_check(out)
    assert checks['graph.regular']['verdict'] == 'fail'
    assert checks['graph.regular']['witness'] == [0, 1]


def test_verify_local_and_mu_graphs_of_j2_6_3(capsys, tmp_path, j2_6_3):
    path = write(tmp_path, j2_6_3, 'j2_6_3.txt')
    code, out = run(capsys, 'verify', path, '--n', '6', '--D', '3', '--q', '2',
                    '--level', 'local', '--local-sample', '100',
                    '--format', 'json')
    assert code == 0
    checks = by_check(out)
    assert checks['local.sample']['details']['vertices'] == 100
    for name in ('local.spectrum', 'local.triangles', 'local.window',
                 'local.terwilliger', 'local.congruence',
                 'local.valency_sums', 'local.recognition'):
        assert checks[name]['verdict'] == 'pass', name
    assert checks['local.recognition']['details']['delta'] == [[0, 24, 1]]
    assert set(checks['local.congruence']['details']['distance2']) == {'4'}

    code, out = run(capsys, 'verify', path, '--n', '6', '--D', '3', '--q', '2',
                    '--level', 'mu', '--mu-sample', '10000', '--format', 'json')
    assert code == 0
    mu = by_check(out)['mu.grid']
    assert mu['verdict'] == 'pass'
    assert mu['details']['checked'] == 10000


def test_p_table_of_j2_6_3_against_counts(capsys, tmp_path, j2_6_3):
    path = write(tmp_path, j2_6_3, 'j2_6_3.txt')
    code, out = run(capsys, 'verify', path, '--n', '6', '--D', '3', '--q', '2',
                    '--level', 'array', '--format', 'json')
    assert code == 0
    assert by_check(out)['array.empirical']['details']['expected'] == \
        '{98,72,32;1,9,49}'
    dist = j2_6_3.distances.dist
    at2, at3 = dist == 2, dist == 3
    counts = set()
    for x in range(j2_6_3.n_vertices):
        ys = j2_6_3.neighbors(x)
        counts.update((at2[x] & at3[ys]).sum(axis=1).tolist())
    assert counts == {p_table(grassmann_array(6, 3, 2))[1, 2, 3]} == {256}
