import json
from fractions import Fraction

import pytest

from grassmann.parallel import shards, sharded_map
from grassmann.report import Report, RunConfig


squares = lambda items, offset=0: [x * x + offset for x in items]  # noqa: E731


def test_run_config_defaults():
    config = RunConfig('params', n=6, D=3, q=2)
    assert config.seed == 42
    assert config.level == 'all'
    assert 'output_format' not in config.inputs()
    assert config.inputs()['n'] == 6


@pytest.mark.parametrize('kwargs', [
    dict(command='params', n=5, D=3, q=2),
    dict(command='params', n=6, D=3),
    dict(command='construct', n=4, D=2, q=1),
    dict(command='verify', q=2, r=1),
    dict(command='recognize', q=0, r=4),
    dict(command='verify', n=4, D=2, q=2, level='everything'),
    dict(command='triples', n=4, D=2, q=2, mode='some'),
    dict(command='params', n=4, D=2, q=2, output_format='xml'),
    dict(command='params', n=4, D=2, q=2, parallelism=0),
    dict(command='draw'),
])
def test_run_config_rejects(kwargs):
    with pytest.raises(ValueError):
        RunConfig(**kwargs)


def test_report_records_and_exit_code():
    report = Report(RunConfig('params', n=4, D=2, q=2, output_format='json'))
    report.check('a', True, {'x': Fraction(1, 2)}, witness=7)
    report.add('b', 'info', {'y': (1, 2)})
    assert report.exit_code == 0
    report.check('c', False, witness=(3, 4))
    assert report.exit_code == 2
    with pytest.raises(ValueError):
        report.add('d', 'maybe')
    with report.time('step'):
        pass
    lines = [json.loads(line) for line in report.render().splitlines()]
    assert [r['check'] for r in lines] == ['command', 'a', 'b', 'c', 'summary',
                                           'timings']
    assert lines[1] == {'check': 'a', 'verdict': 'pass',
                        'details': {'x': '1/2'}, 'witness': None}
    assert lines[3]['witness'] == [3, 4]
    assert lines[4]['details'] == {'checks': 3, 'failed': 1}
    assert 'step' in lines[5]['details']


def test_text_rendering():
    report = Report(RunConfig('params', n=4, D=2, q=2))
    report.check('a', True, {'x': 1})
    text = report.render()
    assert text.splitlines()[0].split() == ['check', 'verdict', 'details',
                                            'witness']
    assert 'summary' in text


def test_shards_are_contiguous():
    parts = shards(range(10), 3)
    assert [x for part in parts for x in part] == list(range(10))
    assert len(parts) == 3
    assert shards([], 4) == []
    assert shards([1, 2], 8) == [[1], [2]]


def test_sharded_map_keeps_order():
    items = list(range(50))
    assert sharded_map(squares, items) == squares(items)
    assert sharded_map(squares, items, parallelism=3, offset=1) == \
        squares(items, offset=1)
