"""
Run configuration and the report every command produces.

A report is a list of check records {check, verdict, details, witness}. It
renders as JSON lines with sorted keys, or as a text table; wall-clock
timings go into one final record so that everything before it is identical
for identical inputs and seed.
"""
import json
import logging
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass

import pandas as pd

from grassmann.exact import plain

logger = logging.getLogger(__name__)

COMMANDS = ('params', 'construct', 'verify', 'recognize', 'triples')
LEVELS = ('array', 'spectrum', 'local', 'mu', 'triples', 'ncc', 'all')
MODES = ('full', 'sample')
FORMATS = ('text', 'json')

PASS, FAIL, INFO = 'pass', 'fail', 'info'


@dataclass
class RunConfig:
    command: str
    n: int = None
    D: int = None
    q: int = None
    r: int = None
    graph_path: str = None
    out_path: str = None
    level: str = 'all'
    mode: str = 'sample'
    spectral: bool = False
    congruence: bool = False
    seed: int = 42
    sample: int = 100000
    local_sample: int = 100
    mu_sample: int = 10000
    parallelism: int = 1
    output_format: str = 'text'

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError('unknown command {!r}'.format(self.command))
        if self.level not in LEVELS:
            raise ValueError('level must be one of {}, got {!r}'.format(
                ', '.join(LEVELS), self.level))
        if self.mode not in MODES:
            raise ValueError('mode must be one of {}, got {!r}'.format(
                ', '.join(MODES), self.mode))
        if self.output_format not in FORMATS:
            raise ValueError('format must be one of {}, got {!r}'.format(
                ', '.join(FORMATS), self.output_format))
        for name in ('sample', 'local_sample', 'mu_sample', 'parallelism'):
            if getattr(self, name) < 1:
                raise ValueError('--{} must be positive'.format(
                    name.replace('_', '-')))
        if self.command in ('params', 'construct', 'triples') or (
                self.command == 'verify' and self.r is None):
            self._check_grassmann()
        if self.command in ('recognize', 'verify') and self.r is not None:
            if self.q is None or self.q < 1 or self.r < 2:
                raise ValueError('need q >= 1 and r >= 2, got q={}, r={}'.format(
                    self.q, self.r))

    def _check_grassmann(self):
        if None in (self.n, self.D, self.q):
            raise ValueError('{} needs n, D and q'.format(self.command))
        if self.D < 2 or self.n < 2 * self.D:
            raise ValueError('need n >= 2D >= 4, got n={}, D={}'.format(
                self.n, self.D))
        if self.q < 2:
            raise ValueError('need q >= 2, got {}'.format(self.q))

    @classmethod
    def from_args(cls, args):
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(args).items()
                      if k in fields and v is not None})

    def inputs(self):
        return {k: v for k, v in asdict(self).items()
                if v is not None and k not in ('output_format', 'parallelism')}


class Report:
    def __init__(self, config):
        self.config = config
        self.records = []
        self.timings = {}

    def add(self, check, verdict, details=None, witness=None):
        if verdict not in (PASS, FAIL, INFO):
            raise ValueError('verdict must be pass, fail or info')
        if verdict == FAIL:
            logger.warning('%s failed: %s', check, witness)
        self.records.append({'check': check, 'verdict': verdict,
                             'details': plain(details or {}),
                             'witness': plain(witness)})

    def check(self, check, ok, details=None, witness=None):
        self.add(check, PASS if ok else FAIL, details, None if ok else witness)

    def extend(self, records):
        for record in records:
            self.add(**record)

    @contextmanager
    def time(self, label):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - start, 3)

    @property
    def passed(self):
        return all(r['verdict'] != FAIL for r in self.records)

    @property
    def exit_code(self):
        return 0 if self.passed else 2

    def _all_records(self):
        header = {'check': 'command', 'verdict': INFO,
                  'details': plain(self.config.inputs()), 'witness': None}
        summary = {'check': 'summary', 'verdict': PASS if self.passed else FAIL,
                   'details': {'checks': len(self.records),
                               'failed': sum(r['verdict'] == FAIL
                                             for r in self.records)},
                   'witness': None}
        timings = {'check': 'timings', 'verdict': INFO,
                   'details': dict(self.timings), 'witness': None}
        return [header] + self.records + [summary, timings]

    def render(self):
        records = self._all_records()
        if self.config.output_format == 'json':
            return '\n'.join(json.dumps(r, sort_keys=True) for r in records)
        frame = pd.DataFrame(records, columns=['check', 'verdict', 'details',
                                               'witness'])
        frame['details'] = frame['details'].map(
            lambda d: json.dumps(d, sort_keys=True))
        frame['witness'] = frame['witness'].map(
            lambda w: '' if w is None else json.dumps(w))
        with pd.option_context('display.max_colwidth', None,
                               'display.width', None):
            return frame.to_string(index=False)
