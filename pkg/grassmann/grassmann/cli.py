"""
Command line entry point.

    grassmann params n D q
    grassmann construct n D q [--out FILE]
    grassmann verify FILE --n N --D D --q Q [--level LEVEL]
    grassmann verify FILE --q Q --r R [--level spectrum|local|all]
    grassmann recognize FILE --q Q --r R [--spectral] [--congruence]
    grassmann triples FILE --n N --D D --q Q [--mode full|sample]

Exit codes: 0 all checks pass, 1 usage or internal error, 2 a check failed.
"""
import argparse
import logging
import sys

from grassmann import checks
from grassmann.exact import chi
from grassmann.exceptions import GrassmannError, NotDistanceRegular
from grassmann.graphs import (adjacency_digest, empirical_intersection_array,
                              grassmann_graph, read_graph, write_graph)
from grassmann.params import (array_from_classical, characterization_scope,
                              check_moments, classical_spectrum,
                              grassmann_array, grassmann_classical, p_table)
from grassmann.qpoly import (forced_local_spectrum, local_eigenvalue_window,
                             terwilliger_poly)
from grassmann.recognize import recognize_clique_ext_grid
from grassmann.report import FORMATS, LEVELS, MODES, Report, RunConfig

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, help='sampling seed (default 42)')
    common.add_argument('--sample', type=int,
                        help='triples to sample (default 100000)')
    common.add_argument('--local-sample', dest='local_sample', type=int,
                        help='local graphs to check (default 100)')
    common.add_argument('--mu-sample', dest='mu_sample', type=int,
                        help='mu-graphs to check (default 10000)')
    common.add_argument('--parallelism', type=int, help='worker processes')
    common.add_argument('--format', dest='output_format', choices=FORMATS,
                        help='report format (default text)')
    common.add_argument('-v', '--verbose', action='store_true',
                        help='debug logging on stderr')

    parser = ArgumentParser(prog='grassmann',
                            description='Exact checks on Grassmann graphs.')
    commands = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    commands.required = True

    params = commands.add_parser('params', parents=[common],
                                 help='parameters and spectrum of J_q(n,D)')
    construct = commands.add_parser('construct', parents=[common],
                                    help='build J_q(n,D) and check its array')
    for sub in (params, construct):
        sub.add_argument('n', type=int)
        sub.add_argument('D', type=int)
        sub.add_argument('q', type=int)
    construct.add_argument('--out', dest='out_path',
                           help='write the edge list here')

    verify = commands.add_parser('verify', parents=[common],
                                 help='verification suites on a graph file')
    verify.add_argument('--level', choices=LEVELS)
    recognize = commands.add_parser(
        'recognize', parents=[common],
        help='is the graph the q-clique extension of the (r x r)-grid?')
    recognize.add_argument('--spectral', action='store_true',
                           help='also require the clique-extended grid spectrum')
    recognize.add_argument('--congruence', action='store_true',
                           help='also require the local congruence conditions')
    triples = commands.add_parser('triples', parents=[common],
                                  help='triple intersection identities')
    triples.add_argument('--mode', choices=MODES)
    for sub in (verify, recognize, triples):
        sub.add_argument('graph_path', metavar='graph')
        sub.add_argument('--n', type=int)
        sub.add_argument('--D', type=int)
        sub.add_argument('--q', type=int)
    for sub in (verify, recognize):
        sub.add_argument('--r', type=int)
    return parser


def cmd_params(config, report):
    n, D, q = config.n, config.D, config.q
    cp = grassmann_classical(n, D, q)
    ia = array_from_classical(cp)
    sp = classical_spectrum(n, D, q)
    report.add('params.classical', 'info', {'classical': str(cp)})
    report.check('params.array', ia == grassmann_array(n, D, q),
                 {'array': str(ia), 'v': ia.v, 'valencies': ia.valencies})
    report.check('params.spectrum', check_moments(sp, ia.v, ia.k),
                 {'spectrum': sp.pairs})
    pt = p_table(ia)
    report.add('params.p_table', 'info',
               {str(h): pt.as_frame(h).values.tolist() for h in range(D + 1)})
    report.add('params.chi', 'info', {'chi': chi(q), 'D_at_least_chi': D >= chi(q),
                                      'scope': characterization_scope(n, D, q)})
    if n == 2 * D and D >= 3:
        bound = local_eigenvalue_window(cp)
        report.add('params.local', 'info', {
            'theta_hat_1': bound.theta_hat_1, 'theta_hat_D': bound.theta_hat_D,
            'min_mult': bound.min_mult_theta_hat_1,
            'terwilliger_roots': {str(i): terwilliger_poly(cp, i).roots
                                  for i in range(2, D)},
            'local_spectrum': forced_local_spectrum(cp).pairs})


def cmd_construct(config, report):
    n, D, q = config.n, config.D, config.q
    with report.time('construct'):
        g = grassmann_graph(n, D, q)
    report.add('construct.graph', 'info', {
        'vertices': g.n_vertices, 'edges': g.n_edges,
        'digest': adjacency_digest(g)})
    if config.out_path:
        write_graph(g, config.out_path)
        report.add('construct.written', 'info', {'path': config.out_path})
    with report.time('array'):
        try:
            empirical = empirical_intersection_array(g)
            expected = array_from_classical(grassmann_classical(n, D, q))
            report.check('construct.array', empirical == expected,
                         {'empirical': str(empirical), 'expected': str(expected)})
        except GrassmannError as error:
            report.check('construct.array', False, {'error': str(error)},
                         error.witness)


def _load(config, report):
    with report.time('read'):
        g = read_graph(config.graph_path)
    report.add('graph', 'info', {'vertices': g.n_vertices, 'edges': g.n_edges,
                                 'digest': adjacency_digest(g)})
    return g


def cmd_verify(config, report):
    g = _load(config, report)
    level = config.level
    if config.r is not None:
        if level not in ('spectrum', 'local', 'all'):
            raise ValueError('with --r only the spectrum and local levels apply')
        with report.time('grid'):
            report.extend(checks.grid_suite(g, config.q, config.r,
                                            spectral=level != 'local'))
        return
    n, D, q = config.n, config.D, config.q

    def wanted(name):
        return level in (name, 'all')

    try:
        with report.time('distances'):
            g.distances
    except GrassmannError as error:
        report.check('graph.connected', False, {'error': str(error)},
                     error.witness)
        return
    if wanted('array'):
        with report.time('array'):
            report.extend(checks.array_suite(g, n, D, q))
    if wanted('spectrum'):
        with report.time('spectrum'):
            report.extend(checks.grassmann_spectrum_suite(g, n, D, q))
    if wanted('local'):
        with report.time('local'):
            report.extend(checks.local_suite(g, n, D, q, config.local_sample,
                                             config.seed, config.parallelism))
    if wanted('mu'):
        with report.time('mu'):
            report.extend(checks.mu_suite(g, q, config.mu_sample, config.seed,
                                          config.parallelism))
    if wanted('triples'):
        _triples(config, report, g, n, D, q)
    if wanted('ncc'):
        with report.time('ncc'):
            report.extend(checks.ncc_suite(g, config.mu_sample, config.sample,
                                           config.seed, config.parallelism))


def cmd_recognize(config, report):
    if config.r is None or config.q is None:
        raise ValueError('recognize needs --q and --r')
    g = _load(config, report)
    with report.time('recognize'):
        result = recognize_clique_ext_grid(g, config.q, config.r,
                                           spectral=config.spectral,
                                           congruence=config.congruence)
    report.check('recognize', result.accepted, result.as_dict(), result.witness)


def _triples(config, report, g, n, D, q):
    with report.time('triples'):
        try:
            records = checks.triples_suite(g, n, D, q, config.mode,
                                           config.sample, config.seed,
                                           config.parallelism)
        except NotDistanceRegular as error:
            report.check('graph.regular', False, {'error': str(error)},
                         error.witness)
            return
    report.extend(records)


def cmd_triples(config, report):
    g = _load(config, report)
    _triples(config, report, g, config.n, config.D, config.q)


COMMANDS = {
    'params': cmd_params,
    'construct': cmd_construct,
    'verify': cmd_verify,
    'recognize': cmd_recognize,
    'triples': cmd_triples,
}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG if args.verbose else logging.INFO,
            format='%(asctime)s %(name)s %(levelname)s %(message)s')
        config = RunConfig.from_args(args)
        report = Report(config)
        COMMANDS[config.command](config, report)
    except UsageError as error:
        print('grassmann: error: {}'.format(error), file=sys.stderr)
        return 1
    except (ValueError, OSError) as error:
        print('grassmann: error: {}'.format(error), file=sys.stderr)
        return 1
    print(report.render())
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
