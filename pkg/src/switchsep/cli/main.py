"""
Command line frontend. Every invocation prints JSON reports on standard
output (one per line) and exits with 0 (ok), 1 (counterexample found)
or 2 (usage, parse or precondition error). Logs go to standard error.
"""
import json
import sys
import time

from absl import app, flags
from absl.flags import argparse_flags

import switchsep as ss
from switchsep.boolean import (ExtendedBooleanFunction, Gf2Polynomial,
                               ebf_from_polynomial, ebf_is_separable,
                               graph_to_polynomial, is_quadratic_ebf)
from switchsep.cfgs import get_cfg
from switchsep.constructions import CirculantSpec, circulant_gn, verify_gn
from switchsep.enumeration import search_conjecture, verify_theorem1
from switchsep.graph import (VertexSet, decode_graph6, encode_graph6,
                             format_edge_list)
from switchsep.quasigroup import QuasigroupTable, is_reducible, kappa, q_lambda
from switchsep.separability import (is_isolable, is_separable,
                                    isolating_switching)
from switchsep.utils.common import parse_int_list
from switchsep.utils.errors import (CheckpointError, Graph6ParseError,
                                    ScaleLimitError)
from switchsep.utils.logger import LEVELS

FLAGS = flags.FLAGS

flags.DEFINE_enum('log_level', None, LEVELS,
                  'Logging verbosity, overrides LOG_LEVEL of the config.')

STATUS_OK = 'ok'
STATUS_COUNTEREXAMPLE = 'counterexample'
STATUS_ERROR = 'error'
EXIT_CODES = {STATUS_OK: 0, STATUS_COUNTEREXAMPLE: 1, STATUS_ERROR: 2}


class CliReport(object):
    """
    One JSON report.

    Args:
        command (list): the command words, e.g. ['verify', 'gn'].
        status (str): 'ok', 'counterexample' or 'error'.
        payload (dict): command specific result.
        timing (dict): run-dependent fields (wall time, worker count),
            kept out of the payload so the payload is reproducible.
    """

    def __init__(self, command, status, payload, timing=None):
        self.command = command
        self.status = status
        self.payload = payload
        self.timing = timing or {}

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def to_dict(self):
        return {'command': self.command,
                'status': self.status,
                'payload': self.payload,
                'version': ss.__version__,
                'timing': self.timing}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def error_report(command, err):
    payload = {'error': type(err).__name__, 'message': str(err)}
    if isinstance(err, Graph6ParseError):
        payload['offset'] = err.offset
    return CliReport(command, STATUS_ERROR, payload)


class ArgumentParser(argparse_flags.ArgumentParser):
    """
    Parser whose errors raise ``app.UsageError`` instead of exiting, so
    they can be reported as JSON.
    """

    def error(self, message):
        raise app.UsageError(message)


def _graph_payload(g):
    witness = is_separable(g)
    return {'graph6': encode_graph6(g),
            'order': g.order,
            'separable': witness is not None,
            'witness': None if witness is None else witness.to_dict()}


def cmd_check(args, cfgs):
    if args.graph != '-':
        g = decode_graph6(args.graph)
        return [CliReport(['check'], STATUS_OK, _graph_payload(g))]
    reports = []
    for lineno, line in enumerate(sys.stdin, 1):
        if not line.strip():
            continue
        try:
            payload = _graph_payload(decode_graph6(line.strip()))
            payload['line'] = lineno
            reports.append(CliReport(['check'], STATUS_OK, payload))
        except ValueError as e:
            report = error_report(['check'], e)
            report.payload['line'] = lineno
            reports.append(report)
    return reports


def cmd_isolable(args, cfgs):
    g = decode_graph6(args.graph)
    w = VertexSet(g.order, parse_int_list(args.set))
    isolable = is_isolable(g, w)
    payload = {'graph6': encode_graph6(g),
               'set': w.to_list(),
               'isolable': isolable,
               'switching_set': (isolating_switching(g, w).to_list()
                                 if isolable else None)}
    return [CliReport(['isolable'], STATUS_OK, payload)]


def cmd_switch(args, cfgs):
    g = decode_graph6(args.graph)
    u = VertexSet(g.order, parse_int_list(args.set))
    payload = {'graph6': encode_graph6(g.switch(u)), 'set': u.to_list()}
    return [CliReport(['switch'], STATUS_OK, payload)]


def cmd_gen_gn(args, cfgs):
    spec = CirculantSpec(args.n)
    g = circulant_gn(args.n)
    payload = {'n': spec.n, 'm': spec.m, 'width': spec.width,
               'format': args.format}
    if args.format == 'edges':
        payload['edges'] = format_edge_list(g)
    else:
        payload['graph6'] = encode_graph6(g)
    return [CliReport(['gen', 'gn'], STATUS_OK, payload)]


def cmd_verify_gn(args, cfgs):
    report = verify_gn(args.n)
    status = STATUS_OK if report.holds else STATUS_COUNTEREXAMPLE
    return [CliReport(['verify', 'gn'], status, report.to_dict())]


def _search_report(command, report):
    status = STATUS_COUNTEREXAMPLE if report.counterexamples else STATUS_OK
    timing = {'wall_time': report.wall_time,
              'worker_count': report.worker_count}
    return CliReport(command, status, report.to_dict(include_timing=False),
                     timing)


def cmd_verify_theorem1(args, cfgs):
    report = verify_theorem1(args.order, args.jobs, args.resume, args.dump,
                             cfgs)
    return [_search_report(['verify', 'theorem1'], report)]


def cmd_search_conjecture(args, cfgs):
    command = ['search', 'conjecture']
    if args.order % 2 == 1:
        payload = {'error': 'ValueError',
                   'message': 'Odd orders are not searched: the circulant '
                              'graph G_%d is already an example' % args.order}
        if args.order >= 5:
            payload['example'] = {'n': args.order,
                                  'graph6': encode_graph6(
                                      circulant_gn(args.order))}
        return [CliReport(command, STATUS_ERROR, payload)]
    report = search_conjecture(args.order, args.jobs, args.resume, args.dump,
                               cfgs)
    return [_search_report(command, report)]


def cmd_bool_from_graph(args, cfgs):
    g = decode_graph6(args.graph)
    linear = None
    if args.linear is not None:
        linear = Gf2Polynomial.parse(args.linear, arity=g.order)
    p = graph_to_polynomial(g, linear)
    f = ebf_from_polynomial(p)
    _, q = is_quadratic_ebf(f)
    payload = {'graph6': encode_graph6(g),
               'polynomial': p.format(),
               'arity': f.arity,
               'table': f.to_hex(),
               'canonical': q.format()}
    return [CliReport(['bool', 'from-graph'], STATUS_OK, payload)]


def cmd_bool_separable(args, cfgs):
    f = ExtendedBooleanFunction.from_hex(args.arity, args.table)
    split = ebf_is_separable(f)
    payload = {'arity': f.arity,
               'table': f.to_hex(),
               'separable': split is not None,
               'bipartition': None if split is None else [list(split[0]),
                                                          list(split[1])]}
    return [CliReport(['bool', 'separable'], STATUS_OK, payload)]


def cmd_qg_from_bool(args, cfgs):
    f = ExtendedBooleanFunction.from_hex(args.arity, args.table)
    qg = q_lambda(f, cfgs)
    return [CliReport(['qg', 'from-bool'], STATUS_OK, qg.to_dict())]


def cmd_qg_reducible(args, cfgs):
    qg = QuasigroupTable.load(args.table)
    found = is_reducible(qg, cfgs)
    payload = {'order': qg.order,
               'arity': qg.arity,
               'reducible': found is not None,
               'decomposition': None if found is None else found.to_dict()}
    return [CliReport(['qg', 'reducible'], STATUS_OK, payload)]


def cmd_qg_kappa(args, cfgs):
    qg = QuasigroupTable.load(args.table)
    payload = {'order': qg.order, 'arity': qg.arity,
               'kappa': kappa(qg, cfgs)}
    return [CliReport(['qg', 'kappa'], STATUS_OK, payload)]


def _add_search_options(parser):
    parser.add_argument('--order', type=int, required=True,
                        help='order of the scanned graphs')
    parser.add_argument('--jobs', type=int, default=None,
                        help='worker processes (default: SEARCH.JOBS or '
                             '$SWITCHSEP_JOBS)')
    parser.add_argument('--resume', metavar='FILE', default=None,
                        help='checkpoint file, resumed from if it exists')
    parser.add_argument('--dump', metavar='FILE', default=None,
                        help='write every non-separable representative '
                             'there in graph6')


def build_parser():
    """
    Returns:
        ArgumentParser: the parser of all subcommands.
    """
    parser = ArgumentParser(
        prog='switchsep',
        description='Switching separability of graphs, extended Boolean '
                    'functions and n-ary quasigroups.')
    parser.add_argument('--cfg', metavar='FILE', default=None,
                        help='YAML file merged into the default config')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    def leaf(group, name, handler, help_text):
        p = group.add_parser(name, help=help_text, inherited_absl_flags=None)
        p.set_defaults(handler=handler)
        return p

    def branch(name, help_text):
        p = sub.add_parser(name, help=help_text, inherited_absl_flags=None)
        group = p.add_subparsers(dest='target')
        group.required = True
        return group

    p = leaf(sub, 'check', cmd_check, 'decide separability with a witness')
    p.add_argument('graph', help="graph6 string, or '-' for stdin lines")
    p = leaf(sub, 'isolable', cmd_isolable, 'test one vertex set')
    p.add_argument('graph', help='graph6 string')
    p.add_argument('--set', required=True, help='vertices, e.g. 0,3')
    p = leaf(sub, 'switch', cmd_switch, 'switch a graph by a vertex set')
    p.add_argument('graph', help='graph6 string')
    p.add_argument('--set', required=True, help='vertices, e.g. 0,3')

    gen = branch('gen', 'generate graphs')
    p = leaf(gen, 'gn', cmd_gen_gn, 'the circulant graph G_n')
    p.add_argument('n', type=int)
    p.add_argument('--format', choices=['graph6', 'edges'],
                   default='graph6')

    verify = branch('verify', 'verify claims')
    p = leaf(verify, 'gn', cmd_verify_gn, 'check G_n and its subgraphs')
    p.add_argument('n', type=int)
    p = leaf(verify, 'theorem1', cmd_verify_theorem1,
             'exhaustive one- and two-deletion search')
    _add_search_options(p)

    search = branch('search', 'exhaustive searches')
    p = leaf(search, 'conjecture', cmd_search_conjecture,
             'non-separable graphs of even order with separable '
             'vertex-deleted subgraphs')
    _add_search_options(p)

    boolean = branch('bool', 'extended Boolean functions')
    p = leaf(boolean, 'from-graph', cmd_bool_from_graph,
             'quadratic polynomial and function of a graph')
    p.add_argument('graph', help='graph6 string')
    p.add_argument('--linear', default=None,
                   help="affine part, e.g. 'x0 + x2 + 1'")
    p = leaf(boolean, 'separable', cmd_bool_separable,
             'test a function for separability')
    p.add_argument('table', help='hex table, index 0 in the lowest bit')
    p.add_argument('--arity', type=int, required=True)

    qg = branch('qg', 'n-ary quasigroups')
    p = leaf(qg, 'from-bool', cmd_qg_from_bool,
             'the order-4 quasigroup of a function')
    p.add_argument('table', help='hex table, index 0 in the lowest bit')
    p.add_argument('--arity', type=int, required=True)
    p = leaf(qg, 'reducible', cmd_qg_reducible, 'find a decomposition')
    p.add_argument('table', help='JSON file {order, arity, values}')
    p = leaf(qg, 'kappa', cmd_qg_kappa,
             'largest arity of an irreducible retract')
    p.add_argument('table', help='JSON file {order, arity, values}')
    return parser


_BRANCHES = frozenset(['gen', 'verify', 'search', 'bool', 'qg'])
_VALUE_OPTIONS = frozenset(['--log_level', '--cfg', '--set', '--format',
                            '--order', '--jobs', '--resume', '--dump',
                            '--linear', '--arity'])


def _command_words(argv):
    words = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token.startswith('-'):
            skip = token in _VALUE_OPTIONS
            continue
        words.append(token)
        if len(words) == 2 or words[0] not in _BRANCHES:
            break
    return words


def execute(parsed, argv, out=None):
    """
    Run a parsed command and print its reports.

    Args:
        parsed (argparse.Namespace or app.UsageError): parser result.
        argv (list): the arguments, for error reports.
        out (file): where the JSON goes, standard output by default.

    Returns:
        int: the exit code.
    """
    if out is None:
        out = sys.stdout
    if isinstance(parsed, app.UsageError):
        reports = [error_report(_command_words(argv), parsed)]
    else:
        began = time.time()
        try:
            cfgs = get_cfg(parsed.cfg)
            level = FLAGS.log_level or cfgs.LOG_LEVEL
            ss.set_log_level(level)
            reports = parsed.handler(parsed, cfgs)
        except (ValueError, ScaleLimitError, CheckpointError,
                IOError) as e:
            ss.log_error(str(e))
            reports = [error_report(_command_words(argv), e)]
        elapsed = time.time() - began
        for report in reports:
            report.timing.setdefault('wall_time', elapsed)
    for report in reports:
        out.write(report.to_json() + '\n')
    out.flush()
    return max(report.exit_code for report in reports) if reports else 0


def parse(argv):
    """
    Parse arguments (without the program name).

    Returns:
        argparse.Namespace or app.UsageError: the parsed arguments, or
        the usage error.
    """
    FLAGS['log_level'].unparse()
    try:
        return build_parser().parse_args(argv)
    except app.UsageError as e:
        FLAGS.mark_as_parsed()
        return e


def run(argv, out=None):
    """
    Entry point for programmatic use.

    Args:
        argv (list): arguments without the program name.
        out (file): where the JSON goes, standard output by default.

    Returns:
        int: the exit code.
    """
    try:
        parsed = parse(argv)
    except SystemExit as e:
        return e.code or 0
    return execute(parsed, argv, out)


def main():
    app.run(lambda parsed: sys.exit(execute(parsed, sys.argv[1:])),
            flags_parser=lambda argv: parse(argv[1:]))


if __name__ == '__main__':
    main()
