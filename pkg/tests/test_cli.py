import io
import json

import pytest

import switchsep as ss
from switchsep.boolean import ebf_from_polynomial, graph_to_polynomial
from switchsep.cli import run
from switchsep.constructions import circulant_gn
from switchsep.graph import Graph, decode_graph6, encode_graph6
from switchsep.quasigroup import iterated_group, q_lambda

PATH = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def invoke(argv):
    out = io.StringIO()
    code = run(argv, out)
    reports = [json.loads(line) for line in out.getvalue().splitlines()]
    return code, reports


def invoke_one(argv):
    code, reports = invoke(argv)
    assert len(reports) == 1
    return code, reports[0]


def test_report_layout():
    code, report = invoke_one(['gen', 'gn', '5'])
    assert code == 0
    assert set(report) == {'command', 'status', 'payload', 'version',
                           'timing'}
    assert report['command'] == ['gen', 'gn']
    assert report['status'] == 'ok'
    assert report['version'] == ss.__version__
    assert report['timing']['wall_time'] >= 0
    assert report['payload'] == {'n': 5, 'm': 1, 'width': 1,
                                 'format': 'graph6', 'graph6': 'Dhc'}


def test_gen_gn_edges():
    code, report = invoke_one(['gen', 'gn', '9', '--format', 'edges'])
    assert code == 0
    assert report['payload']['edges'].startswith('# order 9\n')
    code, report = invoke_one(['gen', 'gn', '6'])
    assert code == 2
    assert report['status'] == 'error'


def test_check_nonseparable_graph():
    code, report = invoke_one(['check', encode_graph6(circulant_gn(13))])
    assert code == 0
    assert report['command'] == ['check']
    assert report['payload']['separable'] is False
    assert report['payload']['witness'] is None
    assert report['payload']['order'] == 13


def test_check_separable_graph():
    code, report = invoke_one(['check', encode_graph6(PATH)])
    assert code == 0
    payload = report['payload']
    assert payload['separable'] is True
    assert set(payload['witness']) == {'part', 'switching_set'}


def test_check_errors():
    code, report = invoke_one(['check', 'Bw'])
    assert code == 2
    assert report['command'] == ['check']
    assert report['status'] == 'error'
    assert 'order >= 4' in report['payload']['message']
    code, report = invoke_one(['check', 'A__'])
    assert code == 2
    assert report['payload']['offset'] == 2
    assert report['payload']['error'] == 'Graph6ParseError'


def test_check_stdin(monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('Dhc\n\nBw\nC~\n'))
    code, reports = invoke(['check', '-'])
    assert code == 2
    assert [r['payload']['line'] for r in reports] == [1, 3, 4]
    assert [r['status'] for r in reports] == ['ok', 'error', 'ok']
    assert reports[0]['payload']['separable'] is False
    assert reports[2]['payload']['separable'] is True


def test_isolable_and_switch():
    g6 = encode_graph6(PATH)
    code, report = invoke_one(['isolable', g6, '--set', '0,3'])
    assert code == 0
    assert report['payload']['isolable'] is True
    assert report['payload']['switching_set'] == [1, 3]
    code, report = invoke_one(['isolable', g6, '--set', '0,1'])
    assert report['payload']['isolable'] is False
    assert report['payload']['switching_set'] is None
    code, report = invoke_one(['switch', 'C~', '--set', '0'])
    assert code == 0
    assert decode_graph6(report['payload']['graph6']) == \
        Graph.complete(4).switch([0])
    code, report = invoke_one(['switch', 'C~', '--set', '0,x'])
    assert code == 2


def test_verify_gn():
    code, report = invoke_one(['verify', 'gn', '13'])
    assert code == 0
    assert report['payload']['holds'] is True
    assert report['payload']['gn_separable'] is False
    assert len(report['payload']['deletions']) == 13


def test_verify_theorem1():
    code, report = invoke_one(['verify', 'theorem1', '--order', '6'])
    assert code == 0
    payload = report['payload']
    assert payload['holds'] is True
    assert payload['total_classes'] == payload['classes_scanned'] == 1024
    assert payload['counterexamples'] == []
    assert 'wall_time' not in payload
    assert report['timing']['worker_count'] == 1
    code, report = invoke_one(['verify', 'theorem1', '--order', '5'])
    assert code == 2


def test_jobs_do_not_change_the_payload():
    _, one = invoke_one(['verify', 'theorem1', '--order', '6',
                         '--jobs', '1'])
    _, two = invoke_one(['verify', 'theorem1', '--order', '6',
                         '--jobs', '2'])
    assert one['payload'] == two['payload']
    assert two['timing']['worker_count'] == 2


def test_search_conjecture(tmp_path):
    dump = str(tmp_path / 'nonseparable.g6')
    code, report = invoke_one(['search', 'conjecture', '--order', '6',
                               '--dump', dump])
    assert code == 0
    assert report['payload']['counterexamples'] == []
    with open(dump) as f:
        lines = f.read().split()
    assert len(lines) == report['payload']['nonseparable_count']


def test_search_conjecture_odd_order():
    code, report = invoke_one(['search', 'conjecture', '--order', '7'])
    assert code == 2
    assert report['payload']['example']['graph6'] == \
        encode_graph6(circulant_gn(7))


def test_bool_from_graph():
    code, report = invoke_one(['bool', 'from-graph', encode_graph6(PATH)])
    assert code == 0
    assert report['payload'] == {
        'graph6': encode_graph6(PATH),
        'polynomial': 'x0*x1 + x1*x2 + x2*x3',
        'arity': 4,
        'table': 'd8',
        'canonical': 'x0*x1 + x0*x2 + x2',
    }
    _, report = invoke_one(['bool', 'from-graph', encode_graph6(PATH),
                            '--linear', 'x0 + 1'])
    assert report['payload']['polynomial'] == \
        'x0*x1 + x1*x2 + x2*x3 + x0 + 1'
    code, _ = invoke_one(['bool', 'from-graph', encode_graph6(PATH),
                          '--linear', 'x0*x1'])
    assert code == 2


def test_bool_separable():
    code, report = invoke_one(['bool', 'separable', 'd8', '--arity', '4'])
    assert code == 0
    assert report['payload']['separable'] is True
    assert report['payload']['bipartition'] == [[0, 3], [1, 2]]
    table = ebf_from_polynomial(
        graph_to_polynomial(circulant_gn(5))).to_hex()
    _, report = invoke_one(['bool', 'separable', table, '--arity', '5'])
    assert report['payload']['separable'] is False
    assert report['payload']['bipartition'] is None
    code, _ = invoke_one(['bool', 'separable', 'd8', '--arity', '3'])
    assert code == 2


def test_qg_from_bool():
    code, report = invoke_one(['qg', 'from-bool', '0', '--arity', '3'])
    assert code == 0
    payload = report['payload']
    assert (payload['order'], payload['arity']) == (4, 2)
    assert payload['values'] == [a ^ b for a in range(4) for b in range(4)]
    code, report = invoke_one(['qg', 'from-bool', '0', '--arity', '9'])
    assert code == 2
    assert report['payload']['error'] == 'ScaleLimitError'


def test_qg_reducible_and_kappa(tmp_path):
    path = str(tmp_path / 'group.json')
    iterated_group(3, 3).save(path)
    code, report = invoke_one(['qg', 'reducible', path])
    assert code == 0
    assert report['payload']['reducible'] is True
    assert report['payload']['decomposition']['positions'] == [1, 2]

    path = str(tmp_path / 'c5.json')
    q_lambda(ebf_from_polynomial(
        graph_to_polynomial(circulant_gn(5)))).save(path)
    _, report = invoke_one(['qg', 'reducible', path])
    assert report['payload']['reducible'] is False
    assert report['payload']['decomposition'] is None
    _, report = invoke_one(['qg', 'kappa', path])
    assert report['payload'] == {'order': 4, 'arity': 4, 'kappa': 2}

    code, report = invoke_one(['qg', 'kappa',
                               str(tmp_path / 'missing.json')])
    assert code == 2


@pytest.mark.parametrize('argv,command', [
    ([], []),
    (['frobnicate'], ['frobnicate']),
    (['check'], ['check']),
    (['verify', 'theorem1'], ['verify', 'theorem1']),
    (['gen', 'gn', 'five'], ['gen', 'gn']),
])
def test_usage_errors(argv, command):
    code, report = invoke_one(argv)
    assert code == 2
    assert report['status'] == 'error'
    assert report['command'] == command


def test_log_level_flag():
    code, _ = invoke_one(['--log_level', 'debug', 'gen', 'gn', '5'])
    assert code == 0


def test_error_reports_skip_option_values():
    code, report = invoke_one(['--log_level', 'debug', 'verify', 'theorem1',
                               '--order', '5'])
    assert code == 2
    assert report['command'] == ['verify', 'theorem1']
