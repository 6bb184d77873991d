import itertools
import os

import pytest
from hypothesis import given
from hypothesis import strategies as st

from switchsep.cfgs import get_cfg_defaults
from switchsep.enumeration import (SearchReport, class_representative,
                                   counter_of, free_pairs,
                                   num_representatives,
                                   oracle_nonseparable_count,
                                   read_checkpoint, representative,
                                   run_search, search_conjecture,
                                   switching_class_representatives,
                                   truncate_dump, verify_theorem1,
                                   write_checkpoint)
from switchsep.enumeration.search import scan_range
from switchsep.graph import Graph, decode_graph6, is_switching_equivalent
from switchsep.separability import is_separable
from switchsep.utils.errors import CheckpointError

from .strategies import graphs


@pytest.fixture
def small_blocks():
    cfg = get_cfg_defaults()
    cfg.SEARCH.CHECKPOINT_INTERVAL = 256
    return cfg


def test_counts_and_pairs():
    assert free_pairs(4) == [(1, 2), (1, 3), (2, 3)]
    assert num_representatives(4) == 8
    assert num_representatives(6) == 1024
    assert num_representatives(8) == 2097152


def test_representatives_of_order4():
    reps = list(switching_class_representatives(4))
    assert len(reps) == 8
    assert all(g.is_isolated(0) for g in reps)
    assert reps[0] == Graph.empty(4)
    assert reps[1] == Graph.from_edges(4, [(1, 2)])
    assert reps[-1] == Graph.from_edges(4, [(1, 2), (1, 3), (2, 3)])
    assert len(set(g.two_graph() for g in reps)) == 8


def test_representatives_cover_every_graph():
    order = 5
    pairs = list(itertools.combinations(range(order), 2))
    classes = set()
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(order, [p for k, p in enumerate(pairs)
                                     if bits >> k & 1])
        classes.add(g.two_graph())
    reps = set(g.two_graph() for g in switching_class_representatives(order))
    assert reps == classes
    # every class holds 2^(order-1) labelled graphs
    assert len(classes) << (order - 1) == 1 << len(pairs)


def test_representative_ranges():
    assert list(switching_class_representatives(5, start=3, stop=5)) == [
        representative(5, 3), representative(5, 4)]
    for bad in (3, 11):
        with pytest.raises(ValueError):
            list(switching_class_representatives(bad))
    with pytest.raises(ValueError):
        list(switching_class_representatives(5, start=10, stop=5))
    with pytest.raises(ValueError):
        representative(4, 8)
    with pytest.raises(ValueError):
        counter_of(Graph.complete(4))


def test_counter_round_trip():
    for counter in range(num_representatives(5)):
        assert counter_of(representative(5, counter)) == counter


@given(graphs(min_order=1, max_order=9))
def test_class_representative(g):
    rep = class_representative(g)
    assert rep.is_isolated(0)
    assert is_switching_equivalent(g, rep) is not None
    if g.order >= 4:
        assert representative(g.order, counter_of(rep)) == rep


@given(graphs(min_order=4, max_order=9), st.data())
def test_representative_separability_matches_the_class(g, data):
    rep = class_representative(g)
    assert (is_separable(rep) is None) == (is_separable(g) is None)


def test_theorem1_order6():
    report = verify_theorem1(6)
    assert report.classes_scanned == 1024
    assert report.total_classes == 1024
    assert report.counterexamples == []
    assert report.holds
    assert report.nonseparable_count == oracle_nonseparable_count(6)
    assert report.nonseparable_count > 0


def test_theorem1_order7():
    report = verify_theorem1(7)
    assert report.classes_scanned == 1 << 15
    assert report.counterexamples == []


def test_order_checks():
    for bad in (5, 10):
        with pytest.raises(ValueError):
            verify_theorem1(bad)
    with pytest.raises(ValueError) as info:
        search_conjecture(7)
    assert 'circulant_gn(7)' in str(info.value)
    for bad in (4, 12):
        with pytest.raises(ValueError):
            search_conjecture(bad)
    with pytest.raises(ValueError):
        verify_theorem1(6, jobs=0)
    with pytest.raises(ValueError):
        run_search('other', 6)


def test_conjecture_order6(tmp_path):
    dump = str(tmp_path / 'nonseparable.g6')
    report = search_conjecture(6, dump_path=dump)
    assert report.counterexamples == []
    assert report.classes_scanned == 1024
    with open(dump) as f:
        lines = f.read().split()
    assert len(lines) == report.nonseparable_count
    for line in lines:
        g = decode_graph6(line)
        assert g.is_isolated(0)
        assert is_separable(g) is None


def test_worker_count_does_not_change_the_report(small_blocks):
    serial = verify_theorem1(6, jobs=1, cfgs=small_blocks)
    parallel = verify_theorem1(6, jobs=2, cfgs=small_blocks)
    assert serial.to_dict(include_timing=False) == \
        parallel.to_dict(include_timing=False)
    assert parallel.worker_count == 2


def test_checkpoint_resume(tmp_path, small_blocks):
    path = str(tmp_path / 'theorem1.ckpt')
    fresh = verify_theorem1(6, cfgs=small_blocks)

    partial = SearchReport('theorem1', 6)
    scanned, nonseparable, found, _ = scan_range(('theorem1', 6, 0, 512,
                                                  False))
    partial.merge(scanned, nonseparable, found)
    write_checkpoint(path, partial, 512)
    start, loaded = read_checkpoint(path, 'theorem1', 6)
    assert start == 512
    assert loaded.nonseparable_count == nonseparable

    resumed = verify_theorem1(6, checkpoint_path=path, cfgs=small_blocks)
    assert resumed.to_dict(include_timing=False) == \
        fresh.to_dict(include_timing=False)
    start, _ = read_checkpoint(path, 'theorem1', 6)
    assert start == 1024


def test_resumed_dump_has_no_repeated_lines(tmp_path, small_blocks):
    fresh_dump = str(tmp_path / 'fresh.g6')
    search_conjecture(6, dump_path=fresh_dump, cfgs=small_blocks)
    with open(fresh_dump) as f:
        expected = f.read()

    path = str(tmp_path / 'conjecture.ckpt')
    dump = str(tmp_path / 'resumed.g6')
    partial = SearchReport('conjecture', 6)
    scanned, nonseparable, found, dumped = scan_range(
        ('conjecture', 6, 0, 512, True))
    partial.merge(scanned, nonseparable, found)
    partial.dump_lines = len(dumped)
    write_checkpoint(path, partial, 512)
    # the next block reached the dump but not the checkpoint
    _, _, _, unsaved = scan_range(('conjecture', 6, 512, 768, True))
    with open(dump, 'w') as f:
        f.write(''.join(line + '\n' for line in dumped + unsaved))

    report = search_conjecture(6, checkpoint_path=path, dump_path=dump,
                               cfgs=small_blocks)
    with open(dump) as f:
        assert f.read() == expected
    assert report.dump_lines == report.nonseparable_count
    _, loaded = read_checkpoint(path, 'conjecture', 6)
    assert loaded.dump_lines == report.nonseparable_count


def test_dump_resume_errors(tmp_path):
    path = str(tmp_path / 'state')
    dump = str(tmp_path / 'dump.g6')
    write_checkpoint(path, SearchReport('conjecture', 6), 512)
    with pytest.raises(CheckpointError):
        search_conjecture(6, checkpoint_path=path, dump_path=dump)
    with open(dump, 'w') as f:
        f.write('Dhc\n')
    with pytest.raises(CheckpointError):
        truncate_dump(dump, 2)
    truncate_dump(dump, 0)
    assert os.path.getsize(dump) == 0


def test_checkpoint_errors(tmp_path):
    path = str(tmp_path / 'state')
    write_checkpoint(path, SearchReport('conjecture', 6), 0)
    with pytest.raises(CheckpointError):
        read_checkpoint(path, 'theorem1', 6)
    with pytest.raises(CheckpointError):
        read_checkpoint(path, 'conjecture', 8)
    with open(path, 'w') as f:
        f.write('kind conjecture\norder 6\n')
    with pytest.raises(CheckpointError):
        read_checkpoint(path, 'conjecture', 6)
    with open(path, 'w') as f:
        f.write('kind conjecture\norder 6\nnext_counter 9999\n'
                'nonseparable_count 0\n')
    with pytest.raises(CheckpointError):
        read_checkpoint(path, 'conjecture', 6)


def test_report_dict():
    report = SearchReport('conjecture', 6, worker_count=3)
    report.merge(10, 2, [(7, 'E?@?')])
    report.merge(5, 1, [(3, 'E??W')])
    data = report.to_dict()
    assert data['counterexamples'] == ['E??W', 'E?@?']
    assert data['classes_scanned'] == 15
    assert data['holds'] is False
    assert data['worker_count'] == 3
    assert 'wall_time' not in report.to_dict(include_timing=False)


@pytest.mark.full_scale
def test_theorem1_order8():
    report = verify_theorem1(8, jobs=os.cpu_count())
    assert report.classes_scanned == 1 << 21
    assert report.counterexamples == []


@pytest.mark.full_scale
def test_conjecture_order8():
    report = search_conjecture(8, jobs=os.cpu_count())
    assert report.classes_scanned == 1 << 21
    assert report.counterexamples == []
