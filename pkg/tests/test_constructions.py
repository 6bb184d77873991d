import pytest

from switchsep.constructions import (CirculantSpec, circulant_gn,
                                     deletion_switching, jump_sequence,
                                     verify_gn)
from switchsep.graph import Graph, decode_graph6
from switchsep.separability import (SeparationWitness, brute_force_separable,
                                    is_isolable)


def test_circulant_spec():
    spec = CirculantSpec(13)
    assert (spec.n, spec.m, spec.width) == (13, 3, 3)
    spec = CirculantSpec(15)
    assert (spec.n, spec.m, spec.width) == (15, 4, 3)
    assert 'm=2' in repr(CirculantSpec(7))
    for bad in (4, 3, 1, -5, 16):
        with pytest.raises(ValueError):
            CirculantSpec(bad)
    for bad in (13.0, '13', True):
        with pytest.raises(TypeError):
            CirculantSpec(bad)


def test_small_circulants():
    assert circulant_gn(5) == Graph.from_edges(
        5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    g13 = circulant_gn(13)
    assert all(g13.degree(v) == 6 for v in range(13))
    assert g13.neighbors(0) == [1, 2, 3, 10, 11, 12]
    g15 = circulant_gn(15)
    assert g15.num_edges() == 45


def test_jump_sequence():
    assert jump_sequence(13)[:5] == [0, 3, 6, 9, 12]
    assert sorted(jump_sequence(15)) == list(range(15))


@pytest.mark.parametrize('n', [5, 7, 9, 11, 13])
def test_deletion_switching_separates_the_pair(n):
    for v in range(n):
        sub, pair, u = deletion_switching(n, v)
        assert sub.order == n - 1
        assert is_isolable(sub, pair)
        assert SeparationWitness(pair, u).validate(sub)
    sub, pair, _ = deletion_switching(13, 0)
    assert pair.to_list() == [2, 9]


def test_deletion_switching_rejects_bad_vertices():
    with pytest.raises(ValueError):
        deletion_switching(7, 7)


def test_verify_g13():
    report = verify_gn(13)
    assert report.holds
    assert report.gn_separable is False
    assert len(report.deletions) == 13
    assert report.deletions[0]['pair'] == [3, 10]
    assert report.deletions[0]['witness']['part'] == [3, 10]
    assert all(not entry['separable'] for entry in report.pair_deletions)
    assert len(report.pair_deletions) == 13
    assert report.pair_deletions[0]['removed'] == [0, 3]
    assert decode_graph6(report.graph6) == circulant_gn(13)
    data = report.to_dict()
    assert data['holds'] is True
    assert (data['n'], data['m'], data['width']) == (13, 3, 3)


def test_verify_g5_skips_pair_deletions():
    report = verify_gn(5)
    assert report.holds
    assert report.pair_deletions == []
    assert 'order 3 < 4' in report.pair_deletions_skipped


@pytest.mark.parametrize('n', [7, 9, 11, 15])
def test_verify_gn_holds(n):
    assert verify_gn(n).holds


@pytest.mark.parametrize('n', [5, 7, 9])
def test_circulants_against_the_oracle(n):
    g = circulant_gn(n)
    assert brute_force_separable(g) is None
    for v in range(n):
        assert brute_force_separable(g.delete_vertices([v])) is not None


@pytest.mark.full_scale
@pytest.mark.parametrize('n', [17, 19, 21])
def test_verify_gn_holds_at_full_scale(n):
    assert verify_gn(n).holds


@pytest.mark.full_scale
@pytest.mark.parametrize('n', [11, 13])
def test_circulants_against_the_oracle_at_full_scale(n):
    g = circulant_gn(n)
    assert brute_force_separable(g) is None
    assert brute_force_separable(g.delete_vertices([0])) is not None


def _lift(v, y):
    # label in G_n - v back to the label in G_n
    return y if y < v else y + 1


def _drop(v, x):
    return x if x < v else x - 1


@pytest.mark.parametrize('n', [9, 13])
def test_deletions_agree_up_to_rotation(n):
    gn = circulant_gn(n)
    assert gn.relabel([(x + 1) % n for x in range(n)]) == gn
    report = verify_gn(n)
    base = report.deletions[0]
    _, _, base_u = deletion_switching(n, 0)
    base_u = [_lift(0, y) for y in base_u]
    for entry in report.deletions:
        v = entry['vertex']

        def rotate(xs):
            return sorted((x + v) % n for x in xs)

        assert entry['pair'] == rotate(base['pair'])
        sub, _, u = deletion_switching(n, v)
        assert [_lift(v, y) for y in u] == rotate(base_u)
        part = [_drop(v, x) for x in rotate(base['witness']['part'])]
        assert is_isolable(sub, part)
        assert len(entry['witness']['part']) == len(part)
