from __future__ import annotations

import pytest

from crossring.association import (
    Cls,
    NotRobust,
    associated,
    beta_data,
    classify,
    prop7_check,
    t_order_check,
    x_set,
    y_set,
)
from crossring.drawing import crossings_between, first_crossing_with, last_crossing_with, pair
from crossring.generate import canonical, fuzz_instance
from crossring.product_graph import open_blue_path
from crossring.robustness import analyze

from .helpers import double_red_crossing

C, T = Cls.CPLUS, Cls.TZERO


def test_classes_canonical_5_8():
    d = canonical(5, 8)
    for j in range(8):
        assert classify(d, j).class_of == {0: T, 1: C, 2: C, 3: C, 4: T}


def test_classes_canonical_3_7():
    d = canonical(3, 7)
    for j in range(7):
        assert classify(d, j).class_of == {0: T, 1: C, 2: T}


def test_beta_data_canonical():
    d = canonical(5, 8)
    for j in range(8):
        data = beta_data(d, j)
        assert data.bbar == {i: 1 for i in range(5)}
        assert data.S == [1]
        assert data.T == {1: [0, 4]}


def test_x_set_empty_on_canonical():
    d = canonical(5, 8)
    for j in range(8):
        assert x_set(d, 1, j) == {}


def test_x_set_rejects_non_spacing_value():
    with pytest.raises(ValueError):
        x_set(canonical(5, 8), 2, 0)


def test_y_set_canonical():
    d = canonical(5, 8)
    g = d.graph
    for j in range(8):
        Y, events = y_set(d, j)
        assert not events
        assert Y == {pair(g.red(4, j), g.bl(i, j + 1)): "I" for i in (1, 2, 3)}


@pytest.mark.parametrize("m,n", [(3, 7), (5, 8)])
def test_associated_sizes_canonical(m, n):
    d = canonical(m, n)
    sets = [associated(d, j) for j in range(n)]
    assert all(len(a.I) == m - 2 for a in sets)
    assert all(not a.events for a in sets)
    assert sum(len(a.I) for a in sets) == (m - 2) * n
    assert not t_order_check(d, dict(enumerate(sets)))


def test_double_crossing_type_a():
    d = double_red_crossing(3)
    g = d.graph
    asc = associated(d, 3)
    assert asc.classes.class_of == {0: Cls.CMINUS, 1: Cls.CMINUS, 2: Cls.CMINUS, 3: T}
    assert asc.beta.S == [1]
    reds = crossings_between(d, g.red_cycle(2), g.red_cycle(3))
    assert len(reds) == 2
    assert asc.X[1] == {cid: "A" for cid in reds}
    assert not asc.events


def test_classification_total_on_fuzzed_robust_drawings():
    checked = 0
    for seed in range(60):
        d = fuzz_instance(4, 20, seed)
        if not analyze(d).robust:
            continue
        checked += 1
        for j in range(20):
            asc = associated(d, j)
            assert sorted(asc.classes.class_of) == list(range(4))
            assert not asc.events
            assert len(asc.I) >= 2
            for beta, Tb in asc.beta.T.items():
                assert set(Tb) <= set(asc.classes.members(T))
    assert checked


def test_not_robust_rejected():
    with pytest.raises(NotRobust):
        classify(canonical(3, 4), 0)
    with pytest.raises(NotRobust):
        associated(canonical(3, 4), 0)


def _path_restricted(d, i, lo, hi, targets, last):
    """Crossings of the open path P(i, lo, hi) with ``targets`` in walking order, first or last."""
    hits = [pair(e, f) for e in open_blue_path(d.graph, i, lo, hi) for f in d.crossings[e] if f in targets]
    if not hits:
        return None
    return hits[-1] if last else hits[0]


def test_type_b_and_c_readings_agree():
    compared = 0
    for seed in range(40):
        d = fuzz_instance(3, 19, seed)
        rep = analyze(d)
        if not rep.robust:
            continue
        g = d.graph
        for j in range(d.n):
            asc = associated(d, j)
            a = rep.a[j]
            for beta, Tb in asc.beta.T.items():
                back, ahead = (j - beta) % d.n, (j + a) % d.n
                for i in Tb:
                    red_back, red_ahead = set(g.red_cycle(back)), set(g.red_cycle(ahead))
                    restricted = _path_restricted(d, i, j, ahead, red_back, last=True)
                    if restricted is not None:
                        compared += 1
                        assert restricted == last_crossing_with(d, i, ahead, red_back)
                    restricted = _path_restricted(d, i, back, j, red_ahead, last=False)
                    if restricted is not None:
                        compared += 1
                        assert restricted == first_crossing_with(d, i, back, red_ahead)
    assert compared


def test_class_witness_check_clean():
    d = canonical(5, 8)
    assert all(prop7_check(d, j) == [] for j in range(8))
    d = double_red_crossing(3)
    assert prop7_check(d, 3) == []
