from __future__ import annotations

import pytest

from crossring.drawing import validate
from crossring.generate import canonical, fuzz_instance, perturb, transposed_canonical
from crossring.regions import (
    NoDisjointPartner,
    OmegaNotUnique,
    RegionError,
    curve_face_count,
    germ_component,
    locate_vertex,
    omega,
    partition,
    separates,
)
from crossring.robustness import analyze

from .helpers import figure_eight, no_disjoint_partner, self_crossing_separator


def test_canonical_two_components():
    d = canonical(3, 7)
    for j in range(7):
        assert partition(d, j).num_components == 2


def test_simple_curves_in_perturbed_drawings_have_two_components():
    base = canonical(4, 6)
    for seed in range(30):
        d = perturb(base, seed)
        for j in range(6):
            red = set(d.graph.red_cycle(j))
            if not any(f in red for e in red for f in d.crossings[e]):
                assert partition(d, j).num_components == 2


def test_figure_eight_has_three_components():
    d = figure_eight()
    assert validate(d).ok
    assert partition(d, 2).num_components == 3
    assert curve_face_count(d, 2) == 3


def test_omega_is_big_component_in_canonical():
    d = canonical(5, 8)
    g = d.graph
    for j in range(8):
        om = omega(d, j)
        part = partition(d, j)
        for k in range(8):
            if k != j:
                assert part.components_met(g.red_cycle(k)) == {om}


def test_no_disjoint_partner():
    d = no_disjoint_partner()
    assert validate(d).ok
    with pytest.raises(NoDisjointPartner):
        omega(d, 2)


def test_omega_not_unique_in_transposed_drawing():
    d = transposed_canonical(5, 4)
    omega(d, 0)
    with pytest.raises(OmegaNotUnique):
        omega(d, 1)


def test_omega_defined_on_fuzzed_robust_drawings():
    seen = 0
    for seed in range(40):
        d = fuzz_instance(3, 11, seed)
        if analyze(d).robust:
            seen += 1
            for j in range(11):
                omega(d, j)
    assert seen


def test_locate_vertex_previous_cycle_in_omega():
    for m, n in [(3, 7), (5, 8)]:
        d = canonical(m, n)
        g = d.graph
        for i in range(m):
            for j in range(n):
                assert locate_vertex(d, g.v(i, j), j - 1) == omega(d, j - 1)


def test_locate_vertex_on_curve_rejected():
    d = canonical(3, 7)
    with pytest.raises(RegionError):
        locate_vertex(d, d.graph.v(1, 3), 3)


def test_locate_vertex_constant_around_node():
    d = perturb(canonical(4, 6), 3)
    pm = d.planar_map()
    g = d.graph
    for j in range(6):
        part = partition(d, j)
        for v in g.vertices:
            if v.j == j:
                continue
            faces = {part.face_comp[pm.face_of[x]] for x in pm.rotation[pm.node_of[v]]}
            assert faces == {locate_vertex(d, v, j)}


def test_germs_in_canonical():
    d = canonical(5, 8)
    g = d.graph
    for j in range(8):
        assert germ_component(d, g.v(2, j), g.bl(2, j + 1), j) != omega(d, j)
        assert germ_component(d, g.v(0, j), g.bl(0, j + 1), j) == omega(d, j)


def test_germ_of_red_edge_rejected():
    d = canonical(3, 7)
    with pytest.raises(RegionError):
        germ_component(d, d.graph.v(0, 0), d.graph.red(0, 0), 0)


def test_canonical_separates_nothing():
    d = canonical(4, 6)
    for j in range(6):
        for k in range(6):
            for l in range(6):
                if len({j, k, l}) == 3:
                    assert not separates(d, j, k, l)


def test_self_crossing_cycle_separates():
    d = self_crossing_separator()
    assert validate(d).ok
    assert partition(d, 3).num_components == 3
    assert separates(d, 3, 2, 0)
    assert not separates(d, 3, 0, 1)
    assert not analyze(d).red_nonseparating


def test_separates_symmetric():
    d = self_crossing_separator()
    for j in range(5):
        for k in range(5):
            for l in range(5):
                if len({j, k, l}) == 3:
                    assert separates(d, j, k, l) == separates(d, j, l, k)


def test_separates_needs_distinct_cycles():
    with pytest.raises(RegionError):
        separates(canonical(3, 7), 1, 1, 2)


def test_component_count_matches_face_oracle():
    for seed in range(25):
        d = fuzz_instance(4, 8, seed)
        for j in range(8):
            assert partition(d, j).num_components == curve_face_count(d, j)
