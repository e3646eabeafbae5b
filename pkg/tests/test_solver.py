from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from crossring.drawing import validate
from crossring.solver import (
    BudgetExceeded,
    SmallGraph,
    exact_crossing_number,
    hks_lower_bound,
    parse_graph_spec,
    product_instance,
    witness_to_drawing,
)


def small(G: nx.Graph) -> SmallGraph:
    G = nx.convert_node_labels_to_integers(G)
    return SmallGraph(G.number_of_nodes(), tuple(G.edges()))


def test_c3_c3_is_three():
    inst = product_instance(3, 3)
    res = exact_crossing_number(inst.graph, 4, inst.automorphisms)
    assert res.value == 3
    assert res.exhausted == [0, 1, 2]
    d = witness_to_drawing(inst, res.witness)
    assert validate(d).ok
    assert d.num_crossings == 3


@pytest.mark.parametrize(
    "G,value",
    [
        (nx.complete_graph(4), 0),
        (nx.cycle_graph(7), 0),
        (nx.grid_2d_graph(3, 4), 0),
        (nx.complete_graph(5), 1),
        (nx.complete_bipartite_graph(3, 3), 1),
        (nx.petersen_graph(), 2),
        (nx.complete_graph(6), 3),
    ],
)
def test_known_crossing_numbers(G, value):
    assert exact_crossing_number(small(G), 4).value == value


def test_value_none_when_k_max_too_small():
    res = exact_crossing_number(small(nx.complete_graph(6)), 2)
    assert res.value is None
    assert res.exhausted == [0, 1, 2]


def test_deleting_an_edge_never_increases_crossings():
    g = small(nx.petersen_graph())
    full = exact_crossing_number(g, 3).value
    for idx in range(0, len(g.edges), 3):
        assert exact_crossing_number(g.without_edge(idx), 3).value <= full


def test_budget_exhaustion():
    inst = product_instance(3, 3)
    with pytest.raises(BudgetExceeded):
        exact_crossing_number(inst.graph, 3, inst.automorphisms, budget_tests=10)


def test_small_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        SmallGraph(3, ((0, 0),))
    with pytest.raises(ValueError):
        SmallGraph(3, ((0, 1), (1, 0), (1, 2)))
    with pytest.raises(ValueError):
        SmallGraph(4, ((0, 1), (2, 3)))


def test_automorphism_group_sizes():
    assert len(product_instance(3, 3).automorphisms) == 72
    assert len(product_instance(3, 4).automorphisms) == 48


def test_graph_spec():
    inst = parse_graph_spec("cm-cn:3,4")
    assert (inst.m, inst.n) == (3, 4)
    assert len(inst.graph.edges) == 24
    with pytest.raises(ValueError):
        parse_graph_spec("kn:5")


@pytest.mark.parametrize(
    "m,n,value,regime",
    [
        (3, 24, Fraction(24), "improved_hks"),
        (8, 8, Fraction(320, 7), "five_sevenths"),
        (8, 20, Fraction(60), "half_bound"),
        (3, 57, Fraction(57), "exact_hks"),
    ],
)
def test_bound_spot_values(m, n, value, regime):
    b = hks_lower_bound(m, n)
    assert b.value == value
    assert b.regime == regime


def test_bound_ceiling():
    b = hks_lower_bound(8, 8)
    assert b.ceiling == 46
    assert b.integer_floor_applies
    assert not hks_lower_bound(8, 20).integer_floor_applies


def test_bound_rejects_small_n():
    with pytest.raises(ValueError):
        hks_lower_bound(5, 4)


@pytest.mark.slow
def test_c3_c4_is_four():
    inst = product_instance(3, 4)
    res = exact_crossing_number(inst.graph, 4, inst.automorphisms)
    assert res.value == 4
