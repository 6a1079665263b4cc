from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pygoodgraphs.pygoodgraphs_base_classes import ColouringError, OrderError
from pygoodgraphs.graph_core import Graph, canonical_form, complete_graph, crown_graph, cycle_graph
from pygoodgraphs.graph_core import empty_graph, induced, is_p4_free, path_graph
from pygoodgraphs.colouring import Colouring, VertexOrder, chromatic_number, degeneracy_order
from pygoodgraphs.colouring import first_fit, greedy_colour, greedy_colour_start2, is_connected_order
from pygoodgraphs.colouring import is_proper, k_colouring, optimal_colouring
from pygoodgraphs.order_search import GoodnessOracle, connected_orders, is_good
from pygoodgraphs.obstruction_catalog import gem
from pygoodgraphs.minbad_lab import enumerate_connected_graphs
from tests.TestGraphs import brute_force_chi, graphs

K3 = complete_graph(3)
GEM_BAD_ORDER = [0, 1, 4, 3, 2]


def test_vertex_order_connected_flag() -> None:
    p3 = path_graph(3)
    assert(VertexOrder.of(p3, [1, 0, 2]).connected)
    assert(not VertexOrder.of(p3, [0, 2, 1]).connected)
    assert(is_connected_order(p3, [2, 1, 0]))

def test_vertex_order_rejects_non_permutation() -> None:
    with pytest.raises(OrderError):
        VertexOrder.of(K3, [0, 1, 1])
    with pytest.raises(OrderError):
        VertexOrder.of(K3, [0, 1])
    with pytest.raises(OrderError):
        VertexOrder.of(K3, ["a", 1, 2])

def test_vertex_order_require_connected() -> None:
    with pytest.raises(OrderError):
        VertexOrder.of(path_graph(3), [0, 2, 1], require_connected=True)

def test_vertex_order_relations() -> None:
    o = VertexOrder.of(K3, [2, 0, 1])
    assert(o.first == 2 and o.last == 1)
    assert(o.before(0, 1))
    assert(not o.before(1, 2))
    assert(o.positions() == {2: 0, 0: 1, 1: 2})

def test_first_fit() -> None:
    assert(first_fit(0) == 1)
    assert(first_fit(0b0110) == 3)
    assert(first_fit(0b0110, start=5) == 5)

@pytest.mark.parametrize("k", [3, 4, 5])
def test_crown_graph_order(k: int) -> None:
    """Alternating a_i, b_i gives every pair its own colour"""
    g = crown_graph(k)
    colouring = greedy_colour(g, list(range(2 * k)))
    assert(colouring.num_colours == k)
    assert(chromatic_number(g) == 2)
    assert(all(colouring[2 * i] == colouring[2 * i + 1] == i + 1 for i in range(k)))

def test_crown_graph_three_colours() -> None:
    colouring = greedy_colour(crown_graph(3), [0, 1, 2, 3, 4, 5])
    assert(colouring.colour == {0: 1, 1: 1, 2: 2, 3: 2, 4: 3, 5: 3})

def test_greedy_single_vertex() -> None:
    assert(greedy_colour(empty_graph(1), [0]).colour == {0: 1})

def test_greedy_gem_bad_order() -> None:
    """The last vertex of a bad gem order is the only one with colour 4"""
    g = gem()
    colouring = greedy_colour(g, GEM_BAD_ORDER)
    assert(colouring.colour == {0: 1, 1: 2, 4: 3, 3: 1, 2: 4})
    assert(colouring.num_colours == 4)
    assert(is_connected_order(g, GEM_BAD_ORDER))

def test_greedy_rejects_bad_order() -> None:
    with pytest.raises(OrderError):
        greedy_colour(K3, [0, 1])

def test_start2_single_vertex() -> None:
    assert(greedy_colour_start2(empty_graph(1), [0]).colour == {0: 2})

def test_start2_edge() -> None:
    colouring = greedy_colour_start2(path_graph(2), [0, 1])
    assert(colouring.colour == {0: 2, 1: 1})

@pytest.mark.parametrize("n", range(2, 7))
def test_start2_is_optimal_on_good_graphs(n: int) -> None:
    """Starting with colour 2 never wastes a colour on a good graph"""
    oracle = GoodnessOracle()
    for g in enumerate_connected_graphs(n):
        if not is_good(g, oracle).good:
            continue
        chi = chromatic_number(g)
        for o in connected_orders(g):
            assert(greedy_colour_start2(g, o).num_colours == chi)

def test_chromatic_number_small() -> None:
    assert(chromatic_number(complete_graph(4)) == 4)
    assert(chromatic_number(cycle_graph(5)) == 3)
    assert(chromatic_number(cycle_graph(6)) == 2)
    assert(chromatic_number(empty_graph(0)) == 0)
    assert(chromatic_number(empty_graph(3)) == 1)
    assert(chromatic_number(gem()) == 3)

@given(graphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_chromatic_number_matches_brute_force(g: Graph) -> None:
    assert(chromatic_number(g) == brute_force_chi(g))

@given(graphs(min_n=1, max_n=9))
@settings(max_examples=100, deadline=None)
def test_optimal_colouring_is_proper(g: Graph) -> None:
    colouring = optimal_colouring(g)
    assert(is_proper(g, colouring))
    assert(colouring.num_colours == chromatic_number(g))

def test_k_colouring() -> None:
    assert(k_colouring(K3, 2) is None)
    found = k_colouring(cycle_graph(5), 3)
    assert(found is not None and is_proper(cycle_graph(5), found))
    assert(k_colouring(empty_graph(0), 0).colour == {})

def test_degeneracy_order_is_permutation() -> None:
    g = gem()
    assert(sorted(degeneracy_order(g)) == list(g.vertices()))

def test_is_proper() -> None:
    assert(is_proper(K3, Colouring({0: 1, 1: 2, 2: 3})))
    assert(not is_proper(K3, Colouring({0: 1, 1: 1, 2: 2})))

def test_is_proper_missing_vertex() -> None:
    with pytest.raises(ColouringError):
        is_proper(K3, Colouring({0: 1, 1: 2}))

def test_colouring_json_keys() -> None:
    assert(Colouring({2: 1, 0: 3}).as_json() == {"0": 3, "2": 1})

@given(graphs(min_n=1, max_n=8), st.data())
@settings(max_examples=150, deadline=None)
def test_greedy_bounds(g: Graph, data) -> None:
    """Greedy is proper, deterministic and between chi and max degree + 1"""
    seq = data.draw(st.permutations(list(g.vertices())))
    colouring = greedy_colour(g, seq)
    assert(is_proper(g, colouring))
    assert(chromatic_number(g) <= colouring.num_colours <= g.max_degree() + 1)
    assert(greedy_colour(g, seq) == colouring)

def test_cographs_are_greedy_optimal_under_every_order() -> None:
    """Every induced subgraph of a connected P4-free graph is coloured optimally by any order"""
    subgraphs = {}
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            if not is_p4_free(g):
                continue
            for size in range(1, n + 1):
                for s in combinations(g.vertices(), size):
                    h = induced(g, s)
                    subgraphs.setdefault(canonical_form(h), h)
    for h in subgraphs.values():
        chi = chromatic_number(h)
        for seq in permutations(h.vertices()):
            assert(greedy_colour(h, seq).num_colours == chi)
