from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pygoodgraphs.pygoodgraphs_base_classes import GraphFormatError, GraphSizeError, Parity
from pygoodgraphs.graph_core import Graph, canonical_form, complete_graph, components, crown_graph
from pygoodgraphs.graph_core import cycle_graph, empty_graph, find_claw, find_hole, from_edge_list
from pygoodgraphs.graph_core import from_graph6, induced, is_bipartite, is_claw_free, is_clique
from pygoodgraphs.graph_core import is_clique_cutset, is_connected, is_cutset, is_flat_path
from pygoodgraphs.graph_core import is_maximal_flat_path, is_p4_free, maximal_flat_paths, parse_graph
from pygoodgraphs.graph_core import path_graph, star_graph, subset_mask, to_graph6
from pygoodgraphs.obstruction_catalog import Family, ObstructionSpec, fish, gem, generate
from pygoodgraphs.minbad_lab import enumerate_connected_graphs
from tests.TestGraphs import all_labelled_graphs, graphs, to_nx, two_disjoint_edges

K3 = complete_graph(3)
P3 = path_graph(3)
GEM = gem()
GEM_PATH = [0, 1, 2, 3]
GEM_APEX = 4


def test_from_edge_list_triangle() -> None:
    """Edges are stored both ways and duplicates merge"""
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2), (2, 0)])
    assert(g == K3)
    assert(g.num_edges() == 3)
    assert(all(g.has_edge(v, u) for u, v in g.edges()))

def test_from_edge_list_single_vertex() -> None:
    g = from_edge_list(1, [])
    assert(g.n == 1)
    assert(g.edges() == [])

def test_from_edge_list_rejects_self_loop() -> None:
    with pytest.raises(GraphFormatError):
        from_edge_list(4, [(0, 0)])

def test_from_edge_list_rejects_out_of_range() -> None:
    with pytest.raises(GraphFormatError):
        from_edge_list(3, [(0, 3)])

def test_graph_rejects_asymmetric_rows() -> None:
    with pytest.raises(GraphFormatError):
        Graph(2, [0b10, 0b00])

def test_graph_is_immutable() -> None:
    with pytest.raises(AttributeError):
        K3._n = 4

def test_adjacency_matrix_is_symmetric() -> None:
    matrix = GEM.adjacency_matrix()
    assert((matrix == matrix.T).all())
    assert(matrix.sum() == 2 * GEM.num_edges())

@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_complement_matches_networkx(g: Graph) -> None:
    h = g.complement()
    assert({frozenset(e) for e in h.edges()} == {frozenset(e) for e in nx.complement(to_nx(g)).edges()})
    assert(h.num_edges() + g.num_edges() == g.n * (g.n - 1) // 2)
    assert(h.complement() == g)

def test_graph6_triangle() -> None:
    """K3 encodes to the two characters every graph6 writer produces"""
    assert(to_graph6(K3) == "Bw")
    assert(to_graph6(K3) == nx.to_graph6_bytes(to_nx(K3), header=False).decode().strip())

def test_graph6_header_is_accepted() -> None:
    assert(from_graph6(">>graph6<<Bw") == K3)

def test_graph6_rejects_empty_record() -> None:
    with pytest.raises(GraphFormatError):
        from_graph6("")

def test_graph6_rejects_truncated_record() -> None:
    with pytest.raises(GraphFormatError):
        from_graph6("D")

def test_graph6_rejects_large_header() -> None:
    with pytest.raises(GraphSizeError):
        from_graph6("~?@~")

@given(graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_graph6_round_trip_random(g: Graph) -> None:
    assert(from_graph6(to_graph6(g)) == g)

@pytest.mark.parametrize("n", range(1, 7))
def test_graph6_round_trip_connected(n: int) -> None:
    for g in enumerate_connected_graphs(n):
        code = to_graph6(g)
        assert(from_graph6(code) == g)
        assert(code == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip())

def test_parse_graph_formats() -> None:
    """graph6, edge list and JSON input all decode to the same triangle"""
    assert(parse_graph("Bw\n") == K3)
    assert(parse_graph("3 3\n0 1\n1 2\n0 2\n") == K3)
    assert(parse_graph('{"graph6": "Bw"}') == K3)

def test_parse_graph_rejects_bad_edge_list() -> None:
    with pytest.raises(GraphFormatError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph('{"edges": []}')

def test_induced_complete() -> None:
    assert(induced(complete_graph(4), {0, 1, 2}) == K3)

def test_induced_empty() -> None:
    h = induced(GEM, set())
    assert(h.n == 0)

def test_induced_gem_path() -> None:
    """The four path vertices of the gem induce a P4"""
    h = induced(GEM, GEM_PATH)
    assert(h == path_graph(4))
    assert(h.labels == tuple(GEM_PATH))

def test_induced_records_labels() -> None:
    h = induced(cycle_graph(6), [1, 3, 4])
    assert(h.labels == (1, 3, 4))
    assert(h.edges() == [(1, 2)])

def test_induced_rejects_out_of_range() -> None:
    with pytest.raises(GraphFormatError):
        induced(K3, [0, 3])

@given(graphs(max_n=7), st.data())
@settings(max_examples=100, deadline=None)
def test_induced_is_monotone(g: Graph, data) -> None:
    outer = sorted(data.draw(st.sets(st.sampled_from(range(g.n))))) if g.n else []
    inner = sorted(data.draw(st.sets(st.sampled_from(range(len(outer)))))) if outer else []
    twice = induced(induced(g, outer), inner)
    once = induced(g, [outer[i] for i in inner])
    assert(twice == once)
    assert(twice.labels == once.labels)
    assert(induced(g, g.vertices()) == g)

def test_connectivity() -> None:
    assert(is_connected(K3))
    assert(is_connected(empty_graph(0)))
    assert(not is_connected(two_disjoint_edges()))
    assert(sorted(map(sorted, components(two_disjoint_edges()))) == [[0, 1], [2, 3]])

@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_components_match_networkx(g: Graph) -> None:
    expected = {frozenset(c) for c in nx.connected_components(to_nx(g))}
    assert(set(components(g)) == expected)

def test_cutsets() -> None:
    assert(is_cutset(P3, {1}))
    assert(is_clique(P3, {1}))
    assert(is_clique_cutset(P3, {1}))
    assert(not any(is_cutset(complete_graph(4), pair) for pair in combinations(range(4), 2)))
    assert(not is_cutset(GEM, {GEM_APEX}))
    assert(is_cutset(GEM, {1, GEM_APEX}))

def test_subset_mask_rejects_foreign_vertex() -> None:
    with pytest.raises(GraphFormatError):
        subset_mask(K3, [5])

def test_find_claw() -> None:
    assert(find_claw(star_graph(3)) == (0, 1, 2, 3))
    assert(find_claw(GEM) is None)
    assert(find_claw(cycle_graph(5)) is None)
    assert(is_claw_free(fish()))

@given(graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_find_claw_matches_subset_scan(g: Graph) -> None:
    scan = any(sorted(induced(g, quad).degree(v) for v in range(4)) == [1, 1, 1, 3]
               for quad in combinations(g.vertices(), 4))
    assert((find_claw(g) is not None) == scan)

@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_bipartite_matches_networkx(g: Graph) -> None:
    assert(is_bipartite(g) == nx.is_bipartite(to_nx(g)))

def test_p4_free() -> None:
    assert(is_p4_free(complete_graph(4)))
    assert(is_p4_free(crown_graph(2)))
    assert(not is_p4_free(path_graph(4)))
    assert(not is_p4_free(GEM))

def test_flat_paths_on_path_graph() -> None:
    """A whole path graph is one flat path"""
    g = path_graph(5)
    assert(is_flat_path(g, [0, 1, 2, 3, 4]))
    assert(maximal_flat_paths(g) == [(0, 1, 2, 3, 4)])

def test_flat_paths_single_gem_edge() -> None:
    assert(all(is_flat_path(GEM, [u, u + 1]) for u in range(3)))
    assert(not is_flat_path(GEM, [0, 1, 2]))

def test_maximal_flat_path_in_f2() -> None:
    """The long path of F2 with three edges ends on two degree 3 vertices"""
    g = generate(ObstructionSpec(Family.F2, (3,)))
    assert((1, 2, 3, 4) in maximal_flat_paths(g))
    assert(is_maximal_flat_path(g, (1, 2, 3, 4)))
    assert(not is_maximal_flat_path(g, (0, 1)))

@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_maximal_flat_paths_cannot_extend(g: Graph) -> None:
    for path in maximal_flat_paths(g):
        assert(is_flat_path(g, path))
        assert(path[0] <= path[-1])
        for end, grow in ((path[-1], lambda x: list(path) + [x]), (path[0], lambda x: [x] + list(path))):
            for x in g.neighbours(end):
                if x not in path:
                    assert(not is_flat_path(g, grow(x)))

def test_find_hole() -> None:
    assert(find_hole(cycle_graph(5)) == (0, 1, 2, 3, 4))
    assert(find_hole(complete_graph(4)) is None)
    assert(find_hole(cycle_graph(4), Parity.ODD) is None)
    assert(len(find_hole(cycle_graph(4), "even")) == 4)

@given(graphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_find_hole_returns_chordless_cycle(g: Graph) -> None:
    hole = find_hole(g)
    if hole is None:
        assert(nx.is_chordal(to_nx(g)))
        return
    h = induced(g, hole)
    assert(len(hole) >= 4)
    assert(all(h.degree(v) == 2 for v in h.vertices()))
    assert(is_connected(h))

def test_canonical_form_distinguishes() -> None:
    relabelled = from_edge_list(3, [(1, 0), (0, 2)])
    assert(canonical_form(P3) == canonical_form(relabelled))
    assert(canonical_form(K3) != canonical_form(P3))

def test_canonical_form_counts_four_vertex_graphs() -> None:
    """There are 11 graphs on four vertices up to isomorphism"""
    forms = {canonical_form(g) for g in all_labelled_graphs(4)}
    assert(len(forms) == 11)

def test_canonical_form_counts_five_vertex_graphs() -> None:
    forms = {canonical_form(g) for g in all_labelled_graphs(5)}
    assert(len(forms) == 34)

def test_canonical_form_guard() -> None:
    with pytest.raises(GraphSizeError):
        canonical_form(path_graph(13))

@given(graphs(max_n=9), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_canonical_form_is_invariant(g: Graph, rng) -> None:
    form = canonical_form(g)
    for _ in range(100):
        perm = list(g.vertices())
        rng.shuffle(perm)
        assert(canonical_form(g.relabel(perm)) == form)

@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=200, deadline=None)
def test_canonical_form_matches_isomorphism(g: Graph, h: Graph) -> None:
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert((canonical_form(g) == canonical_form(h)) == same)
