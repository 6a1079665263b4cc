from itertools import combinations, product

import networkx as nx
from hypothesis import strategies as st

from pygoodgraphs.graph_core import Graph, from_edge_list


@st.composite
def graphs(draw, min_n: int=0, max_n: int=8) -> Graph:
    """Random labelled graph strategy"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, flags) if keep])

def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h

def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])

def brute_force_chi(g: Graph) -> int:
    for k in range(g.n + 1):
        for colours in product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in g.edges()):
                return k
    return g.n

def two_disjoint_edges() -> Graph:
    return from_edge_list(4, [(0, 1), (2, 3)])
