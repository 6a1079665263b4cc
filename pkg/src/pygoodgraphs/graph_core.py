import json
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
import numpy as np

from pygoodgraphs.pygoodgraphs_base_classes import GraphFormatError, GraphSizeError, Parity
from pygoodgraphs.pygoodgraphs_base_classes import check_accepted

VertexSubset = FrozenSet[int]
Edge = Tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yields the set bits of mask, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable undirected simple graph on the vertices 0..n-1.

    Adjacency is kept as one integer bitset per vertex. Graphs built by
    induced() record the labels the vertices had in the graph they were
    taken from; equality and hashing ignore those labels.
    """

    __slots__ = ("_n", "_adj", "_labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[int]=None):
        """
            Parameters:
                - n: vertex count, n >= 0
                - adj: one neighbourhood bitset per vertex, symmetric and without loops
                - labels: optional original label per vertex, defaults to 0..n-1
        """
        if n < 0 or len(adj) != n:
            raise GraphFormatError(f"Expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphFormatError(f"Vertex {v} has a neighbour out of range 0..{n-1}")
            if row >> v & 1:
                raise GraphFormatError(f"Self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphFormatError(f"Adjacency is not symmetric on ({v}, {u})")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_labels", tuple(labels) if labels is not None else tuple(range(n)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def labels(self) -> Tuple[int, ...]:
        """Original label of each vertex"""
        return self._labels

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def neighbours(self, v: int) -> FrozenSet[int]:
        return frozenset(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """All edges (u, v) with u < v, sorted"""
        return [(u, v) for u in self.vertices() for v in bits(self._adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self._n, self._n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self._n, [full & ~row & ~(1 << v) for v, row in enumerate(self._adj)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Returns the isomorphic graph in which vertex v is renamed perm[v]"""
        if sorted(perm) != list(self.vertices()):
            raise GraphFormatError(f"{list(perm)} is not a permutation of 0..{self._n-1}")
        adj = [0] * self._n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph(self._n, adj)

    def remove_vertices(self, s: Iterable[int]) -> "Graph":
        return induced(self, set(self.vertices()) - set(s))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def subset_mask(g: Graph, s: Iterable[int]) -> int:
    """Converts a vertex subset of g to a bitset, checking every member"""
    mask = 0
    for v in s:
        if not isinstance(v, (int, np.integer)) or v < 0 or v >= g.n:
            raise GraphFormatError(f"Vertex '{v}' is not in range 0..{g.n-1}")
        mask |= 1 << int(v)
    return mask


# -- Construction ------------------------------------------------------------

def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Builds a graph with exactly the given edges, duplicates merged"""
    if n < 0:
        raise GraphFormatError(f"Vertex count '{n}' is negative")
    adj = [0] * n
    for edge in edges:
        if len(edge) != 2:
            raise GraphFormatError(f"Edge {edge} does not have two endpoints")
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"Edge ({u}, {v}) has an endpoint out of range 0..{n-1}")
        if u == v:
            raise GraphFormatError(f"Self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)

def from_edge_list_text(text: str) -> Graph:
    """Parses the 'n m' header followed by m lines 'u v'"""
    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphFormatError("Edge list must start with an 'n m' header")
    try:
        rows = [[int(x) for x in line] for line in lines]
    except ValueError as err:
        raise GraphFormatError(f"Edge list contains a non-integer token: {err}")
    n, m = rows[0]
    if len(rows) - 1 != m:
        raise GraphFormatError(f"Header announces {m} edges, found {len(rows) - 1}")
    return from_edge_list(n, rows[1:])

def path_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])

def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphFormatError(f"A cycle needs at least 3 vertices, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])

def complete_graph(k: int) -> Graph:
    return from_edge_list(k, combinations(range(k), 2))

def star_graph(k: int) -> Graph:
    """K1,k with centre 0"""
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])

def empty_graph(k: int) -> Graph:
    return Graph(k, [0] * k)

def crown_graph(k: int) -> Graph:
    """K_{k,k} minus a perfect matching: a_i = 2i, b_i = 2i+1, a_i ~ b_j for i != j"""
    return from_edge_list(2 * k, [(2 * i, 2 * j + 1) for i in range(k) for j in range(k) if i != j])


# -- graph6 --------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Encodes g as a graph6 string without header (n <= 62)"""
    check_accepted("graph6", g.n)
    flags = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    flags += [False] * (-len(flags) % 6)
    out = [chr(g.n + 63)]
    for start in range(0, len(flags), 6):
        value = 0
        for flag in flags[start:start + 6]:
            value = value << 1 | flag
        out.append(chr(value + 63))
    return "".join(out)

def from_graph6(text: str) -> Graph:
    """Decodes one graph6 record, optionally preceded by the '>>graph6<<' header"""
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise GraphFormatError("Empty graph6 record")
    if any(ord(ch) < 63 or ord(ch) > 126 for ch in text):
        raise GraphFormatError(f"'{text}' contains characters outside the graph6 range")
    if text[0] == "~":
        raise GraphSizeError("graph6 records with 63 or more vertices are not supported")
    n = ord(text[0]) - 63
    num_pairs = n * (n - 1) // 2
    expected = (num_pairs + 5) // 6
    body = text[1:]
    if len(body) != expected:
        raise GraphFormatError(f"graph6 record for n={n} needs {expected} data characters, got {len(body)}")
    flags = []
    for ch in body:
        value = ord(ch) - 63
        flags.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if flags[pos]:
                edges.append((i, j))
            pos += 1
    return from_edge_list(n, edges)

def parse_graph(text: str) -> Graph:
    """Reads a graph given as graph6, as an edge list or as a JSON object with a 'graph6' key"""
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("No graph given")
    if stripped.startswith("{"):
        try:
            record = json.loads(stripped.splitlines()[0])
        except json.JSONDecodeError as err:
            raise GraphFormatError(f"Invalid JSON graph: {err}")
        if not isinstance(record, dict) or "graph6" not in record:
            raise GraphFormatError("JSON graph input needs a 'graph6' key")
        return from_graph6(str(record["graph6"]))
    first = stripped.splitlines()[0].split()
    if first and all(token.lstrip("-").isdigit() for token in first):
        return from_edge_list_text(stripped)
    return from_graph6(stripped.splitlines()[0])


# -- Structure -----------------------------------------------------------------

def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph of g induced by s, relabelled densely in increasing label order"""
    members = sorted(bits(subset_mask(g, s)))
    position = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        row = 0
        for u in bits(g.adj[v]):
            if u in position:
                row |= 1 << position[u]
        adj.append(row)
    return Graph(len(members), adj, labels=[g.labels[v] for v in members])

def component_masks(g: Graph, within: int=None) -> List[int]:
    """Connected components of g restricted to the vertex bitset within"""
    remaining = g.vertex_mask if within is None else within
    comps = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps

def mask_is_connected(g: Graph, mask: int) -> bool:
    return len(component_masks(g, mask)) <= 1

def components(g: Graph) -> List[VertexSubset]:
    return [frozenset(bits(comp)) for comp in component_masks(g)]

def is_connected(g: Graph) -> bool:
    """The empty graph counts as connected"""
    return mask_is_connected(g, g.vertex_mask)

def is_clique(g: Graph, s: Iterable[int]) -> bool:
    mask = subset_mask(g, s)
    return all((g.adj[v] | 1 << v) & mask == mask for v in bits(mask))

def is_cutset(g: Graph, s: Iterable[int]) -> bool:
    return not mask_is_connected(g, g.vertex_mask & ~subset_mask(g, s))

def is_clique_cutset(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return is_clique(g, s) and is_cutset(g, s)

def find_claw(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """Returns (centre, x, y, z) inducing K1,3, or None"""
    for centre in g.vertices():
        for x, y, z in combinations(bits(g.adj[centre]), 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return centre, x, y, z
    return None

def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None

def is_bipartite(g: Graph) -> bool:
    side = {}
    for comp in component_masks(g):
        start = (comp & -comp).bit_length() - 1
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True

def is_p4_free(g: Graph) -> bool:
    """True for cographs: no four vertices induce a path"""
    for quad in combinations(g.vertices(), 4):
        mask = subset_mask(g, quad)
        degrees = sorted((g.adj[v] & mask).bit_count() for v in quad)
        if degrees == [1, 1, 2, 2] and mask_is_connected(g, mask):
            return False
    return True


# -- Paths and holes -------------------------------------------------------------

def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if not seq or len(set(seq)) != len(seq):
        return False
    subset_mask(g, seq)
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if g.has_edge(u, seq[j]) != (j == i + 1):
                return False
    return True

def is_flat_path(g: Graph, seq: Sequence[int]) -> bool:
    """An induced path whose internal vertices all have degree 2 in g"""
    return is_induced_path(g, seq) and all(g.degree(v) == 2 for v in seq[1:-1])

def is_maximal_flat_path(g: Graph, seq: Sequence[int]) -> bool:
    """A flat path with at least one edge whose two ends are not of degree 2"""
    return len(seq) >= 2 and is_flat_path(g, seq) and g.degree(seq[0]) != 2 and g.degree(seq[-1]) != 2

def _extend(g: Graph, path: List[int], at_end: bool) -> None:
    while True:
        end = path[-1] if at_end else path[0]
        if g.degree(end) != 2:
            return
        others = [u for u in bits(g.adj[end]) if u not in path]
        if len(others) != 1:
            return
        nxt = others[0]
        rest = path[:-1] if at_end else path[1:]
        if any(g.has_edge(nxt, v) for v in rest):
            return
        if at_end:
            path.append(nxt)
        else:
            path.insert(0, nxt)

def _oriented(path: Sequence[int]) -> Tuple[int, ...]:
    return tuple(path) if path[0] <= path[-1] else tuple(reversed(path))

def maximal_flat_paths(g: Graph) -> List[Tuple[int, ...]]:
    """Every inclusion-maximal flat path with at least one edge, smaller end first, sorted"""
    found = set()
    for u, v in g.edges():
        for first in (True, False):
            path = [u, v]
            _extend(g, path, first)
            _extend(g, path, not first)
            found.add(_oriented(path))
    sets = {p: frozenset(p) for p in found}
    maximal = [p for p in found if not any(sets[p] < sets[q] for q in found)]
    return sorted(maximal)

def find_hole(g: Graph, parity: Parity=Parity.ANY) -> Optional[Tuple[int, ...]]:
    """Returns a chordless cycle of length >= 4 of the given parity, smallest vertex first"""
    parity = Parity(parity)

    def grow(path: List[int], inner: int) -> Optional[Tuple[int, ...]]:
        start, last = path[0], path[-1]
        for x in bits(g.adj[last] & ~((2 << start) - 1)):
            if x in path or g.adj[x] & inner:
                continue
            if len(path) > 1 and g.has_edge(x, start):
                if len(path) + 1 >= 4 and parity.accepts(len(path) + 1):
                    return tuple(path + [x])
                continue
            found = grow(path + [x], inner | (1 << last if len(path) > 1 else 0))
            if found:
                return found
        return None

    for start in g.vertices():
        hole = grow([start], 0)
        if hole:
            return hole
    return None


# -- Canonical form --------------------------------------------------------------

def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)

def canonical_form(g: Graph) -> bytes:
    """Isomorphism invariant byte string, for graphs on at most 12 vertices.

    Vertices are placed position by position in non-increasing degree order;
    each placed vertex contributes its adjacency row to the earlier positions,
    and only the partial placements reaching the lexicographically largest
    rows so far are kept. Interchangeable twins are tried once.

    The result is the largest code over all degree-sorted placements, not the
    smallest over all permutations. Both extremes are taken over a set of
    placements closed under isomorphism, so either one separates exactly the
    isomorphism classes; the largest prunes sooner because dense rows come first.
    """
    check_accepted("canonical_form", g.n)
    n = g.n
    if n <= 1:
        return bytes([n])
    degree = [g.degree(v) for v in g.vertices()]
    slot_degree = sorted(degree, reverse=True)
    partials: List[Tuple[int, ...]] = [()]
    code: List[int] = []
    for level in range(n):
        best = None
        survivors = []
        for placed in partials:
            placed_mask = sum(1 << v for v in placed)
            tried = []
            for v in g.vertices():
                if placed_mask >> v & 1 or degree[v] != slot_degree[level]:
                    continue
                if any(_twins(g, v, t) for t in tried):
                    continue
                tried.append(v)
                row = tuple(g.adj[v] >> p & 1 for p in placed)
                if best is None or row > best:
                    best, survivors = row, [placed + (v,)]
                elif row == best:
                    survivors.append(placed + (v,))
        code.extend(best)
        partials = survivors
    packed = np.packbits(np.array(code, dtype=np.uint8))
    return bytes([n]) + packed.tobytes()
