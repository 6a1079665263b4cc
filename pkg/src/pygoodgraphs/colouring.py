from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pygoodgraphs.pygoodgraphs_base_classes import ColouringError, OrderError
from pygoodgraphs.graph_core import Graph, bits


def is_connected_order(g: Graph, seq: Sequence[int]) -> bool:
    """Every vertex after the first has an earlier neighbour"""
    seen = 0
    for i, v in enumerate(seq):
        if i and not g.adj[v] & seen:
            return False
        seen |= 1 << v
    return True


@dataclass(frozen=True)
class VertexOrder:
    """A permutation of the vertices of a graph. Build with VertexOrder.of(g, seq)."""
    seq: Tuple[int, ...]
    connected: bool

    @classmethod
    def of(cls, g: Graph, seq: Sequence[int], require_connected: bool=False) -> "VertexOrder":
        try:
            seq = tuple(int(v) for v in seq)
        except (TypeError, ValueError):
            raise OrderError(f"{seq} is not a sequence of vertex labels")
        if sorted(seq) != list(g.vertices()):
            raise OrderError(f"{list(seq)} is not a permutation of 0..{g.n-1}")
        connected = is_connected_order(g, seq)
        if require_connected and not connected:
            raise OrderError(f"{list(seq)} is not a connected order")
        return cls(seq, connected)

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    @property
    def first(self) -> int:
        return self.seq[0]

    @property
    def last(self) -> int:
        return self.seq[-1]

    def positions(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.seq)}

    def position(self, v: int) -> int:
        return self.seq.index(v)

    def before(self, u: int, v: int) -> bool:
        return self.position(u) < self.position(v)


@dataclass
class Colouring:
    """Vertex to colour map, colours start at 1"""
    colour: Dict[int, int]

    @property
    def num_colours(self) -> int:
        return max(self.colour.values(), default=0)

    def __getitem__(self, v: int) -> int:
        return self.colour[v]

    def as_json(self) -> Dict[str, int]:
        return {str(v): c for v, c in sorted(self.colour.items())}


def first_fit(used: int, start: int=1) -> int:
    """Smallest colour >= start whose bit is not set in used"""
    c = start
    while used >> c & 1:
        c += 1
    return c

def _as_order(g: Graph, o: Union[VertexOrder, Sequence[int]]) -> VertexOrder:
    if isinstance(o, VertexOrder):
        if sorted(o.seq) != list(g.vertices()):
            raise OrderError(f"{list(o.seq)} is not a permutation of 0..{g.n-1}")
        return o
    return VertexOrder.of(g, o)

def _greedy(g: Graph, seq: Sequence[int], first_colour: int) -> Colouring:
    colour = {}
    used = [0] * g.n
    for i, v in enumerate(seq):
        c = first_colour if i == 0 else first_fit(used[v])
        colour[v] = c
        for u in bits(g.adj[v]):
            used[u] |= 1 << c
    return Colouring(colour)

def greedy_colour(g: Graph, o: Union[VertexOrder, Sequence[int]]) -> Colouring:
    """First-fit colouring along o; o need not be connected"""
    return _greedy(g, _as_order(g, o).seq, 1)

def greedy_colour_start2(g: Graph, o: Union[VertexOrder, Sequence[int]]) -> Colouring:
    """As greedy_colour, but the first vertex of o receives colour 2"""
    return _greedy(g, _as_order(g, o).seq, 2)

def is_proper(g: Graph, c: Colouring) -> bool:
    missing = [v for v in g.vertices() if v not in c.colour]
    if missing:
        raise ColouringError(f"No colour assigned to vertices {missing}")
    return all(c[u] != c[v] for u, v in g.edges())


# -- Exact colouring -------------------------------------------------------------

def greedy_clique(g: Graph) -> List[int]:
    """A maximal clique grown from every seed by highest degree, largest kept"""
    best: List[int] = []
    by_degree = sorted(g.vertices(), key=lambda v: -g.degree(v))
    for seed in by_degree:
        clique = [seed]
        candidates = g.adj[seed]
        for v in by_degree:
            if candidates >> v & 1:
                clique.append(v)
                candidates &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best

def degeneracy_order(g: Graph) -> List[int]:
    """Smallest-last order: reversed sequence of minimum degree removals"""
    remaining = g.vertex_mask
    removed = []
    while remaining:
        v = min(bits(remaining), key=lambda x: ((g.adj[x] & remaining).bit_count(), x))
        removed.append(v)
        remaining &= ~(1 << v)
    return removed[::-1]

def k_colouring(g: Graph, k: int, clique: Sequence[int]=()) -> Optional[Colouring]:
    """Returns a proper colouring with at most k colours, or None.

    Backtracking with forward checking; the next vertex is the uncoloured one
    with the fewest remaining colours (ties: more coloured neighbours, then
    higher degree). A new colour is only opened as max used colour + 1.
    """
    if g.n == 0:
        return Colouring({})
    if k <= 0 or len(clique) > k:
        return None
    full = ((1 << k) - 1) << 1
    colour = [0] * g.n
    banned = [0] * g.n

    def assign(v: int, c: int) -> List[int]:
        colour[v] = c
        touched = []
        for u in bits(g.adj[v]):
            if not colour[u] and not banned[u] >> c & 1:
                banned[u] |= 1 << c
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: List[int]) -> None:
        colour[v] = 0
        for u in touched:
            banned[u] &= ~(1 << c)

    for i, v in enumerate(clique):
        assign(v, i + 1)
    uncoloured = [v for v in g.vertices() if not colour[v]]

    def search(left: int, max_used: int) -> bool:
        if not left:
            return True
        pick, pick_avail, pick_key = -1, 0, None
        for v in bits(left):
            avail = full & ~banned[v]
            if not avail:
                return False
            key = (avail.bit_count(), -banned[v].bit_count(), -g.degree(v))
            if pick_key is None or key < pick_key:
                pick, pick_avail, pick_key = v, avail, key
        for c in bits(pick_avail):
            if c > max_used + 1:
                break
            touched = assign(pick, c)
            if all(full & ~banned[u] for u in touched) and search(left & ~(1 << pick), max(max_used, c)):
                return True
            undo(pick, c, touched)
        return False

    left = sum(1 << v for v in uncoloured)
    if search(left, len(clique)):
        return Colouring({v: colour[v] for v in g.vertices()})
    return None

def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; 0 for the empty graph"""
    return optimal_colouring(g).num_colours

def optimal_colouring(g: Graph) -> Colouring:
    """A colouring with chi(g) colours by binary descent between clique and greedy bounds"""
    if g.n == 0:
        return Colouring({})
    clique = greedy_clique(g)
    best = greedy_colour(g, degeneracy_order(g))
    low, high = len(clique), best.num_colours
    while low < high:
        mid = (low + high) // 2
        found = k_colouring(g, mid, clique)
        if found is None:
            low = mid + 1
        else:
            best, high = found, found.num_colours
    return best
