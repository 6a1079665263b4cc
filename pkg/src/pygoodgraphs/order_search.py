import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from pygoodgraphs.pygoodgraphs_base_classes import DisconnectedGraphError, LoggedSearch, check_accepted
from pygoodgraphs.graph_core import Graph, bits, canonical_form, induced, is_connected
from pygoodgraphs.graph_core import mask_is_connected, to_graph6
from pygoodgraphs.colouring import Colouring, VertexOrder, chromatic_number, first_fit, greedy_colour


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{g} has no connected order")

def _require_searchable(g: Graph) -> None:
    """Bad-order search is exponential in n; larger graphs are refused, not left running"""
    check_accepted("bad_order_search", g.n)
    _require_connected(g)

def connected_orders(g: Graph) -> Iterator[VertexOrder]:
    """Yields every connected order of g once, in lexicographic order"""
    _require_connected(g)
    n = g.n
    seq: List[int] = []

    def extend(placed: int, frontier: int) -> Iterator[VertexOrder]:
        if len(seq) == n:
            yield VertexOrder(tuple(seq), True)
            return
        for v in bits(frontier if seq else g.vertex_mask):
            seq.append(v)
            now = placed | 1 << v
            yield from extend(now, (frontier | g.adj[v]) & ~now)
            seq.pop()

    yield from extend(0, 0)

def _orders_reaching(g: Graph, target: int) -> Iterator[Tuple[int, ...]]:
    """Connected orders whose greedy colouring uses at least target colours.

    Depth first over partial connected orders with the greedy colouring kept
    incrementally. An unplaced vertex v can end with colour at most
    |colours on placed neighbours| + |unplaced neighbours| + 1; while no
    vertex has reached target, a branch where every such bound is below target
    is cut. Orders come out in lexicographic order.
    """
    n = g.n
    used = [0] * n
    seq: List[int] = []

    def hopeful(placed: int) -> bool:
        for v in bits(g.vertex_mask & ~placed):
            if used[v].bit_count() + (g.adj[v] & ~placed).bit_count() + 1 >= target:
                return True
        return False

    def extend(placed: int, frontier: int, top: int) -> Iterator[Tuple[int, ...]]:
        if len(seq) == n:
            if top >= target:
                yield tuple(seq)
            return
        if top < target and not hopeful(placed):
            return
        for v in bits(frontier if seq else g.vertex_mask):
            c = first_fit(used[v])
            now = placed | 1 << v
            touched = [u for u in bits(g.adj[v] & ~now) if not used[u] >> c & 1]
            for u in touched:
                used[u] |= 1 << c
            seq.append(v)
            yield from extend(now, (frontier | g.adj[v]) & ~now, max(top, c))
            seq.pop()
            for u in touched:
                used[u] &= ~(1 << c)

    yield from extend(0, 0, 0)

def _good_order_exists(g: Graph, chi: int) -> bool:
    """True if some connected order greedy colours g with chi colours"""
    n = g.n
    used = [0] * n
    depth = [0]

    def extend(placed: int, frontier: int) -> bool:
        if depth[0] == n:
            return True
        for v in bits(frontier if depth[0] else g.vertex_mask):
            c = first_fit(used[v])
            if c > chi:
                continue
            now = placed | 1 << v
            touched = [u for u in bits(g.adj[v] & ~now) if not used[u] >> c & 1]
            for u in touched:
                used[u] |= 1 << c
            depth[0] += 1
            found = extend(now, (frontier | g.adj[v]) & ~now)
            depth[0] -= 1
            for u in touched:
                used[u] &= ~(1 << c)
            if found:
                return True
        return False

    return extend(0, 0)

def find_bad_connected_order(g: Graph) -> Optional[Tuple[VertexOrder, Colouring]]:
    """The lexicographically first connected order using more than chi(g) colours, or None"""
    _require_searchable(g)
    seq = next(_orders_reaching(g, chromatic_number(g) + 1), None)
    if seq is None:
        return None
    return VertexOrder(seq, True), greedy_colour(g, seq)

def iter_bad_connected_orders(g: Graph) -> Iterator[Tuple[VertexOrder, Colouring]]:
    """Every bad connected order of g with its colouring, lexicographically"""
    _require_searchable(g)
    for seq in _orders_reaching(g, chromatic_number(g) + 1):
        yield VertexOrder(seq, True), greedy_colour(g, seq)

def gamma_c(g: Graph) -> int:
    """Largest number of colours the greedy algorithm uses over all connected orders"""
    _require_searchable(g)
    best = chromatic_number(g)
    while True:
        seq = next(_orders_reaching(g, best + 1), None)
        if seq is None:
            return best
        best = greedy_colour(g, seq).num_colours

def all_connected_orders_bad(g: Graph) -> bool:
    """True if g is connected, nonempty and no connected order colours it optimally"""
    _require_connected(g)
    if g.n == 0:
        return False
    return not _good_order_exists(g, chromatic_number(g))

def sources_and_sinks(g: Graph, o: Union[VertexOrder, List[int]]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Sources and sinks of g with every edge oriented from the earlier to the later vertex"""
    if not isinstance(o, VertexOrder):
        o = VertexOrder.of(g, o)
    before = 0
    earlier = [0] * g.n
    for v in o.seq:
        earlier[v] = before
        before |= 1 << v
    sources = frozenset(v for v in g.vertices() if not g.adj[v] & earlier[v])
    sinks = frozenset(v for v in g.vertices() if not g.adj[v] & ~earlier[v] & ~(1 << v))
    return sources, sinks


@dataclass
class GoodnessVerdict:
    """Outcome of is_good. Witness vertices use the labels of the graph checked."""
    good: bool
    witness_subset: Optional[FrozenSet[int]] = None
    witness_order: Optional[Tuple[int, ...]] = None
    witness_colours: Optional[int] = None
    chi: Optional[int] = None

    def as_json(self) -> Dict:
        return {"good": self.good,
                "witness_subset": sorted(self.witness_subset) if self.witness_subset is not None else None,
                "witness_order": list(self.witness_order) if self.witness_order is not None else None,
                "witness_colours": self.witness_colours,
                "chi": self.chi}


class GoodnessOracle(LoggedSearch):
    """Shared memo of 'has a bad connected order' per isomorphism class.

    Keyed by canonical form. Safe to share between worker threads; the cache
    and log_str are only touched while holding the lock.
    """
    def __init__(self, loud: bool=False):
        super().__init__(loud)
        self._verdicts: Dict[object, bool] = {}
        self._lock = threading.RLock()
        self.hits = 0
        self.misses = 0
        self.bad_found = 0

    def __len__(self) -> int:
        return len(self._verdicts)

    def log(self, value: str, err: bool=False, err_str: str=None) -> None:
        with self._lock:
            super().log(value, err, err_str)

    @staticmethod
    def key(h: Graph) -> bytes:
        return canonical_form(h)

    def has_bad_order(self, h: Graph) -> bool:
        """True if the connected graph h has a bad connected order"""
        k = self.key(h)
        with self._lock:
            if k in self._verdicts:
                self.hits += 1
                return self._verdicts[k]
        bad = find_bad_connected_order(h) is not None
        with self._lock:
            self._verdicts[k] = bad
            self.misses += 1
            if bad:
                self.bad_found += 1
                self.log(f"bad order found on n={h.n} {to_graph6(h)}")
        return bad


def _connected_subsets(g: Graph, size: int) -> List[Tuple[int, ...]]:
    return [s for s in combinations(g.vertices(), size) if mask_is_connected(g, sum(1 << v for v in s))]

def is_good(g: Graph, oracle: GoodnessOracle=None, threads: int=1) -> GoodnessVerdict:
    """Checks every connected induced subgraph of g for a bad connected order.

    Subsets are examined by increasing size, lexicographically within a size,
    so a bad verdict carries a smallest witness. With threads > 1 each size
    level is checked on a thread pool and merged in the same order.
    """
    check_accepted("bad_order_search", g.n)
    oracle = oracle if oracle is not None else GoodnessOracle()

    def check(s: Tuple[int, ...]) -> bool:
        return oracle.has_bad_order(induced(g, s))

    for size in range(1, g.n + 1):
        subsets = _connected_subsets(g, size)
        if threads > 1 and len(subsets) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                flags = list(pool.map(check, subsets))
            witness = next((s for s, bad in zip(subsets, flags) if bad), None)
        else:
            witness = next((s for s in subsets if check(s)), None)
        if witness is not None:
            oracle.log(f"witness of size {size} in graph on {g.n} vertices")
            return _bad_verdict(g, witness)
    return GoodnessVerdict(True, chi=chromatic_number(g))

def _bad_verdict(g: Graph, subset: Tuple[int, ...]) -> GoodnessVerdict:
    h = induced(g, subset)
    order, colouring = find_bad_connected_order(h)
    return GoodnessVerdict(False,
                           witness_subset=frozenset(g.labels[v] for v in subset),
                           witness_order=tuple(g.labels[subset[v]] for v in order.seq),
                           witness_colours=colouring.num_colours,
                           chi=chromatic_number(h))

def is_minimally_bad(g: Graph, oracle: GoodnessOracle=None, threads: int=1) -> bool:
    """g is bad and every proper connected induced subgraph of g is good"""
    if g.n == 0:
        return False
    verdict = is_good(g, oracle, threads)
    return not verdict.good and len(verdict.witness_subset) == g.n
