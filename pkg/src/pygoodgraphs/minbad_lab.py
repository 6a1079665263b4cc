import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union
import numpy as np

from pygoodgraphs.pygoodgraphs_base_classes import LemmaId, LoggedSearch, PreconditionError, check_accepted
from pygoodgraphs.graph_core import Graph, bits, canonical_form, component_masks, is_claw_free
from pygoodgraphs.graph_core import mask_is_connected, maximal_flat_paths, is_maximal_flat_path, to_graph6
from pygoodgraphs.colouring import VertexOrder, chromatic_number, greedy_colour
from pygoodgraphs.order_search import GoodnessOracle, all_connected_orders_bad, find_bad_connected_order
from pygoodgraphs.order_search import gamma_c, is_good, is_minimally_bad, sources_and_sinks


# -- Enumeration -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _connected_classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    found: Dict[bytes, Graph] = {}
    new = 1 << (n - 1)
    for h in _connected_classes(n - 1):
        for mask in range(1, new):
            adj = [row | new if mask >> v & 1 else row for v, row in enumerate(h.adj)]
            g = Graph(n, adj + [mask])
            found.setdefault(canonical_form(g), g)
    return tuple(found[key] for key in sorted(found))

def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on n vertices, by canonical form"""
    check_accepted("enumerate_connected_graphs", n)
    return iter(_connected_classes(n))


# -- Census ----------------------------------------------------------------------

@dataclass
class CensusEntry:
    canonical: str
    graph6: str
    n: int
    chi: int
    gamma_c: int
    good: bool
    minimally_bad: bool
    witness_subset: Optional[Tuple[int, ...]] = None
    witness_order: Optional[Tuple[int, ...]] = None

    @property
    def bad(self) -> bool:
        return not self.good

    def as_json(self) -> Dict:
        return {"canonical": self.canonical, "graph6": self.graph6, "n": self.n,
                "chi": self.chi, "gamma_c": self.gamma_c, "good": self.good,
                "minimally_bad": self.minimally_bad,
                "witness_subset": list(self.witness_subset) if self.witness_subset is not None else None,
                "witness_order": list(self.witness_order) if self.witness_order is not None else None}


@dataclass
class CensusReport:
    max_n: int
    entries: List[CensusEntry] = field(default_factory=list)

    @property
    def bad(self) -> List[CensusEntry]:
        return [e for e in self.entries if e.bad]

    @property
    def minimally_bad(self) -> List[CensusEntry]:
        return [e for e in self.entries if e.minimally_bad]

    @property
    def all_minimally_bad_chi3(self) -> bool:
        """Evidence flag: every minimally bad graph found has chromatic number 3"""
        return all(e.chi == 3 for e in self.minimally_bad)

    def summary(self) -> Dict:
        sizes = np.array([e.n for e in self.entries], dtype=np.int64)
        bad = np.array([e.bad for e in self.entries], dtype=bool)
        minimal = np.array([e.minimally_bad for e in self.entries], dtype=bool)
        width = self.max_n + 1
        graphs = np.bincount(sizes, minlength=width)
        bads = np.bincount(sizes[bad], minlength=width)
        minimals = np.bincount(sizes[minimal], minlength=width)
        counts = {str(k): {"graphs": int(graphs[k]), "bad": int(bads[k]), "minimally_bad": int(minimals[k])}
                  for k in range(1, width)}
        return {"max_n": self.max_n,
                "counts": counts,
                "minimally_bad": [e.graph6 for e in self.minimally_bad],
                "all_minimally_bad_chi3": self.all_minimally_bad_chi3}

    def json_lines(self) -> Iterator[str]:
        for entry in self.entries:
            yield json.dumps(entry.as_json())
        yield json.dumps({"summary": self.summary()})


class Census(LoggedSearch):
    """Goodness census over every connected isomorphism class up to max_n vertices

        Parameters:
            - threads: worker threads per graph size, default 1
            - oracle: GoodnessOracle to share, a fresh one by default
            - loud: default False, print progress to stderr
    """
    def __init__(self, threads: int=1, oracle: GoodnessOracle=None, loud: bool=False):
        super().__init__(loud)
        self.threads = max(1, threads)
        self.oracle = oracle if oracle is not None else GoodnessOracle(loud=loud)

    def entry(self, g: Graph) -> CensusEntry:
        verdict = is_good(g, self.oracle)
        minimal = not verdict.good and len(verdict.witness_subset) == g.n
        return CensusEntry(canonical=canonical_form(g).hex(),
                           graph6=to_graph6(g),
                           n=g.n,
                           chi=chromatic_number(g),
                           gamma_c=gamma_c(g),
                           good=verdict.good,
                           minimally_bad=minimal,
                           witness_subset=tuple(sorted(verdict.witness_subset)) if not verdict.good else None,
                           witness_order=verdict.witness_order)

    def iter_entries(self, max_n: int, long_run: bool=False) -> Iterator[CensusEntry]:
        """Yields entries size by size, sorted by canonical form within a size"""
        check_accepted("census_long" if long_run else "census", max_n)
        for n in range(1, max_n + 1):
            graphs = list(enumerate_connected_graphs(n))
            self.log(f"n={n}: {len(graphs)} connected graphs")
            if self.threads > 1:
                with ThreadPoolExecutor(max_workers=self.threads) as pool:
                    yield from pool.map(self.entry, graphs)
            else:
                for g in graphs:
                    yield self.entry(g)
            self.log(f"n={n}: done, {len(self.oracle)} classes cached")

    def run(self, max_n: int, long_run: bool=False) -> CensusReport:
        report = CensusReport(max_n, list(self.iter_entries(max_n, long_run)))
        for e in report.minimally_bad:
            self.log(f"minimally bad: {e.graph6} chi={e.chi}")
        return report


def census(max_n: int, long_run: bool=False, threads: int=1, oracle: GoodnessOracle=None,
           loud: bool=False) -> CensusReport:
    """Runs a Census; max_n above 7 needs long_run=True"""
    return Census(threads=threads, oracle=oracle, loud=loud).run(max_n, long_run)

def search_all_orders_bad(max_n: int, claw_free: bool=True, loud: bool=False) -> List[Graph]:
    """Connected graphs up to max_n vertices in which every connected order is bad"""
    tracer = LoggedSearch(loud)
    found = []
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n):
            if claw_free and not is_claw_free(g):
                continue
            if find_bad_connected_order(g) is None:
                continue
            if all_connected_orders_bad(g):
                tracer.log(f"every connected order is bad: {to_graph6(g)}")
                found.append(g)
    return found


# -- Lemma suite -----------------------------------------------------------------

@dataclass
class LemmaVerdict:
    lemma: LemmaId
    holds: bool
    detail: str = ""

    def as_json(self) -> Dict:
        return {"lemma": self.lemma.value, "holds": self.holds, "detail": self.detail}


def _flat_subpaths(g: Graph) -> Iterator[Tuple[int, ...]]:
    """Every flat path with at least one edge, each once"""
    seen = set()
    for path in maximal_flat_paths(g):
        for i in range(len(path)):
            for j in range(i + 2, len(path) + 1):
                sub = path[i:j]
                key = sub if sub[0] <= sub[-1] else sub[::-1]
                if key not in seen:
                    seen.add(key)
                    yield key

def _well_ordered(path: Sequence[int], pos: Dict[int, int]) -> bool:
    steps = [pos[b] - pos[a] for a, b in zip(path, path[1:])]
    return all(s > 0 for s in steps) or all(s < 0 for s in steps)


class _LemmaSuite:
    def __init__(self, g: Graph, order: VertexOrder):
        self.g = g
        self.order = order
        self.seq = order.seq
        self.pos = order.positions()
        self.pi = greedy_colour(g, order)
        self.chi = chromatic_number(g)
        self.first, self.last = order.first, order.last

    def _mask(self, vertices) -> int:
        return sum(1 << v for v in vertices)

    def lm2(self) -> LemmaVerdict:
        top = self.pi[self.last]
        over = [v for v in self.seq[:-1] if self.pi[v] > self.chi]
        if top != self.chi + 1:
            return LemmaVerdict(LemmaId.LM2, False, f"last vertex {self.last} has colour {top}, chi={self.chi}")
        if over:
            return LemmaVerdict(LemmaId.LM2, False, f"vertices {over} exceed chi={self.chi}")
        return LemmaVerdict(LemmaId.LM2, True)

    def c2(self) -> LemmaVerdict:
        top = self.pi[self.last]
        return LemmaVerdict(LemmaId.C2, top >= 4, "" if top >= 4 else f"last vertex colour {top} < 4")

    def lm1(self) -> LemmaVerdict:
        n = len(self.seq)
        for i, v in enumerate(self.seq):
            parts = {"<=": self.seq[:i + 1], "<": self.seq[:i], ">=": self.seq[i:], ">": self.seq[i + 1:]}
            for name, part in parts.items():
                if not mask_is_connected(self.g, self._mask(part)):
                    return LemmaVerdict(LemmaId.LM1, False, f"G{name}{v} is disconnected")
        return LemmaVerdict(LemmaId.LM1, True, f"{4 * n} prefix/suffix sets connected")

    def c1(self) -> LemmaVerdict:
        g, pos = self.g, self.pos
        checked = 0
        for size in range(1, g.n - 1):
            for s in combinations(g.vertices(), size):
                comps = component_masks(g, g.vertex_mask & ~self._mask(s))
                if len(comps) < 2:
                    continue
                checked += 1
                top = max(pos[v] for v in s)
                above = [c for c in comps if max(pos[v] for v in bits(c)) > top]
                if len(above) > 1:
                    return LemmaVerdict(LemmaId.C1, False, f"cutset {list(s)} has {len(above)} components above its maximum")
                if above and not above[0] >> self.last & 1:
                    return LemmaVerdict(LemmaId.C1, False, f"cutset {list(s)}: component above its maximum misses {self.last}")
        return LemmaVerdict(LemmaId.C1, True, f"{checked} cutsets checked")

    def cunique(self) -> LemmaVerdict:
        sources, sinks = sources_and_sinks(self.g, self.order)
        holds = sources == {self.first} and sinks == {self.last}
        detail = "" if holds else f"sources {sorted(sources)}, sinks {sorted(sinks)}"
        return LemmaVerdict(LemmaId.CUNIQUE, holds, detail)

    def lm3(self) -> LemmaVerdict:
        pos = self.pos
        for v in self.g.vertices():
            if self.g.degree(v) != 2:
                continue
            b, a = sorted(self.g.neighbours(v), key=pos.get)
            starts = v == self.first and self.seq[1] == b
            between = pos[b] < pos[v] < pos[a]
            if starts == between:
                return LemmaVerdict(LemmaId.LM3, False, f"degree 2 vertex {v} with neighbours {b} < {a}")
            if self.pi[v] not in (1, 2):
                return LemmaVerdict(LemmaId.LM3, False, f"degree 2 vertex {v} has colour {self.pi[v]}")
        return LemmaVerdict(LemmaId.LM3, True)

    def c3(self) -> LemmaVerdict:
        for path in maximal_flat_paths(self.g):
            inner = [self.pi[v] for v in path[1:-1]]
            if any(c not in (1, 2) for c in inner) or any(x == y for x, y in zip(inner, inner[1:])):
                return LemmaVerdict(LemmaId.C3, False, f"flat path {list(path)} has internal colours {inner}")
        return LemmaVerdict(LemmaId.C3, True)

    def end_fp(self) -> LemmaVerdict:
        for path in _flat_subpaths(self.g):
            top = max(path, key=self.pos.get)
            if top not in (path[0], path[-1]):
                return LemmaVerdict(LemmaId.END_FP, False, f"flat path {list(path)} has its maximum {top} inside")
        return LemmaVerdict(LemmaId.END_FP, True)

    def pwo(self) -> LemmaVerdict:
        pos = self.pos
        for path in _flat_subpaths(self.g):
            if _well_ordered(path, pos):
                continue
            if self.first not in path[1:-1]:
                return LemmaVerdict(LemmaId.PWO, False, f"flat path {list(path)} is not well ordered")
            split = path.index(self.first)
            if not (_well_ordered(path[:split + 1], pos) and _well_ordered(path[split:], pos)):
                return LemmaVerdict(LemmaId.PWO, False, f"flat path {list(path)} is not well ordered on both sides of {self.first}")
        maximal = [p for p in _flat_subpaths(self.g) if is_maximal_flat_path(self.g, p)]
        unordered = [list(p) for p in maximal if not _well_ordered(p, pos)]
        if len(unordered) > 1:
            return LemmaVerdict(LemmaId.PWO, False, f"maximal flat paths not well ordered: {unordered}")
        return LemmaVerdict(LemmaId.PWO, True)

    def run(self) -> List[LemmaVerdict]:
        return [self.lm2(), self.c2(), self.lm1(), self.c1(), self.cunique(),
                self.lm3(), self.c3(), self.end_fp(), self.pwo()]


def check_lemmas(g: Graph, o: Union[VertexOrder, Sequence[int]], strict: bool=True,
                 verify_minimal: bool=False, oracle: GoodnessOracle=None) -> List[LemmaVerdict]:
    """Runs the structural lemma suite on a minimally bad graph and one of its bad orders.

        Parameters:
            - g: the graph, at most 10 vertices
            - o: a bad connected order of g
            - strict: default True, raise PreconditionError on bad inputs; otherwise warn and return []
            - verify_minimal: default False, also confirm minimal badness by brute force
    """
    check_accepted("check_lemmas", g.n)
    order = o if isinstance(o, VertexOrder) else VertexOrder.of(g, o)
    problem = None
    if not order.connected:
        problem = f"order {list(order.seq)} is not connected"
    elif greedy_colour(g, order).num_colours <= chromatic_number(g):
        problem = f"order {list(order.seq)} is not bad"
    elif verify_minimal and not is_minimally_bad(g, oracle):
        problem = "graph is not minimally bad"
    if problem:
        if strict:
            raise PreconditionError(problem)
        print(f"WARNING: lemma suite skipped, {problem}", file=sys.stderr)
        return []
    return _LemmaSuite(g, order).run()
