import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union
from aenum import MultiValueEnum

from pygoodgraphs.pygoodgraphs_base_classes import ObstructionSpecError, ClawFoundError, Parity, LIMITS
from pygoodgraphs.graph_core import Graph, bits, canonical_form, find_claw, from_edge_list, star_graph


class Family(MultiValueEnum):
    F1 = "F1", "f1"
    F2 = "F2", "f2"
    F3 = "F3", "f3"
    F4 = "F4", "f4"
    F5 = "F5", "f5"
    F6 = "F6", "f6"
    F7 = "F7", "f7"
    F8 = "F8", "f8"
    F9 = "F9", "f9"
    F10 = "F10", "f10"
    F11 = "F11", "f11"
    F12 = "F12", "f12"

    @property
    def index(self) -> int:
        return int(self.value[1:])


# Per family: one (minimum, parity) pair per parameter
ACCEPTED_PARAMS = {Family.F1:  [(5, Parity.ODD)],
                   Family.F2:  [(1, Parity.ANY)],
                   Family.F3:  [(1, Parity.ANY)],
                   Family.F4:  [],
                   Family.F5:  [(1, Parity.ANY), (1, Parity.ANY)],
                   Family.F6:  [],
                   Family.F7:  [(2, Parity.ANY), (2, Parity.ANY), (2, Parity.ANY)],
                   Family.F8:  [(3, Parity.ODD), (2, Parity.EVEN), (2, Parity.EVEN), (2, Parity.EVEN)],
                   Family.F9:  [(3, Parity.ODD), (3, Parity.ODD), (3, Parity.ODD), (3, Parity.ODD)],
                   Family.F10: [(2, Parity.EVEN), (2, Parity.EVEN), (3, Parity.ODD), (2, Parity.EVEN), (2, Parity.EVEN)],
                   Family.F11: [(3, Parity.ODD)],
                   Family.F12: [(3, Parity.ODD), (3, Parity.ODD)]}

# Vertex count is BASE_VERTICES[family] + sum(params)
BASE_VERTICES = {Family.F1: 1, Family.F2: 4, Family.F3: 5, Family.F4: 6,
                 Family.F5: 5, Family.F6: 6, Family.F7: 3, Family.F8: 5,
                 Family.F9: 5, Family.F10: 7, Family.F11: 3, Family.F12: 6}


def _check_cross(family: Family, params: Tuple[int, ...]) -> None:
    if family is Family.F5 and sum(params) % 2 == 0:
        raise ObstructionSpecError(f"F5 needs p+q odd so that the hole is even, got {list(params)}")
    if family is Family.F7:
        a, b, c = (x % 2 for x in params)
        if a != b or c == a:
            raise ObstructionSpecError(f"F7 needs the first two paths of one parity and the third of the other, got {list(params)}")


@dataclass(frozen=True)
class ObstructionSpec:
    """A member of one of the twelve obstruction families.

        Parameters:
            - family: Family tag or its name ("F2", "f2")
            - params: path and cycle lengths, family specific (see ACCEPTED_PARAMS)
    """
    family: Family
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            family = Family(self.family)
        except ValueError:
            raise ObstructionSpecError(f"'{self.family}' is not an obstruction family (F1..F12)")
        try:
            params = tuple(int(x) for x in self.params)
        except (TypeError, ValueError):
            raise ObstructionSpecError(f"{family.value} parameters must be integers, got {self.params}")
        accepted = ACCEPTED_PARAMS[family]
        if len(params) != len(accepted):
            raise ObstructionSpecError(f"{family.value} takes {len(accepted)} parameters, got {list(params)}")
        for value, (low, parity) in zip(params, accepted):
            if value < low or not parity.accepts(value):
                raise ObstructionSpecError(f"'{value}' is not accepted for {family.value}: needs {parity.value} >= {low}")
        _check_cross(family, params)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", params)

    @classmethod
    def from_json(cls, record: Union[str, Dict]) -> "ObstructionSpec":
        if isinstance(record, str):
            try:
                record = json.loads(record)
            except json.JSONDecodeError as err:
                raise ObstructionSpecError(f"Invalid spec JSON: {err}")
        if not isinstance(record, dict) or "family" not in record:
            raise ObstructionSpecError("Spec JSON needs a 'family' key")
        return cls(record["family"], record.get("params", ()))

    def as_json(self) -> Dict:
        return {"family": self.family.value, "params": list(self.params)}

    @property
    def vertex_count(self) -> int:
        return BASE_VERTICES[self.family] + sum(self.params)

    def sort_key(self) -> Tuple:
        return (self.family.index, self.vertex_count, self.params)

    def normalized(self) -> "ObstructionSpec":
        """The representative of the parameter tuples describing the same graph"""
        p = self.params
        if self.family in (Family.F5, Family.F12):
            p = tuple(sorted(p))
        elif self.family is Family.F7:
            p = tuple(sorted(p[:2])) + p[2:]
        elif self.family is Family.F8:
            p = p[:2] + tuple(sorted(p[2:]))
        elif self.family is Family.F9:
            p = tuple(sorted(p[:2])) + tuple(sorted(p[2:]))
        elif self.family is Family.F10:
            e1, e2, m, f1, f2 = p
            p = min((e1, e2, m, f1, f2), (e2, e1, m, f2, f1), (f1, f2, m, e1, e2), (f2, f1, m, e2, e1))
        return ObstructionSpec(self.family, p)


@dataclass(frozen=True)
class PrismSpec:
    """Two triangles joined by three vertex disjoint paths of the given lengths"""
    lengths: Tuple[int, int, int]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        if len(lengths) != 3 or min(lengths) < 1:
            raise ObstructionSpecError(f"A prism needs three path lengths >= 1, got {list(lengths)}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def is_parity(self) -> bool:
        return len({x % 2 for x in self.lengths}) == 1

    @property
    def is_imparity(self) -> bool:
        return not self.is_parity

    @property
    def is_even(self) -> bool:
        return all(x % 2 == 0 for x in self.lengths)

    @property
    def is_odd(self) -> bool:
        return all(x % 2 == 1 for x in self.lengths)

    @property
    def is_short(self) -> bool:
        return 1 in self.lengths

    @property
    def vertex_count(self) -> int:
        return sum(self.lengths) + 3


class _Builder:
    """Collects vertices and edges, numbering vertices in creation order"""
    def __init__(self):
        self.n = 0
        self.edges: List[Tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def path(self, length: int, start: int=None) -> List[int]:
        """A path with length edges; starts from an existing vertex if given"""
        vertices = [self.vertex() if start is None else start]
        for _ in range(length):
            vertices.append(self.vertex())
            self.join(vertices[-2], vertices[-1])
        return vertices

    def cycle(self, length: int) -> List[int]:
        vertices = self.path(length - 1)
        self.join(vertices[-1], vertices[0])
        return vertices

    def join(self, u: int, *others: int) -> None:
        for v in others:
            self.edges.append((u, v))

    def clique(self, vertices: Sequence[int]) -> None:
        for i, u in enumerate(vertices):
            self.join(u, *vertices[i + 1:])

    def triangle_on(self, u: int) -> None:
        p, q = self.vertex(), self.vertex()
        self.clique([u, p, q])

    def graph(self) -> Graph:
        return from_edge_list(self.n, self.edges)


def _prism_paths(b: _Builder, lengths: Sequence[int]) -> List[List[int]]:
    paths = [b.path(length) for length in lengths]
    b.clique([p[0] for p in paths])
    b.clique([p[-1] for p in paths])
    return paths

def _boat_and_ear(hole: int, near: int) -> Graph:
    """Hole with a vertex on three consecutive vertices and an ear on edge (near+1, near+2)"""
    b = _Builder()
    c = b.cycle(hole)
    b.join(b.vertex(), c[-1], c[0], c[1])
    b.join(b.vertex(), c[near + 1], c[near + 2])
    return b.graph()

def _f1(length: int) -> Graph:
    b = _Builder()
    c = b.cycle(length)
    b.join(b.vertex(), c[-1], c[0], c[1])
    return b.graph()

def _f2(length: int) -> Graph:
    b = _Builder()
    q = b.path(length + 2)
    b.join(b.vertex(), q[0], q[1], q[-2], q[-1])
    return b.graph()

def _f3(length: int) -> Graph:
    b = _Builder()
    q = b.path(length + 2)
    a, c = b.vertex(), b.vertex()
    b.join(a, q[0], q[1], c)
    b.join(c, q[-2], q[-1])
    return b.graph()

def _f4() -> Graph:
    return generate_prism(PrismSpec((1, 1, 1)))

def _f5(p: int, q: int) -> Graph:
    return _boat_and_ear(p + q + 3, p)

def _f6() -> Graph:
    return _boat_and_ear(4, 1)

def _f7(a: int, m: int, c: int) -> Graph:
    return generate_prism(PrismSpec((a, m, c)))

def _eared_prism(upper: Tuple[int, int], middle: int, lower) -> Graph:
    """Prism whose upper (and optionally lower) path carries an ear vertex on one edge"""
    b = _Builder()
    lower_len = lower if isinstance(lower, int) else lower[0] + 1 + lower[1]
    top, _, bottom = _prism_paths(b, [upper[0] + 1 + upper[1], middle, lower_len])
    b.join(b.vertex(), top[upper[0]], top[upper[0] + 1])
    if not isinstance(lower, int):
        b.join(b.vertex(), bottom[lower[0]], bottom[lower[0] + 1])
    return b.graph()

def _f8(o: int, e: int, m: int, w: int) -> Graph:
    return _eared_prism((o, e), m, w)

def _f9(o1: int, o2: int, m: int, w: int) -> Graph:
    return _eared_prism((o1, o2), m, w)

def _f10(e1: int, e2: int, m: int, f1: int, f2: int) -> Graph:
    return _eared_prism((e1, e2), m, (f1, f2))

def _f11(k: int) -> Graph:
    b = _Builder()
    c = b.cycle(k)
    u = b.vertex()
    b.join(u, c[0], c[1])
    b.triangle_on(u)
    return b.graph()

def _f12(o1: int, o2: int) -> Graph:
    b = _Builder()
    c = b.cycle(o1 + o2 + 2)
    u = b.vertex()
    b.join(u, c[0], c[1])
    b.triangle_on(u)
    b.join(b.vertex(), c[o1 + 1], c[o1 + 2])
    return b.graph()

GENERATORS: Dict[Family, Callable[..., Graph]] = {
    Family.F1: _f1, Family.F2: _f2, Family.F3: _f3, Family.F4: _f4,
    Family.F5: _f5, Family.F6: _f6, Family.F7: _f7, Family.F8: _f8,
    Family.F9: _f9, Family.F10: _f10, Family.F11: _f11, Family.F12: _f12,
}


def generate(spec: ObstructionSpec) -> Graph:
    """Builds the obstruction described by spec"""
    return GENERATORS[spec.family](*spec.params)

def generate_prism(spec: Union[PrismSpec, Sequence[int]]) -> Graph:
    """Vertices of path i are consecutive, path i runs from triangle a to triangle b"""
    if not isinstance(spec, PrismSpec):
        spec = PrismSpec(tuple(spec))
    b = _Builder()
    _prism_paths(b, spec.lengths)
    return b.graph()

def generate_bracelet(lengths: Sequence[int]) -> Graph:
    """Bracelet from six path lengths (P1, P2, Q1, Q2, Pac, Pbd).

    P1, P2 run between the cliques {a0,a1,a2} and {b0,b1,b2}, Q1, Q2 between
    {c0,c1,c2} and {d0,d1,d2}; the sides Pac and Pbd join a0 to c0 and b0 to d0.
    The four P/Q paths are odd >= 3, the two sides even >= 2.
    """
    lengths = tuple(int(x) for x in lengths)
    if len(lengths) != 6:
        raise ObstructionSpecError(f"A bracelet takes six path lengths, got {list(lengths)}")
    for value in lengths[:4]:
        if value < 3 or value % 2 == 0:
            raise ObstructionSpecError(f"Bracelet paths P1, P2, Q1, Q2 must be odd >= 3, got {value}")
    for value in lengths[4:]:
        if value < 2 or value % 2 == 1:
            raise ObstructionSpecError(f"Bracelet sides Pac, Pbd must be even >= 2, got {value}")
    b = _Builder()
    p1, p2, q1, q2, ac, bd = (b.path(x) for x in lengths)
    b.clique([ac[0], p1[0], p2[0]])
    b.clique([bd[0], p1[-1], p2[-1]])
    b.clique([ac[-1], q1[0], q2[0]])
    b.clique([bd[-1], q1[-1], q2[-1]])
    return b.graph()

def gem() -> Graph:
    return generate(ObstructionSpec(Family.F2, (1,)))

def fish() -> Graph:
    return generate(ObstructionSpec(Family.F11, (3,)))

def claw() -> Graph:
    return star_graph(3)

NAMED_GRAPHS = {"gem": gem, "fish": fish, "claw": claw}


def _param_grid(accepted: List[Tuple[int, Parity]], budget: int) -> Iterator[Tuple[int, ...]]:
    if not accepted:
        if budget >= 0:
            yield ()
        return
    (low, parity), rest = accepted[0], accepted[1:]
    rest_min = sum(_smallest(lo, par) for lo, par in rest)
    value = _smallest(low, parity)
    step = 1 if parity is Parity.ANY else 2
    while value + rest_min <= budget:
        for tail in _param_grid(rest, budget - value):
            yield (value,) + tail
        value += step

def _smallest(low: int, parity: Parity) -> int:
    return low if parity.accepts(low) else low + 1

def iter_specs(max_vertices: int) -> Iterator[ObstructionSpec]:
    """Every normalized spec whose graph has at most max_vertices vertices"""
    for family in Family:
        budget = max_vertices - BASE_VERTICES[family]
        for params in _param_grid(ACCEPTED_PARAMS[family], budget):
            try:
                spec = ObstructionSpec(family, params)
            except ObstructionSpecError:
                continue
            if spec.normalized() == spec:
                yield spec

@lru_cache(maxsize=None)
def _catalog(max_vertices: int) -> Tuple[Tuple[ObstructionSpec, Graph], ...]:
    seen = set()
    found = []
    for spec in sorted(iter_specs(max_vertices), key=ObstructionSpec.sort_key):
        g = generate(spec)
        if g.n <= LIMITS["canonical_form"][1]:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        found.append((spec, g))
    return tuple(found)

def enumerate_obstructions(max_vertices: int) -> List[Tuple[ObstructionSpec, Graph]]:
    """Catalog members with at most max_vertices vertices, by family, size, then params"""
    if max_vertices < 5:
        return []
    return list(_catalog(max_vertices))


def _match_order(pattern: Graph) -> List[int]:
    """Pattern vertices so that each one after the first of its component touches an earlier one"""
    order: List[int] = []
    placed = 0
    while len(order) < pattern.n:
        touching = [v for v in pattern.vertices() if not placed >> v & 1 and pattern.adj[v] & placed]
        pool = touching or [v for v in pattern.vertices() if not placed >> v & 1]
        v = max(pool, key=lambda x: ((pattern.adj[x] & placed).bit_count(), pattern.degree(x), -x))
        order.append(v)
        placed |= 1 << v
    return order

def contains_induced(host: Graph, pattern: Graph) -> Optional[Dict[int, int]]:
    """An injection of pattern into host preserving adjacency and non-adjacency, or None.

    The map sends pattern vertices to host labels.
    """
    if pattern.n > host.n or pattern.num_edges() > host.num_edges():
        return None
    order = _match_order(pattern)
    host_degree = [host.degree(h) for h in host.vertices()]
    image = [-1] * pattern.n

    def candidates(p: int, used: int) -> int:
        mask = host.vertex_mask & ~used
        for q in bits(pattern.adj[p]):
            if image[q] >= 0:
                mask &= host.adj[image[q]]
        for q in order:
            if image[q] >= 0 and not pattern.has_edge(p, q):
                mask &= ~host.adj[image[q]]
        return mask

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        for h in bits(candidates(p, used)):
            if host_degree[h] < pattern.degree(p):
                continue
            image[p] = h
            if extend(i + 1, used | 1 << h):
                return True
            image[p] = -1
        return False

    if extend(0, 0):
        return {p: host.labels[image[p]] for p in pattern.vertices()}
    return None

def contains_obstruction(g: Graph) -> Optional[Tuple[ObstructionSpec, Dict[int, int]]]:
    """The first catalog member embedded in g as an induced subgraph, with its embedding"""
    for spec, pattern in enumerate_obstructions(g.n):
        embedding = contains_induced(g, pattern)
        if embedding is not None:
            return spec, embedding
    return None

def is_good_clawfree(g: Graph) -> bool:
    """Goodness of a claw-free graph by obstruction detection; raises ClawFoundError on a claw"""
    found = find_claw(g)
    if found is not None:
        witness = tuple(g.labels[v] for v in found)
        raise ClawFoundError(f"Vertices {list(witness)} induce a claw", claw=witness)
    return contains_obstruction(g) is None
