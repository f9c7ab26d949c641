"""Small simple graphs, generalized Petersen graphs and cycle enumeration.

Edge subsets are stored as Python ints used as bitsets: bit ``e`` is set
when edge id ``e`` is in the subset.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

from .errors import (
    CycleCapError,
    DisconnectedGraphError,
    IdenticalEdgeError,
    ParameterError,
)

DEFAULT_CYCLE_CAP = 65536


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with stable vertex and edge ids.

    ``edges[e]`` is the endpoint pair of edge ``e`` stored with the smaller
    vertex id first. ``names`` gives display names per vertex and ``roles``
    optional role tags per edge, e.g. ``("outer", 3)``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...]
    roles: Optional[tuple[tuple[str, int], ...]] = None

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise ParameterError(f"loop at vertex {a}")
            if not (0 <= a < b < self.vertex_count):
                raise ParameterError(f"bad edge ({a}, {b})")
            if (a, b) in seen:
                raise ParameterError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
        if len(self.names) != self.vertex_count:
            raise ParameterError("one name per vertex required")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for e, (a, b) in enumerate(self.edges):
            idx[(a, b)] = e
            idx[(b, a)] = e
        return idx

    @cached_property
    def stars(self) -> tuple[int, ...]:
        """Per-vertex bitset of incident edges."""
        st = [0] * self.vertex_count
        for e, (a, b) in enumerate(self.edges):
            st[a] |= 1 << e
            st[b] |= 1 << e
        return tuple(st)

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {name: v for v, name in enumerate(self.names)}

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs shortest path lengths; -1 marks unreachable pairs."""
        rows = []
        for s in range(self.vertex_count):
            dist = [-1] * self.vertex_count
            dist[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            rows.append(tuple(dist))
        return tuple(rows)

    def is_connected(self) -> bool:
        return self.vertex_count == 0 or all(d >= 0 for d in self.distances[0])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, a: int, b: int) -> int:
        try:
            return self.edge_index[(a, b)]
        except KeyError:
            raise ParameterError(f"no edge between {a} and {b}") from None

    def edge_name(self, e: int) -> str:
        a, b = self.edges[e]
        return f"{self.names[a]}-{self.names[b]}"

    def edge_names(self, mask: int) -> list[str]:
        return [self.edge_name(e) for e in bits(mask)]

    def full_mask(self) -> int:
        return (1 << self.edge_count) - 1


def make_graph(vertex_count: int, edge_list: Sequence[tuple[int, int]],
               names: Optional[Sequence[str]] = None, roles=None) -> Graph:
    """Build a Graph from an edge list; edge ids follow list order."""
    edges = tuple((min(a, b), max(a, b)) for a, b in edge_list)
    if names is None:
        names = [str(i) for i in range(vertex_count)]
    return Graph(vertex_count, edges, tuple(names),
                 tuple(roles) if roles is not None else None)


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


@lru_cache(maxsize=None)
def build_petersen(n: int, k: int = 1) -> Graph:
    """Generalized Petersen graph P(n, k).

    Vertex u_i has id i and v_i has id n+i. Outer edge u_i u_{i+1} has id i,
    inner edge v_i v_{i+k} has id n+i and spoke u_i v_i has id 2n+i.
    """
    if not isinstance(n, int) or not isinstance(k, int):
        raise ParameterError("n and k must be integers")
    if n < 3 or k < 1 or 2 * k >= n:
        raise ParameterError(f"P({n},{k}) needs n >= 3 and 1 <= k < n/2")
    names = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    edge_list, roles = [], []
    for i in range(n):
        edge_list.append((i, (i + 1) % n))
        roles.append(("outer", i))
    for i in range(n):
        edge_list.append((n + i, n + (i + k) % n))
        roles.append(("inner", i))
    for i in range(n):
        edge_list.append((i, n + i))
        roles.append(("spoke", i))
    return make_graph(2 * n, edge_list, names, roles)


def prism(n: int) -> Graph:
    """P(2n+1, 1), indexed the way the command line does."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return build_petersen(2 * n + 1, 1)


@dataclass(frozen=True)
class Cycle:
    edge_set: int
    vertex_seq: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertex_seq)


def check_cycle(g: Graph, c: Cycle) -> None:
    """Raise AssertionError unless ``c`` is a valid simple cycle of ``g``."""
    seq = c.vertex_seq
    assert len(seq) >= 3, "cycle too short"
    assert len(set(seq)) == len(seq), "repeated vertex"
    mask = 0
    for i, a in enumerate(seq):
        b = seq[(i + 1) % len(seq)]
        e = g.edge_index.get((a, b))
        assert e is not None, f"{a} and {b} not adjacent"
        mask |= 1 << e
    assert mask == c.edge_set, "edge set does not match vertex sequence"
    assert c.edge_set.bit_count() == c.length


def enumerate_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Every simple cycle of ``g`` exactly once.

    Each cycle is found from its smallest vertex ``s`` by extending paths
    through vertices larger than ``s``; it is kept only in the orientation
    whose second vertex is smaller than its last. Output is sorted by length
    and then by edge bitset.
    """
    adj = g.adjacency
    eidx = g.edge_index
    found: list[Cycle] = []

    for s in range(g.vertex_count):
        path = [s]
        on_path = {s}

        def extend(x: int, mask: int) -> None:
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    found.append(Cycle(mask | (1 << eidx[(x, s)]), tuple(path)))
                    if len(found) > cap:
                        raise CycleCapError(f"more than {cap} cycles")
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    extend(y, mask | (1 << eidx[(x, y)]))
                    on_path.discard(y)
                    path.pop()

        extend(s, 0)

    found.sort(key=lambda c: (c.length, c.edge_set))
    return found


@lru_cache(maxsize=64)
def cycles_of(g: Graph) -> tuple[Cycle, ...]:
    """Cached ``enumerate_cycles`` with the default cap."""
    return tuple(enumerate_cycles(g))


def cycle_census(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> dict[int, int]:
    counts = Counter(c.length for c in enumerate_cycles(g, cap))
    return dict(sorted(counts.items()))


def edge_distance(g: Graph, e1: int, e2: int) -> int:
    """Number of vertices on a shortest path joining the two edges.

    Edges sharing an endpoint are at distance 1.
    """
    if e1 == e2:
        raise IdenticalEdgeError(f"edge {e1} given twice")
    dist = g.distances
    best = min(dist[x][y] for x in g.edges[e1] for y in g.edges[e2])
    if best < 0:
        raise DisconnectedGraphError("edges lie in different components")
    return best + 1


def max_edge_distance(g: Graph) -> int:
    m = g.edge_count
    return max((edge_distance(g, a, b) for a in range(m) for b in range(a + 1, m)),
               default=0)


@dataclass(frozen=True)
class SpanningTree:
    """Breadth-first spanning tree rooted at vertex 0.

    ``order`` lists vertices in discovery order, so every vertex appears
    after its parent.
    """

    tree_edges: int
    parent: tuple[Optional[int], ...]
    parent_vertex: tuple[Optional[int], ...]
    order: tuple[int, ...]
    cotree_order: tuple[int, ...]

    @property
    def cotree_size(self) -> int:
        return len(self.cotree_order)


@lru_cache(maxsize=64)
def spanning_tree(g: Graph) -> SpanningTree:
    if g.vertex_count == 0:
        raise DisconnectedGraphError("empty graph")
    parent = [None] * g.vertex_count
    parent_vertex = [None] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[0] = True
    order = [0]
    queue = deque([0])
    tree = 0
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                e = g.edge_index[(x, y)]
                parent[y] = e
                parent_vertex[y] = x
                tree |= 1 << e
                order.append(y)
                queue.append(y)
    if len(order) != g.vertex_count:
        raise DisconnectedGraphError("graph is not connected")
    cotree = tuple(e for e in range(g.edge_count) if not tree >> e & 1)
    return SpanningTree(tree, tuple(parent), tuple(parent_vertex), tuple(order), cotree)
