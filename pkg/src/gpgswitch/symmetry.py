"""Automorphisms of P(n,1) and their action on signatures and classes.

Composition convention: ``compose(p, q)`` applies ``q`` first, then ``p``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import NotAutomorphismError, ParameterError, SizeBoundError
from .graphs import Graph, SpanningTree, bits, build_petersen, spanning_tree
from .signed import ClassId, Signature, representative, tree_normalize

MAX_AUT_N = 13
MAX_BRUTE_FORCE_VERTICES = 20


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]
    edge_map: Optional[tuple[int, ...]] = None

    def __call__(self, v: int) -> int:
        return self.images[v]

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))


def induced_edge_map(images: Sequence[int], g: Graph) -> tuple[int, ...]:
    out = []
    for a, b in g.edges:
        e = g.edge_index.get((images[a], images[b]))
        if e is None:
            raise NotAutomorphismError(
                f"edge {g.names[a]}-{g.names[b]} is not mapped onto an edge")
        out.append(e)
    return tuple(out)


def permutation(images: Sequence[int], g: Optional[Graph] = None) -> Permutation:
    images = tuple(images)
    if sorted(images) != list(range(len(images))):
        raise ParameterError("images must be a bijection")
    return Permutation(images, induced_edge_map(images, g) if g is not None else None)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``."""
    images = tuple(p.images[x] for x in q.images)
    edge_map = None
    if p.edge_map is not None and q.edge_map is not None:
        edge_map = tuple(p.edge_map[e] for e in q.edge_map)
    return Permutation(images, edge_map)


def inverse(p: Permutation) -> Permutation:
    images = [0] * len(p.images)
    for x, y in enumerate(p.images):
        images[y] = x
    edge_map = None
    if p.edge_map is not None:
        em = [0] * len(p.edge_map)
        for e, f in enumerate(p.edge_map):
            em[f] = e
        edge_map = tuple(em)
    return Permutation(tuple(images), edge_map)


def identity(g: Graph) -> Permutation:
    return Permutation(tuple(range(g.vertex_count)), tuple(range(g.edge_count)))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise ParameterError(f"n must be an integer >= 3, got {n}")


def rho(n: int, k: int) -> Permutation:
    """Rotation u_i -> u_{i+k}, v_i -> v_{i+k}."""
    _check_n(n)
    if not 0 <= k < n:
        raise ParameterError(f"rotation index {k} outside 0..{n - 1}")
    images = [(i + k) % n for i in range(n)] + [n + (i + k) % n for i in range(n)]
    return permutation(images, build_petersen(n, 1))


def delta(n: int, k: int) -> Permutation:
    """Reflection fixing u_k and v_k: u_i -> u_{2k-i}, v_i -> v_{2k-i}."""
    _check_n(n)
    if not 0 <= k < n:
        raise ParameterError(f"reflection index {k} outside 0..{n - 1}")
    if n % 2 == 0:
        raise ParameterError("reflections through a spoke need odd n")
    images = [(2 * k - i) % n for i in range(n)] + [n + (2 * k - i) % n for i in range(n)]
    return permutation(images, build_petersen(n, 1))


def gamma(n: int) -> Permutation:
    """Swap of the outer and inner cycles."""
    _check_n(n)
    images = [n + i for i in range(n)] + list(range(n))
    return permutation(images, build_petersen(n, 1))


@dataclass(frozen=True)
class AutGroup:
    graph: Graph
    elements: tuple[Permutation, ...]
    generator_tags: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def aut_group(n: int) -> AutGroup:
    """Closure of rho_1, delta_0 and gamma for odd n in 3..13.

    ``elements[0]`` is the identity; elements appear in breadth-first order
    of their shortest word in the generators.
    """
    if not isinstance(n, int) or n % 2 == 0 or not 3 <= n <= MAX_AUT_N:
        raise ParameterError(f"aut_group supports odd n in 3..{MAX_AUT_N}, got {n}")
    g = build_petersen(n, 1)
    gens = [("rho 1", rho(n, 1)), ("delta 0", delta(n, 0)), ("gamma", gamma(n))]
    start = identity(g)
    seen = {start.images: ("identity", start)}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for tag, s in gens:
            y = compose(s, x)
            if y.images not in seen:
                seen[y.images] = (tag if x.is_identity() else "composite", y)
                queue.append(y)
    tags, elements = zip(*seen.values())
    return AutGroup(g, tuple(elements), tuple(tags))


def brute_force_automorphisms(g: Graph, max_vertices: int = MAX_BRUTE_FORCE_VERTICES) -> list[Permutation]:
    """All adjacency-preserving bijections, by backtracking.

    Vertices are assigned in breadth-first order; a candidate image must have
    the same degree and be adjacent exactly to the images of the already
    assigned neighbours.
    """
    V = g.vertex_count
    if V > max_vertices:
        raise SizeBoundError(f"{V} vertices exceeds the brute-force bound {max_vertices}")
    adj = [set(a) for a in g.adjacency]
    order = []
    seen = [False] * V
    for root in range(V):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    position = {v: i for i, v in enumerate(order)}
    earlier = [[y for y in g.adjacency[v] if position[y] < position[v]] for v in order]
    earlier_non = [[y for y in order[:i] if y not in adj[v]] for i, v in enumerate(order)]

    images = [-1] * V
    used = [False] * V
    found = []

    def place(i: int) -> None:
        if i == V:
            found.append(permutation(images, g))
            return
        v = order[i]
        for cand in range(V):
            if used[cand] or g.degree(cand) != g.degree(v):
                continue
            if any(images[y] not in adj[cand] for y in earlier[i]):
                continue
            if any(images[y] in adj[cand] for y in earlier_non[i]):
                continue
            images[v] = cand
            used[cand] = True
            place(i + 1)
            used[cand] = False
            images[v] = -1

    place(0)
    found.sort(key=lambda p: p.images)
    return found


def _edge_map_for(p: Permutation, g: Graph) -> tuple[int, ...]:
    if p.edge_map is not None and len(p.edge_map) == g.edge_count and len(p.images) == g.vertex_count:
        return p.edge_map
    if len(p.images) != g.vertex_count:
        raise NotAutomorphismError("permutation size does not match the graph")
    return induced_edge_map(p.images, g)


def map_edges(edge_map: Sequence[int], mask: int) -> int:
    out = 0
    for e in bits(mask):
        out |= 1 << edge_map[e]
    return out


def apply_to_signature(p: Permutation, sig: Signature) -> Signature:
    em = _edge_map_for(p, sig.graph)
    return Signature(sig.graph, map_edges(em, sig.neg_edges))


def act_on_class(p: Permutation, cid: ClassId, t: Optional[SpanningTree] = None,
                 graph: Optional[Graph] = None) -> ClassId:
    """Image of a switching class under an automorphism."""
    if graph is None:
        n = len(p.images) // 2
        graph = build_petersen(n, 1)
    if t is None:
        t = spanning_tree(graph)
    rep = representative(graph, cid, t)
    return tree_normalize(apply_to_signature(p, rep), t)[0]


def linear_action(p: Permutation, g: Graph) -> tuple[int, ...]:
    """Images of the single-bit class ids under ``p``.

    The class action is linear over GF(2), so the image of any class is the
    XOR of the images of its set bits.
    """
    t = spanning_tree(g)
    r = t.cotree_size
    return tuple(act_on_class(p, ClassId(1 << (r - 1 - i), r), t, g).bits for i in range(r))


def apply_linear(columns: Sequence[int], value: int) -> int:
    r = len(columns)
    out = 0
    for i in range(r):
        if value >> (r - 1 - i) & 1:
            out ^= columns[i]
    return out


def orbit_of_signature(sig: Signature, grp: Sequence[Permutation]) -> set[int]:
    """Edge bitsets of all automorphic images of ``sig``."""
    return {apply_to_signature(p, sig).neg_edges for p in grp}


def canonical_image(mask: int, edge_maps: Sequence[Sequence[int]]) -> int:
    """Smallest edge bitset among the images of ``mask``."""
    return min(map_edges(em, mask) for em in edge_maps)
