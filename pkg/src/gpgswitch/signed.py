"""Signatures, switching and canonical forms of switching classes.

A signature is the set of negative edges. Switching at a vertex set S flips
every edge with exactly one endpoint in S, i.e. XORs the signature with the
edge cut of S. Two signatures are switching equivalent exactly when they
differ by a cut, so the classes are the cosets of the cut space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ForeignCycleError,
    GraphMismatchError,
    InternalConsistencyError,
    SizeBoundError,
    WidthMismatchError,
)
from .graphs import Cycle, Graph, SpanningTree, bits, cycles_of, spanning_tree

MAX_SEARCH_VERTICES = 26


@dataclass(frozen=True)
class Signature:
    graph: Graph
    neg_edges: int

    def __post_init__(self):
        if self.neg_edges < 0 or self.neg_edges >> self.graph.edge_count:
            raise WidthMismatchError("edge bitset wider than the graph")

    def __len__(self) -> int:
        return self.neg_edges.bit_count()

    def __repr__(self) -> str:
        return f"Signature({{{', '.join(self.graph.edge_names(self.neg_edges))}}})"

    @classmethod
    def from_edges(cls, graph: Graph, edges: Iterable) -> "Signature":
        """Accept edge ids or ``(a, b)`` vertex pairs."""
        m = 0
        for e in edges:
            if not isinstance(e, int):
                e = graph.edge_id(*e)
            m |= 1 << e
        return cls(graph, m)

    @property
    def edge_ids(self) -> list[int]:
        return bits(self.neg_edges)


@dataclass(frozen=True)
class SwitchSet:
    vertex_count: int
    vertices: int

    def __post_init__(self):
        if self.vertices < 0 or self.vertices >> self.vertex_count:
            raise WidthMismatchError("vertex bitset wider than the graph")

    @classmethod
    def of(cls, graph: Graph, vertices: Iterable[int]) -> "SwitchSet":
        m = 0
        for v in vertices:
            m |= 1 << v
        return cls(graph.vertex_count, m)

    @property
    def members(self) -> list[int]:
        return bits(self.vertices)


@dataclass(frozen=True, order=True)
class ClassId:
    """Co-tree sign bits of the tree-positive form.

    The first co-tree edge is the most significant bit, so ``str`` gives the
    bitstring in co-tree order and integer order equals bitstring order.
    """

    bits: int
    length: int

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    @classmethod
    def parse(cls, text: str) -> "ClassId":
        return cls(int(text, 2) if text else 0, len(text))


def _same_graph(a: Graph, b: Graph) -> bool:
    return a is b or a == b


def cut(g: Graph, vertices: int) -> int:
    """Edge bitset of the cut between ``vertices`` and its complement."""
    m = 0
    for v in bits(vertices):
        m ^= g.stars[v]
    return m


def switch(sig: Signature, s: SwitchSet) -> Signature:
    if s.vertex_count != sig.graph.vertex_count:
        raise WidthMismatchError(
            f"switch set has width {s.vertex_count}, graph has {sig.graph.vertex_count} vertices")
    return Signature(sig.graph, sig.neg_edges ^ cut(sig.graph, s.vertices))


def cycle_sign(sig: Signature, c: Cycle) -> int:
    if c.edge_set >> sig.graph.edge_count:
        raise ForeignCycleError("cycle uses edges outside the graph")
    return -1 if (c.edge_set & sig.neg_edges).bit_count() & 1 else 1


def neg_profile(sig: Signature, cycles: Optional[Sequence[Cycle]] = None) -> dict[int, int]:
    """Number of negative cycles per cycle length (zeros included)."""
    if cycles is None:
        cycles = cycles_of(sig.graph)
    counts: dict[int, int] = {}
    neg = sig.neg_edges
    for c in cycles:
        counts.setdefault(c.length, 0)
        if (c.edge_set & neg).bit_count() & 1:
            counts[c.length] += 1
    return dict(sorted(counts.items()))


def unbalanced_cycles(sig: Signature, cycles: Optional[Sequence[Cycle]] = None) -> frozenset[int]:
    """Edge bitsets of the negative cycles."""
    if cycles is None:
        cycles = cycles_of(sig.graph)
    neg = sig.neg_edges
    return frozenset(c.edge_set for c in cycles if (c.edge_set & neg).bit_count() & 1)


def _tree_potential(sig_mask: int, g: Graph, t: SpanningTree) -> int:
    # bit v set iff the tree path from the root to v has odd negative count
    pot = 0
    for v in t.order[1:]:
        p = t.parent_vertex[v]
        if ((pot >> p) ^ (sig_mask >> t.parent[v])) & 1:
            pot |= 1 << v
    return pot


def tree_normalize(sig: Signature, t: Optional[SpanningTree] = None) -> tuple[ClassId, SwitchSet]:
    """Switch ``sig`` so every tree edge is positive.

    Returns the co-tree sign bits of the result and the switch set used
    (vertex 0 never belongs to it).
    """
    g = sig.graph
    if t is None:
        t = spanning_tree(g)
    pot = _tree_potential(sig.neg_edges, g, t)
    normal = sig.neg_edges ^ cut(g, pot)
    value = 0
    for e in t.cotree_order:
        value = (value << 1) | (normal >> e & 1)
    return ClassId(value, t.cotree_size), SwitchSet(g.vertex_count, pot)


def class_id(sig: Signature) -> ClassId:
    return tree_normalize(sig)[0]


def representative(g: Graph, cid: ClassId, t: Optional[SpanningTree] = None) -> Signature:
    """The tree-positive signature of a class."""
    if t is None:
        t = spanning_tree(g)
    if cid.length != t.cotree_size:
        raise WidthMismatchError(f"class id has {cid.length} bits, expected {t.cotree_size}")
    m = 0
    r = t.cotree_size
    for i, e in enumerate(t.cotree_order):
        if cid.bits >> (r - 1 - i) & 1:
            m |= 1 << e
    return Signature(g, m)


def is_balanced(sig: Signature) -> bool:
    return class_id(sig).bits == 0


def switching_equivalent(a: Signature, b: Signature, check: bool = True) -> bool:
    """Compare class ids; with ``check`` also compare unbalanced cycle sets."""
    if not _same_graph(a.graph, b.graph):
        raise GraphMismatchError("signatures live on different graphs")
    same = class_id(a) == class_id(b)
    if check:
        cycles = cycles_of(a.graph)
        oracle = unbalanced_cycles(a, cycles) == unbalanced_cycles(b, cycles)
        if oracle != same:
            raise InternalConsistencyError(
                f"class ids say {same}, unbalanced cycle sets say {oracle} for {a} vs {b}")
    return same


def switch_set_between(a: Signature, b: Signature) -> Optional[SwitchSet]:
    """A switch set (without vertex 0) turning ``a`` into ``b``, or None."""
    if not _same_graph(a.graph, b.graph):
        raise GraphMismatchError("signatures live on different graphs")
    g = a.graph
    t = spanning_tree(g)
    diff = a.neg_edges ^ b.neg_edges
    pot = _tree_potential(diff, g, t)
    if cut(g, pot) != diff:
        return None
    return SwitchSet(g.vertex_count, pot)


def is_matching(sig: Signature) -> bool:
    used = 0
    for e in sig.edge_ids:
        a, b = sig.graph.edges[e]
        pair = (1 << a) | (1 << b)
        if used & pair:
            return False
        used |= pair
    return True


def max_degree(sig: Signature) -> int:
    deg = [0] * sig.graph.vertex_count
    for e in sig.edge_ids:
        a, b = sig.graph.edges[e]
        deg[a] += 1
        deg[b] += 1
    return max(deg, default=0)


@lru_cache(maxsize=4)
def cut_table(g: Graph) -> np.ndarray:
    """Cuts of every vertex subset avoiding vertex 0, as uint64 edge masks.

    Entry ``i`` is the cut of the set whose bit ``j`` (of ``i``) selects
    vertex ``j + 1``.
    """
    if g.vertex_count > MAX_SEARCH_VERTICES:
        raise SizeBoundError(
            f"{g.vertex_count} vertices exceeds the exhaustive bound {MAX_SEARCH_VERTICES}")
    if g.edge_count > 64:
        raise SizeBoundError("edge masks limited to 64 bits")
    table = np.zeros(1, dtype=np.uint64)
    for v in range(1, g.vertex_count):
        table = np.concatenate([table, table ^ np.uint64(g.stars[v])])
    return table


def minimal_signature(sig: Signature, max_vertices: int = MAX_SEARCH_VERTICES) -> tuple[int, list[Signature]]:
    """Smallest size over the switching class and every signature attaining it.

    Exhaustive over all 2^(V-1) switch sets; witnesses come back sorted by
    edge bitset.
    """
    g = sig.graph
    if g.vertex_count > max_vertices:
        raise SizeBoundError(
            f"{g.vertex_count} vertices exceeds the exhaustive bound {max_vertices}")
    table = cut_table(g)
    images = table ^ np.uint64(sig.neg_edges)
    weights = np.bitwise_count(images)
    best = int(weights.min())
    found = np.unique(images[weights == best])
    return best, [Signature(g, int(m)) for m in found]


def minimal_size(sig: Signature) -> int:
    table = cut_table(sig.graph)
    return int(np.bitwise_count(table ^ np.uint64(sig.neg_edges)).min())
