"""Switching classes, their orbits under Aut(P(n,1)), and matching censuses.

An orbit of switching classes under the automorphism group is one signed
graph up to switching isomorphism.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import InternalConsistencyError, ParameterError, SizeBoundError
from .graphs import Graph, bits, build_petersen, cycles_of, spanning_tree
from .signed import (
    ClassId,
    Signature,
    SwitchSet,
    class_id,
    minimal_signature,
    minimal_size,
    neg_profile,
    representative,
    switch,
    switching_equivalent,
)
from .symmetry import AutGroup, aut_group, canonical_image, linear_action, map_edges

log = logging.getLogger(__name__)

MAX_CLASS_BITS = 24


@dataclass(frozen=True)
class ClassRecord:
    class_id: ClassId
    min_size: int
    min_witnesses: tuple[Signature, ...]
    profile: dict


@dataclass(frozen=True)
class OrbitRecord:
    orbit_id: int
    class_ids: tuple[ClassId, ...]
    canonical_rep: Optional[Signature] = None
    min_size: Optional[int] = None
    profile: Optional[dict] = None

    @property
    def size(self) -> int:
        return len(self.class_ids)


@dataclass(frozen=True)
class MatchingCensus:
    size: int
    aut_orbit_count: int
    switching_iso_count: Optional[int]
    excluded_forbidden: bool
    matching_count: int = 0


def enumerate_classes(g: Graph, max_bits: int = MAX_CLASS_BITS) -> list[ClassId]:
    r = spanning_tree(g).cotree_size
    if r > max_bits:
        raise SizeBoundError(f"2^{r} classes exceeds the bound 2^{max_bits}")
    return [ClassId(b, r) for b in range(1 << r)]


def action_tables(g: Graph, grp: AutGroup) -> np.ndarray:
    """Row ``i`` maps each class value to its image under ``grp.elements[i]``."""
    r = spanning_tree(g).cotree_size
    values = np.arange(1 << r, dtype=np.int64)
    rows = np.empty((len(grp.elements), 1 << r), dtype=np.int64)
    for i, p in enumerate(grp.elements):
        cols = linear_action(p, g)
        img = np.zeros_like(values)
        for j, col in enumerate(cols):
            img ^= np.where((values >> (r - 1 - j)) & 1, col, 0)
        rows[i] = img
    return rows


def burnside_count(tables: np.ndarray) -> int:
    ident = np.arange(tables.shape[1])
    fixed = int((tables == ident).sum())
    count, rem = divmod(fixed, tables.shape[0])
    if rem:
        raise InternalConsistencyError("Burnside average is not an integer")
    return count


def orbit_partition(g: Graph, grp: AutGroup, tables: Optional[np.ndarray] = None) -> list[OrbitRecord]:
    """Orbits of the class action, ordered by their smallest class id.

    Orbits are grown by a worklist over the generators only; the orbit count
    is then checked against Burnside's count over all group elements.
    """
    r = spanning_tree(g).cotree_size
    enumerate_classes(g)
    if tables is None:
        tables = action_tables(g, grp)
    gen_rows = [tables[i] for i, tag in enumerate(grp.generator_tags)
                if tag not in ("identity", "composite")]
    owner = np.full(1 << r, -1, dtype=np.int64)
    orbits = []
    for start in range(1 << r):
        if owner[start] >= 0:
            continue
        oid = len(orbits)
        owner[start] = oid
        members = [start]
        stack = [start]
        while stack:
            c = stack.pop()
            for row in gen_rows:
                d = int(row[c])
                if owner[d] < 0:
                    owner[d] = oid
                    members.append(d)
                    stack.append(d)
        orbits.append(OrbitRecord(oid, tuple(ClassId(c, r) for c in sorted(members))))
    expected = burnside_count(tables)
    if expected != len(orbits):
        raise InternalConsistencyError(
            f"worklist found {len(orbits)} orbits, Burnside gives {expected}")
    return orbits


def _orbit_minimum(g: Graph, rep_bits: int, check_bits: int, edge_maps) -> tuple[int, int]:
    t = spanning_tree(g)
    rep = representative(g, ClassId(rep_bits, t.cotree_size), t)
    size, witnesses = minimal_signature(rep)
    if check_bits != rep_bits:
        other = representative(g, ClassId(check_bits, t.cotree_size), t)
        if minimal_size(other) != size:
            raise InternalConsistencyError(
                f"minimal size differs inside the orbit of class {rep_bits}")
    best = min(canonical_image(w.neg_edges, edge_maps) for w in witnesses)
    return size, best


def _petersen_worker(args):
    n, rep_bits, check_bits = args
    g = build_petersen(n, 1)
    grp = aut_group(n)
    return _orbit_minimum(g, rep_bits, check_bits, [p.edge_map for p in grp])


def build_class_records(g: Graph, orbits: Sequence[OrbitRecord], grp: AutGroup,
                        cycles=None, jobs: int = 1) -> list[OrbitRecord]:
    """Fill in minimal size, canonical representative and profile per orbit.

    The minimal size is computed on the orbit's first class and re-checked on
    its last class. The canonical representative is the smallest edge bitset
    among all automorphic images of the minimal witnesses.
    """
    if cycles is None:
        cycles = cycles_of(g)
    t = spanning_tree(g)
    tasks = [(o.class_ids[0].bits, o.class_ids[-1].bits) for o in orbits]
    if jobs > 1 and tasks:
        n = g.vertex_count // 2
        if g != build_petersen(n, 1):
            raise ParameterError("parallel classification only supports P(n,1)")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_petersen_worker, [(n, a, b) for a, b in tasks],
                                    chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        edge_maps = [p.edge_map for p in grp]
        results = [_orbit_minimum(g, a, b, edge_maps) for a, b in tasks]
    out = []
    for o, (size, best) in zip(orbits, results):
        rep = representative(g, o.class_ids[0], t)
        out.append(replace(o, canonical_rep=Signature(g, best), min_size=size,
                           profile=neg_profile(rep, cycles)))
    return out


def class_record(g: Graph, cid: ClassId) -> ClassRecord:
    rep = representative(g, cid)
    size, witnesses = minimal_signature(rep)
    return ClassRecord(cid, size, tuple(witnesses), neg_profile(rep))


@lru_cache(maxsize=8)
def _classification(n: int) -> tuple[OrbitRecord, ...]:
    g = build_petersen(n, 1)
    grp = aut_group(n)
    orbits = orbit_partition(g, grp)
    return tuple(build_class_records(g, orbits, grp))


def classify(n: int, jobs: int = 1) -> list[OrbitRecord]:
    """Full classification of P(n,1), n odd; cached for ``jobs == 1``."""
    if jobs == 1:
        return list(_classification(n))
    g = build_petersen(n, 1)
    grp = aut_group(n)
    return build_class_records(g, orbit_partition(g, grp), grp, jobs=jobs)


def orbit_lookup(orbits: Sequence[OrbitRecord]) -> dict[int, int]:
    """Class value -> orbit id."""
    return {c.bits: o.orbit_id for o in orbits for c in o.class_ids}


def enumerate_matchings(g: Graph, size: int) -> list[Signature]:
    """All matchings with exactly ``size`` edges, in lexicographic edge-id order."""
    if size < 0 or 2 * size > g.vertex_count:
        raise ParameterError(f"no matchings of size {size} in a graph on {g.vertex_count} vertices")
    ends = [(1 << a) | (1 << b) for a, b in g.edges]
    m = g.edge_count
    out = []

    def grow(start: int, used: int, mask: int, left: int) -> None:
        if left == 0:
            out.append(Signature(g, mask))
            return
        for e in range(start, m - left + 1):
            if not used & ends[e]:
                grow(e + 1, used | ends[e], mask | (1 << e), left - 1)

    grow(0, 0, 0, size)
    return out


def forbidden_images(g: Graph, grp: AutGroup) -> set[int]:
    from .reference import FORBIDDEN
    from .textio import parse_signature

    if g != build_petersen(7, 1):
        raise ParameterError("forbidden matchings are only defined on P(7,1)")
    out = set()
    for _, text, _ in FORBIDDEN:
        sig = parse_signature(text, g)
        out |= {map_edges(p.edge_map, sig.neg_edges) for p in grp}
    return out


def matching_aut_orbits(g: Graph, grp: AutGroup, size: int, exclude_forbidden: bool = False,
                        orbits: Optional[Sequence[OrbitRecord]] = None) -> MatchingCensus:
    """Count matchings of one size up to automorphism.

    With ``exclude_forbidden`` (P(7,1) only) matchings that contain an
    automorphic image of a forbidden triple are dropped first. When
    ``orbits`` (a finished classification) is supplied, the census also
    counts the switching-isomorphism classes whose minimal signatures are
    matchings of this size.
    """
    matchings = enumerate_matchings(g, size)
    if exclude_forbidden:
        bad = forbidden_images(g, grp)
        matchings = [s for s in matchings
                     if not any(b & s.neg_edges == b for b in bad)]
    edge_maps = [p.edge_map for p in grp]
    kinds = {canonical_image(s.neg_edges, edge_maps) for s in matchings}
    iso = None
    if orbits is not None:
        owner = orbit_lookup(orbits)
        min_sizes = {o.orbit_id: o.min_size for o in orbits}
        hit = {owner[class_id(s).bits] for s in matchings}
        iso = sum(1 for oid in hit if min_sizes[oid] == size)
    return MatchingCensus(size, len(kinds), iso, exclude_forbidden, len(matchings))


def matching_class_count(orbits: Sequence[OrbitRecord], size: int) -> int:
    """Number of switching-isomorphism classes whose minimal signatures have ``size`` edges."""
    return sum(1 for o in orbits if o.min_size == size)


def max_minimal_size(orbits: Sequence[OrbitRecord]) -> int:
    return max(o.min_size for o in orbits)


@dataclass(frozen=True)
class Check:
    """One line of a verification report."""

    name: str
    passed: bool
    detail: str = ""


def verify_forbidden() -> list[Check]:
    """Switch each forbidden triple of P(7,1) at its listed vertex set."""
    from .reference import FORBIDDEN
    from .textio import parse_signature, parse_vertices, render_signature

    g = build_petersen(7, 1)
    out = []
    for label, text, verts in FORBIDDEN:
        sig = parse_signature(text, g)
        after = switch(sig, SwitchSet.of(g, parse_vertices(verts, g)))
        ok = len(after) <= 2 and switching_equivalent(sig, after)
        out.append(Check(f"forbidden {label}", ok,
                         f"{{{render_signature(sig)}}} -> {{{render_signature(after)}}} size {len(after)}"))
    return out


def replay_resignings(graphs: Sequence[int] = (3, 5, 7)) -> list[Check]:
    """Replay the listed reductions: switch, then look for an automorphism onto the target."""
    from .reference import RESIGNINGS, SIGMAS
    from .textio import parse_signature, parse_vertices, render_signature

    out = []
    for n in graphs:
        g = build_petersen(n, 1)
        grp = aut_group(n)
        names = SIGMAS[n]
        for src, verts, dst in RESIGNINGS[n]:
            sig = parse_signature(names[src], g)
            target = parse_signature(names[dst], g)
            after = switch(sig, SwitchSet.of(g, parse_vertices(verts, g)))
            images = {map_edges(p.edge_map, after.neg_edges) for p in grp}
            ok = target.neg_edges in images
            detail = f"-> {{{render_signature(after)}}}"
            if not ok:
                iso = any(class_id(Signature(g, m)) == class_id(target) for m in images)
                detail += " (switching isomorphic only)" if iso else " (not switching isomorphic)"
            out.append(Check(f"P({n},1) S{src} at {{{verts}}} ~ S{dst}", ok, detail))
    return out
