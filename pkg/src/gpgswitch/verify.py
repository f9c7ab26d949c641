"""Reproduction checks for P(3,1), P(5,1) and P(7,1).

Each check is a ``Check`` line. Checks whose name ends in ``[report]`` are
informational and never decide the exit status.
"""

from __future__ import annotations

from collections import Counter

from .classify import (
    Check,
    classify,
    enumerate_classes,
    matching_aut_orbits,
    matching_class_count,
    max_minimal_size,
    replay_resignings,
    verify_forbidden,
)
from .graphs import build_petersen, cycle_census, max_edge_distance
from .reference import (
    MATCHING_TYPES,
    MATCHING_TYPES_EXCLUDING_FORBIDDEN,
    ORBIT_COUNTS,
    RESIGNINGS,
    TABLE_LENGTHS,
    TABLES,
)
from .symmetry import aut_group

MIN_RESIGNINGS = 12
MIN_TABLE3_ROWS = 25
TABLE3_REQUIRED = [((0, 0, 0, 0), 0), ((1, 2, 1, 3), 1), ((7, 0, 1, 6), None)]


def is_gating(check: Check) -> bool:
    return not check.name.endswith("[report]")


def profile_multiset(orbits, lengths) -> Counter:
    return Counter(tuple(o.profile[L] for L in lengths) for o in orbits)


def table_diff(n: int, orbits) -> tuple[Counter, Counter]:
    """(printed rows not computed, computed rows not printed)."""
    computed = profile_multiset(orbits, TABLE_LENGTHS[n])
    printed = Counter(TABLES[n].values())
    return printed - computed, computed - printed


def census_checks(m: int) -> list[Check]:
    """Cycle counts and edge-distance bound on P(2m+1, 1)."""
    g = build_petersen(2 * m + 1, 1)
    census = cycle_census(g)
    even = all(census.get(2 * l) == 2 * m + 1 for l in range(2, 2 * m + 2))
    odd = census.get(2 * m + 1) == 2
    dist = max_edge_distance(g)
    return [
        Check(f"P({2*m+1},1) has {2*m+1} cycles of each even length 4..{4*m+2}", even),
        Check(f"P({2*m+1},1) has 2 cycles of length {2*m+1}", odd),
        Check(f"P({2*m+1},1) max edge distance = {m+1}", dist == m + 1, f"computed {dist}"),
    ]


def checks_for(m: int) -> list[Check]:
    """All claims about P(2m+1, 1) for m in 1..3."""
    n = 2 * m + 1
    g = build_petersen(n, 1)
    grp = aut_group(n)
    orbits = classify(n)
    out = []

    classes = len(enumerate_classes(g))
    expect = 2 ** (g.edge_count - g.vertex_count + 1)
    out.append(Check(f"P({n},1) switching classes = {expect}", classes == expect, f"computed {classes}"))
    out.append(Check(f"P({n},1) orbits = {ORBIT_COUNTS[n]}", len(orbits) == ORBIT_COUNTS[n],
                     f"computed {len(orbits)}"))
    out += census_checks(m)

    missing, extra = table_diff(n, orbits)
    L = TABLE_LENGTHS[n]
    cols = ",".join(f"C{x}" for x in L)
    if n in (3, 5):
        out.append(Check(f"P({n},1) ({cols}) profile multiset equals the printed table",
                         not missing and not extra,
                         f"missing {dict(missing)} extra {dict(extra)}"))
    else:
        printed = Counter(TABLES[n].values())
        found = sum((printed & profile_multiset(orbits, L)).values())
        out.append(Check(f"P({n},1) >= {MIN_TABLE3_ROWS} of {sum(printed.values())} printed ({cols}) rows computed",
                         found >= MIN_TABLE3_ROWS,
                         f"{found} found; printed-only {dict(missing)}; computed-only {dict(extra)}"))
        for row, size in TABLE3_REQUIRED:
            hits = [o for o in orbits if tuple(o.profile[x] for x in L) == row
                    and (size is None or o.min_size == size)]
            label = f"P({n},1) row {row}" + (f" with min size {size}" if size is not None else "")
            out.append(Check(label + " computed", bool(hits),
                             "" if hits else f"closest computed: {_closest(orbits, L, row)}"))

    for size, count in MATCHING_TYPES[n].items():
        c = matching_aut_orbits(g, grp, size)
        out.append(Check(f"P({n},1) matching types of size {size} = {count}",
                         c.aut_orbit_count == count, f"computed {c.aut_orbit_count}"))
    for size, count in MATCHING_TYPES_EXCLUDING_FORBIDDEN.get(n, {}).items():
        c = matching_aut_orbits(g, grp, size, exclude_forbidden=True)
        out.append(Check(f"P({n},1) matching types of size {size} without forbidden = {count} [report]",
                         c.aut_orbit_count == count,
                         f"computed {c.aut_orbit_count}, unrestricted "
                         f"{matching_aut_orbits(g, grp, size).aut_orbit_count}"))

    size2 = matching_class_count(orbits, 2)
    want = 3 if m == 1 else 4 * m - 1
    out.append(Check(f"P({n},1) classes with minimal size 2 = {want}", size2 == want, f"computed {size2}"))
    top = max_minimal_size(orbits)
    out.append(Check(f"P({n},1) largest minimal signature = {m + 1}", top == m + 1, f"computed {top}"))

    if n == 7:
        out += verify_forbidden()
    for c in replay_resignings([n]):
        out.append(Check(c.name + " [report]", c.passed, c.detail))
    return out


def _closest(orbits, lengths, row):
    def gap(o):
        return sum(abs(o.profile[x] - r) for x, r in zip(lengths, row))
    best = min(orbits, key=gap)
    return f"{tuple(best.profile[x] for x in lengths)} (min size {best.min_size})"


def resigning_gate() -> Check:
    results = replay_resignings(sorted(RESIGNINGS))
    passed = sum(c.passed for c in results)
    return Check(f">= {MIN_RESIGNINGS} resigning reductions replay", passed >= MIN_RESIGNINGS,
                 f"{passed} of {len(results)} replay")


def run(which) -> list[Check]:
    """Checks for m in ``which`` (subset of 1..3); adds the replay gate for all three."""
    out = []
    for m in which:
        out += checks_for(m)
    if set(which) == {1, 2, 3}:
        out.append(resigning_gate())
    return out
