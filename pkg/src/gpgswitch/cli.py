"""Command line interface.

``--n N`` always selects the prism P(2N+1, k), k = 1 unless ``--k`` is given.

Exit codes: 0 success, 2 invalid input, 3 verification failure or
conjecture bound exceeded, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import graphs
from .classify import (
    classify,
    matching_aut_orbits,
    matching_class_count,
    max_minimal_size,
    orbit_lookup,
)
from .errors import ParameterError, ResourceCapError, SignatureParseError
from .graphs import build_petersen, cycle_census, enumerate_cycles
from .reference import TABLE_LENGTHS
from .signed import (
    class_id,
    cycle_sign,
    minimal_signature,
    neg_profile,
    switch_set_between,
)
from .symmetry import MAX_AUT_N, aut_group
from .textio import atlas_dict, dump_atlas, emit_table, parse_signature, render_signature, render_vertices

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_CAP = 0, 2, 3, 4
DEFAULT_BUDGET = 5
LONG_BUDGET = 6
MAX_WITNESSES_SHOWN = 10


@dataclass
class RunConfig:
    n: int
    k: int = 1
    format: str = "md"
    jobs: int = 1
    cycle_cap: int = graphs.DEFAULT_CYCLE_CAP
    conjecture_budget: int = DEFAULT_BUDGET

    def validate(self, classify_needed: bool = False) -> None:
        if self.n < 1:
            raise ParameterError(f"--n must be >= 1, got {self.n}")
        if self.k < 1 or 2 * self.k >= 2 * self.n + 1:
            raise ParameterError(f"--k must satisfy 1 <= k < (2n+1)/2, got {self.k}")
        if self.format not in ("md", "csv", "json"):
            raise ParameterError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ParameterError("--jobs must be >= 1")
        if self.cycle_cap < 1:
            raise ParameterError("--cycle-cap must be >= 1")
        if classify_needed:
            if self.k != 1:
                raise ParameterError("classification is only available for k = 1")
            if self.n > self.conjecture_budget:
                limit = "" if self.conjecture_budget >= LONG_BUDGET else " (use --long for n = 6)"
                raise ResourceCapError(
                    f"n = {self.n} exceeds the classification budget n <= {self.conjecture_budget}{limit}")
            if 2 * self.n + 1 > MAX_AUT_N:
                raise ResourceCapError(f"n = {self.n} is beyond the supported range")

    @property
    def order(self) -> int:
        return 2 * self.n + 1

    def graph(self):
        return build_petersen(self.order, self.k)


def _config(args) -> RunConfig:
    return RunConfig(
        n=args.n,
        k=getattr(args, "k", 1),
        format=getattr(args, "format", "md"),
        jobs=getattr(args, "jobs", 1),
        cycle_cap=args.cycle_cap,
        conjecture_budget=LONG_BUDGET if getattr(args, "long", False) else DEFAULT_BUDGET,
    )


def _orbits(cfg: RunConfig):
    cfg.validate(classify_needed=True)
    return classify(cfg.order, jobs=cfg.jobs)


def cmd_info(args, out) -> int:
    cfg = _config(args)
    cfg.validate()
    g = cfg.graph()
    r = g.edge_count - g.vertex_count + 1
    print(f"graph: P({cfg.order},{cfg.k})", file=out)
    print(f"vertices: {g.vertex_count}", file=out)
    print(f"edges: {g.edge_count}", file=out)
    print(f"switching classes: {2 ** r} (2^{r})", file=out)
    if cfg.k == 1 and cfg.order <= MAX_AUT_N:
        print(f"automorphism group order: {aut_group(cfg.order).order}", file=out)
    else:
        print("automorphism group order: n/a", file=out)
    return EXIT_OK


def _expected_count(n: int, length: int):
    if length % 2 == 0 and 4 <= length <= 2 * n:
        return n
    if length == n:
        return 2
    return None


def cmd_cycles(args, out) -> int:
    cfg = _config(args)
    cfg.validate()
    g = cfg.graph()
    census = cycle_census(g, cfg.cycle_cap)
    rows = []
    for length, count in census.items():
        want = _expected_count(cfg.order, length) if cfg.k == 1 else None
        check = "" if want is None else ("ok" if want == count else "FAIL")
        rows.append({"length": length, "count": count,
                     "expected": "" if want is None else want, "check": check})
    if cfg.format == "json":
        print(json.dumps(rows, indent=1), file=out)
    elif cfg.format == "csv":
        print("length,count,expected,check", file=out)
        for r in rows:
            print(f"{r['length']},{r['count']},{r['expected']},{r['check']}", file=out)
    else:
        print("| length | count | expected | check |", file=out)
        print("|--------|-------|----------|-------|", file=out)
        for r in rows:
            print(f"| {r['length']} | {r['count']} | {r['expected']} | {r['check']} |", file=out)
        print(f"\n{sum(census.values())} cycles", file=out)
    failed = any(r["check"] == "FAIL" for r in rows)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_classify(args, out) -> int:
    cfg = _config(args)
    orbits = _orbits(cfg)
    lengths = list(orbits[0].profile)
    printed = TABLE_LENGTHS.get(cfg.order)
    extra = [L for L in lengths if printed and L not in printed]
    text = emit_table(orbits, cfg.format, lengths, extra)
    out.write(text)
    if cfg.format == "md":
        print(f"\n{len(orbits)} orbits", file=out)
    return EXIT_OK


def cmd_atlas(args, out) -> int:
    cfg = _config(args)
    orbits = _orbits(cfg)
    text = dump_atlas(atlas_dict(cfg.n, cfg.graph(), orbits))
    Path(args.out).write_text(text)
    print(f"wrote {len(orbits)} orbits to {args.out}", file=out)
    return EXIT_OK


def cmd_minimal(args, out) -> int:
    cfg = _config(args)
    cfg.validate()
    g = cfg.graph()
    sig = parse_signature(args.signature, g)
    size, witnesses = minimal_signature(sig)
    print(f"minimal size: {size}", file=out)
    print(f"witnesses: {len(witnesses)}", file=out)
    for w in witnesses[:MAX_WITNESSES_SHOWN]:
        print(f"  {{{render_signature(w)}}}", file=out)
    s = switch_set_between(sig, witnesses[0])
    print(f"switch set for first witness: {{{render_vertices(g, s.members)}}}", file=out)
    return EXIT_OK


def _distinguish(a, b) -> str:
    pa, pb = neg_profile(a), neg_profile(b)
    if pa != pb:
        diff = {L: (pa[L], pb[L]) for L in pa if pa[L] != pb[L]}
        return f"negative cycles per length differ (a, b): {diff}"
    for c in enumerate_cycles(a.graph):
        if cycle_sign(a, c) != cycle_sign(b, c):
            names = [a.graph.names[v] for v in c.vertex_seq]
            return f"same profile; cycle {'-'.join(names)} has sign {cycle_sign(a, c)} vs {cycle_sign(b, c)}"
    return ""


def cmd_equivalent(args, out) -> int:
    cfg = _config(args)
    cfg.validate()
    g = cfg.graph()
    a = parse_signature(args.sig_a, g)
    b = parse_signature(args.sig_b, g)
    if class_id(a) == class_id(b):
        print("EQUIVALENT", file=out)
        return EXIT_OK
    if args.up_to_iso:
        orbits = _orbits(cfg)
        owner = orbit_lookup(orbits)
        if owner[class_id(a).bits] == owner[class_id(b).bits]:
            print("ISOMORPHIC", file=out)
            return EXIT_OK
    print("DISTINCT", file=out)
    print(f"profile a: {neg_profile(a)}", file=out)
    print(f"profile b: {neg_profile(b)}", file=out)
    detail = _distinguish(a, b)
    if detail:
        print(detail, file=out)
    return EXIT_OK


def cmd_matchings(args, out) -> int:
    cfg = _config(args)
    cfg.validate()
    if cfg.k != 1:
        raise ParameterError("matching censuses need k = 1")
    g = cfg.graph()
    grp = aut_group(cfg.order)
    orbits = None if args.aut_only else _orbits(cfg)
    c = matching_aut_orbits(g, grp, args.size, args.exclude_forbidden, orbits)
    print(f"matchings of size {args.size}: {c.matching_count}", file=out)
    print(f"up to automorphism: {c.aut_orbit_count}", file=out)
    if orbits is not None:
        print(f"up to switching isomorphism (minimal): {c.switching_iso_count}", file=out)
    return EXIT_OK


def cmd_conjecture(args, out) -> int:
    cfg = _config(args)
    orbits = _orbits(cfg)
    top = max_minimal_size(orbits)
    bound = cfg.n + 1
    print(f"P({cfg.order},1): largest minimal signature {top}, bound n+1 = {bound}", file=out)
    print(f"classes with minimal size 2: {matching_class_count(orbits, 2)}", file=out)
    print("within bound" if top <= bound else "BOUND EXCEEDED", file=out)
    return EXIT_OK if top <= bound else EXIT_FAIL


def cmd_verify(args, out) -> int:
    from .verify import is_gating, run

    which = [1, 2, 3] if args.n == "all" else [int(args.n)]
    failed = 0
    for c in run(which):
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name}" + (f"  ({c.detail})" if c.detail else ""), file=out)
        if is_gating(c) and not c.passed:
            failed += 1
    print(f"\n{failed} gating claim(s) failed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpgswitch",
                                description="Switching classes of signed prisms P(2n+1,1).")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, k=False, fmt=False, jobs=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--n", type=int, required=True, help="graph is P(2n+1, k)")
        sp.add_argument("--cycle-cap", type=int, default=graphs.DEFAULT_CYCLE_CAP)
        if k:
            sp.add_argument("--k", type=int, default=1)
        if fmt:
            sp.add_argument("--format", default="md", choices=["md", "csv", "json"])
        if jobs:
            sp.add_argument("--jobs", type=int, default=1)
            sp.add_argument("--long", action="store_true", help="allow n = 6")
        sp.set_defaults(func=func)
        return sp

    add("info", cmd_info, "vertex, edge, class and group counts", k=True)
    add("cycles", cmd_cycles, "cycle census", k=True, fmt=True)
    add("classify", cmd_classify, "orbit table", fmt=True, jobs=True)
    add("atlas", cmd_atlas, "write the orbit atlas as JSON", jobs=True).add_argument("--out", required=True)
    sp = add("minimal", cmd_minimal, "minimal equivalent signatures", k=True)
    sp.add_argument("--signature", required=True)
    sp = add("equivalent", cmd_equivalent, "compare two signatures", jobs=True)
    sp.add_argument("--sig-a", required=True)
    sp.add_argument("--sig-b", required=True)
    sp.add_argument("--up-to-iso", action="store_true")
    sp = add("matchings", cmd_matchings, "matching census", jobs=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--aut-only", action="store_true")
    sp.add_argument("--exclude-forbidden", action="store_true")
    add("conjecture", cmd_conjecture, "largest minimal signature vs n+1", jobs=True)

    vp = sub.add_parser("verify-paper", help="reproduce the published counts and tables")
    vp.add_argument("--n", default="all", choices=["1", "2", "3", "all"])
    vp.set_defaults(func=cmd_verify, cycle_cap=graphs.DEFAULT_CYCLE_CAP)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParameterError, SignatureParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
