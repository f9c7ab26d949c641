"""Signature text grammar, atlas files and table rendering."""

from __future__ import annotations

import csv
import io
import json
import re
from typing import Optional, Sequence

from .errors import SignatureParseError
from .graphs import Graph
from .signed import ClassId, Signature

ATLAS_FORMAT = "gpg-switch-atlas/1"

_TOKEN = re.compile(r"^([^\s,-]+)-([^\s,-]+)$")


def _tokens(text: str):
    """Yield (token, offset) pairs with whitespace removed."""
    offset = 0
    for raw in text.split(","):
        token = "".join(raw.split())
        yield token, offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw) + 1


def parse_signature(text: str, g: Graph) -> Signature:
    """Parse ``"u0-u1, v2-v3"`` into a Signature; endpoint order is free."""
    if not text.strip():
        return Signature(g, 0)
    mask = 0
    for token, pos in _tokens(text):
        m = _TOKEN.match(token)
        if not m:
            raise SignatureParseError("malformed edge", token, pos)
        a, b = (g.name_index.get(x) for x in m.groups())
        if a is None or b is None:
            raise SignatureParseError("unknown vertex", token, pos)
        e = g.edge_index.get((a, b))
        if e is None:
            raise SignatureParseError("unknown edge", token, pos)
        if mask >> e & 1:
            raise SignatureParseError("duplicate edge", token, pos)
        mask |= 1 << e
    return Signature(g, mask)


def parse_vertices(text: str, g: Graph) -> list[int]:
    out = []
    if not text.strip():
        return out
    for token, pos in _tokens(text):
        v = g.name_index.get(token)
        if v is None:
            raise SignatureParseError("unknown vertex", token, pos)
        out.append(v)
    return out


def render_signature(sig: Signature) -> str:
    return ",".join(sig.graph.edge_names(sig.neg_edges))


def render_vertices(g: Graph, vertices: Sequence[int]) -> str:
    return ",".join(g.names[v] for v in vertices)


def atlas_dict(n: int, g: Graph, orbits) -> dict:
    return {
        "format": ATLAS_FORMAT,
        "n": n,
        "graph": f"P({g.vertex_count // 2},1)",
        "class_count": sum(o.size for o in orbits),
        "orbit_count": len(orbits),
        "orbits": [
            {
                "orbit_id": o.orbit_id,
                "size": o.size,
                "min_signature_size": o.min_size,
                "representative": g.edge_names(o.canonical_rep.neg_edges),
                "neg_profile": {str(k): v for k, v in o.profile.items()},
                "class_ids": [str(c) for c in o.class_ids],
            }
            for o in orbits
        ],
    }


def dump_atlas(atlas: dict) -> str:
    return json.dumps(atlas, indent=1) + "\n"


def load_atlas(text: str) -> dict:
    data = json.loads(text)
    if data.get("format") != ATLAS_FORMAT:
        raise ValueError(f"not a {ATLAS_FORMAT} file")
    return data


def check_atlas(data: dict, g: Graph) -> None:
    """Raise ValueError when an atlas violates its own invariants."""
    from .signed import is_matching

    orbits = data["orbits"]
    if data["class_count"] != sum(o["size"] for o in orbits):
        raise ValueError("class_count does not equal the sum of orbit sizes")
    if data["orbit_count"] != len(orbits):
        raise ValueError("orbit_count does not match the orbit list")
    for i, o in enumerate(orbits):
        if o["orbit_id"] != i:
            raise ValueError(f"orbit ids not dense at {i}")
        rep = parse_signature(",".join(o["representative"]), g)
        if len(rep) != o["min_signature_size"] or not is_matching(rep):
            raise ValueError(f"orbit {i}: representative is not a matching of the stated size")
        if len(o["class_ids"]) != o["size"]:
            raise ValueError(f"orbit {i}: size does not match class list")
        ClassId.parse(o["class_ids"][0])


def table_rows(orbits, lengths: Sequence[int]) -> list[list]:
    rows = []
    for o in orbits:
        row = [o.orbit_id, o.min_size, render_signature(o.canonical_rep)]
        row += [o.profile.get(L, 0) for L in lengths]
        rows.append(row)
    return rows


def emit_table(orbits, fmt: str = "md", lengths: Optional[Sequence[int]] = None,
               extra: Sequence[int] = ()) -> str:
    """Render orbit records as csv, md or json.

    ``lengths`` defaults to the cycle lengths of the first record's profile.
    In md output, lengths listed in ``extra`` get a trailing ``*``.
    """
    orbits = sorted(orbits, key=lambda o: o.orbit_id)
    if lengths is None:
        lengths = list(orbits[0].profile) if orbits else []
    header = ["orbit_id", "min_size", "representative"] + [f"neg_C{L}" for L in lengths]
    rows = table_rows(orbits, lengths)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=1) + "\n"
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    shown = header[:3] + [f"neg_C{L}*" if L in extra else f"neg_C{L}" for L in lengths]
    cells = [shown] + [[str(x) for x in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(shown))]
    lines = ["| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |" for row in cells]
    lines.insert(1, "|" + "|".join("-" * (w + 2) for w in widths) + "|")
    if extra:
        lines.append("")
        lines.append("* extra column, not in the published table")
    return "\n".join(lines) + "\n"
