import io
import json

import pytest

from gpgswitch.classify import classify
from gpgswitch.cli import main
from gpgswitch.errors import SignatureParseError
from gpgswitch.graphs import build_petersen
from gpgswitch.reference import SIGMAS
from gpgswitch.signed import Signature
from gpgswitch.textio import (
    atlas_dict,
    check_atlas,
    dump_atlas,
    emit_table,
    load_atlas,
    parse_signature,
    parse_vertices,
    render_signature,
)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_and_render(p5):
    sig = parse_signature(" v1-u1 ,u0-u1", p5)
    assert render_signature(sig) == "u0-u1,u1-v1"
    assert parse_signature("", p5) == Signature(p5, 0)
    assert parse_vertices("u0, v4", p5) == [0, 9]


@pytest.mark.parametrize("n", [3, 5, 7])
def test_round_trip_reference(n):
    g = build_petersen(n, 1)
    for text in SIGMAS[n].values():
        sig = parse_signature(text, g)
        assert parse_signature(render_signature(sig), g) == sig


@pytest.mark.parametrize("text,reason,position", [
    ("u0u1", "malformed edge", 0),
    ("u0-u1, u0-x9", "unknown vertex", 7),
    ("u0-u1,u0-u2x", "unknown vertex", 6),
    ("u0-u1, u0-v1", "unknown edge", 7),
    ("u0-u1, u1-u0", "duplicate edge", 7),
])
def test_parse_errors(p5, text, reason, position):
    with pytest.raises(SignatureParseError) as info:
        parse_signature(text, p5)
    assert reason in str(info.value)
    assert info.value.position == position


def test_emit_table_formats():
    orbits = classify(3)
    csv_text = emit_table(orbits, "csv", lengths=[3, 4])
    lines = csv_text.splitlines()
    assert lines[0] == "orbit_id,min_size,representative,neg_C3,neg_C4"
    assert len(lines) == 7
    md = emit_table(orbits, "md", lengths=[3, 4], extra=[4])
    assert "neg_C4*" in md and md.rstrip().endswith("not in the published table")
    rows = json.loads(emit_table(orbits, "json", lengths=[3]))
    assert rows[0] == {"orbit_id": 0, "min_size": 0, "representative": "", "neg_C3": 0}
    assert emit_table([], "csv", lengths=[3]).splitlines() == ["orbit_id,min_size,representative,neg_C3"]
    with pytest.raises(ValueError):
        emit_table(orbits, "xml")


def test_atlas_round_trip(p5):
    data = load_atlas(dump_atlas(atlas_dict(2, p5, classify(5))))
    check_atlas(data, p5)
    assert data["class_count"] == 64 and data["orbit_count"] == 12
    data["orbits"][1]["min_signature_size"] = 3
    with pytest.raises(ValueError):
        check_atlas(data, p5)
    with pytest.raises(ValueError):
        load_atlas('{"format": "other"}')


def test_cli_info_and_cycles():
    code, text = run("info", "--n", "1")
    assert code == 0 and "switching classes: 16" in text
    code, text = run("cycles", "--n", "1")
    assert code == 0 and "14 cycles" in text


def test_cli_classify_csv():
    code, text = run("classify", "--n", "1", "--format", "csv")
    assert code == 0
    assert len(text.splitlines()) == 7


def test_cli_minimal_and_equivalent():
    code, text = run("minimal", "--n", "1", "--signature", "u0-u1,v1-v2")
    assert code == 0 and "minimal size: 2" in text
    code, text = run("equivalent", "--n", "1", "--sig-a", "u0-u1", "--sig-b", "u1-u2,u1-v1")
    assert code == 0 and "EQUIVALENT" in text
    code, text = run("equivalent", "--n", "1", "--sig-a", "u0-u1", "--sig-b", "v0-v1", "--up-to-iso")
    assert code == 0 and "ISOMORPHIC" in text


def test_cli_matchings_and_conjecture():
    code, text = run("matchings", "--n", "4", "--size", "2")
    assert code == 0 and "up to switching isomorphism (minimal): 15" in text
    code, text = run("conjecture", "--n", "3")
    assert code == 0 and "within bound" in text


@pytest.mark.parametrize("argv,code", [
    (["minimal", "--n", "1", "--signature", "u0-u9"], 2),
    (["minimal", "--n", "1", "--signature", "u0-v1"], 2),
    (["info", "--n", "0"], 2),
    (["classify", "--n", "7"], 4),
    (["classify", "--n", "6"], 4),
    (["cycles", "--n", "3", "--cycle-cap", "5"], 4),
    (["nonsense"], 2),
])
def test_cli_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code


@pytest.mark.parametrize("n", ["1", "2"])
def test_cli_verify_small(n):
    code, text = run("verify-paper", "--n", n)
    failed = [line for line in text.splitlines() if line.startswith("FAIL") and "[report]" not in line]
    assert code == 0, failed


def test_cli_atlas_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("atlas", "--n", "3", "--jobs", "1", "--out", str(a))[0] == 0
    assert run("atlas", "--n", "3", "--jobs", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    check_atlas(load_atlas(a.read_text()), build_petersen(7, 1))
