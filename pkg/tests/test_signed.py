import pytest

from gpgswitch.errors import InternalConsistencyError, ResourceCapError, WidthMismatchError
from gpgswitch.graphs import build_petersen, complete_graph, cycles_of, path_graph, spanning_tree
from gpgswitch.signed import (
    ClassId,
    Signature,
    SwitchSet,
    class_id,
    cut,
    cycle_sign,
    is_balanced,
    is_matching,
    max_degree,
    minimal_signature,
    neg_profile,
    representative,
    switch,
    switch_set_between,
    switching_equivalent,
    tree_normalize,
    unbalanced_cycles,
)
from gpgswitch.textio import parse_signature

from oracles import gray_code_minimum


def random_sig(g, rng):
    return Signature(g, rng.getrandbits(g.edge_count))


def random_switch(g, rng):
    return SwitchSet(g.vertex_count, rng.getrandbits(g.vertex_count))


def test_switch_examples(p3):
    sig = parse_signature("u0-u1", p3)
    out = switch(sig, SwitchSet.of(p3, [1]))
    assert sorted(p3.edge_names(out.neg_edges)) == ["u1-u2", "u1-v1"]
    assert switch(sig, SwitchSet.of(p3, range(6))) == sig
    assert switch(Signature(p3, 0), SwitchSet.of(p3, [0])).neg_edges == cut(p3, 1)


def test_width_mismatch(p3, p5):
    with pytest.raises(WidthMismatchError):
        switch(Signature(p3, 0), SwitchSet.of(p5, [0]))
    with pytest.raises(WidthMismatchError):
        Signature(p3, 1 << 9)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_switch_involution(n, rng):
    g = build_petersen(n, 1)
    for _ in range(300):
        sig, s = random_sig(g, rng), random_switch(g, rng)
        assert switch(switch(sig, s), s) == sig


def test_cycle_sign_invariance_exhaustive(p3):
    cycles = cycles_of(p3)
    cuts = [cut(p3, s) for s in range(1 << 6)]
    for mask in range(1 << 9):
        sig = Signature(p3, mask)
        signs = [cycle_sign(sig, c) for c in cycles]
        for cm in cuts:
            moved = Signature(p3, mask ^ cm)
            assert [cycle_sign(moved, c) for c in cycles] == signs


def test_profile_examples(p3, p5):
    assert neg_profile(parse_signature("u0-v0", p3)) == {3: 0, 4: 2, 5: 4, 6: 2}
    got = neg_profile(parse_signature("u0-v0, v2-u2, u3-u4", p5))
    assert (got[4], got[5], got[6]) == (5, 1, 0)
    assert neg_profile(Signature(p3, 0)) == {3: 0, 4: 0, 5: 0, 6: 0}


@pytest.mark.parametrize("n", [5, 7])
def test_class_id_invariance(n, rng):
    g = build_petersen(n, 1)
    sig = random_sig(g, rng)
    cid = class_id(sig)
    for _ in range(10_000):
        sig = switch(sig, random_switch(g, rng))
        assert class_id(sig) == cid


def test_equivalence_oracle_exhaustive(p3):
    """ClassId equality and equal unbalanced-cycle sets define the same partition."""
    by_id, by_cycles = {}, {}
    for mask in range(1 << 9):
        sig = Signature(p3, mask)
        cid, unb = class_id(sig).bits, unbalanced_cycles(sig)
        assert by_id.setdefault(cid, unb) == unb
        assert by_cycles.setdefault(unb, cid) == cid
    assert len(by_id) == 16


def test_switching_equivalent_pairs(p5, rng):
    for _ in range(200):
        a = random_sig(p5, rng)
        b = switch(a, random_switch(p5, rng))
        assert switching_equivalent(a, b)
        s = switch_set_between(a, b)
        assert s is not None and switch(a, s) == b
        c = random_sig(p5, rng)
        same = class_id(a) == class_id(c)
        assert switching_equivalent(a, c) == same
        assert (switch_set_between(a, c) is not None) == same


def test_switching_equivalent_graph_mismatch(p3, p5):
    with pytest.raises(ValueError):
        switching_equivalent(Signature(p3, 0), Signature(p5, 0))


@pytest.mark.parametrize("n,count", [(3, 16), (5, 64)])
def test_class_count_exhaustive(n, count):
    g = build_petersen(n, 1)
    ids = {class_id(Signature(g, m)).bits for m in range(1 << g.edge_count)}
    assert len(ids) == count


def test_class_count_seven(p7):
    t = spanning_tree(p7)
    assert t.cotree_size == 8
    for value in range(256):
        cid = ClassId(value, 8)
        assert tree_normalize(representative(p7, cid, t), t)[0] == cid
    for s in range(0, 1 << 14, 7):
        assert class_id(Signature(p7, cut(p7, s))).bits == 0


def test_tree_normalize(p5, rng):
    t = spanning_tree(p5)
    for _ in range(200):
        sig = random_sig(p5, rng)
        cid, s = tree_normalize(sig, t)
        positive = switch(sig, s)
        assert positive.neg_edges & t.tree_edges == 0
        assert tree_normalize(positive, t)[0] == cid
        assert positive == representative(p5, cid, t)
        assert ClassId.parse(str(cid)) == cid


def test_balance(p5, rng):
    assert is_balanced(Signature(p5, 0))
    assert is_balanced(Signature(p5, cut(p5, 0b1011)))
    assert not is_balanced(parse_signature("u0-u1", p5))


def test_minimal_examples(p3):
    k3 = complete_graph(3)
    size, witnesses = minimal_signature(Signature(k3, 0b111))
    assert size == 1 and len(witnesses) == 3
    sig8 = parse_signature("u0-v0, u1-v1, u2-v2", p3)
    size, witnesses = minimal_signature(sig8)
    assert size == 0 and witnesses == [Signature(p3, 0)]
    # both triangles negative, so no single edge will do
    assert minimal_signature(parse_signature("u0-u1, v1-v2", p3))[0] == 2
    assert minimal_signature(parse_signature("u0-v0, u1-u2, v1-v2", p3))[0] == 2
    assert minimal_signature(parse_signature("u0-u1, u1-u2, u0-u2", p3))[0] == 2
    path = path_graph(4)
    assert minimal_signature(Signature(path, 0b111))[0] == 0


def test_minimal_search_cap():
    with pytest.raises(ResourceCapError):
        minimal_signature(Signature(build_petersen(15, 1), 1))


@pytest.mark.parametrize("n,samples", [(3, 60), (5, 40), (7, 12)])
def test_minimal_matches_rescan(n, samples, rng):
    g = build_petersen(n, 1)
    for _ in range(samples):
        sig = random_sig(g, rng)
        size, witnesses = minimal_signature(sig)
        assert size == gray_code_minimum(list(g.edges), g.vertex_count, sig.neg_edges)
        assert witnesses == sorted(witnesses, key=lambda w: w.neg_edges)
        assert len({w.neg_edges for w in witnesses}) == len(witnesses)
        for w in witnesses:
            assert len(w) == size and class_id(w) == class_id(sig)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_witnesses_are_matchings(n, rng):
    g = build_petersen(n, 1)
    for _ in range(500):
        _, witnesses = minimal_signature(random_sig(g, rng))
        for w in witnesses:
            assert is_matching(w)
            # a minimal signature never has more than half the edges at a vertex negative
            assert max_degree(w) <= 1
            assert 2 * len(w) <= g.vertex_count


def test_is_matching_examples(p3):
    assert is_matching(parse_signature("u0-v0, u1-u2", p3))
    assert not is_matching(parse_signature("u0-u1, u1-u2", p3))
    assert is_matching(Signature(p3, 0))
    assert max_degree(parse_signature("u0-u1, u0-v0, u0-u2", p3)) == 3
