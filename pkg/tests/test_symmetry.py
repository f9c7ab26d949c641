import pytest

from gpgswitch.errors import NotAutomorphismError, ParameterError
from gpgswitch.graphs import build_petersen, complete_graph, path_graph, spanning_tree
from gpgswitch.signed import ClassId, Signature, neg_profile, representative, tree_normalize
from gpgswitch.symmetry import (
    act_on_class,
    apply_linear,
    apply_to_signature,
    aut_group,
    brute_force_automorphisms,
    compose,
    delta,
    gamma,
    identity,
    inverse,
    linear_action,
    orbit_of_signature,
    permutation,
    rho,
)
from gpgswitch.textio import parse_signature

from oracles import automorphisms_by_permutation


def test_generator_examples(p5):
    assert rho(5, 1).images[:5] == (1, 2, 3, 4, 0)
    assert delta(5, 0).images[:5] == (0, 4, 3, 2, 1)
    assert gamma(5).images == (5, 6, 7, 8, 9, 0, 1, 2, 3, 4)
    sig = parse_signature("u1-u2", p5)
    assert apply_to_signature(rho(5, 2), sig) == parse_signature("u3-u4", p5)
    assert apply_to_signature(gamma(5), sig) == parse_signature("v1-v2", p5)


def test_generator_errors():
    with pytest.raises(ParameterError):
        delta(6, 0)
    with pytest.raises(ParameterError):
        rho(5, 7)
    with pytest.raises(ParameterError):
        permutation([0, 0, 1])
    with pytest.raises(NotAutomorphismError):
        permutation([1, 0, 2, 3, 4, 5], build_petersen(3, 1))


def test_compose_order(p5):
    # apply the right factor first
    p = compose(rho(5, 1), delta(5, 0))
    assert p.images[0] == 1 and p.images[1] == 0
    assert compose(p, inverse(p)).is_identity()
    assert compose(identity(p5), gamma(5)).images == gamma(5).images


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_group_matches_brute_force(n):
    g = build_petersen(n, 1)
    grp = aut_group(n)
    assert grp.order == 4 * n
    assert grp.elements[0].is_identity()
    assert {p.images for p in grp} == {p.images for p in brute_force_automorphisms(g)}


def test_group_order_larger_n():
    for n in (11, 13):
        assert aut_group(n).order == 4 * n


def test_brute_force_small_graphs():
    assert len(brute_force_automorphisms(complete_graph(3))) == 6
    assert len(brute_force_automorphisms(path_graph(3))) == 2
    g = build_petersen(3, 1)
    assert sorted(p.images for p in brute_force_automorphisms(g)) == sorted(
        automorphisms_by_permutation(g.vertex_count, g.edges))


def test_spoke_orbit(p5):
    sig = parse_signature("u0-v0", p5)
    images = orbit_of_signature(sig, aut_group(5))
    assert images == {1 << e for e in range(10, 15)}


@pytest.mark.parametrize("n", [3, 5, 7])
def test_action_laws(n):
    g = build_petersen(n, 1)
    t = spanning_tree(g)
    r = t.cotree_size
    grp = aut_group(n)
    index = {p.images: i for i, p in enumerate(grp)}
    table = [[act_on_class(p, ClassId(c, r), t, g).bits for c in range(1 << r)] for p in grp]
    assert table[0] == list(range(1 << r))
    for i, p in enumerate(grp):
        assert sorted(table[i]) == list(range(1 << r))
        cols = linear_action(p, g)
        assert [apply_linear(cols, c) for c in range(1 << r)] == table[i]
        for j, q in enumerate(grp):
            k = index[compose(p, q).images]
            assert table[k] == [table[i][table[j][c]] for c in range(1 << r)]


@pytest.mark.parametrize("n", [3, 5, 7])
def test_automorphisms_preserve_profiles(n, rng):
    g = build_petersen(n, 1)
    for p in aut_group(n):
        sig = Signature(g, rng.getrandbits(g.edge_count))
        assert neg_profile(apply_to_signature(p, sig)) == neg_profile(sig)


def test_act_on_class_is_image_of_switched_forms(p5, rng):
    t = spanning_tree(p5)
    grp = aut_group(5)
    for _ in range(50):
        sig = Signature(p5, rng.getrandbits(15))
        cid = tree_normalize(sig, t)[0]
        p = grp.elements[rng.randrange(grp.order)]
        assert act_on_class(p, cid, t, p5) == tree_normalize(apply_to_signature(p, sig), t)[0]
        assert representative(p5, cid, t).neg_edges & t.tree_edges == 0
