import random

import pytest

from conftest import trivial_cover
from splitgraph.artal import ArtalType, allowed_automorphisms, hexagon_walk, splitting_graph_of
from splitgraph.cover import net_voltage_set
from splitgraph.equivalence import (DISTINGUISHED, EQUIVALENT, INCONCLUSIVE, SearchLimits,
                                    distinguish, exhaustive_equivalence, nv_signature,
                                    verify_witness)
from splitgraph.errors import InvalidArgument, ResourceLimitError
from splitgraph.fingroup import coset_of, identity_automorphism, make_cyclic
from splitgraph.multigraph import Multigraph, enumerate_simple_closed_walks
from splitgraph.samples import random_splitting_cover, twisted_copy


def test_signature_of_tree_is_empty():
    tree = Multigraph.build("abc", [("x", "a", "b"), ("y", "b", "c")])
    assert nv_signature(trivial_cover(tree)).total == 0


def test_s3_signature(s3_cover):
    sig = nv_signature(s3_cover)
    assert sig.total == len(enumerate_simple_closed_walks(s3_cover.base)) == 6
    # triangle walks have three edges
    by_len = sig.by_length()
    assert list(by_len) == [3]
    sizes = sorted(len(canon) for canon in by_len[3])
    assert sizes == [4, 6]
    assert nv_signature(s3_cover) == sig


def test_artal_signature_matches_fiber_bfs():
    c = splitting_graph_of(ArtalType.parse("3"), 1)
    sig = nv_signature(c)
    assert sig.total == 12  # hexagon: 6 rotations x 2 directions
    members = {canon for (_, canon) in sig.entries}
    assert members == {(1,), (2,)}
    plus = coset_of(net_voltage_set(c, hexagon_walk(c), "P1@0"))
    assert (plus.offset, plus.step) == (1, 3)


def test_distinguish_examples(s3_cover):
    tau = identity_automorphism(s3_cover.group)
    assert distinguish(s3_cover, s3_cover, tau).kind == INCONCLUSIVE
    T = ArtalType.parse("3:3:3")
    a0, a1 = splitting_graph_of(T, 0), splitting_graph_of(T, 1)
    for t in allowed_automorphisms(3):
        v = distinguish(a0, a1, t)
        assert v.kind == DISTINGUISHED
        assert v.witness["length"] == 6
    with pytest.raises(InvalidArgument):
        distinguish(s3_cover, a0, tau)


def test_exhaustive_examples(s3_cover):
    tau = identity_automorphism(s3_cover.group)
    v = exhaustive_equivalence(s3_cover, s3_cover, tau)
    assert v.kind == EQUIVALENT
    T = ArtalType.parse("3:3:3")
    a0, a1 = splitting_graph_of(T, 0), splitting_graph_of(T, 1)
    for t in allowed_automorphisms(3):
        assert exhaustive_equivalence(a0, a1, t).kind == DISTINGUISHED
    # beta=1 and beta=2 are mirror images: equivalent under [1] -> [-1] only
    a2 = splitting_graph_of(T, 2)
    plus, minus = allowed_automorphisms(3)
    assert exhaustive_equivalence(a1, a2, minus).kind == EQUIVALENT
    assert distinguish(a1, a2, minus).kind == INCONCLUSIVE


def test_resource_limits(s3_cover):
    tau = identity_automorphism(s3_cover.group)
    with pytest.raises(ResourceLimitError):
        exhaustive_equivalence(s3_cover, s3_cover, tau, SearchLimits(max_total_vertices=5))
    with pytest.raises(ResourceLimitError):
        exhaustive_equivalence(s3_cover, s3_cover, tau, SearchLimits(max_base_vertices=2))


def test_twisted_copies_are_found_equivalent(s3_cover):
    rng = random.Random(17)
    covers = [s3_cover]
    while len(covers) < 8:
        _, _, c = random_splitting_cover(rng, max_m=6, max_vertices=8)
        covers.append(c)
    for c in covers:
        tc = twisted_copy(c, rng)
        assert verify_witness(c, tc.cover, tc.tau, tc.theta, tc.theta_tilde) is None
        assert distinguish(c, tc.cover, tc.tau).kind != DISTINGUISHED
        v = exhaustive_equivalence(c, tc.cover, tc.tau)
        assert v.kind == EQUIVALENT
        # signature invariance under relabeling of ids
        assert nv_signature(c).transformed(tc.tau) == nv_signature(tc.cover)


def test_witness_verifier_rejects_wrong_tau():
    c = splitting_graph_of(ArtalType.parse("3:3:3"), 1)
    rng = random.Random(2)
    tc = twisted_copy(c, rng)
    wrong = [t for t in allowed_automorphisms(3) if t != tc.tau][0]
    assert verify_witness(c, tc.cover, wrong, tc.theta, tc.theta_tilde) is not None


def test_soundness_on_random_pairs():
    """Whenever a witness exists, the discriminator must not separate the pair."""
    rng = random.Random(23)
    for _ in range(12):
        m = rng.choice([2, 3, 4])
        T = ArtalType.parse(str(m) if m >= 3 else "1,2")
        b1, b2 = rng.randrange(T.s), rng.randrange(T.s)
        c1, c2 = splitting_graph_of(T, b1), splitting_graph_of(T, b2)
        for tau in allowed_automorphisms(T.d):
            if exhaustive_equivalence(c1, c2, tau).kind == EQUIVALENT:
                assert distinguish(c1, c2, tau).kind == INCONCLUSIVE


def test_cyclic_group_mismatch():
    tree = Multigraph.build("ab", [("x", "a", "b")])
    c = trivial_cover(tree)
    with pytest.raises(InvalidArgument):
        exhaustive_equivalence(c, c, identity_automorphism(make_cyclic(2)))
