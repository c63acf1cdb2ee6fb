import random

import pytest

from conftest import trivial_cover
from lemma_checks import run_lemma_suite
from splitgraph import io
from splitgraph.cover import (GaloisCover, edgeless_equivalent, fiber_edges, fiber_vertices,
                              frontier_sets, is_unramified, net_voltage_class, net_voltage_set,
                              stabilizer, validate_cover)
from splitgraph.errors import InvalidArgument
from splitgraph.fingroup import identity_automorphism, make_cyclic, make_symmetric
from splitgraph.multigraph import GraphMap, Multigraph, Walk, shift_walk
from splitgraph.samples import random_splitting_cover, s3_triangle_cover, s3_walks

CHECKS = ["graph-maps", "homomorphism", "fibers-preserved", "directions", "quotient",
          "free-edge-action", "transitivity"]


def test_fixture_matches_coset_construction(s3_cover):
    assert s3_cover == s3_triangle_cover()


def test_s3_fixture_validates(s3_cover):
    report = validate_cover(s3_cover)
    assert report.ok
    assert [ch.name for ch in report.checks] == CHECKS


def test_trivial_cover_validates():
    g = Multigraph.build("abc", [("x", "a", "b"), ("y", "b", "c")])
    assert validate_cover(trivial_cover(g)).ok


def test_corrupted_edge_action_is_reported(s3_doc):
    s3_doc["action"]["(1 2)"]["edges"]["e_ab.1"] = "e_ab.1"
    report = validate_cover(io.cover_from_json(s3_doc))
    assert not report.ok
    free = report["free-edge-action"]
    assert not free.passed
    assert set(free.witness) == {"element", "edge"}
    assert free.witness["element"] != "id"


def test_missing_generator_rejected(s3_doc):
    del s3_doc["action"]["(1 3)"]
    with pytest.raises(InvalidArgument):
        io.cover_from_json(s3_doc)


def test_ramified_action_fixing_edges_fails_freeness():
    # Z2 swapping the ends of a single edge: it fixes the edge
    base = Multigraph.build(["p"], [("l", "p", "p")])
    total = Multigraph.build(["p0", "p1"], [("l0", "p0", "p1")])
    phi = GraphMap({"p0": "p", "p1": "p"}, {"l0": "l"})
    swap = GraphMap({"p0": "p1", "p1": "p0"}, {"l0": "l0"})
    c = GaloisCover.from_generators(make_cyclic(2), total, base, phi, {1: swap})
    report = validate_cover(c)
    assert not report["free-edge-action"].passed
    assert not report["directions"].passed


def test_fibers(s3_cover):
    assert set(fiber_vertices(s3_cover, "a")) == {"a1", "a2", "a3"}
    assert set(fiber_vertices(s3_cover, "c")) == {f"c{i}" for i in range(1, 7)}
    assert len(fiber_edges(s3_cover, "e_ab")) == 6
    with pytest.raises(InvalidArgument):
        fiber_vertices(s3_cover, "z")
    g = Multigraph.build("ab", [("x", "a", "b")])
    assert fiber_vertices(trivial_cover(g), "a") == ("a",)
    assert not is_unramified(s3_cover)
    assert is_unramified(trivial_cover(g))


def test_frontiers_and_net_voltages(s3_cover):
    gamma, gamma2 = s3_walks(s3_cover)
    assert gamma2 == shift_walk(gamma, 2)
    assert frontier_sets(s3_cover, gamma, "a1")[-1] == {"a1", "a2", "a3"}
    assert frontier_sets(s3_cover, gamma2, "c1")[-1] == {"c1", "c2", "c3", "c5"}
    fr = frontier_sets(s3_cover, gamma, "a1")
    for i, f in enumerate(fr):
        assert f <= set(fiber_vertices(s3_cover, gamma.vertices[i]))
    assert net_voltage_set(s3_cover, gamma, "a1") == s3_cover.group.full()
    assert set(net_voltage_set(s3_cover, gamma2, "c1").labels()) == {"id", "(1 3)", "(1 2)", "(1 3 2)"}
    assert net_voltage_class(s3_cover, gamma) != net_voltage_class(s3_cover, gamma2)
    with pytest.raises(InvalidArgument):
        frontier_sets(s3_cover, gamma, "c1")


def test_length_zero_walk_gives_stabilizer(s3_cover):
    w = Walk(s3_cover.base, "a")
    assert frontier_sets(s3_cover, w, "a1") == [frozenset({"a1"})]
    nv = net_voltage_set(s3_cover, w, "a1")
    assert nv == stabilizer(s3_cover, "a1")
    assert set(nv.labels()) == {"id", "(1 2)"}


def test_trivial_cover_net_voltage():
    g = Multigraph.build("ab", [("x", "a", "b"), ("y", "b", "a")])
    c = trivial_cover(g)
    w = Walk(g, "a", (("x", "+"), ("y", "+")))
    assert net_voltage_set(c, w, "a").labels() == ["[0]"]


def test_class_independent_of_lift():
    rng = random.Random(11)
    for _ in range(15):
        _, _, c = random_splitting_cover(rng)
        for w in [w for w in _some_walks(c, rng)]:
            sets = {net_voltage_set(c, w, x) for x in fiber_vertices(c, w.start)}
            assert len(sets) == 1  # abelian: conjugates coincide
            assert net_voltage_class(c, w).representative() in sets


def _some_walks(c, rng):
    from splitgraph.samples import random_closed_walk
    return [random_closed_walk(c.base, v, rng, 6) for v in c.base.vertices]


def test_lemmas_on_s3_and_random_covers(s3_cover):
    rng = random.Random(3)
    run_lemma_suite(s3_cover, rng, per_vertex=3)
    for _ in range(10):
        _, _, c = random_splitting_cover(rng)
        counts = run_lemma_suite(c, rng)
        assert counts["shift"] > 0


def test_nonabelian_shift_counterexample(s3_cover):
    gamma, _ = s3_walks(s3_cover)
    classes = {net_voltage_class(s3_cover, shift_walk(gamma, j)) for j in range(3)}
    assert len(classes) > 1


def _edgeless(G, stab_gens):
    """Edgeless cover with one base vertex whose fiber is G / <stab_gens>."""
    H = set(G.generated(stab_gens))
    cosets = []
    for g in range(G.order):
        cs = frozenset(G.mul(g, h) for h in H)
        if cs not in cosets:
            cosets.append(cs)
    names = {cs: f"x{i}" for i, cs in enumerate(cosets)}

    def name_of(g):
        return names[frozenset(G.mul(g, h) for h in H)]

    total = Multigraph(tuple(names.values()))
    base = Multigraph(("v",))
    phi = GraphMap({x: "v" for x in names.values()}, {})
    action = tuple(GraphMap({name_of(g): name_of(G.mul(t, g)) for g in range(G.order)}, {})
                   for t in range(G.order))
    return GaloisCover(G, total, base, phi, action)


def test_edgeless_equivalent():
    s3 = make_symmetric(3)
    c12 = _edgeless(s3, [s3.index("(1 2)")])
    c13 = _edgeless(s3, [s3.index("(1 3)")])
    assert validate_cover(c12).ok
    tau = identity_automorphism(s3)
    assert edgeless_equivalent(c12, c12, {"v": "v"}, tau)
    assert edgeless_equivalent(c12, c13, {"v": "v"}, tau)
    z4 = make_cyclic(4)
    full = _edgeless(z4, [])
    half = _edgeless(z4, [2])
    assert len(full.total.vertices) == 4 and len(half.total.vertices) == 2
    assert not edgeless_equivalent(full, half, {"v": "v"}, identity_automorphism(z4))
    with pytest.raises(InvalidArgument):
        edgeless_equivalent(s3_triangle_cover(), s3_triangle_cover(), {}, tau)
