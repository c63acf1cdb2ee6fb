import random

import pytest

from splitgraph.errors import InvalidArgument
from splitgraph.multigraph import (MINUS, PLUS, Multigraph, Step, Walk, concat_walks,
                                   enumerate_simple_closed_walks, inverse_walk, isomorphisms,
                                   shift_walk)
from splitgraph.samples import random_closed_walk

TRIANGLE = Multigraph.build("abc", [("e_ab", "a", "b"), ("e_bc", "b", "c"), ("e_ca", "c", "a")])


def triangle_walk():
    return Walk(TRIANGLE, "a", (("e_ab", PLUS), ("e_bc", PLUS), ("e_ca", PLUS)))


def test_graph_validation():
    with pytest.raises(InvalidArgument):
        Multigraph.build("ab", [("e", "a", "z")])
    with pytest.raises(InvalidArgument):
        Multigraph.build("ab", [("e", "a", "b"), ("e", "b", "a")])
    with pytest.raises(InvalidArgument):
        Multigraph(("a", "a"))
    g = Multigraph.build("a", [("loop", "a", "a")])
    assert g.degree("a") == 2


def test_walk_validation_and_properties():
    w = triangle_walk()
    assert w.closed and w.simple and w.length == 3
    assert w.vertices == ("a", "b", "c", "a")
    with pytest.raises(InvalidArgument):
        Walk(TRIANGLE, "a", (("e_bc", PLUS),))
    with pytest.raises(InvalidArgument):
        Walk(TRIANGLE, "a", (("e_ab", "*"),))
    bare = Walk(TRIANGLE, "b")
    assert bare.closed and bare.length == 0


def test_inverse_walk():
    g = Multigraph.build(["v0", "v1"], [("e1", "v0", "v1"), ("e2", "v0", "v1")])
    w = Walk(g, "v0", (("e1", PLUS), ("e2", MINUS)))
    assert inverse_walk(w).steps == (Step("e2", PLUS), Step("e1", MINUS))
    bare = Walk(g, "v0")
    assert inverse_walk(bare) == bare
    with pytest.raises(InvalidArgument):
        inverse_walk(Walk(g, "v0", (("e1", PLUS),)))
    rng = random.Random(5)
    for _ in range(50):
        w = random_closed_walk(TRIANGLE, rng.choice("abc"), rng, 8)
        assert inverse_walk(inverse_walk(w)) == w


def test_concat_walks():
    w = triangle_walk()
    assert concat_walks(w, Walk(TRIANGLE, "a")) == w
    half1 = Walk(TRIANGLE, "a", (("e_ab", PLUS),))
    half2 = Walk(TRIANGLE, "b", (("e_bc", PLUS), ("e_ca", PLUS)))
    assert concat_walks(half1, half2) == w
    with pytest.raises(InvalidArgument):
        concat_walks(half2, half2)
    rng = random.Random(9)
    for _ in range(20):
        a, b, c = (random_closed_walk(TRIANGLE, "a", rng, 5) for _ in range(3))
        assert concat_walks(concat_walks(a, b), c) == concat_walks(a, concat_walks(b, c))


def test_shift_walk():
    w = triangle_walk()
    assert shift_walk(w, 0) == w
    assert shift_walk(w, 3) == w
    w2 = shift_walk(w, 2)
    assert w2.start == "c"
    assert [s.edge for s in w2.steps] == ["e_ca", "e_ab", "e_bc"]
    with pytest.raises(InvalidArgument):
        shift_walk(Walk(TRIANGLE, "a", (("e_ab", PLUS),)), 1)


def test_enumerate_simple_closed_walks():
    walks = enumerate_simple_closed_walks(TRIANGLE)
    assert len(walks) == 6 and all(w.length == 3 and w.simple for w in walks)
    tree = Multigraph.build("abcd", [("x", "a", "b"), ("y", "b", "c"), ("z", "b", "d")])
    assert enumerate_simple_closed_walks(tree) == []
    par = Multigraph.build("uv", [("e1", "u", "v"), ("e2", "u", "v")])
    walks = enumerate_simple_closed_walks(par)
    assert len(walks) == 4 and all(w.length == 2 for w in walks)
    loop = Multigraph.build("u", [("l", "u", "u")])
    assert len(enumerate_simple_closed_walks(loop)) == 2


def test_enumeration_closed_under_shift_and_inverse():
    g = Multigraph.build("abcd", [("1", "a", "b"), ("2", "b", "c"), ("3", "c", "a"),
                                  ("4", "c", "d"), ("5", "d", "a"), ("6", "a", "b")])
    walks = set(enumerate_simple_closed_walks(g))
    for w in walks:
        assert w.simple
        assert inverse_walk(w) in walks
        for j in range(w.length):
            assert shift_walk(w, j) in walks


def test_isomorphisms():
    single = Multigraph(("v",))
    assert len(list(isomorphisms(single, single))) == 1
    autos = list(isomorphisms(TRIANGLE, TRIANGLE))
    assert len(autos) == 6
    for a in autos:
        assert a.check_isomorphism(TRIANGLE, TRIANGLE) is None
    path = Multigraph.build("abc", [("x", "a", "b"), ("y", "b", "c")])
    assert list(isomorphisms(TRIANGLE, path)) == []
    par = Multigraph.build("uv", [("e1", "u", "v"), ("e2", "u", "v")])
    assert len(list(isomorphisms(par, par))) == 4  # swap ends x swap edges
    assert len(list(isomorphisms(par, par, {"u": 0, "v": 1}, {"u": 0, "v": 1}))) == 2
