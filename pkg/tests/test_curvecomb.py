import random

import pytest

from conftest import load_fixture
from splitgraph import io
from splitgraph.artal import hexagon_curve
from splitgraph.cover import fiber_vertices, net_voltage_class, validate_cover
from splitgraph.curvecomb import (CurveCombinatorics, CyclicSplittingData, build_splitting_cover,
                                  connected_number, incidence_graph, splitting_number,
                                  trivial_splitting_data)
from splitgraph.errors import InvalidArgument
from splitgraph.multigraph import isomorphisms
from splitgraph.samples import random_closed_walk, random_splitting_cover


def fig(name):
    doc = load_fixture(f"{name}.json")
    curve = io.curve_from_json(doc["curve"])
    return curve, build_splitting_cover(incidence_graph(curve), io.splitting_from_json(doc["splitting"]))


def test_incidence_graph_examples():
    g = incidence_graph(hexagon_curve())
    assert len(g.graph.vertices) == 6 and len(g.graph.edges) == 6
    assert all(g.graph.degree(v) == 2 for v in g.graph.vertices)
    assert g.partition["P1"] == 0 and g.partition["L1"] == 1
    e = g.graph.edge("P1.0")
    assert (e.init, e.term) == ("P1", "L1")
    lone = incidence_graph(CurveCombinatorics.build({"C": 4}, {}))
    assert lone.graph.vertices == ("C",) and lone.graph.edges == ()
    curve, _ = fig("fig3")
    g = incidence_graph(curve)
    assert len(g.graph.vertices) == 7 and len(g.graph.edges) == 12
    assert len({g.graph.endpoints(e.id) for e in g.graph.edges}) == 6  # parallel pairs


def test_curve_validation():
    with pytest.raises(InvalidArgument):
        CurveCombinatorics.build({"C": 2}, {"P": ["C", "D"]})
    with pytest.raises(InvalidArgument):
        CurveCombinatorics.build({"C": 2}, {"P": ["C"]})
    with pytest.raises(InvalidArgument):
        CurveCombinatorics.build({"C": 2}, {"C": ["C", "C"]})


def test_splitting_data_validation():
    curve = hexagon_curve()
    g = incidence_graph(curve)
    with pytest.raises(InvalidArgument):
        CyclicSplittingData(6, {"L1": 4}, {})
    bad = CyclicSplittingData(3, {"L1": 3, "L2": 3, "L3": 3}, {"P1": (0,), "P2": (0, 0), "P3": (0, 0)})
    with pytest.raises(InvalidArgument):
        build_splitting_cover(g, bad)
    missing = CyclicSplittingData(3, {"L1": 3, "L2": 3}, {"P1": (0, 0), "P2": (0, 0), "P3": (0, 0)})
    with pytest.raises(InvalidArgument):
        build_splitting_cover(g, missing)


def test_trivial_data_gives_copy_of_base():
    curve = hexagon_curve()
    g = incidence_graph(curve)
    c = build_splitting_cover(g, trivial_splitting_data(curve, 1))
    assert validate_cover(c).ok
    assert next(isomorphisms(c.total, c.base), None) is not None
    c4 = build_splitting_cover(g, trivial_splitting_data(curve, 4))
    assert validate_cover(c4).ok
    assert len(fiber_vertices(c4, "P1")) == 4 and splitting_number(c4, "L1") == 1


def test_figure_covers():
    curve2, c2 = fig("fig2")
    curve3, c3 = fig("fig3")
    assert validate_cover(c2).ok and validate_cover(c3).ok
    assert splitting_number(c2, "C1") == 2 and splitting_number(c3, "C2") == 1
    comp_vertices = [x for x in c2.total.vertices if c2.phi.vertex_map[x] == "C1"]
    assert len(comp_vertices) == 2
    assert len(c2.total.vertices) == 14
    for p in range(1, 7):
        for j in range(2):
            nbrs = sorted(e.term for e in c2.total.edges if e.init == f"P{p}@{j}")
            assert nbrs == ["C1@0", "C1@1"]
    assert connected_number(c2) == 1 and connected_number(c3) == 1
    with pytest.raises(InvalidArgument):
        splitting_number(c2, "C9")


def test_connected_number_of_disconnected_base():
    curve = CurveCombinatorics.build({"A": 1, "B": 1}, {})
    c = build_splitting_cover(incidence_graph(curve), trivial_splitting_data(curve, 1))
    assert connected_number(c) == 2


def test_counts_and_validity_on_random_data():
    rng = random.Random(8)
    for _ in range(40):
        curve, data, c = random_splitting_cover(rng)
        assert validate_cover(c).ok
        assert len(c.total.edges) == data.m * len(c.base.edges)
        for p in curve.points:
            assert len(fiber_vertices(c, p.id)) == data.m
        for comp in curve.components:
            assert splitting_number(c, comp.id) == data.s[comp.id]


def test_regauging_offsets_keeps_classes():
    rng = random.Random(21)
    for _ in range(25):
        curve, data, c = random_splitting_cover(rng)
        shift = {cid: rng.randrange(s) for cid, s in data.s.items()}
        offsets = {p.id: tuple(o + shift[b] for o, b in zip(data.offsets[p.id], p.branches))
                   for p in curve.points}
        c2 = build_splitting_cover(incidence_graph(curve), CyclicSplittingData(data.m, data.s, offsets))
        assert next(isomorphisms(c.total, c2.total), None) is not None
        for v in c.base.vertices:
            w = random_closed_walk(c.base, v, rng, 6)
            assert net_voltage_class(c, w) == net_voltage_class(c2, w)
