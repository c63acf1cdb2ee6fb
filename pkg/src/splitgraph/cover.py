"""Branched Galois covers of graphs and their net voltage sets.

A :class:`GaloisCover` bundles a graph map ``phi: total -> base`` with a group
action on ``total`` given as one :class:`GraphMap` per group element.  Nothing
is checked at construction beyond the maps being total functions;
:func:`validate_cover` reports on each defining condition separately.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import InvalidArgument
from .fingroup import (ConjugacyClass, FiniteGroup, GroupAutomorphism, Subset,
                       conjugacy_class_of_subset)
from .multigraph import PLUS, GraphMap, Multigraph, Walk, identity_map


@dataclass(frozen=True)
class GaloisCover:
    group: FiniteGroup
    total: Multigraph
    base: Multigraph
    phi: GraphMap
    action: tuple[GraphMap, ...]

    def __post_init__(self):
        if len(self.action) != self.group.order:
            raise InvalidArgument("need one action map per group element")
        for name, gm, src, dst in [("phi", self.phi, self.total, self.base)] + [
                (f"action[{self.group.label(g)}]", a, self.total, self.total)
                for g, a in enumerate(self.action)]:
            for v in src.vertices:
                if not dst.has_vertex(gm.vertex_map.get(v)):
                    raise InvalidArgument(f"{name} has no valid image for vertex {v!r}")
            for e in src.edges:
                if not dst.has_edge(gm.edge_map.get(e.id)):
                    raise InvalidArgument(f"{name} has no valid image for edge {e.id!r}")
        vfib = defaultdict(list)
        for x in self.total.vertices:
            vfib[self.phi.vertex_map[x]].append(x)
        efib = defaultdict(list)
        for e in self.total.edges:
            efib[self.phi.edge_map[e.id]].append(e.id)
        # per base edge: lift adjacency in the plus and minus directions
        plus, minus = {}, {}
        for e in self.base.edges:
            p, m = defaultdict(set), defaultdict(set)
            for eid in efib.get(e.id, ()):
                te = self.total.edge(eid)
                p[te.init].add(te.term)
                m[te.term].add(te.init)
            plus[e.id], minus[e.id] = p, m
        object.__setattr__(self, "_vfib", {v: tuple(vfib.get(v, ())) for v in self.base.vertices})
        object.__setattr__(self, "_efib", {e.id: tuple(efib.get(e.id, ())) for e in self.base.edges})
        object.__setattr__(self, "_adj", (plus, minus))

    @classmethod
    def from_generators(cls, group: FiniteGroup, total: Multigraph, base: Multigraph,
                        phi: GraphMap, generators: Mapping[int, GraphMap]) -> "GaloisCover":
        """Expand generator maps to the whole group by closure under composition.

        The first map reached for each element is kept; inconsistent generator
        data shows up as a homomorphism failure in :func:`validate_cover`.
        """
        for g, gm in generators.items():
            if not 0 <= g < group.order:
                raise InvalidArgument(f"generator index {g} is not a group element")
            if (any(not total.has_vertex(gm.vertex_map.get(v)) for v in total.vertices)
                    or any(not total.has_edge(gm.edge_map.get(e.id)) for e in total.edges)):
                raise InvalidArgument(f"action of {group.label(g)} is not defined on every vertex and edge")
        action: dict[int, GraphMap] = {group.identity: identity_map(total)}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g, gm in generators.items():
                    y = group.mul(x, g)
                    if y not in action:
                        action[y] = action[x].compose(gm)
                        nxt.append(y)
            frontier = nxt
        if len(action) != group.order:
            raise InvalidArgument("action generators do not generate the group")
        return cls(group, total, base, phi, tuple(action[g] for g in range(group.order)))

    def act_vertex(self, g: int, x: str) -> str:
        return self.action[g].vertex_map[x]

    def act_edge(self, g: int, e: str) -> str:
        return self.action[g].edge_map[e]


def fiber_vertices(c: GaloisCover, v: str) -> tuple[str, ...]:
    if not c.base.has_vertex(v):
        raise InvalidArgument(f"unknown base vertex {v!r}")
    return c._vfib[v]


def fiber_edges(c: GaloisCover, e: str) -> tuple[str, ...]:
    if not c.base.has_edge(e):
        raise InvalidArgument(f"unknown base edge {e!r}")
    return c._efib[e]


def stabilizer(c: GaloisCover, x: str) -> Subset:
    return c.group.subset(g for g in range(c.group.order) if c.act_vertex(g, x) == x)


def is_unramified(c: GaloisCover) -> bool:
    return all(len(f) == c.group.order for f in c._vfib.values())


# -- validation ---------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[dict] = None


@dataclass
class CoverReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def failed(self) -> list[Check]:
        return [ch for ch in self.checks if not ch.passed]

    def __getitem__(self, name: str) -> Check:
        for ch in self.checks:
            if ch.name == name:
                return ch
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "checks": [{"name": ch.name, "passed": ch.passed, "witness": ch.witness}
                           for ch in self.checks]}


def validate_cover(c: GaloisCover) -> CoverReport:
    G, T, B = c.group, c.total, c.base
    lab = G.label
    report = CoverReport()

    def add(name, witness=None):
        report.checks.append(Check(name, witness is None, witness))

    # each action(g) must be an automorphism of the total graph, phi a graph map
    w = None
    err = c.phi.check_map(T, B)
    if err:
        w = {"map": "phi", "reason": err}
    else:
        for g in range(G.order):
            err = c.action[g].check_isomorphism(T, T)
            if err:
                w = {"element": lab(g), "reason": err}
                break
    add("graph-maps", w)

    w = None
    ident = identity_map(T)
    if c.action[G.identity] != ident:
        w = {"element": lab(G.identity), "reason": "identity does not act trivially"}
    else:
        for g in range(G.order):
            for h in range(G.order):
                if c.action[G.mul(g, h)] != c.action[g].compose(c.action[h]):
                    w = {"g": lab(g), "h": lab(h), "reason": "action(gh) != action(g) o action(h)"}
                    break
            if w:
                break
    add("homomorphism", w)

    w = None
    for g in range(G.order):
        a = c.action[g]
        bad_v = next((x for x in T.vertices
                      if c.phi.vertex_map[a.vertex_map[x]] != c.phi.vertex_map[x]), None)
        bad_e = next((e.id for e in T.edges
                      if c.phi.edge_map[a.edge_map[e.id]] != c.phi.edge_map[e.id]), None)
        if bad_v is not None or bad_e is not None:
            w = {"element": lab(g), "vertex": bad_v, "edge": bad_e}
            break
    add("fibers-preserved", w)

    w = None
    err = c.phi.preserves_directions(T, B) if not c.phi.check_map(T, B) else None
    if err:
        w = {"map": "phi", "reason": err}
    else:
        for g in range(G.order):
            a = c.action[g]
            for e in T.edges:
                img = T.edge(a.edge_map[e.id])
                if (a.vertex_map[e.init], a.vertex_map[e.term]) != (img.init, img.term):
                    w = {"element": lab(g), "edge": e.id}
                    break
            if w:
                break
    add("directions", w)

    w = None
    missing_v = [v for v in B.vertices if not c._vfib[v]]
    missing_e = [e.id for e in B.edges if not c._efib[e.id]]
    v_orbits = _orbits(T.vertices, lambda g, x: c.act_vertex(g, x), G.order)
    e_orbits = _orbits([e.id for e in T.edges], lambda g, x: c.act_edge(g, x), G.order)
    if missing_v or missing_e:
        w = {"reason": "phi is not surjective", "vertices": missing_v, "edges": missing_e}
    elif len(v_orbits) != len(B.vertices) or len(e_orbits) != len(B.edges):
        w = {"reason": "orbits do not correspond to base elements",
             "vertex_orbits": len(v_orbits), "base_vertices": len(B.vertices),
             "edge_orbits": len(e_orbits), "base_edges": len(B.edges)}
    add("quotient", w)

    w = None
    if B.edges:
        for g in range(G.order):
            if g == G.identity:
                continue
            fixed = next((e.id for e in T.edges if c.act_edge(g, e.id) == e.id), None)
            if fixed is not None:
                w = {"element": lab(g), "edge": fixed}
                break
    add("free-edge-action", w)

    w = None
    for v in B.vertices:
        fib = c._vfib[v]
        if fib and len({c.act_vertex(g, fib[0]) for g in range(G.order)}) != len(fib):
            w = {"vertex": v}
            break
    if w is None:
        for e in B.edges:
            fib = c._efib[e.id]
            if fib and len({c.act_edge(g, fib[0]) for g in range(G.order)}) != len(fib):
                w = {"edge": e.id}
                break
    add("transitivity", w)
    return report


def _orbits(items, act, n):
    seen = set()
    orbits = []
    for x in items:
        if x in seen:
            continue
        orb = {act(g, x) for g in range(n)}
        seen |= orb
        orbits.append(orb)
    return orbits


# -- net voltages -------------------------------------------------------------

def _check_lift(c: GaloisCover, w: Walk, v0: str) -> None:
    if not c.total.has_vertex(v0) or c.phi.vertex_map[v0] != w.start:
        raise InvalidArgument(f"{v0!r} does not lie over the walk's start {w.start!r}")


def frontier_sets(c: GaloisCover, w: Walk, v0: str) -> list[frozenset]:
    """Vertices reachable at each step by lifts of ``w`` starting at ``v0``."""
    _check_lift(c, w, v0)
    plus, minus = c._adj
    cur = frozenset([v0])
    out = [cur]
    for step in w.steps:
        adj = plus[step.edge] if step.sign == PLUS else minus[step.edge]
        cur = frozenset(y for x in cur for y in adj.get(x, ()))
        out.append(cur)
    return out


def net_voltage_set(c: GaloisCover, w: Walk, v0: str) -> Subset:
    if not w.closed:
        raise InvalidArgument("net voltages are defined for closed walks")
    final = frontier_sets(c, w, v0)[-1]
    return c.group.subset(g for g in range(c.group.order) if c.act_vertex(g, v0) in final)


def net_voltage_class(c: GaloisCover, w: Walk) -> ConjugacyClass:
    fib = fiber_vertices(c, w.start)
    return conjugacy_class_of_subset(net_voltage_set(c, w, fib[0]))


def edgeless_equivalent(c1: GaloisCover, c2: GaloisCover,
                        theta_v: Mapping[str, str], tau: GroupAutomorphism) -> bool:
    """Equivalence test for covers of edgeless graphs via point stabilizers."""
    if c1.base.edges or c2.base.edges:
        raise InvalidArgument("edgeless_equivalent needs edgeless base graphs")
    if c1.group != c2.group or tau.group != c1.group:
        raise InvalidArgument("covers and automorphism must share the group")
    if sorted(theta_v) != sorted(c1.base.vertices) or sorted(theta_v.values()) != sorted(c2.base.vertices):
        raise InvalidArgument("theta_v must be a bijection between base vertex sets")
    for v, u in theta_v.items():
        f1, f2 = fiber_vertices(c1, v), fiber_vertices(c2, u)
        if not f1 or not f2:
            return False
        s1 = tau.apply_subset(stabilizer(c1, f1[0]))
        s2 = stabilizer(c2, f2[0])
        if conjugacy_class_of_subset(s1) != conjugacy_class_of_subset(s2):
            return False
    return True
