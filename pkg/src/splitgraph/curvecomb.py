"""Combinatorics of plane-curve arrangements and their cyclic splitting graphs.

The incidence graph has one vertex per singular point and per irreducible
component, and one edge per local branch (plus direction: point to
component).  Over a cyclic group Z_m, the splitting graph is determined by a
splitting number per component and an offset per branch: the lift of branch
``b`` at ``P`` with offset ``o`` joins ``P@j`` to ``C@((j - o) mod s_C)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cover import GaloisCover, fiber_vertices
from .errors import InvalidArgument
from .fingroup import make_cyclic
from .multigraph import Edge, GraphMap, Multigraph


@dataclass(frozen=True)
class Component:
    id: str
    degree: int = 1


@dataclass(frozen=True)
class SingularPoint:
    id: str
    branches: tuple[str, ...]  # component id of each local branch
    marked: bool = False


@dataclass(frozen=True)
class CurveCombinatorics:
    components: tuple[Component, ...]
    points: tuple[SingularPoint, ...] = ()

    def __post_init__(self):
        comp_ids = [c.id for c in self.components]
        point_ids = [p.id for p in self.points]
        ids = comp_ids + point_ids
        if len(set(ids)) != len(ids):
            raise InvalidArgument("component and point ids must be distinct")
        for c in self.components:
            if not isinstance(c.degree, int) or c.degree < 1:
                raise InvalidArgument(f"component {c.id!r} needs a positive degree")
        known = set(comp_ids)
        for p in self.points:
            for b in p.branches:
                if b not in known:
                    raise InvalidArgument(f"point {p.id!r} has a branch on unknown component {b!r}")
            if len(p.branches) < 2 and not p.marked:
                raise InvalidArgument(f"point {p.id!r} has fewer than 2 branches and is not marked")

    @classmethod
    def build(cls, components: Mapping[str, int], points: Mapping[str, Sequence[str]]):
        return cls(tuple(Component(c, d) for c, d in components.items()),
                   tuple(SingularPoint(p, tuple(bs)) for p, bs in points.items()))

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise InvalidArgument(f"unknown component {cid!r}")


def branch_edge_id(point: str, index: int) -> str:
    return f"{point}.{index}"


@dataclass(frozen=True)
class IncidenceGraph:
    curve: CurveCombinatorics
    graph: Multigraph
    partition: Mapping[str, int] = field(compare=False)  # 0 for points, 1 for components


def incidence_graph(c: CurveCombinatorics) -> IncidenceGraph:
    vertices = tuple(p.id for p in c.points) + tuple(comp.id for comp in c.components)
    edges = tuple(Edge(branch_edge_id(p.id, i), p.id, comp)
                  for p in c.points for i, comp in enumerate(p.branches))
    partition = {p.id: 0 for p in c.points}
    partition.update({comp.id: 1 for comp in c.components})
    return IncidenceGraph(c, Multigraph(vertices, edges), partition)


@dataclass(frozen=True)
class CyclicSplittingData:
    m: int
    s: Mapping[str, int]
    offsets: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidArgument("m must be a positive integer")
        for cid, sc in self.s.items():
            if not isinstance(sc, int) or sc < 1 or self.m % sc:
                raise InvalidArgument(f"splitting number of {cid!r} must divide m={self.m}, got {sc}")
        object.__setattr__(self, "s", dict(self.s))
        object.__setattr__(self, "offsets", {p: tuple(int(o) for o in offs)
                                             for p, offs in self.offsets.items()})

    def check_against(self, c: CurveCombinatorics) -> None:
        comps = {comp.id for comp in c.components}
        if set(self.s) != comps:
            raise InvalidArgument("splitting numbers must be given for exactly the curve's components")
        pts = {p.id: p for p in c.points}
        if set(self.offsets) != set(pts):
            raise InvalidArgument("offsets must be given for exactly the curve's points")
        for pid, offs in self.offsets.items():
            if len(offs) != len(pts[pid].branches):
                raise InvalidArgument(f"point {pid!r} has {len(pts[pid].branches)} branches "
                                      f"but {len(offs)} offsets")

    def reduced_offset(self, c: CurveCombinatorics, point: str, index: int) -> int:
        p = next(p for p in c.points if p.id == point)
        return self.offsets[point][index] % self.s[p.branches[index]]


def trivial_splitting_data(c: CurveCombinatorics, m: int) -> CyclicSplittingData:
    return CyclicSplittingData(m, {comp.id: 1 for comp in c.components},
                               {p.id: (0,) * len(p.branches) for p in c.points})


def _lift_id(x: str, j: int) -> str:
    return f"{x}@{j}"


def build_splitting_cover(g: IncidenceGraph, data: CyclicSplittingData) -> GaloisCover:
    c = g.curve
    data.check_against(c)
    m = data.m
    G = make_cyclic(m)
    vertices = []
    for p in c.points:
        vertices += [_lift_id(p.id, j) for j in range(m)]
    for comp in c.components:
        vertices += [_lift_id(comp.id, k) for k in range(data.s[comp.id])]
    edges = []
    for p in c.points:
        for i, comp in enumerate(p.branches):
            o = data.reduced_offset(c, p.id, i)
            sc = data.s[comp]
            eid = branch_edge_id(p.id, i)
            edges += [Edge(_lift_id(eid, j), _lift_id(p.id, j), _lift_id(comp, (j - o) % sc))
                      for j in range(m)]
    total = Multigraph(tuple(vertices), tuple(edges))

    phi_v = {_lift_id(p.id, j): p.id for p in c.points for j in range(m)}
    phi_v.update({_lift_id(comp.id, k): comp.id
                  for comp in c.components for k in range(data.s[comp.id])})
    phi_e = {e.id: e.id.rsplit("@", 1)[0] for e in edges}

    action = []
    for t in range(m):
        vm = {_lift_id(p.id, j): _lift_id(p.id, (j + t) % m) for p in c.points for j in range(m)}
        for comp in c.components:
            sc = data.s[comp.id]
            vm.update({_lift_id(comp.id, k): _lift_id(comp.id, (k + t) % sc) for k in range(sc)})
        em = {}
        for e in edges:
            base, j = e.id.rsplit("@", 1)
            em[e.id] = _lift_id(base, (int(j) + t) % m)
        action.append(GraphMap(vm, em))
    return GaloisCover(G, total, g.graph, GraphMap(phi_v, phi_e), tuple(action))


def splitting_number(cover: GaloisCover, component: str) -> int:
    return len(fiber_vertices(cover, component))


def connected_number(cover: GaloisCover) -> int:
    return len(connected_components(cover.total))


def connected_components(g: Multigraph) -> list[set]:
    adj = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.init].append(e.term)
        adj[e.term].append(e.init)
    seen: set = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append(comp)
    return comps
