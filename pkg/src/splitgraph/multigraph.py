"""Finite multigraphs with a chosen plus direction on every edge.

Loops and parallel edges are allowed.  A walk stores its start vertex and a
list of directed steps ``(edge, sign)``; the intermediate vertices are derived
from the graph.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple, Optional, Sequence

from .errors import InvalidArgument

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class Edge:
    id: str
    init: str
    term: str

    @property
    def is_loop(self) -> bool:
        return self.init == self.term


class Step(NamedTuple):
    """A directed edge ``e^+`` or ``e^-``."""

    edge: str
    sign: str

    def flipped(self) -> "Step":
        return Step(self.edge, MINUS if self.sign == PLUS else PLUS)


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidArgument("vertex ids must be unique")
        vset = set(self.vertices)
        emap = {}
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.id in emap:
                raise InvalidArgument(f"duplicate edge id {e.id!r}")
            if e.init not in vset or e.term not in vset:
                raise InvalidArgument(f"edge {e.id!r} has an undeclared endpoint")
            emap[e.id] = e
            out[e.init].append((Step(e.id, PLUS), e.term))
            out[e.term].append((Step(e.id, MINUS), e.init))
        object.__setattr__(self, "_edges", emap)
        object.__setattr__(self, "_out", {v: tuple(s) for v, s in out.items()})

    @classmethod
    def build(cls, vertices, edges) -> "Multigraph":
        """Convenience constructor taking ``(id, init, term)`` triples."""
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges))

    def edge(self, eid: str) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise InvalidArgument(f"unknown edge {eid!r}") from None

    def has_vertex(self, v) -> bool:
        return v in self._out

    def has_edge(self, eid) -> bool:
        return eid in self._edges

    def step_ends(self, step: Step) -> tuple[str, str]:
        e = self.edge(step.edge)
        return (e.init, e.term) if step.sign == PLUS else (e.term, e.init)

    def out_steps(self, v: str) -> tuple[tuple[Step, str], ...]:
        return self._out[v]

    def degree(self, v: str) -> int:
        return len(self._out[v])

    def endpoints(self, eid: str) -> tuple[str, str]:
        """Endpoint multiset of an edge as a sorted pair."""
        e = self.edge(eid)
        return tuple(sorted((e.init, e.term)))


@dataclass(frozen=True)
class Walk:
    graph: Multigraph = field(compare=False, repr=False)
    start: str
    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        g = self.graph
        if not g.has_vertex(self.start):
            raise InvalidArgument(f"walk starts at unknown vertex {self.start!r}")
        steps = tuple(Step(*s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        v = self.start
        verts = [v]
        for i, s in enumerate(steps):
            if s.sign not in (PLUS, MINUS):
                raise InvalidArgument(f"step sign must be '+' or '-', got {s.sign!r}")
            a, b = g.step_ends(s)
            if a != v:
                raise InvalidArgument(f"step {i + 1} ({s.edge}{s.sign}) does not start at {v!r}")
            v = b
            verts.append(v)
        object.__setattr__(self, "_verts", tuple(verts))

    @property
    def length(self) -> int:
        return len(self.steps)

    def __len__(self):
        return len(self.steps)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._verts

    @property
    def terminal(self) -> str:
        return self._verts[-1]

    @property
    def closed(self) -> bool:
        return self._verts[-1] == self.start

    @property
    def simple(self) -> bool:
        inner = self._verts[:-1]
        return self.closed and len(set(inner)) == len(inner)


def _require_closed(w: Walk) -> None:
    if not w.closed:
        raise InvalidArgument("operation needs a closed walk")


def inverse_walk(w: Walk) -> Walk:
    _require_closed(w)
    return Walk(w.graph, w.start, tuple(s.flipped() for s in reversed(w.steps)))


def concat_walks(w1: Walk, w2: Walk) -> Walk:
    if w1.terminal != w2.start:
        raise InvalidArgument(f"cannot concatenate: {w1.terminal!r} != {w2.start!r}")
    return Walk(w1.graph, w1.start, w1.steps + w2.steps)


def shift_walk(w: Walk, j: int) -> Walk:
    """The rotation of a closed walk starting at its ``j``-th vertex."""
    _require_closed(w)
    if j < 0:
        raise InvalidArgument("shift must be nonnegative")
    n = w.length
    if n == 0 or j % n == 0:
        return w
    j %= n
    return Walk(w.graph, w.vertices[j], w.steps[j:] + w.steps[:j])


def walk_segment(w: Walk, i: int, j: int) -> Walk:
    """The sub-walk between the ``i``-th and ``j``-th vertices."""
    return Walk(w.graph, w.vertices[i], w.steps[i:j])


def enumerate_simple_closed_walks(g: Multigraph) -> list[Walk]:
    """All simple closed walks of positive length.

    Rotations and reversals are listed separately.  No edge is used twice, so
    going out and back along one edge is not a closed walk here.
    """
    found: list[Walk] = []
    for start in g.vertices:
        path: list[Step] = []
        used: set[str] = set()
        visited = {start}

        def extend(v):
            for step, nxt in g.out_steps(v):
                if step.edge in used:
                    continue
                if nxt == start:
                    found.append(Walk(g, start, tuple(path) + (step,)))
                elif nxt not in visited:
                    used.add(step.edge)
                    visited.add(nxt)
                    path.append(step)
                    extend(nxt)
                    path.pop()
                    visited.discard(nxt)
                    used.discard(step.edge)

        extend(start)
    return found


@dataclass(frozen=True)
class GraphMap:
    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def check_map(self, src: Multigraph, dst: Multigraph) -> Optional[str]:
        """Return a description of the first violated condition, or None."""
        for v in src.vertices:
            if v not in self.vertex_map or not dst.has_vertex(self.vertex_map[v]):
                return f"vertex {v!r} has no valid image"
        for e in src.edges:
            f = self.edge_map.get(e.id)
            if f is None or not dst.has_edge(f):
                return f"edge {e.id!r} has no valid image"
            img = tuple(sorted((self.vertex_map[e.init], self.vertex_map[e.term])))
            if img != dst.endpoints(f):
                return f"edge {e.id!r} endpoints are not mapped to those of {f!r}"
        return None

    def check_isomorphism(self, src: Multigraph, dst: Multigraph) -> Optional[str]:
        err = self.check_map(src, dst)
        if err:
            return err
        if len(src.vertices) != len(dst.vertices) or len(set(self.vertex_map[v] for v in src.vertices)) != len(dst.vertices):
            return "vertex map is not bijective"
        if len(src.edges) != len(dst.edges) or len(set(self.edge_map[e.id] for e in src.edges)) != len(dst.edges):
            return "edge map is not bijective"
        return None

    def compose(self, other: "GraphMap") -> "GraphMap":
        """``self o other``."""
        return GraphMap({v: self.vertex_map[w] for v, w in other.vertex_map.items()},
                        {e: self.edge_map[f] for e, f in other.edge_map.items()})

    def inverse(self) -> "GraphMap":
        return GraphMap({w: v for v, w in self.vertex_map.items()},
                        {f: e for e, f in self.edge_map.items()})

    def preserves_directions(self, src: Multigraph, dst: Multigraph) -> Optional[str]:
        for e in src.edges:
            f = dst.edge(self.edge_map[e.id])
            if self.vertex_map[e.init] != f.init or self.vertex_map[e.term] != f.term:
                return f"edge {e.id!r} is not mapped plus-direction to plus-direction"
        return None

    def apply_walk(self, w: Walk, dst: Multigraph) -> Walk:
        steps = []
        verts = w.vertices
        for i, s in enumerate(w.steps):
            f = dst.edge(self.edge_map[s.edge])
            a, b = self.vertex_map[verts[i]], self.vertex_map[verts[i + 1]]
            if f.is_loop:
                sign = s.sign
            elif (f.init, f.term) == (a, b):
                sign = PLUS
            elif (f.term, f.init) == (a, b):
                sign = MINUS
            else:
                raise InvalidArgument(f"edge {s.edge!r} is not mapped compatibly with its endpoints")
            steps.append(Step(f.id, sign))
        return Walk(dst, self.vertex_map[w.start], tuple(steps))


def identity_map(g: Multigraph) -> GraphMap:
    return GraphMap({v: v for v in g.vertices}, {e.id: e.id for e in g.edges})


def pair_edges(g: Multigraph) -> dict[tuple[str, str], list[str]]:
    """Edge ids grouped by their unordered pair of endpoints."""
    pairs = defaultdict(list)
    for e in g.edges:
        pairs[tuple(sorted((e.init, e.term)))].append(e.id)
    return pairs


def _profile(g: Multigraph):
    loops = Counter(e.init for e in g.edges if e.is_loop)
    return {v: (g.degree(v), loops[v]) for v in g.vertices}


def vertex_bijections(g1: Multigraph, g2: Multigraph,
                      classes1: Optional[Mapping[str, object]] = None,
                      classes2: Optional[Mapping[str, object]] = None) -> Iterator[dict[str, str]]:
    """Vertex bijections that preserve edge multiplicities (and classes, if given).

    Each one extends to ``prod(k!)`` isomorphisms, k running over the sizes of
    the parallel edge bundles.  Vertices are matched by backtracking, highest
    degree first, then by adjacency to vertices already placed.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return
    prof1, prof2 = _profile(g1), _profile(g2)
    key1 = {v: (prof1[v], None if classes1 is None else classes1[v]) for v in g1.vertices}
    key2 = {v: (prof2[v], None if classes2 is None else classes2[v]) for v in g2.vertices}
    if Counter(key1.values()) != Counter(key2.values()):
        return
    pairs1, pairs2 = pair_edges(g1), pair_edges(g2)

    def mult(pairs, u, v):
        return len(pairs.get(tuple(sorted((u, v))), ()))

    neighbours1 = defaultdict(set)
    for e in g1.edges:
        neighbours1[e.init].add(e.term)
        neighbours1[e.term].add(e.init)

    order: list[str] = []
    remaining = sorted(g1.vertices, key=lambda v: (-prof1[v][0], g1.vertices.index(v)))
    placed: set[str] = set()
    while remaining:
        best = max(remaining, key=lambda v: (len(neighbours1[v] & placed), -remaining.index(v)))
        order.append(best)
        placed.add(best)
        remaining.remove(best)

    vmap: dict[str, str] = {}
    used: set[str] = set()

    def assign(k):
        if k == len(order):
            yield dict(vmap)
            return
        v = order[k]
        for w in g2.vertices:
            if w in used or key2[w] != key1[v]:
                continue
            if any(mult(pairs1, v, u) != mult(pairs2, w, vmap[u]) for u in order[:k]):
                continue
            vmap[v] = w
            used.add(w)
            yield from assign(k + 1)
            used.discard(w)
            del vmap[v]

    yield from assign(0)


def isomorphisms(g1: Multigraph, g2: Multigraph,
                 classes1: Optional[Mapping[str, object]] = None,
                 classes2: Optional[Mapping[str, object]] = None) -> Iterator[GraphMap]:
    """Every isomorphism ``g1 -> g2``, optionally preserving vertex classes.

    Edges run over every permutation of each parallel bundle.
    """
    pairs1, pairs2 = pair_edges(g1), pair_edges(g2)
    for vmap in vertex_bijections(g1, g2, classes1, classes2):
        choices = []
        for (u, v), es in sorted(pairs1.items()):
            target = pairs2.get(tuple(sorted((vmap[u], vmap[v]))), [])
            choices.append([(es, perm) for perm in itertools.permutations(target)])
        for combo in itertools.product(*choices):
            emap = {}
            for es, perm in combo:
                emap.update(zip(es, perm))
            yield GraphMap(dict(vmap), emap)
