"""Example covers and seeded random generators used by tests and the CLI."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .cover import GaloisCover
from .curvecomb import (CurveCombinatorics, CyclicSplittingData, build_splitting_cover,
                        incidence_graph)
from .fingroup import (GroupAutomorphism, all_automorphisms, inner_automorphism,
                       make_symmetric)
from .multigraph import Edge, GraphMap, Multigraph, Step, Walk, PLUS, MINUS


# -- the S3 cover of a triangle ------------------------------------------------

def s3_triangle_cover() -> GaloisCover:
    """S3 acting on cosets of <(1 2)> over a, cosets of <(1 3)> over b, itself over c."""
    G = make_symmetric(3)
    idx = G.index
    h1 = (G.identity, idx("(1 2)"))
    h2 = (G.identity, idx("(1 3)"))
    c_order = [idx(x) for x in ("id", "(1 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(2 3)")]
    reps_a = [idx(x) for x in ("id", "(1 3)", "(2 3)")]
    reps_b = [idx(x) for x in ("id", "(1 2)", "(2 3)")]

    def coset(g, H):
        return frozenset(G.mul(g, h) for h in H)

    a_name = {coset(g, h1): f"a{i + 1}" for i, g in enumerate(reps_a)}
    b_name = {coset(g, h2): f"b{i + 1}" for i, g in enumerate(reps_b)}
    c_name = {g: f"c{i + 1}" for i, g in enumerate(c_order)}

    def a_of(g):
        return a_name[coset(g, h1)]

    def b_of(g):
        return b_name[coset(g, h2)]

    base = Multigraph.build("abc", [("e_ab", "a", "b"), ("e_bc", "b", "c"), ("e_ca", "c", "a")])
    vertices = tuple(sorted(a_name.values())) + tuple(sorted(b_name.values())) + \
        tuple(c_name[g] for g in c_order)
    edges = []
    for g in c_order:
        k = c_name[g][1:]
        edges += [Edge(f"e_ab.{k}", a_of(g), b_of(g)), Edge(f"e_bc.{k}", b_of(g), c_name[g]),
                  Edge(f"e_ca.{k}", c_name[g], a_of(g))]
    total = Multigraph(vertices, tuple(edges))
    phi = GraphMap({v: v[0] for v in vertices}, {e.id: e.id.split(".")[0] for e in edges})
    action = []
    for h in range(G.order):
        vm = {}
        for g in c_order:
            vm[a_of(g)] = a_of(G.mul(h, g))
            vm[b_of(g)] = b_of(G.mul(h, g))
            vm[c_name[g]] = c_name[G.mul(h, g)]
        em = {}
        for g in c_order:
            k, k2 = c_name[g][1:], c_name[G.mul(h, g)][1:]
            for base_e in ("e_ab", "e_bc", "e_ca"):
                em[f"{base_e}.{k}"] = f"{base_e}.{k2}"
        action.append(GraphMap(vm, em))
    return GaloisCover(G, total, base, phi, tuple(action))


def s3_walks(c: GaloisCover) -> tuple[Walk, Walk]:
    """The triangle walk from a, and its rotation starting at c."""
    g = c.base
    gamma = Walk(g, "a", (Step("e_ab", PLUS), Step("e_bc", PLUS), Step("e_ca", PLUS)))
    gamma2 = Walk(g, "c", (Step("e_ca", PLUS), Step("e_ab", PLUS), Step("e_bc", PLUS)))
    return gamma, gamma2


# -- random cyclic splitting instances ----------------------------------------

def _divisors(m):
    return [k for k in range(1, m + 1) if m % k == 0]


def random_splitting_cover(rng: random.Random, max_m: int = 12, max_vertices: int = 12):
    """A random Z_m splitting cover of a random incidence graph.

    Returns ``(curve, data, cover)``.
    """
    m = rng.randint(1, max_m)
    n_comp = rng.randint(1, 3)
    n_pts = rng.randint(1, min(6, max_vertices - n_comp))
    comps = {f"C{i + 1}": rng.randint(1, 6) for i in range(n_comp)}
    names = list(comps)
    points = {f"P{i + 1}": [rng.choice(names) for _ in range(rng.randint(2, 3))]
              for i in range(n_pts)}
    curve = CurveCombinatorics.build(comps, points)
    s = {cid: rng.choice(_divisors(m)) for cid in names}
    offsets = {p: tuple(rng.randrange(s[b]) for b in bs) for p, bs in points.items()}
    data = CyclicSplittingData(m, s, offsets)
    return curve, data, build_splitting_cover(incidence_graph(curve), data)


@dataclass
class CycleInstance:
    m: int
    s_list: list[int]
    alpha_list: list[int]
    cover: GaloisCover
    walk: Walk


def cycle_instance(m: int, s_list, alpha_list, extra_points: int = 0,
                   rng: random.Random = None) -> CycleInstance:
    """Points P1..Pn and components C1..Cn joined in a cycle P1 C1 P2 C2 ... Pn Cn P1.

    The branch of P_i on C_i has offset 0 and the branch of P_{i+1} on C_i has
    offset alpha_i, so the walk around the cycle picks up alpha_i on C_i.
    Optional extra points hang random branches off the cycle components.
    """
    n = len(s_list)
    comps = {f"C{i + 1}": 1 for i in range(n)}
    points = {}
    offsets = {}
    for i in range(n):
        prev = (i - 1) % n
        points[f"P{i + 1}"] = [f"C{i + 1}", f"C{prev + 1}"]
        offsets[f"P{i + 1}"] = (0, alpha_list[prev])
    for k in range(extra_points):
        bs = [f"C{rng.randrange(n) + 1}" for _ in range(2)]
        points[f"Q{k + 1}"] = bs
        offsets[f"Q{k + 1}"] = tuple(rng.randrange(s_list[int(b[1:]) - 1]) for b in bs)
    curve = CurveCombinatorics.build(comps, points)
    data = CyclicSplittingData(m, {f"C{i + 1}": s_list[i] for i in range(n)}, offsets)
    cover = build_splitting_cover(incidence_graph(curve), data)
    steps = []
    for i in range(n):
        nxt = (i + 1) % n
        steps += [Step(f"P{i + 1}.0", PLUS), Step(f"P{nxt + 1}.1", MINUS)]
    return CycleInstance(m, list(s_list), list(alpha_list), cover, Walk(cover.base, "P1", tuple(steps)))


def random_cycle_instance(rng: random.Random, max_m: int = 12, max_len: int = 6) -> CycleInstance:
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_len)
    s_list = [rng.choice(_divisors(m)) for _ in range(n)]
    alpha_list = [rng.randrange(s) for s in s_list]
    extra = rng.randint(0, max(0, 12 - 2 * n) // 2)
    return cycle_instance(m, s_list, alpha_list, extra, rng)


def random_closed_walk(g: Multigraph, start: str, rng: random.Random, max_len: int = 8) -> Walk:
    """A random walk from ``start`` closed up by a shortest path back."""
    steps = []
    v = start
    for _ in range(rng.randint(0, max_len)):
        out = g.out_steps(v)
        if not out:
            break
        step, v = rng.choice(out)
        steps.append(step)
    back = _shortest_path(g, v, start)
    if back is None:
        return Walk(g, start, ())
    return Walk(g, start, tuple(steps) + tuple(back))


def _shortest_path(g: Multigraph, a: str, b: str):
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for step, y in g.out_steps(x):
            if y not in prev:
                prev[y] = (x, step)
                queue.append(y)
    if b not in prev:
        return None
    path = []
    x = b
    while prev[x] is not None:
        x, step = prev[x]
        path.append(step)
    return path[::-1]


# -- twisted copies --------------------------------------------------------------

@dataclass
class TwistedCopy:
    cover: GaloisCover
    tau: GroupAutomorphism
    theta: GraphMap
    theta_tilde: GraphMap


def twisted_copy(c: GaloisCover, rng: random.Random, flip_probability: float = 0.3) -> TwistedCopy:
    """A relabeled copy of ``c`` with the action pulled through an automorphism.

    All ids are renamed at random, some base edges are reversed together with
    their lifts, the action is transported along a random group
    automorphism sigma, and the expected witness is precomposed with a random
    group element h, so that ``tau = sigma o conj(h)``.
    """
    G = c.group
    sigma = rng.choice(all_automorphisms(G))
    h = rng.randrange(G.order)

    def renamer(items, prefix):
        items = list(items)
        labels = [f"{prefix}{i}" for i in range(len(items))]
        rng.shuffle(labels)
        return dict(zip(items, labels))

    bv = renamer(c.base.vertices, "u")
    be = renamer((e.id for e in c.base.edges), "k")
    tv = renamer(c.total.vertices, "x")
    te = renamer((e.id for e in c.total.edges), "f")
    flipped = {e.id for e in c.base.edges if rng.random() < flip_probability}

    def edges(g, vmap, emap, flip):
        out = []
        for e in g.edges:
            a, b = vmap[e.init], vmap[e.term]
            if flip(e):
                a, b = b, a
            out.append(Edge(emap[e.id], a, b))
        rng.shuffle(out)
        return tuple(out)

    base_vs = list(bv.values())
    rng.shuffle(base_vs)
    base2 = Multigraph(tuple(base_vs), edges(c.base, bv, be, lambda e: e.id in flipped))
    tot_vs = list(tv.values())
    rng.shuffle(tot_vs)
    total2 = Multigraph(tuple(tot_vs),
                        edges(c.total, tv, te, lambda e: c.phi.edge_map[e.id] in flipped))
    phi2 = GraphMap({tv[x]: bv[c.phi.vertex_map[x]] for x in c.total.vertices},
                    {te[e.id]: be[c.phi.edge_map[e.id]] for e in c.total.edges})
    action2 = [None] * G.order
    for g in range(G.order):
        a = c.action[g]
        action2[sigma(g)] = GraphMap({tv[x]: tv[y] for x, y in a.vertex_map.items()},
                                     {te[e]: te[f] for e, f in a.edge_map.items()})
    cover2 = GaloisCover(G, total2, base2, phi2, tuple(action2))
    ah = c.action[h]
    theta_t = GraphMap({x: tv[ah.vertex_map[x]] for x in c.total.vertices},
                       {e.id: te[ah.edge_map[e.id]] for e in c.total.edges})
    theta = GraphMap(dict(bv), dict(be))
    tau = sigma.compose(inner_automorphism(G, h))
    return TwistedCopy(cover2, tau, theta, theta_t)
