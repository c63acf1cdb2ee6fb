"""JSON encoding of groups, graphs, walks, covers, curves and coefficients.

:func:`dumps` is deterministic: keys keep insertion order (which the
encoders fix), floats are written with 17 significant digits, and output
ends with a newline.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .artal import ArtalType, Partition
from .cover import GaloisCover
from .curvecomb import (Component, CurveCombinatorics, CyclicSplittingData,
                        SingularPoint)
from .cyclicnum import VARS, CPolynomial
from .errors import InvalidArgument
from .fingroup import (FiniteGroup, GroupAutomorphism, group_from_table, make_cyclic,
                       make_symmetric)
from .multigraph import Edge, GraphMap, Multigraph, Step, Walk


def dumps(obj: Any, indent: int = 2) -> str:
    return _dump(obj, indent, 0) + "\n"


def _dump(obj, indent, level) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return '"inf"' if obj > 0 else ('"-inf"' if obj < 0 else '"nan"')
        text = format(obj, ".17g")
        if not any(ch in text for ch in ".eE"):
            text += ".0"
        return text
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_dump(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float, str)) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(_dump(x, indent, level + 1) for x in obj) + "]"
        return "[\n" + ",\n".join(pad + _dump(x, indent, level + 1) for x in obj) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"invalid JSON: {exc}") from None


def load_file(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _need(d, key, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise InvalidArgument(f"missing field {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise InvalidArgument(f"field {key!r} has the wrong type")
    return v


# -- groups -------------------------------------------------------------------

def group_to_json(G: FiniteGroup) -> dict:
    desc = G.descriptor or {}
    if desc.get("kind") == "cyclic":
        return {"kind": "cyclic", "m": desc["m"]}
    if desc.get("kind") == "symmetric":
        return {"kind": "symmetric", "n": desc["n"]}
    return {"kind": "table", "elements": list(G.elements),
            "table": [list(r) for r in G.table], "identity": G.identity}


def group_from_json(d: dict) -> FiniteGroup:
    kind = _need(d, "kind", str)
    if kind == "cyclic":
        return make_cyclic(_need(d, "m", int))
    if kind == "symmetric":
        return make_symmetric(_need(d, "n", int))
    if kind == "table":
        return group_from_table(_need(d, "elements", list), _need(d, "table", list),
                                _need(d, "identity", int))
    raise InvalidArgument(f"unknown group kind {kind!r}")


def automorphism_from_json(G: FiniteGroup, d: dict) -> GroupAutomorphism:
    """``{"<label>": "<label>", ...}``; labels not mentioned are rejected."""
    if not isinstance(d, dict) or sorted(d) != sorted(G.elements):
        raise InvalidArgument("automorphism must map every group element by label")
    try:
        return GroupAutomorphism(G, tuple(G.index(d[e]) for e in G.elements))
    except KeyError as exc:
        raise InvalidArgument(f"unknown element {exc}") from None


# -- graphs and walks --------------------------------------------------------

def graph_to_json(g: Multigraph) -> dict:
    return {"vertices": list(g.vertices),
            "edges": [{"id": e.id, "init": e.init, "term": e.term} for e in g.edges]}


def graph_from_json(d: dict) -> Multigraph:
    vs = _need(d, "vertices", list)
    es = d.get("edges", [])
    try:
        return Multigraph(tuple(str(v) for v in vs),
                          tuple(Edge(str(e["id"]), str(e["init"]), str(e["term"])) for e in es))
    except (KeyError, TypeError):
        raise InvalidArgument("edges need id, init and term") from None


def walk_to_json(w: Walk) -> dict:
    return {"start": w.start, "steps": [[s.edge, s.sign] for s in w.steps]}


def walk_from_json(d: dict, g: Multigraph) -> Walk:
    steps = _need(d, "steps", list)
    if any(not isinstance(s, (list, tuple)) or len(s) != 2 for s in steps):
        raise InvalidArgument("each step is an [edge, sign] pair")
    return Walk(g, str(_need(d, "start")), tuple(Step(str(e), str(sg)) for e, sg in steps))


def map_to_json(m: GraphMap) -> dict:
    # composed maps can carry any key order; sort so output is stable
    return {"vertices": dict(sorted(m.vertex_map.items())),
            "edges": dict(sorted(m.edge_map.items()))}


def map_from_json(d: dict) -> GraphMap:
    return GraphMap({str(k): str(v) for k, v in _need(d, "vertices", dict).items()},
                    {str(k): str(v) for k, v in d.get("edges", {}).items()})


# -- covers ---------------------------------------------------------------------

def cover_to_json(c: GaloisCover) -> dict:
    G = c.group
    return {"group": group_to_json(G), "base": graph_to_json(c.base),
            "total": graph_to_json(c.total), "phi": map_to_json(c.phi),
            "action": {G.label(g): map_to_json(c.action[g]) for g in range(G.order)}}


def cover_from_json(d: dict) -> GaloisCover:
    G = group_from_json(_need(d, "group", dict))
    base = graph_from_json(_need(d, "base", dict))
    total = graph_from_json(_need(d, "total", dict))
    phi = map_from_json(_need(d, "phi", dict))
    gens = {}
    for label, m in _need(d, "action", dict).items():
        try:
            g = G.index(label)
        except (KeyError, InvalidArgument):
            raise InvalidArgument(f"action given for unknown element {label!r}") from None
        gens[g] = map_from_json(m)
    return GaloisCover.from_generators(G, total, base, phi, gens)


# -- curves and splitting data ---------------------------------------------------

def curve_to_json(c: CurveCombinatorics) -> dict:
    pts = []
    for p in c.points:
        entry = {"id": p.id, "branches": [{"component": b} for b in p.branches]}
        if p.marked:
            entry["marked"] = True
        pts.append(entry)
    return {"components": [{"id": comp.id, "degree": comp.degree} for comp in c.components],
            "points": pts}


def curve_from_json(d: dict) -> CurveCombinatorics:
    try:
        comps = tuple(Component(str(c["id"]), int(c.get("degree", 1)))
                      for c in _need(d, "components", list))
        pts = tuple(SingularPoint(str(p["id"]), tuple(str(b["component"]) for b in p["branches"]),
                                  bool(p.get("marked", False)))
                    for p in d.get("points", []))
    except (KeyError, TypeError, ValueError):
        raise InvalidArgument("malformed curve description") from None
    return CurveCombinatorics(comps, pts)


def splitting_to_json(s: CyclicSplittingData) -> dict:
    return {"m": s.m, "s": dict(s.s), "offsets": {p: list(o) for p, o in s.offsets.items()}}


def splitting_from_json(d: dict) -> CyclicSplittingData:
    try:
        return CyclicSplittingData(_need(d, "m", int),
                                   {str(k): int(v) for k, v in _need(d, "s", dict).items()},
                                   {str(k): tuple(int(o) for o in v)
                                    for k, v in _need(d, "offsets", dict).items()})
    except (TypeError, ValueError):
        raise InvalidArgument("malformed splitting data") from None


# -- coefficients -----------------------------------------------------------

def _cx(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _from_cx(d) -> complex:
    if isinstance(d, (int, float)):
        return complex(d)
    return complex(float(_need(d, "re")), float(d.get("im", 0.0)))


def poly_to_json(p: CPolynomial) -> dict:
    return {"variables": list(p.variables),
            "terms": [{"exp": list(e), **_cx(c)} for e, c in p.terms.items()]}


def poly_from_json(d: dict) -> CPolynomial:
    variables = tuple(d.get("variables", VARS))
    try:
        terms = {tuple(int(x) for x in t["exp"]): _from_cx(t) for t in d.get("terms", [])}
    except (KeyError, TypeError, ValueError):
        raise InvalidArgument("malformed polynomial terms") from None
    return CPolynomial(variables, terms)


def coeffs_to_json(T: ArtalType, beta, c, g0=None) -> dict:
    out = {"d": T.d, "partitions": [list(p.parts) for p in T.partitions], "beta": beta,
           "c": [[_cx(z) for z in ci] for ci in c]}
    if g0 is not None:
        out["g0"] = poly_to_json(g0)
    return out


def coeffs_from_json(d: dict):
    """Returns ``(type, beta or None, c, g0 or None)``."""
    T = ArtalType(*(_partition(p) for p in _need(d, "partitions", list)))
    if "d" in d and d["d"] != T.d:
        raise InvalidArgument(f"d={d['d']} does not match the partitions (sum {T.d})")
    beta = d.get("beta")
    c = [[_from_cx(z) for z in ci] for ci in _need(d, "c", list)]
    g0 = poly_from_json(d["g0"]) if d.get("g0") else None
    return T, beta, c, g0


def _partition(p):
    if not isinstance(p, list):
        raise InvalidArgument("partitions are lists of integers")
    return Partition(tuple(int(e) for e in p))
