"""Command-line front end.

Exit codes: 0 success or inconclusive, 1 input error, 2 validation failure,
3 distinguished, 4 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from importlib import resources

from . import io
from .artal import (ArtalType, allowed_automorphisms, classify, family_table, hexagon_walk,
                    splitting_graph_of)
from .cover import (fiber_vertices, net_voltage_class, net_voltage_set, validate_cover)
from .curvecomb import build_splitting_cover, connected_number, incidence_graph, splitting_number
from .cyclicnum import numeric_beta, sample_coefficients
from .equivalence import (DISTINGUISHED, EQUIVALENT, INCONCLUSIVE, SearchLimits, distinguish,
                          exhaustive_equivalence, nv_signature)
from .errors import ExtractionError, InvalidArgument, ResourceLimitError
from .fingroup import (FiniteGroup, all_automorphisms, cyclic_unit_automorphism,
                       identity_automorphism, inversion_automorphism)
from .multigraph import isomorphisms
from .samples import random_splitting_cover, s3_triangle_cover, s3_walks, twisted_copy

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_DISTINGUISHED, EXIT_LIMIT = 0, 1, 2, 3, 4


class CommandError(Exception):
    def __init__(self, code, payload):
        super().__init__(payload.get("error", ""))
        self.code = code
        self.payload = payload


def fixture_path(name: str):
    return resources.files("splitgraph") / "fixtures" / name


def _emit(obj, out=None):
    text = io.dumps(obj)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_cover(path):
    return io.cover_from_json(io.load_file(path))


def resolve_taus(G: FiniteGroup, spec: str):
    """``(name, automorphism)`` pairs for --tau."""
    if spec == "plus":
        return [("plus", identity_automorphism(G))]
    if spec == "minus":
        return [("minus", inversion_automorphism(G))]
    if spec == "all":
        if G.is_standard_cyclic():
            taus = [("plus", cyclic_unit_automorphism(G, 1))]
            minus = cyclic_unit_automorphism(G, -1 % G.order if G.order > 1 else 0)
            if minus != taus[0][1]:
                taus.append(("minus", minus))
            return taus
        return [(f"aut{i}", t) for i, t in enumerate(all_automorphisms(G))]
    return [(spec, io.automorphism_from_json(G, io.load_file(spec)))]


# -- subcommands ------------------------------------------------------------------

def cmd_validate(args):
    report = validate_cover(_load_cover(args.cover))
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_nv(args):
    c = _load_cover(args.cover)
    w = io.walk_from_json(io.load_file(args.walk), c.base)
    lift = args.lift or fiber_vertices(c, w.start)[0]
    nv = net_voltage_set(c, w, lift)
    cls = net_voltage_class(c, w)
    _emit({"lift": lift, "set": nv.labels(), "class": cls.labels()}, args.output)
    return EXIT_OK


def _pair_verdicts(args, exhaustive):
    c1, c2 = _load_cover(args.cover1), _load_cover(args.cover2)
    if c1.group != c2.group:
        raise InvalidArgument("the two covers use different groups")
    results = []
    if exhaustive:
        limits = SearchLimits(max_base_vertices=args.max_base_vertices,
                              max_total_vertices=args.max_vertices)
        for name, tau in resolve_taus(c1.group, args.tau):
            v = exhaustive_equivalence(c1, c2, tau, limits)
            results.append({"tau": name, **v.to_json()})
        overall = EQUIVALENT if any(r["verdict"] == EQUIVALENT for r in results) else DISTINGUISHED
    else:
        s1, s2 = nv_signature(c1), nv_signature(c2)
        for name, tau in resolve_taus(c1.group, args.tau):
            v = distinguish(c1, c2, tau, s1, s2)
            results.append({"tau": name, **v.to_json()})
        overall = DISTINGUISHED if all(r["verdict"] == DISTINGUISHED for r in results) else INCONCLUSIVE
    _emit({"verdict": overall, "results": results}, args.output)
    return EXIT_DISTINGUISHED if overall == DISTINGUISHED else EXIT_OK


def cmd_distinguish(args):
    return _pair_verdicts(args, exhaustive=False)


def cmd_equivalence(args):
    return _pair_verdicts(args, exhaustive=True)


def _curve_and_data(args):
    doc = io.load_file(args.curve)
    if "curve" in doc:
        curve = io.curve_from_json(doc["curve"])
        data = doc.get("splitting")
    else:
        curve = io.curve_from_json(doc)
        data = None
    if getattr(args, "data", None):
        data = io.load_file(args.data)
    return curve, (io.splitting_from_json(data) if data is not None else None)


def cmd_curve_incidence(args):
    curve, _ = _curve_and_data(args)
    g = incidence_graph(curve)
    _emit({**io.graph_to_json(g.graph), "partition": dict(g.partition)}, args.output)
    return EXIT_OK


def cmd_curve_splitting(args):
    curve, data = _curve_and_data(args)
    if data is None:
        raise InvalidArgument("splitting data missing: pass a data file or a combined fixture")
    _emit(io.cover_to_json(build_splitting_cover(incidence_graph(curve), data)), args.output)
    return EXIT_OK


def _class_json(cl):
    return {"type": cl.type.to_text(), "alpha": cl.alpha, "chirality": cl.chirality,
            "label": cl.label()}


def cmd_artal_classify(args):
    T = ArtalType.parse(args.type)
    cl = classify(T, args.beta)
    _emit({"beta": args.beta, "s": T.s, **_class_json(cl)}, args.output)
    return EXIT_OK


def cmd_artal_family(args):
    T = ArtalType.parse(args.type)
    table = family_table(T)
    _emit({"type": T.to_text(), "d": T.d, "s_lines": list(T.s_lines), "s": T.s,
           "size": len(table), "classes": [_class_json(c) for c in table]}, args.output)
    return EXIT_OK


def cmd_artal_splitting(args):
    T = ArtalType.parse(args.type)
    _emit(io.cover_to_json(splitting_graph_of(T, args.beta)), args.output)
    return EXIT_OK


def cmd_artal_numeric(args):
    T, beta, c, _g0 = io.coeffs_from_json(io.load_file(args.coeffs))
    try:
        res = numeric_beta(T, c, tol=args.tol)
    except ExtractionError as exc:
        raise CommandError(EXIT_INVALID, {"error": str(exc), "diagnostics": exc.diagnostics})
    out = {"type": T.to_text(), "s": T.s,
           "h_values": [{"re": z.real, "im": z.imag} for z in res.hvals],
           "alphas": res.alphas,
           "residuals": [e.residual for e in res.extractions],
           "margins": [e.margin for e in res.extractions],
           "beta": res.beta, **{k: v for k, v in _class_json(classify(T, res.beta)).items()
                                if k != "type"}}
    if beta is not None:
        out["beta_declared"] = beta
        out["consistent"] = (beta - res.beta) % T.s == 0
    _emit(out, args.output)
    return EXIT_OK if out.get("consistent", True) else EXIT_INVALID


def cmd_artal_sample(args):
    T = ArtalType.parse(args.type)
    rng = random.Random(args.seed)
    _emit(io.coeffs_to_json(T, args.beta, sample_coefficients(T, args.beta, rng)), args.output)
    return EXIT_OK


def reproduce_summary():
    c = s3_triangle_cover()
    g1, g2 = s3_walks(c)
    T = ArtalType.parse("3:3:3")
    a0, a1 = splitting_graph_of(T, 0), splitting_graph_of(T, 1)
    pair = {}
    for tau in allowed_automorphisms(3):
        name = "plus" if tau.is_identity() else "minus"
        pair[name] = distinguish(a0, a1, tau).kind
    figs = {}
    covers = {}
    for name in ("fig2", "fig3"):
        doc = io.load_file(fixture_path(f"{name}.json"))
        curve = io.curve_from_json(doc["curve"])
        cov = build_splitting_cover(incidence_graph(curve), io.splitting_from_json(doc["splitting"]))
        covers[name] = (curve, cov)
        figs[name] = {"splitting_number": splitting_number(cov, curve.components[0].id),
                      "connected_number": connected_number(cov),
                      "total_vertices": len(cov.total.vertices)}
    (cu2, cv2), (cu3, cv3) = covers["fig2"], covers["fig3"]
    part = {}
    for cu, cv in ((cu2, cv2), (cu3, cv3)):
        comps = {x.id for x in cu.components}
        part[id(cv)] = {x: int(cv.phi.vertex_map[x] in comps) for x in cv.total.vertices}
    iso = next(isomorphisms(cv2.total, cv3.total, part[id(cv2)], part[id(cv3)]), None)
    return {
        "s3": {"nv_gamma_a1": net_voltage_set(c, g1, "a1").labels(),
               "nv_gamma2_c1": net_voltage_set(c, g2, "c1").labels(),
               "classes_differ": net_voltage_class(c, g1) != net_voltage_class(c, g2)},
        "artal_pair_d3": {"family_size": len(family_table(T)), "distinguish": pair},
        "plets": {t: len(family_table(ArtalType.parse(t)))
                  for t in ("6:6:6", "2,4:2,2,2:6", "1,5:2,4:6")},
        "figures": {**figs, "splitting_graphs_isomorphic": iso is not None,
                    "distinguish": distinguish(cv2, cv3, identity_automorphism(cv2.group)).kind},
        "nv_gamma_plus_artal": {str(b): net_voltage_set(splitting_graph_of(T, b),
                                                        hexagon_walk(a0), "P1@0").labels()
                                for b in range(3)},
    }


def cmd_reproduce(args):
    _emit(reproduce_summary(), args.output)
    return EXIT_OK


def run_battery(seed: int, count: int):
    """Twisted copies must never be distinguished and must be found equivalent."""
    rng = random.Random(seed)
    rows = []
    ok = True
    bases = [s3_triangle_cover()]
    while len(bases) < count:
        _, _, cov = random_splitting_cover(rng, max_m=6, max_vertices=8)
        if len(cov.total.vertices) <= 48:
            bases.append(cov)
    for i, c in enumerate(bases[:count]):
        tc = twisted_copy(c, rng)
        d = distinguish(c, tc.cover, tc.tau).kind
        e = exhaustive_equivalence(c, tc.cover, tc.tau)
        good = d != DISTINGUISHED and e.kind == EQUIVALENT
        ok &= good
        rows.append({"case": i, "group_order": c.group.order,
                     "total_vertices": len(c.total.vertices),
                     "distinguish": d, "exhaustive": e.kind, "ok": good})
    return ok, rows


def cmd_battery(args):
    print(f"seed={args.seed}", file=sys.stderr)
    ok, rows = run_battery(args.seed, args.count)
    _emit({"seed": args.seed, "count": args.count, "ok": ok, "cases": rows}, args.output)
    return EXIT_OK if ok else EXIT_INVALID


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="splitgraph",
                                description="Galois covers of graphs, net voltages and splitting graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
        return sp

    sp = add("validate-cover", cmd_validate, "check every cover axiom")
    sp.add_argument("cover")

    sp = add("nv", cmd_nv, "net voltage set and class of a closed walk")
    sp.add_argument("cover")
    sp.add_argument("walk")
    sp.add_argument("--lift", help="total vertex over the walk's start (default: first in fiber)")

    for name, func, help_ in (("distinguish", cmd_distinguish, "net-voltage discriminator"),
                              ("equivalence", cmd_equivalence, "exhaustive equivalence search")):
        sp = add(name, func, help_)
        sp.add_argument("cover1")
        sp.add_argument("cover2")
        sp.add_argument("--tau", default="all",
                        help="all, plus, minus, or a JSON file mapping element labels")
        if name == "equivalence":
            sp.add_argument("--max-vertices", type=int, default=72,
                            help="limit on total-graph vertices")
            sp.add_argument("--max-base-vertices", type=int, default=12)

    curve = sub.add_parser("curve", help="curve combinatorics")
    csub = curve.add_subparsers(dest="curve_command", required=True)
    for name, func in (("incidence", cmd_curve_incidence), ("splitting-graph", cmd_curve_splitting)):
        sp = csub.add_parser(name)
        sp.set_defaults(func=func)
        sp.add_argument("curve", help="curve JSON, or a fixture holding curve and splitting data")
        if name == "splitting-graph":
            sp.add_argument("data", nargs="?", help="splitting-data JSON")
        sp.add_argument("-o", "--output")

    artal = sub.add_parser("artal", help="Artal arrangements")
    add_artal_commands(artal)

    sp = add("reproduce", cmd_reproduce, "recompute the worked examples")

    sp = add("battery", cmd_battery, "soundness battery on twisted copies")
    sp.add_argument("--seed", type=int, default=2024)
    sp.add_argument("--count", type=int, default=50)
    return p


def add_artal_commands(parser):
    asub = parser.add_subparsers(dest="artal_command", required=True)

    def add(name, func):
        sp = asub.add_parser(name)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output")
        return sp

    sp = add("classify", cmd_artal_classify)
    sp.add_argument("--type", required=True, help="e.g. 3:3:3 or 2,4:2,2,2:6")
    sp.add_argument("--beta", type=int, required=True)
    sp = add("family", cmd_artal_family)
    sp.add_argument("--type", required=True)
    sp = add("splitting-graph", cmd_artal_splitting)
    sp.add_argument("--type", required=True)
    sp.add_argument("--beta", type=int, required=True)
    sp = add("numeric-beta", cmd_artal_numeric)
    sp.add_argument("--coeffs", required=True)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp = add("sample-coeffs", cmd_artal_sample)
    sp.add_argument("--type", required=True)
    sp.add_argument("--beta", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        _report(exc.payload)
        return exc.code
    except ResourceLimitError as exc:
        _report({"error": str(exc)})
        return EXIT_LIMIT
    except (InvalidArgument, ExtractionError, OSError, KeyError, TypeError) as exc:
        _report({"error": f"{type(exc).__name__}: {exc}"})
        return EXIT_INPUT


def _report(payload):
    sys.stderr.write(io.dumps(payload))


def artal_main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    return main(["artal", *argv])


if __name__ == "__main__":
    sys.exit(main())
