"""Command line interface.

Every subcommand prints a single JSON document on stdout. All numbers are
exact: integers stay JSON integers, rationals are "p/q" strings, polynomials
are term lists. Output for a given invocation is byte-for-byte deterministic.

Exit codes: 0 success, 1 computation error (structured {"error": ...}) or a
failing reproduce-all run, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import gkm, kahlercone, localization, projbundle, toric
from .exact import ParamPoly, ToolkitError, rat, rat_str


def _canon(value):
    """Render a value with exact JSON-safe primitives."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, ParamPoly):
        return value.to_json()
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _canon(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canon(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(_canon(payload), separators=(",", ":")) + "\n")


def _graph(name: str) -> gkm.GKMGraph:
    graphs = gkm.builtin_graphs()
    if name not in graphs:
        raise gkm.NoSuchFixedPointError(f"unknown builtin graph {name!r}")
    return graphs[name]


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (payload, exit_code)
# ---------------------------------------------------------------------------

def _cmd_graph(args):
    return gkm.graph_to_json(_graph(args.name)), 0


def _cmd_weights(args):
    g = _graph(args.name)
    return {"weights": list(gkm.restrict_weights(g, (args.a, args.b), args.point))}, 0


def _cmd_betti(args):
    g = _graph(args.name)
    return {"betti": list(gkm.betti_numbers(g, (args.a, args.b)))}, 0


def _cmd_coprime(args):
    g = _graph(args.name)
    ok, witness = gkm.is_coprime_action(g, (args.a, args.b))
    payload = {"coprime": ok}
    if witness is not None:
        payload["witness"] = {
            "point": witness.point,
            "weights": list(witness.weights),
            "reason": witness.reason,
        }
    return payload, 0


def _cmd_spheres(args):
    g = _graph(args.name)
    spheres = gkm.isotropy_spheres(g, (args.a, args.b))
    return {
        "spheres": [
            {"tail": e.tail, "head": e.head, "order": order} for e, order in spheres
        ]
    }, 0


def _cmd_chern(args):
    g = _graph(args.name)
    value = localization.abbv_chern_number(g, (args.a, args.b), args.monomial)
    return {"value": rat_str(value)}, 0


def _cmd_dh_volume(args):
    g = _graph(args.name)
    s = (args.a, args.b)
    table = [
        {
            "point": row.point,
            "image": [c for c in g.point(row.point).moment_image],
            "hamiltonian": row.hamiltonian,
            "weights": list(row.weights),
            "weight_product": row.weight_product,
        }
        for row in localization.localization_table(g, s)
    ]
    return {"volume": localization.dh_volume(g, s), "table": table}, 0


def _ring_payload(k1: int, k2: int):
    b = projbundle.Bundle(k1, k2)
    c1, c2, c3 = projbundle.total_chern(b)
    p1, w2, c1_even = projbundle.p1_and_w2(b)
    pair_eta, pair_xi = projbundle.c2_pairings(b)
    inv = projbundle.jupp_invariants(b)
    return {
        "k1": k1,
        "k2": k2,
        "c1": {"eta": c1.coords[0], "xi": c1.coords[1]},
        "c2": {"eta^2": c2.coords[0], "eta*xi": c2.coords[1]},
        "c3": {"eta^2*xi": c3.coords[0]},
        "p1": {"eta^2": p1.coords[0], "eta*xi": p1.coords[1]},
        "w2": list(w2),
        "c1_even": c1_even,
        "c1_cubed": projbundle.c1_cubed(b),
        "c2_pairings": {"eta": pair_eta, "xi": pair_xi},
        "cubic_coefficients_xi_eta": list(projbundle.cubic_coefficients(b)),
        "jupp": {
            "trilinear": [list(map(list, plane)) for plane in inv.trilinear],
            "w2": list(inv.w2),
            "p1_pairings": list(inv.p1_pairings),
        },
    }


def _cmd_ring(args):
    return _ring_payload(args.k1, args.k2), 0


def _cmd_jupp(args):
    g = _graph(args.name)
    inv_graph = localization.jupp_invariants_from_gkm(g, (args.a, args.b))
    inv_ring = projbundle.jupp_invariants(projbundle.Bundle(args.k1, args.k2))
    q = ((1, 0), (0, 1))
    cmp = projbundle.jupp_compare(inv_graph, inv_ring, q)

    def inv_json(inv):
        return {
            "trilinear": [list(map(list, plane)) for plane in inv.trilinear],
            "w2": list(inv.w2),
            "p1_pairings": list(inv.p1_pairings),
        }

    return {
        "graph_invariants": inv_json(inv_graph),
        "bundle_invariants": inv_json(inv_ring),
        "q": [list(row) for row in q],
        "trilinear_ok": cmp.trilinear_ok,
        "w2_ok": cmp.w2_ok,
        "p1_ok": cmp.p1_ok,
        "equivalent": cmp.ok,
    }, 0


def _cmd_toric_glue(args):
    report = toric.builtin_glue_report()
    return {
        "ok": report.ok,
        "tilde": list(report.tilde_points),
        "hat": list(report.hat_points),
        "matched": list(report.matched),
        "problems": list(report.problems),
    }, 0 if report.ok else 1


def _cmd_kahler_cone(args):
    verdict = kahlercone.kahler_obstruction(rat(args.l1), rat(args.l2), args.n)
    return {
        "verdict": verdict.verdict,
        "n": verdict.n,
        "pairing": verdict.pairing,
        "certificate": verdict.certificate,
    }, 0


# ---------------------------------------------------------------------------
# reproduce-all
# ---------------------------------------------------------------------------

def _reproduce_checks():
    """(name, expected, got) triples for every documented reference value."""
    g = gkm.tolman_graph()
    checks = []

    def add(name, expected, got):
        checks.append((name, expected, got))

    add("graph/points", 6, len(g.points))
    add("graph/edges", 9, len(g.edges))

    def edge(tail, head):
        return next(e for e in g.edges if (e.tail, e.head) == (tail, head))

    add("graph/edge-x00-x40-direction", [1, 0], list(edge("x00", "x40").direction))
    add("graph/edge-x00-x40-area", ParamPoly.linear(2, 1), gkm.sphere_area(g, edge("x00", "x40")))
    add("graph/edge-x11-x21-area", ParamPoly.linear(-1, 1), gkm.sphere_area(g, edge("x11", "x21")))
    add("graph/edge-x00-x03-area", ParamPoly.linear(1, 1), gkm.sphere_area(g, edge("x00", "x03")))
    add("graph/edge-x03-x13-area", ParamPoly.linear(1, 0), gkm.sphere_area(g, edge("x03", "x13")))
    add("graph/edge-x21-x40-area", ParamPoly.linear(1, 0), gkm.sphere_area(g, edge("x21", "x40")))

    add("weights/x00-(2,1)", [1, 2, 3], sorted(gkm.restrict_weights(g, (2, 1), "x00")))
    add("weights/x40-(2,1)", [-3, -2, -1], sorted(gkm.restrict_weights(g, (2, 1), "x40")))
    add("weights/x40-(7,2)", [-12, -7, -5], sorted(gkm.restrict_weights(g, (7, 2), "x40")))
    add("weights/x03-(0,1)", [-1, -1, 0], sorted(gkm.restrict_weights(g, (0, 1), "x03")))
    add("index/x03-(2,1)", 2, gkm.fixed_point_index(gkm.restrict_weights(g, (2, 1), "x03")))

    add("betti/(2,1)", [1, 0, 2, 0, 2, 0, 1], list(gkm.betti_numbers(g, (2, 1))))
    add("betti/(1,3)", [1, 0, 2, 0, 2, 0, 1], list(gkm.betti_numbers(g, (1, 3))))

    c1s = gkm.c1_values(g, (2, 1))
    add("c1-sphere/multiset", [0, 2, 2, 2, 2, 2, 4, 4, 6], sorted(c1s.values()))
    add("c1-sphere/x00-x40", Fraction(6), c1s[edge("x00", "x40")])
    add("c1-sphere/x11-x21", Fraction(0), c1s[edge("x11", "x21")])

    ok72, _ = gkm.is_coprime_action(g, (7, 2))
    ok21, wit21 = gkm.is_coprime_action(g, (2, 1))
    add("coprime/(7,2)", True, ok72)
    add("coprime/(2,1)", [False, "unit_weight"], [ok21, wit21.reason])
    add("coprime/criterion-(3,2)", False, gkm.tolman_coprime_criterion(3, 2))
    spheres = gkm.isotropy_spheres(g, (7, 2))
    add("isotropy/count-(7,2)", 9, len(spheres))
    at_x00 = sorted(o for e, o in spheres if "x00" in (e.tail, e.head))
    add("isotropy/orders-at-x00-(7,2)", [2, 7, 9], at_x00)
    add("isotropy/c1-nonnegative", True, all(v >= 0 for v in c1s.values()))

    basis = gkm.omega_basis_values(g)
    add("c2-pairing/xi", Fraction(6), gkm.pair_with_c2(g, {e: v[0] for e, v in basis.items()}))
    add("c2-pairing/eta", Fraction(6), gkm.pair_with_c2(g, {e: v[1] for e, v in basis.items()}))

    add("abbv/c1^3-(2,1)", Fraction(64), localization.abbv_chern_number(g, (2, 1), "c1^3"))
    add("abbv/c1^3-(1,3)", Fraction(64), localization.abbv_chern_number(g, (1, 3), "c1^3"))
    add("abbv/c1c2-(2,1)", Fraction(24), localization.abbv_chern_number(g, (2, 1), "c1c2"))
    add("abbv/c3-(2,1)", Fraction(6), localization.abbv_chern_number(g, (2, 1), "c3"))

    volume = ParamPoly({(3, 0): 2, (2, 1): 3, (1, 2): 3})
    add("dh/volume-(2,1)", volume, localization.dh_volume(g, (2, 1)))
    add("dh/volume-(1,3)", volume, localization.dh_volume(g, (1, 3)))
    add("dh/value-at-(1,2)", Fraction(20), localization.dh_volume(g, (2, 1)).evaluate(1, 2))

    tensor = localization.cubic_form_from_gkm(g, (2, 1))
    add("cubic/xi3-xi2eta-xieta2-eta3", [2, 1, 1, 0],
        [tensor[0][0][0], tensor[0][0][1], tensor[0][1][1], tensor[1][1][1]])
    add("c1/omega-coordinates", [Fraction(2), Fraction(2)],
        list(localization.c1_in_omega_basis(g, (2, 1))))

    b = projbundle.Bundle(-1, -1)
    c1, c2, c3 = projbundle.total_chern(b)
    add("ring/c1-(-1,-1)", [Fraction(2), Fraction(2)], list(c1.coords))
    add("ring/c2-(-1,-1)", [Fraction(0), Fraction(6)], list(c2.coords))
    add("ring/c2-equals-reduction", list(c2.coords),
        list((6 * cup_sq(b) - projbundle.RingElement(4, (6, 0))).coords))
    add("ring/c3", [Fraction(6)], list(c3.coords))
    add("ring/xi-cubed-(-1,-1)", [Fraction(2)],
        list(projbundle.cup_power(b, projbundle.xi(), 3).coords))
    add("ring/c1_cubed-(-1,-1)", 64, projbundle.c1_cubed(b))
    add("ring/c1_cubed-(-1,0)", 56, projbundle.c1_cubed(projbundle.Bundle(-1, 0)))
    add("ring/c1_cubed-(0,1)", 46, projbundle.c1_cubed(projbundle.Bundle(0, 1)))
    add("ring/c1_cubed-ring-route", Fraction(64),
        projbundle.integrate(b, projbundle.cup_power(b, c1, 3)))
    add("ring/c1c2-(-1,-1)", Fraction(24),
        projbundle.integrate(b, projbundle.cup(b, c1, c2)))
    p1, w2, c1_even = projbundle.p1_and_w2(b)
    add("ring/p1-(-1,-1)", [Fraction(8), Fraction(0)], list(p1.coords))
    add("ring/w2-(-1,-1)", [0, 0], list(w2))
    add("ring/c1-even-(-1,-1)", True, c1_even)
    add("ring/c1-even-(0,0)", False, projbundle.p1_and_w2(projbundle.Bundle(0, 0))[2])
    add("ring/c2-pairings-(-1,-1)", [Fraction(6), Fraction(6)],
        list(projbundle.c2_pairings(b)))
    add("ring/cubic-(3,2)-(-1,-1)", Fraction(106), projbundle.cubic_form(b, 3, 2))
    add("ring/cubic-(1,0)", Fraction(0), projbundle.cubic_form(b, 1, 0))

    inv_graph = localization.jupp_invariants_from_gkm(g, (2, 1))
    inv_ring = projbundle.jupp_invariants(b)
    identity = ((1, 0), (0, 1))
    add("jupp/tensors-equal", inv_ring.trilinear, inv_graph.trilinear)
    add("jupp/match-(-1,-1)", True, projbundle.jupp_compare(inv_graph, inv_ring, identity).ok)
    mismatch = projbundle.jupp_compare(
        inv_ring, projbundle.jupp_invariants(projbundle.Bundle(-1, 0)), identity)
    add("jupp/mismatch-(-1,0)", [False, True],
        [mismatch.ok, "trilinear" in mismatch.failures])

    polys = toric.builtin_polytopes()
    hat, tilde = polys["tolman-hat"], polys["tolman-tilde"]
    add("toric/hat-edges", 9, len(toric.polytope_edges(hat)))
    add("toric/tilde-edges", 9, len(toric.polytope_edges(tilde)))
    tilde_data = toric.project_fixed_data(tilde, toric.L_TILDE)
    hat_data = toric.project_fixed_data(hat, toric.L_HAT)
    add("toric/tilde-vertex5-image", [ParamPoly.linear(0, 1), ParamPoly.linear(1, 0)],
        list(tilde_data[5].image))
    add("toric/tilde-vertex0-weights", [(0, 1, 0), (1, 0, 0), (1, 1, 1)],
        sorted(toric.vertex_weights(tilde, 0)))
    add("toric/hat-vertex2-projected", [(0, -1), (1, -1), (1, 0)],
        sorted(hat_data[2].weights))
    report = toric.glue_check(hat_data, tilde_data)
    add("toric/glue-ok", True, report.ok)
    add("toric/glue-tilde-count", 4, len(report.tilde_points))
    add("toric/glue-hat-count", 2, len(report.hat_points))

    inv = kahlercone.curve_invariants(2)
    add("kahler/curve-n2", [5, -2, 1, -2],
        [inv.m, inv.c1_pairing, inv.eta_pairing, inv.xi_pairing])
    add("kahler/eval-(1,2)", Fraction(0), kahlercone.evaluate_class_on_curve(1, 2))
    add("kahler/eval-(1,5)", Fraction(3), kahlercone.evaluate_class_on_curve(1, 5))
    add("kahler/eval-(2,3)", Fraction(-1), kahlercone.evaluate_class_on_curve(2, 3))
    add("kahler/verdict-(1,2)", ["Obstructed", Fraction(0)],
        [kahlercone.kahler_obstruction(1, 2).verdict,
         kahlercone.kahler_obstruction(1, 2).certificate])
    add("kahler/verdict-(1,3)", "NotObstructedByThisTest",
        kahlercone.kahler_obstruction(1, 3).verdict)
    add("kahler/verdict-(1,19/10)", "Obstructed",
        kahlercone.kahler_obstruction(1, Fraction(19, 10)).verdict)

    return checks


def cup_sq(b):
    """xi*xi in normal form, used by the c2 reduction check."""
    return projbundle.cup(b, projbundle.xi(), projbundle.xi())


def _cmd_reproduce_all(args):
    rows = []
    failed = 0
    for name, expected, got in _reproduce_checks():
        ok = expected == got
        failed += 0 if ok else 1
        rows.append({
            "name": name,
            "expected": _canon(expected),
            "got": _canon(got),
            "pass": ok,
        })
    payload = {
        "command": "reproduce-all",
        "inputs": {},
        "results": {"total": len(rows), "passed": len(rows) - failed, "failed": failed},
        "checks": rows,
    }
    return payload, 0 if failed == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_action_args(sub):
    sub.add_argument("--a", type=int, required=True, help="first subcircle component")
    sub.add_argument("--b", type=int, required=True, help="second subcircle component")


def _add_name_arg(sub):
    sub.add_argument("--name", default="tolman", help="builtin graph name")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkmloc",
        description="Exact localization invariants of GKM graphs and projective bundles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="dump a builtin moment graph as JSON")
    _add_name_arg(p)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("weights", help="subcircle weights at a fixed point")
    _add_action_args(p)
    p.add_argument("--point", required=True)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("betti", help="Betti numbers from the index histogram")
    _add_action_args(p)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("coprime", help="test whether a subcircle is coprime")
    _add_action_args(p)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_coprime)

    p = sub.add_parser("spheres", help="isotropy spheres with stabilizer orders")
    _add_action_args(p)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_spheres)

    p = sub.add_parser("chern", help="localized Chern number")
    _add_action_args(p)
    p.add_argument("--monomial", choices=localization.CHERN_MONOMIALS, required=True)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_chern)

    p = sub.add_parser("dh-volume", help="symplectic volume polynomial with the fixed-point table")
    _add_action_args(p)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_dh_volume)

    p = sub.add_parser("ring", help="intersection ring data of a projectivized bundle")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.set_defaults(func=_cmd_ring)

    p = sub.add_parser("jupp", help="compare graph invariants against a bundle")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--k1", type=int, default=-1)
    p.add_argument("--k2", type=int, default=-1)
    _add_name_arg(p)
    p.set_defaults(func=_cmd_jupp)

    p = sub.add_parser("toric-glue", help="glue the builtin polytope pair and compare")
    p.set_defaults(func=_cmd_toric_glue)

    p = sub.add_parser("kahler-cone", help="destabilizing-curve obstruction test")
    p.add_argument("--l1", required=True, help="exact rational, e.g. 1 or 19/10")
    p.add_argument("--l2", required=True, help="exact rational")
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=_cmd_kahler_cone)

    p = sub.add_parser("reproduce-all", help="re-run every documented reference value")
    p.set_defaults(func=_cmd_reproduce_all)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except ToolkitError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        return 1
    except ValueError as exc:
        _emit({"error": {"code": "ValueError", "message": str(exc)}})
        return 1
    _emit(payload)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
