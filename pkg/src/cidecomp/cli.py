"""Command line entry point.

Exit status: 0 on success, 2 on invalid parameters, 3 when independent
computations disagree. JSON is the default output; set CIDECOMP_FORMAT to
change the default.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import decompose as dec
from . import degree as deg
from . import ideals
from . import oracle
from .gridmodel import GridShape, SubsetS, ValidationError, enumerate_admissible, maximal_js, parse_subset
from .matroid import MatroidView, in_F_S_j, in_U_S, quasi_product_circuits, verify_circuit_axioms

DEFAULT_CAP = 30


class CrossCheckFailure(Exception):
    pass


def _dump(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        buf = io.StringIO()
        keys = sorted({k for r in rows for k in r})
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        return buf.getvalue()
    return _text(obj)


def _text(obj, indent: str = "") -> str:
    out = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in (v if isinstance(v, list) else [0])):
                out.append(f"{indent}{k}:")
                out.append(_text(v, indent + "  ").rstrip("\n"))
            else:
                out.append(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            out.append(f"{indent}- " + _text(v, indent + "  ").strip())
    else:
        out.append(f"{indent}{obj}")
    return "\n".join(out) + "\n"


def _cap_guard(args, d: int, l: int) -> None:
    cap = int(os.environ.get("CIDECOMP_CAP", DEFAULT_CAP))
    if d * l > cap and not getattr(args, "force", False):
        raise ValidationError(f"d*l = {d * l} exceeds the exhaustive-oracle cap {cap}; pass --force")


def _shape(args) -> GridShape:
    return GridShape(k=args.k, l=args.l, t=args.t, d=args.d, s=getattr(args, "s", 2))


# -- subcommands ------------------------------------------------------------------


def cmd_decompose(args):
    rep = dec.decompose(_shape(args), method=args.method)
    if args.summary:
        return rep.summary()
    if args.format == "csv":
        return [c.to_json() for c in rep.components]
    return rep.to_json()


def cmd_dimension(args):
    shape = _shape(args)
    out: dict = {"shape": shape.as_dict(), "dim_V_empty": dec.dim_V_empty(shape)}
    if shape.k == 2:
        out["dim_V_Delta"] = dec.dim_V_Delta(shape)
        out["top"] = [
            {"u_plus_v": a, "j0": b, "dimension": c} if a != "empty" else {"component": "empty", "dimension": c}
            for a, b, c in dec.top_dimensional_components(shape)
        ]
    else:
        out["dim_V_Delta"] = dec.decompose_t_eq_l(shape).dim_V_Delta
        out["dim_source"] = "components"
    if args.S is not None:
        S = parse_subset(args.S)
        out["S"] = SubsetS(shape, S).to_json()
        if args.j is not None:
            out["dim_F_S_j"] = dec.dim_F_S_j(shape, S, args.j)
            out["dim_V_S_j"] = dec.dim_V_S_j(shape, S, args.j)
    return out


def cmd_degree(args):
    d, l, t = args.d, args.l, args.t
    if args.method == "all":
        methods = deg.applicable_methods(d, l, t)
    else:
        methods = (args.method,)
    if any(m in ("paths", "transversal", "hypergraph") for m in methods):
        _cap_guard(args, d, l)
    try:
        rep = deg.deg_V_Delta(d, l, t, methods=methods)
    except deg.CrossCheckError as exc:
        raise CrossCheckFailure(str(exc)) from exc
    out = rep.to_json()
    out["all_agree"] = True
    return out


def cmd_transversals(args):
    d, l, t = args.d, args.l, args.t
    _cap_guard(args, d, l)
    h = oracle.hypergraph_A(d, l, t) if args.hypergraph == "A" else oracle.hypergraph_B(d, l, t)
    if args.count_only:
        return {"hypergraph": args.hypergraph, "d": d, "l": l, "t": t, "count": oracle.count_minimal_transversals(h)}
    mins = oracle.minimal_transversals(h)
    shown = mins if args.limit is None else mins[: args.limit]
    out = {
        "hypergraph": args.hypergraph,
        "d": d,
        "l": l,
        "t": t,
        "count": len(mins),
        "transversals": [sorted(list(c) for c in T) for T in shown],
    }
    if args.hypergraph == "A":
        out["multiplicities"] = [oracle.multiplicity_m(T, d, l) for T in shown]
    return out


def cmd_paths(args):
    d, l, t = args.d, args.l, args.t
    _cap_guard(args, d, l)
    fams = oracle.enumerate_path_families(d, l, t)
    if args.count_only:
        n = w = 0
        for f in fams:
            n += 1
            w += oracle.family_weight(f, l)
        return {"d": d, "l": l, "t": t, "count": n, "weighted_count": w}
    listed = []
    n = w = 0
    for f in fams:
        n += 1
        fw = oracle.family_weight(f, l)
        w += fw
        if args.limit is None or len(listed) < args.limit:
            listed.append({"paths": [[list(c) for c in p] for p in f], "weight": fw})
    return {"d": d, "l": l, "t": t, "count": n, "weighted_count": w, "families": listed}


def cmd_ideal(args):
    shape = _shape(args)
    if args.target == "IDelta":
        spec = ideals.ideal_I_Delta(shape)
    elif args.target == "initial":
        spec = ideals.ideal_initial_J_empty(shape)
    else:
        if args.S is None or args.j is None:
            raise ValidationError("--S and --j are required for targets I and J")
        S = parse_subset(args.S)
        fn = ideals.ideal_I_S_j if args.target == "I" else ideals.ideal_J_S_j
        spec = fn(shape, S, args.j)
    dialect = "generators" if args.emit == "generators" else "macaulay2"
    return ideals.emit_cas_script(spec, dialect)


DEFAULT_VERIFY = ((3, 3, 4), (3, 4, 4), (4, 4, 5))


def _parse_params(text: str | None):
    if not text:
        return DEFAULT_VERIFY
    out = []
    for chunk in text.split(";"):
        t, d, l = (int(x) for x in chunk.split(","))
        out.append((t, d, l))
    return tuple(out)


def run_vanishing_suite(params=DEFAULT_VERIFY, seeds: int = 20) -> dict:
    """Sample every maximal stratum and check it against its ideals."""
    results = []
    for t, d, l in params:
        shape = GridShape(k=2, l=l, t=t, d=d)
        checked = failed = first_miss = 0
        failures = []
        for S in enumerate_admissible(shape):
            if not S:
                continue
            for j in maximal_js(shape, S):
                I = ideals.ideal_I_S_j(shape, S, j)
                J = ideals.ideal_J_S_j(shape, S, j)
                for seed in range(seeds):
                    checked += 1
                    if not in_F_S_j(shape, ideals.first_phi_draw(shape, S, j, seed), S, j):
                        first_miss += 1
                    try:
                        g = ideals.sample_phi(shape, S, j, seed)
                        X = ideals.sample_psi(shape, S, j, seed)
                    except RuntimeError:
                        failed += 1
                        failures.append({"S": list(S), "j": j, "seed": seed, "sampler_exhausted": True})
                        continue
                    flags = {
                        "phi_vanishes_on_I": ideals.check_vanishing(g, I),
                        "phi_in_F_S_j": in_F_S_j(shape, g, S, j),
                        "psi_in_U_S": in_U_S(shape, X, S),
                        "psi_vanishes_on_J": ideals.check_vanishing(X, J),
                    }
                    if not all(flags.values()):
                        failed += 1
                        failures.append({"S": list(S), "j": j, "seed": seed, **flags})
        results.append(
            {
                "t": t,
                "d": d,
                "l": l,
                "checked": checked,
                "failed": failed,
                "first_draw_non_generic": first_miss,
                "failures": failures[:10],
            }
        )
    return {"seeds": seeds, "results": results, "ok": all(r["failed"] == 0 for r in results)}


def cmd_verify(args):
    out = run_vanishing_suite(_parse_params(args.params), args.seeds)
    if not out["ok"]:
        raise CrossCheckFailure(json.dumps(out, sort_keys=True))
    return out


def cmd_quasiproduct(args):
    k, l, s, t, d = args.k, args.l, args.s, args.t, args.d
    circuits = quasi_product_circuits(k, l, s, t, d)
    out: dict = {
        "k": k,
        "l": l,
        "s": s,
        "t": t,
        "d": d,
        "circuits": [sorted(c) for c in circuits],
    }
    if args.check_axioms:
        ok = verify_circuit_axioms(circuits)
        m = MatroidView.from_circuits(k * l, circuits)
        out["axioms_hold"] = ok
        out["rank"] = m.full_rank() if ok else None
        if not ok:
            raise CrossCheckFailure(json.dumps(out, sort_keys=True))
    return out


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt_default = os.environ.get("CIDECOMP_FORMAT", "json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    p = argparse.ArgumentParser(prog="cidecomp", description="Components, dimensions and degrees of CI varieties")
    sub = p.add_subparsers(dest="cmd", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def grid(sp, k_default=None, s=False):
        sp.add_argument("--k", type=int, default=k_default, required=k_default is None)
        sp.add_argument("--l", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--d", type=int, required=True)
        if s:
            sp.add_argument("--s", type=int, default=2)

    def dlt(sp):
        sp.add_argument("--d", type=int, required=True)
        sp.add_argument("--l", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--force", action="store_true", help="lift the d*l cap on exhaustive oracles")

    sp = sub.add_parser("decompose", help="list the irreducible components")
    grid(sp, s=True)
    sp.add_argument("--summary", action="store_true")
    sp.add_argument("--method", choices=("k2", "teql"), default=None)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("dimension", help="dimension formulas")
    grid(sp, s=True)
    sp.add_argument("--S")
    sp.add_argument("--j", type=int)
    sp.set_defaults(func=cmd_dimension)

    sp = sub.add_parser("degree", help="degree of V_Delta (k = 2)")
    dlt(sp)
    sp.add_argument("--method", choices=deg.METHODS + ("all",), default="lgv")
    sp.add_argument("--json", action="store_true", help="same as --format json")
    sp.set_defaults(func=cmd_degree)

    sp = sub.add_parser("transversals", help="minimal transversals of A_t or B")
    dlt(sp)
    sp.add_argument("--hypergraph", choices=("A", "B"), default="A")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_transversals)

    sp = sub.add_parser("paths", help="non-intersecting West-South path families")
    dlt(sp)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_paths)

    sp = sub.add_parser("ideal", help="emit ideal generators")
    grid(sp, k_default=2, s=True)
    sp.add_argument("--S")
    sp.add_argument("--j", type=int)
    sp.add_argument("--target", choices=("I", "J", "initial", "IDelta"), default="J")
    sp.add_argument("--emit", choices=("generators", "cas"), default="generators")
    sp.set_defaults(func=cmd_ideal)

    sp = sub.add_parser("verify", help="sample components and check their equations")
    sp.add_argument("--seeds", type=int, default=20)
    sp.add_argument("--params", help='semicolon separated "t,d,l" triples')
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("quasiproduct", help="circuits of the quasi-product matroid")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--check-axioms", action="store_true")
    sp.set_defaults(func=cmd_quasiproduct)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "json", False):
        args.format = "json"
    try:
        result = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except CrossCheckFailure as exc:
        print(f"cross-check failed: {exc}", file=stderr)
        return 3
    text = result if isinstance(result, str) else _dump(result, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
