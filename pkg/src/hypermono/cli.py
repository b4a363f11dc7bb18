"""Command-line surface: deterministic JSON reports over the module layer.

Exit codes: 0 success, 1 I/O error, 2 validation error, 3 cap exceeded,
4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra.unity import UnityClass
from .chargeom import (
    DescriptorError,
    HypDescriptor,
    belyi_wild_obstruction,
    determinant_char,
    i0_simple,
    i0_spectrum,
    kummer_induced,
    wild_image_order,
)
from .gates import (
    GateDataError,
    GroupFamily,
    TraceTable,
    bound1_consequence,
    bound2_check,
    brauerp_transfer,
    char_sheaf_decision,
    landau,
    m11_trace_tables,
    meo_bound,
    min_dim,
    order_chain,
    p_center_constraints,
    ppd,
)
from .repkit import CapExceeded
from .splus import splus_verdict, tensor_induction_feasibility, indecomposability_ok

SCHEMA = "hypermono/1"

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_ORACLE = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _report(command: str, inputs, result) -> dict:
    return {"schema": SCHEMA, "version": __version__, "command": command, "input": inputs, "result": result}


def _emit(obj: dict, out_path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_descriptor(path: str) -> HypDescriptor:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_IO, f"bad JSON in {path}: {exc}")
    try:
        return HypDescriptor.from_json(obj)
    except DescriptorError as exc:
        raise CliError(EXIT_VALIDATION, str(exc))


def _spectrum_json(s) -> dict:
    return {str(u): m for u, m in s.mult.items()}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_analyze(args) -> dict:
    h = _load_descriptor(args.descriptor)
    kummer = kummer_induced(h)
    result = {
        "p": h.p,
        "type": list(h.type),
        "W": h.W,
        "upstairs": [str(u) for u in h.upstairs],
        "downstairs": [str(u) for u in h.downstairs],
        "kummer_induced_degree": kummer,
        "determinant": str(determinant_char(h)),
        "wild_image_order": wild_image_order(h),
        "i0_spectrum": _spectrum_json(i0_spectrum(h)),
        "i0_simple": i0_simple(h),
        "p_center_constraints": p_center_constraints(h),
    }
    if h.m > 0:
        ob = belyi_wild_obstruction(h)
        result["belyi_obstruction"] = {
            "possible": ob.possible,
            "witnesses": [list(w) for w in ob.witnesses],
        }
    return _report("analyze", {"descriptor": h.to_json()}, result)


def cmd_splus(args) -> dict:
    h = _load_descriptor(args.descriptor)
    primitive = {"yes": True, "no": False, "unknown": None}[args.primitive]
    v = splus_verdict(h, primitive)
    result = {
        "verdict": v.to_json(),
        "tensor_induction_candidates": [
            {"n": n, "annotation": note} for n, note in tensor_induction_feasibility(h)
        ],
        "indecomposable": list(indecomposability_ok(h)),
    }
    return _report("splus", {"descriptor": h.to_json(), "primitive": args.primitive}, result)


def cmd_ss(args) -> dict:
    from .stonevn import ss_extr_enumerate, ss_sp_enumerate, ss_sp_oracle
    from .weilgl import ExcludedCase, ss_enumerate, ss_exhaustive_check

    fam = args.family.capitalize()
    inputs = {"family": fam, "n": args.n, "q": args.q, "exhaustive": args.exhaustive}
    try:
        if fam in ("Linear", "Unitary"):
            if args.exhaustive:
                rep = ss_exhaustive_check(fam, args.n, args.q)
                if rep.agree is False:
                    raise CliError(EXIT_ORACLE, f"oracle mismatch: {rep.counterexamples}")
                return _report("ss", inputs, rep.to_json())
            types = ss_enumerate(fam, args.n, args.q)
            return _report("ss", inputs, {"types": [t.to_json() for t in types]})
        if fam == "Symplectic":
            if args.exhaustive:
                return _report("ss", inputs, ss_sp_oracle(args.n, args.q))
            types = ss_sp_enumerate(args.n, args.q)
            return _report("ss", inputs, {"types": [t.to_json() for t in types]})
        if fam == "Extraspecial":
            return _report(
                "ss", inputs, {"central_orders": ss_extr_enumerate(args.q, args.n, override=True)}
            )
    except ExcludedCase as exc:
        raise CliError(EXIT_VALIDATION, str(exc))
    raise CliError(EXIT_VALIDATION, f"unknown family {args.family}")


def cmd_spectrum(args) -> dict:
    from .weilgl import (
        LINEAR,
        WeilCharSpec,
        gl_singer,
        gu_torus_element,
        weil_spectrum,
    )

    fam = args.family.capitalize()
    spec = WeilCharSpec(fam, args.n, args.q, args.index)
    if fam == LINEAR:
        g = gl_singer(args.n, args.q)
        torus_order = args.q**args.n - 1
    else:
        torus_order = args.q**args.n - (-1) ** args.n
        g = gu_torus_element(args.n, args.q, torus_order)
    s = weil_spectrum(spec, g)
    return _report(
        "spectrum",
        {"family": fam, "n": args.n, "q": args.q, "index": args.index, "torus": "Singer"},
        {
            "torus_element_order": torus_order,
            "degree": spec.degree,
            "spectrum": _spectrum_json(s),
            "simple": s.is_simple(),
        },
    )


def cmd_gates(args) -> dict:
    sub = args.gate
    if sub == "landau":
        return _report("gates/landau", {"n": args.n}, {"landau": landau(args.n)})
    if sub == "ppd":
        return _report("gates/ppd", {"p": args.p, "k": args.k}, {"ppd": ppd(args.p, args.k)})
    if sub == "meo":
        fam = _parse_family(args.args)
        try:
            meo, meo_kind = meo_bound(fam)
            dim, dim_kind = min_dim(fam)
        except GateDataError as exc:
            raise CliError(EXIT_VALIDATION, str(exc))
        return _report(
            "gates/meo",
            {"family": repr(fam)},
            {"meo": meo, "meo_kind": meo_kind, "min_dim": dim, "min_dim_kind": dim_kind},
        )
    if sub == "chain":
        ok = order_chain(args.ds, args.dim, args.obar, args.meo)
        return _report(
            "gates/chain",
            {"d_S": args.ds, "dim": args.dim, "obar": args.obar, "meo": args.meo},
            {"holds": ok},
        )
    if sub == "charsheaf":
        fam = _parse_family(args.args)
        try:
            dec = char_sheaf_decision(fam, args.dim)
        except GateDataError as exc:
            raise CliError(EXIT_VALIDATION, str(exc))
        return _report(
            "gates/charsheaf",
            {"family": repr(fam), "dim": args.dim},
            {"must_equal": dec.must_equal, "exception": dec.exception_member},
        )
    if sub == "bounds":
        return _report(
            "gates/bounds",
            {"d": args.d, "W": args.w, "index": args.index},
            {
                "bound1": bound1_consequence(args.d, args.w),
                "bound2_holds": bound2_check(args.w, args.d, args.index),
            },
        )
    if sub == "brauerp":
        if args.m11:
            tabs = m11_trace_tables()
            t1, t2 = tabs["deg11"], tabs["deg10_rational"]
            type1 = (11, 3)
        else:
            try:
                with open(args.tables) as fh:
                    obj = json.load(fh)
            except OSError as exc:
                raise CliError(EXIT_IO, str(exc))
            t1 = TraceTable.from_json(obj["table1"])
            t2 = TraceTable.from_json(obj["table2"])
            type1 = tuple(obj["type1"])
        out = brauerp_transfer(t1, t2, type1)
        return _report(
            "gates/brauerp",
            {"table1": t1.label, "table2": t2.label, "type1": list(type1)},
            {"type2": None if out is None else list(out)},
        )
    raise CliError(EXIT_VALIDATION, f"unknown gate {sub}")


def _parse_family(tokens: list[str]) -> GroupFamily:
    if not tokens:
        raise CliError(EXIT_VALIDATION, "family spec required")
    tag = tokens[0]
    try:
        if tag == "Sporadic":
            return GroupFamily("Sporadic", name=tokens[1])
        if tag == "Alternating":
            return GroupFamily("Alternating", n=int(tokens[1]))
        if tag == "ExtraspecialNormalizer":
            return GroupFamily("ExtraspecialNormalizer", p=int(tokens[1]), n=int(tokens[2]), eps=tokens[3] if len(tokens) > 3 else None)
        return GroupFamily(tag, n=int(tokens[1]), q=int(tokens[2]))
    except (IndexError, ValueError) as exc:
        raise CliError(EXIT_VALIDATION, f"bad family spec {tokens}: {exc}")


def cmd_construct(args) -> dict:
    from .constructions import alt2_family, sawin, special_family

    try:
        if args.kind == "sawin":
            h = sawin(args.A, args.B, args.p, args.side)
            extra = {}
        elif args.kind == "alt2":
            h, grp, ct = alt2_family(args.n, args.k, args.p)
            extra = {"expected_group": grp, "i0_cycle_type": ct}
        elif args.kind == "special":
            params = {"N": args.N} if args.name == "F_N" else {"D": args.D, "chi": args.chi}
            h = special_family(args.name, params, args.p)
            extra = {}
        else:
            raise CliError(EXIT_VALIDATION, f"unknown construction {args.kind}")
    except DescriptorError as exc:
        raise CliError(EXIT_VALIDATION, str(exc))
    result = {"descriptor": h.to_json(), "type": list(h.type), "W": h.W, **extra}
    return _report(f"construct/{args.kind}", vars_without(args, {"func", "out"}), result)


def cmd_tables(args) -> dict:
    from .constructions import table3_consistency, table3_entries, table12_data

    if args.table == "3":
        entries = [e.to_json() for e in table3_entries()]
        result = {"entries": entries}
        if args.check:
            rep = table3_consistency()
            result["consistency"] = rep
            if not rep["all_passed"]:
                raise CliError(EXIT_ORACLE, "table consistency battery failed")
        return _report("tables/3", {"check": args.check}, result)
    data = table12_data()
    if args.table == "1":
        result = {"table1": data["table1"], "meo_mindim": data["table1_meo_mindim"]}
    else:
        result = {"table2": data["table2"]}
        if args.check:
            from .gates import table2_gate_check

            rows = table2_gate_check()
            result["gate"] = [{"S": s, "meo": m, "min_dim": d, "passes": ok} for s, m, d, ok in rows]
            if not all(ok for *_, ok in rows):
                raise CliError(EXIT_ORACLE, "meo < minimal degree fails on a row")
    return _report(f"tables/{args.table}", {"check": args.check}, result)


def cmd_m4(args) -> dict:
    from .repkit import CycMatrix, closure, m4 as m4_op
    from .algebra.cyc import Cyc

    try:
        with open(args.generators) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_IO, str(exc))

    def load_entry(e):
        if isinstance(e, dict):
            return Cyc(int(e["conductor"]), tuple(int(c) for c in e["coeffs"]), int(e.get("den", 1)))
        if isinstance(e, str):
            u = UnityClass.parse(e)
            return Cyc.root(u)
        return Cyc.from_int(int(e))

    gens = [
        CycMatrix.from_rows([[load_entry(x) for x in row] for row in mat]) for mat in obj["matrices"]
    ]
    try:
        G = closure(gens, cap=args.cap)
    except CapExceeded as exc:
        raise CliError(EXIT_CAP, str(exc))
    return _report(
        "m4",
        {"generators": args.generators},
        {"group_order": G.order, "m4": m4_op(G)},
    )


def vars_without(args, skip):
    return {k: v for k, v in vars(args).items() if k not in skip and not callable(v)}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypermono", description=__doc__)
    p.add_argument("--out", help="write the JSON report to this file")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="full local-data report for a descriptor file")
    sp.add_argument("descriptor")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("splus", help="structural-condition verdict for a descriptor file")
    sp.add_argument("descriptor")
    sp.add_argument("--primitive", choices=["yes", "no", "unknown"], default="unknown")
    sp.set_defaults(func=cmd_splus)

    sp = sub.add_parser("ss", help="simple-spectrum torus types / oracles")
    sp.add_argument("family", choices=["linear", "unitary", "symplectic", "extraspecial"])
    sp.add_argument("n", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--exhaustive", action="store_true")
    sp.set_defaults(func=cmd_ss)

    sp = sub.add_parser("spectrum", help="exact Weil-module spectrum of a torus generator")
    sp.add_argument("family", choices=["linear", "unitary"])
    sp.add_argument("n", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--index", type=int, default=0)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("gates", help="arithmetic gate battery")
    gsub = sp.add_subparsers(dest="gate", required=True)
    g = gsub.add_parser("landau")
    g.add_argument("n", type=int)
    g = gsub.add_parser("ppd")
    g.add_argument("p", type=int)
    g.add_argument("k", type=int)
    g = gsub.add_parser("meo")
    g.add_argument("args", nargs="+")
    g = gsub.add_parser("chain")
    g.add_argument("ds", type=int)
    g.add_argument("dim", type=int)
    g.add_argument("obar", type=int)
    g.add_argument("meo", type=int)
    g = gsub.add_parser("charsheaf")
    g.add_argument("dim", type=int)
    g.add_argument("args", nargs="+")
    g = gsub.add_parser("bounds")
    g.add_argument("d", type=int)
    g.add_argument("w", type=int)
    g.add_argument("--index", type=int, default=1)
    g = gsub.add_parser("brauerp")
    g.add_argument("--tables", help="JSON file with table1, table2, type1")
    g.add_argument("--m11", action="store_true", help="use the embedded M11 tables")
    sp.set_defaults(func=cmd_gates)

    sp = sub.add_parser("construct", help="descriptor factories")
    csub = sp.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("sawin")
    c.add_argument("A", type=int)
    c.add_argument("B", type=int)
    c.add_argument("p", type=int)
    c.add_argument("--side", choices=["quotient-at-C", "quotient-at-A", "i", "ii"], default="i")
    c = csub.add_parser("alt2")
    c.add_argument("n", type=int)
    c.add_argument("p", type=int)
    c.add_argument("--k", type=int, default=None)
    c = csub.add_parser("special")
    c.add_argument("name", choices=["F_N", "G_D"])
    c.add_argument("p", type=int)
    c.add_argument("--N", type=int)
    c.add_argument("--D", type=int)
    c.add_argument("--chi")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("tables", help="embedded catalogs")
    sp.add_argument("table", choices=["1", "2", "3"])
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("m4", help="fourth moment of a matrix group from a generators file")
    sp.add_argument("generators")
    sp.add_argument("--cap", type=int, default=None)
    sp.set_defaults(func=cmd_m4)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DescriptorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit(report, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
