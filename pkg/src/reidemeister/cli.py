"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 the input was rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List

from .cobordism import HeegaardWord, KnotInput, PreconditionError, PresentedCobordism, compose_presented, dual_word, word_to_presentation
from .coeff import format_poly
from .duality import verify_95, verify_duality
from .exterior import proj_eq
from .functor import (
    MagnusError,
    closed_torsion,
    eval_presented,
    eval_word,
    integrality_check,
    knot_alexander,
    knot_torsion,
    magnus_extract,
)
from .io import InputError, dumps, load_document, map_report, normalized_str, render_map_text, render_value, to_document
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Result:
    """Accumulates text lines and a JSON payload for one command."""

    def __init__(self):
        self.lines: List[str] = []
        self.data: Dict[str, Any] = {}
        self.status = EXIT_OK

    def fail(self):
        self.status = EXIT_FAIL


def _value(obj):
    if isinstance(obj, HeegaardWord):
        return eval_word(obj)
    if isinstance(obj, PresentedCobordism):
        return eval_presented(obj)
    if isinstance(obj, KnotInput):
        return eval_presented(obj.exterior())
    raise InputError(f"cannot evaluate {type(obj).__name__}")


def _magnus(v, res: Result, required=False):
    try:
        tau, r = magnus_extract(v)
    except MagnusError as e:
        if required:
            res.lines.append(f"not a homology cobordism value: {e}")
            res.data["magnus"] = {"error": str(e)}
            res.fail()
        return
    rows = [[render_value(x) for x in row] for row in r]
    res.data["magnus"] = {"tau": normalized_str(tau), "r": rows}
    res.lines.append(f"tau = {normalized_str(tau)} (up to units)")
    res.lines.append("r =" if rows else "r = []")
    res.lines.extend("  [" + ", ".join(row) + "]" for row in rows)


def _report_value(v, res: Result):
    rep = map_report(v)
    res.data["value"] = rep
    res.data["integral"] = integrality_check(v)
    res.lines.extend(render_map_text(rep))
    res.lines.append(f"integral: {'yes' if res.data['integral'] else 'no'}")


def _delta_line(k: KnotInput, res: Result):
    d = knot_alexander(k)
    res.data["alexander"] = format_poly(d)
    res.lines.append(f"Delta = {format_poly(d)} (up to ±t^k)")


def cmd_eval(args, res: Result):
    doc, obj = load_document(args.file, args.vars)
    if isinstance(obj, KnotInput):
        if doc["kind"] == "knot" and obj.nvars == 1 and obj.phi.exp(obj.meridian) == (1,):
            _delta_line(obj, res)
        if obj.parallel is None:
            return
    v = _value(obj)
    _report_value(v, res)
    if v.rep.degree == 0:
        _magnus(v, res)


def cmd_knot(args, res: Result):
    _, k = load_document(args.file, args.vars)
    if not isinstance(k, KnotInput):
        raise InputError("knot needs a knot or closed-manifold document")
    _delta_line(k, res)
    tau = knot_torsion(k, k.meridian)
    res.data["torsion"] = normalized_str(tau)
    res.lines.append(f"torsion = {normalized_str(tau)} (up to units)")


def cmd_closed(args, res: Result):
    _, k = load_document(args.file, args.vars)
    if not isinstance(k, KnotInput):
        raise InputError("closed needs a knot or closed-manifold document")
    if k.parallel is None:
        raise InputError("closed needs a parallel word")
    tau = closed_torsion(k)
    res.data["torsion"] = normalized_str(tau)
    res.lines.append(f"tau = {normalized_str(tau)} (up to units)")


def cmd_magnus(args, res: Result):
    _, obj = load_document(args.file, args.vars)
    v = _value(obj)
    _magnus(v, res, required=True)


def cmd_compose(args, res: Result):
    _, a = load_document(args.file_a, args.vars)
    _, b = load_document(args.file_b, args.vars)
    if isinstance(a, KnotInput) or isinstance(b, KnotInput):
        raise InputError("compose takes heegaard-word or presented-cobordism documents")
    pa = a if isinstance(a, PresentedCobordism) else None
    pb = b if isinstance(b, PresentedCobordism) else None
    if pa is None and pb is None:
        if a.target != b.source:
            raise InputError(f"target {a.target} of the first word differs from source {b.source} of the second")
        whole = eval_word(a.then(b))
    else:
        pa = pa or word_to_presentation(a)
        pb = pb or word_to_presentation(b)
        if pa.nvars != pb.nvars or pa.g_plus != pb.g_minus:
            raise InputError("the cobordisms do not compose: genus or variable count mismatch")
        if pa.target_object() != pb.source_object():
            raise InputError(f"phi mismatch on the glued surface: {pa.target_object()} vs {pb.source_object()}")
        whole = eval_presented(compose_presented(pa, pb))
    parts = _value(b).compose(_value(a))
    _report_value(whole, res)
    ok = proj_eq(whole, parts)
    res.data["functoriality"] = ok
    res.lines.append(f"functoriality: {'pass' if ok else 'FAIL'}")
    if not ok:
        res.fail()


def cmd_dual(args, res: Result):
    _, w = load_document(args.file, args.vars)
    if not isinstance(w, HeegaardWord):
        raise InputError("dual needs a heegaard-word document")
    dw = dual_word(w)
    v, vb = eval_word(w), eval_word(dw)
    ok92 = verify_duality(w, v, vb)
    ok95 = verify_95(w, v, vb)
    res.data["dual"] = to_document(dw)
    res.data["duality"] = ok92
    res.data["volume-duality"] = ok95
    res.lines.append(dumps(to_document(dw)))
    res.lines.append(f"duality: {'pass' if ok92 else 'FAIL'}")
    res.lines.append(f"volume duality: {'pass' if ok95 else 'FAIL'}")
    if not (ok92 and ok95):
        res.fail()


def cmd_verify(args, res: Result):
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}", "usage")
    if args.count is not None and args.count < 0:
        raise InputError("--count must be nonnegative", "usage")
    rep = run_suite(args.suite, args.seed, args.vars, args.count)
    res.data = rep.as_dict()
    res.lines.append(f"{rep.suite}: {'pass' if rep.ok else 'FAIL'} {rep.passed}/{rep.instances} (seed {rep.seed})")
    for key, val in sorted(rep.notes.items()):
        res.lines.append(f"  {key}: {val}")
    for i, ce in enumerate(rep.counterexamples):
        res.lines.append(f"counterexample {i + 1} [{ce['check']}] {ce.get('detail', '')}".rstrip())
        if "documents" in ce:
            res.lines.append(dumps(ce["documents"]))
            res.lines.append(f"  reproduced on replay: {ce['reproduced']}")
    if not rep.ok:
        res.fail()


def _common(p: argparse.ArgumentParser):
    p.add_argument("--vars", "--n", dest="vars", type=int, default=None, metavar="N",
                   help="number of Laurent variables (rank of G)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reidemeister", description="Evaluate and verify the Reidemeister functor.")
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _common(common)
    for name, fn, hlp in (("eval", cmd_eval, "evaluate a document"),
                          ("knot", cmd_knot, "Alexander polynomial and torsion of a knot"),
                          ("closed", cmd_closed, "torsion of a closed manifold"),
                          ("magnus", cmd_magnus, "Magnus/tau factorization of a homology cobordism"),
                          ("dual", cmd_dual, "dual word and duality checks")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("file")
        p.set_defaults(func=fn)
    p = sub.add_parser("compose", parents=[common], help="evaluate B o A and check functoriality")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_compose)
    p = sub.add_parser("verify", parents=[common], help="run a randomized verification suite")
    p.add_argument("suite", help=", ".join(SUITES))
    p.add_argument("--count", type=int, default=None, help="instances per sweep (default per suite)")
    p.set_defaults(func=cmd_verify)
    return ap


def _emit_error(args, code, message):
    if getattr(args, "json", False):
        print(json.dumps({"error": {"code": code, "message": message}}, sort_keys=True))
    else:
        print(f"error[{code}]: {message}", file=sys.stderr)
    return EXIT_INPUT


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.vars is not None and args.vars < 0:
        return _emit_error(args, "usage", "--vars must be nonnegative")
    res = Result()
    try:
        args.func(args, res)
    except InputError as e:
        return _emit_error(args, e.code, str(e))
    except PreconditionError as e:
        return _emit_error(args, "precondition", str(e))
    except ValueError as e:
        return _emit_error(args, "schema", str(e))
    if args.json:
        print(json.dumps(res.data, indent=2, sort_keys=True))
    else:
        print("\n".join(res.lines))
    return res.status


if __name__ == "__main__":
    sys.exit(main())
