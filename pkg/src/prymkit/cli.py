"""Command-line front end: verification suites, pencil classification,
fiber tables, and invariants of input curves, all emitted as JSON lines."""

from __future__ import annotations

import argparse
import json
import sys

from .rat import rat, rat_str
from .upoly import UPoly, discriminant
from .jsonio import dumps
from . import genus2 as g2
from . import pencil3 as p3
from . import fibration as fb
from .verify import RunConfig, SUITE_ORDER, run_suites, recheck_certificate

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _parse_lambda(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError("--lambda expects three comma-separated rationals")
    return tuple(rat(p) for p in parts)


def _add_moduli_args(ap: argparse.ArgumentParser):
    ap.add_argument("--lambda", dest="lambdas", default="9,2,8",
                    help="Rosenhain branch points, e.g. 9,2,8")
    ap.add_argument("--kappa15", default="3", help="square root of lambda1")
    ap.add_argument("--kappa23", default="4", help="square root of lambda2*lambda3")
    ap.add_argument("--variant", choices=("k15", "k23"), default="k15")


def _config(args) -> RunConfig:
    lambdas = _parse_lambda(args.lambdas)
    ts = tuple(rat(t) for t in getattr(args, "t", None) or ())
    suites = tuple(getattr(args, "suite", None) or ("all",))
    return RunConfig(lambdas, rat(args.kappa15), rat(args.kappa23), args.variant, ts, suites)


def _emit(out, obj):
    out.write(dumps(obj) + "\n")


def cmd_verify(args, out) -> int:
    if args.recheck:
        ok_all = True
        with open(args.recheck) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                cert = json.loads(line)
                ok, failures = recheck_certificate(cert)
                ok_all &= ok
                _emit(out, {"suite": cert.get("suite"), "recheck": "pass" if ok else "fail",
                            "failures": failures})
        return EXIT_OK if ok_all else EXIT_SUITE_FAILURE
    cfg = _config(args)
    certs = run_suites(cfg)
    sink = out
    close = None
    if args.out:
        close = open(args.out, "w")
        sink = close
    ok_all = True
    try:
        for cert in certs:
            ok_all &= cert.status == "pass"
            _emit(sink, cert.to_json())
    finally:
        if close:
            close.close()
    if args.out:
        for cert in certs:
            _emit(out, {"suite": cert.suite, "status": cert.status,
                        "checks": len(cert.checks)})
    return EXIT_OK if ok_all else EXIT_SUITE_FAILURE


def cmd_pencil(args, out) -> int:
    cfg = _config(args)
    if not cfg.ts:
        raise ValueError("pencil classify needs at least one --t value")
    pp = p3.PencilParams.from_cover(cfg.cover(), cfg.variant)
    for t in cfg.ts:
        mc = p3.classify_member(pp, t)
        record = {"t": rat_str(rat(t)), "class": mc.kind, "witness": mc.witness}
        if mc.kind == "ReducibleLinePlusGenus2":
            record["witness"]["genus2_component"] = p3.node_genus2(pp, t).to_json()
        _emit(out, record)
    return EXIT_OK


def cmd_fibers(args, out) -> int:
    cfg = _config(args)
    from .verify import families

    fams = families(cfg)
    wanted = args.family or sorted(fams)
    for name in wanted:
        if name not in fams:
            raise ValueError(f"unknown family {name!r}; choose from {sorted(fams)}")
        reports = fb.classify_fibers(fams[name])
        _emit(out, {
            "family": name,
            "inventory": fb.fiber_inventory(reports),
            "fibers": [r.to_json() for r in reports],
            "total_ord_delta": fb.total_ord_delta(reports),
        })
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    coeffs = [rat(str(v)) for v in json.loads(args.curve)]
    f = UPoly(coeffs)
    if f.degree not in (5, 6):
        raise ValueError("curve polynomial must have degree 5 or 6")
    if discriminant(f) == 0:
        raise ValueError("curve polynomial is not squarefree")
    curve = g2.Genus2Curve(f)
    _emit(out, {"curve": f.to_json(), "igusa_clebsch": g2.igusa_clebsch(curve).to_json()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prymkit",
                                 description="exact verification of the pencil geometry")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    _add_moduli_args(v)
    v.add_argument("--suite", action="append", choices=["all"] + SUITE_ORDER)
    v.add_argument("--t", action="append")
    v.add_argument("--out", help="write certificates (JSON lines) to this path")
    v.add_argument("--recheck", help="re-validate a certificate file from witness data")

    p = sub.add_parser("pencil", help="classify pencil members")
    psub = p.add_subparsers(dest="pencil_command", required=True)
    pc = psub.add_parser("classify")
    _add_moduli_args(pc)
    pc.add_argument("--t", action="append", required=True)

    f = sub.add_parser("fibers", help="fiber tables of the five families")
    _add_moduli_args(f)
    f.add_argument("--family", action="append",
                   choices=["shioda", "kummer12", "dual_kummer", "pencil_jac", "pencil_dual"])

    i = sub.add_parser("invariants", help="invariants of an input sextic")
    i.add_argument("--curve", required=True,
                   help="JSON array of rational coefficients, ascending degree")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "pencil":
            return cmd_pencil(args, out)
        if args.command == "fibers":
            return cmd_fibers(args, out)
        if args.command == "invariants":
            return cmd_invariants(args, out)
        raise ValueError(f"unknown command {args.command}")
    except (ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
