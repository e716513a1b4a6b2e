"""Command-line front end.

Exit codes: 0 the property holds / synthesis succeeded, 1 it fails / the
segment is unstable, 2 usage or numerical trouble.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .config import Tolerances
from .errors import IterationLimit, NoDeltaFound, NoEpsilonFound, SegmentUnstable, SPRError
from .polycore import Poly, bilinear_to_s, normalize_monic
from .sprcheck import verify_spr
from .stability import hurwitz_test, segment_grid_oracle, segment_stable
from .synthesis import certificate_document, synthesize

COMMANDS = ("check-stability", "check-segment", "check-spr", "synthesize", "plot-data")

# inline --coeffs order and file keys for each command
_ROLES = {
    "check-stability": ("a",),
    "check-segment": ("a", "b"),
    "check-spr": ("c", "a", "b"),
    "synthesize": ("a", "b"),
    "plot-data": ("c", "a", "b"),
}
_REQUIRED = {"check-stability": 1, "check-segment": 2, "check-spr": 2, "synthesize": 2, "plot-data": 3}


class UsageError(Exception):
    pass


def parse_coeffs(text):
    try:
        vals = [float(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise UsageError(f"could not parse coefficients {text!r}")
    if not vals:
        raise UsageError("empty coefficient list")
    if not all(math.isfinite(v) for v in vals):
        raise UsageError("coefficients must be finite")
    p = Poly(vals)
    if p.is_zero():
        raise UsageError("polynomial is identically zero")
    return p


def _load_inputs(args):
    roles = _ROLES[args.command]
    polys = {}
    if args.file:
        try:
            with open(args.file) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}")
        if not isinstance(doc, dict):
            raise UsageError("input file must hold one object")
        if "c" not in doc and "c_final" in doc:
            doc["c"] = doc["c_final"]
        for key in roles:
            if key in doc:
                val = doc[key]
                text = val if isinstance(val, str) else ",".join(repr(float(v)) for v in val)
                polys[key] = parse_coeffs(text)
    for key, text in zip(roles, args.coeffs or ()):
        polys[key] = parse_coeffs(text)
    if len(args.coeffs or ()) > len(roles):
        raise UsageError(f"{args.command} takes at most {len(roles)} --coeffs")
    have = [k for k in roles if k in polys]
    if len(have) < _REQUIRED[args.command] or have != list(roles[: len(have)]):
        raise UsageError(f"{args.command} needs {', '.join(roles[:_REQUIRED[args.command]])}")
    if args.discrete:
        polys = {k: bilinear_to_s(p) for k, p in polys.items()}
    return polys


def _monic(p):
    return normalize_monic(p)[0]


def _num(v):
    if v is None:
        return None
    v = float(v)
    return v if math.isfinite(v) else ("inf" if v > 0 else "-inf")


def _tolerances(args):
    kw = {}
    if args.tol_pos is not None:
        kw["tau_pos"] = args.tol_pos
    if args.tol_root is not None:
        kw["tau_root"] = args.tol_root
    if args.eta is not None:
        kw["eta"] = args.eta
    if args.max_iters is not None:
        kw["max_iters"] = args.max_iters
    try:
        return Tolerances(**kw)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_check_stability(polys, tol, args):
    p = polys["a"]
    if p.degree < 1:
        raise UsageError("need degree >= 1")
    ok = hurwitz_test(p, tol)
    return {"command": args.command, "polynomial": p.to_list(), "hurwitz": ok}, 0 if ok else 1


def _cmd_check_segment(polys, tol, args):
    a, b = _monic(polys["a"]), _monic(polys["b"])
    v = segment_stable(a, b, tol)
    doc = {
        "command": args.command,
        "a": a.to_list(),
        "b": b.to_list(),
        "stable": v.stable,
        "witness_lambda": _num(v.witness_lambda),
        "witness_omega": _num(v.witness_omega),
        "endpoint_stable": list(v.endpoint_reports),
    }
    if args.lambda_grid:
        doc["grid_oracle"] = {"K": args.lambda_grid, "stable": segment_grid_oracle(a, b, args.lambda_grid, tol)}
    return doc, 0 if v.stable else 1


def _cmd_check_spr(polys, tol, args):
    c = polys["c"]
    reports = {}
    ok_all = True
    for key in ("a", "b"):
        if key not in polys:
            continue
        rep = verify_spr(c, polys[key], tol)
        pos = rep.positivity
        reports[key] = {
            "denominator": polys[key].to_list(),
            "spr": rep.ok,
            "failed_condition": rep.failed_condition,
            "margin": _num(pos.margin) if pos else None,
            "t_witness": _num(pos.t_witness) if pos else None,
        }
        ok_all &= rep.ok
    doc = {"command": args.command, "c": c.to_list(), "results": reports, "spr": ok_all}
    return doc, 0 if ok_all else 1


def _cmd_synthesize(polys, tol, args):
    a, b = _monic(polys["a"]), _monic(polys["b"])
    if a.degree != b.degree:
        raise UsageError("endpoints must have equal degree")
    try:
        res = synthesize(a, b, tol)
    except SegmentUnstable as exc:
        v = exc.verdict
        doc = {
            "command": args.command,
            "status": "segment_unstable",
            "a": a.to_list(),
            "b": b.to_list(),
            "witness_lambda": _num(v.witness_lambda) if v else None,
            "witness_omega": _num(v.witness_omega) if v else None,
        }
        return doc, 1
    except (IterationLimit, NoEpsilonFound, NoDeltaFound) as exc:
        doc = {"command": args.command, "status": "numerical_failure", "a": a.to_list(),
               "b": b.to_list(), "diagnostic": str(exc)}
        print(f"robustspr: {exc}", file=sys.stderr)
        return doc, 2
    doc = certificate_document(res, a, b, tol)
    doc.update(command=args.command, status="ok")
    return doc, 0


def plot_rows(c, a, b, omega_min=1e-3, omega_max=1e3, points=1001):
    w = np.logspace(np.log10(omega_min), np.log10(omega_max), points)
    s = 1j * w
    cv = c(s)
    return w, np.real(cv / a(s)), np.real(cv / b(s))


def _cmd_plot_data(polys, tol, args):
    if not (0 < args.omega_min < args.omega_max) or args.points < 2:
        raise UsageError("need 0 < omega-min < omega-max and points >= 2")
    w, ra, rb = plot_rows(polys["c"], polys["a"], polys["b"], args.omega_min, args.omega_max, args.points)
    lines = ["omega,re_c_over_a,re_c_over_b"]
    lines += [f"{wi!r},{ai!r},{bi!r}" for wi, ai, bi in zip(w.tolist(), ra.tolist(), rb.tolist())]
    return "\n".join(lines) + "\n", 0


_HANDLERS = {
    "check-stability": _cmd_check_stability,
    "check-segment": _cmd_check_segment,
    "check-spr": _cmd_check_spr,
    "synthesize": _cmd_synthesize,
    "plot-data": _cmd_plot_data,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="robustspr", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"robustspr {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--coeffs", action="append", metavar="C0,C1,...",
                    help="polynomial coefficients, highest degree first; repeat for each operand")
    ap.add_argument("--file", help="JSON object with keys a, b (and c or c_final)")
    ap.add_argument("--output", "-o", help="write the result here instead of stdout")
    ap.add_argument("--tol-pos", type=float)
    ap.add_argument("--tol-root", type=float)
    ap.add_argument("--eta", type=float)
    ap.add_argument("--max-iters", type=int)
    ap.add_argument("--lambda-grid", type=int, metavar="K", help="also run the K-point lambda grid oracle")
    ap.add_argument("--discrete", action="store_true",
                    help="inputs are discrete-time; map them through the bilinear transform first")
    ap.add_argument("--omega-min", type=float, default=1e-3)
    ap.add_argument("--omega-max", type=float, default=1e3)
    ap.add_argument("--points", type=int, default=1001)
    return ap


def run(argv=None):
    """Parse ``argv``, execute, and return ``(exit_code, output_text, output_path)``."""
    args = build_parser().parse_args(argv)
    if args.lambda_grid is not None and args.lambda_grid < 2:
        raise UsageError("--lambda-grid must be >= 2")
    tol = _tolerances(args)
    polys = _load_inputs(args)
    doc, code = _HANDLERS[args.command](polys, tol, args)
    text = doc if isinstance(doc, str) else json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return code, text, args.output


def main(argv=None):
    try:
        code, text, out = run(argv)
    except UsageError as exc:
        print(f"robustspr: error: {exc}", file=sys.stderr)
        return 2
    except SPRError as exc:
        print(f"robustspr: error: {exc}", file=sys.stderr)
        return 2
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
