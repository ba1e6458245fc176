"""Command-line front end: ``wallach <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels, catalog, omega
from .errors import DomainError, InputError, SizeLimitError
from .liealg import VALUE_TOL

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str
    threads: int | None
    mode: str = "exact"
    tol: float = VALUE_TOL

    def __post_init__(self):
        if not self.tol > 0:
            raise InputError("tolerances must be positive")
        if self.threads is not None and self.threads < 1:
            raise InputError("thread count must be positive")


def parse_rational(text: str) -> Fraction:
    """``p/q``, integers and decimals, converted exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------------ commands


def cmd_catalog(args, out) -> int:
    if args.table == 1:
        out.write(catalog.catalog_json() if args.format == "json" else catalog.catalog_text())
    elif args.table == 2:
        rows = []
        for t in catalog.TABLE2:
            kind = t.rule[0]
            target = t.rule[1] if kind != "reject" else None
            rows.append({
                "line": t.line, "g": t.g, "h": t.h, "k": list(t.k), "params": list(t.param_names),
                "rule": kind, "table1_line": target,
                "reason": t.rule[1] if kind == "reject" else None,
            })
        if args.format == "json":
            out.write(_dump(rows))
        else:
            out.write(catalog.format_table(
                [[r["line"], r["g"], r["h"], r["rule"], r["table1_line"] or "-"] for r in rows],
                ["N", "g", "h", "rule", "Table 1"]))
    else:
        ents = list(catalog.KILLING_TABLE)
        if args.format == "json":
            data = {"exceptional": [{"name": e.name, "dim": e.dim, "b_max": e.b_max} for e in ents],
                    "classical": {"so(n)": "4(n-2)", "sp(n)": "4(n+1)", "su(n)": "4n"}}
            out.write(_dump(data))
        else:
            rows = [["so(n)", "n(n-1)/2", "4(n-2)"], ["sp(n)", "n(2n+1)", "4(n+1)"], ["su(n)", "n^2-1", "4n"]]
            rows += [[e.name, e.dim, e.b_max] for e in ents]
            out.write(catalog.format_table(rows, ["g", "dim", "B(beta_max, beta_max)"]))
    return EXIT_OK


_COMPUTE_FAMILIES = ("so", "su", "sp", "su-u", "so-u", "ledger-obata", "sym-product")


def _build(family: str, params: list[str]):
    from . import spaces

    ints = []
    if family != "ledger-obata":
        try:
            ints = [int(p) for p in params]
        except ValueError as exc:
            raise InputError(f"parameters must be integers: {params}") from exc
    if family in ("so", "su", "sp"):
        if len(ints) != 3:
            raise InputError(f"{family} needs --params k,l,m")
        line = {"so": 1, "su": 2, "sp": 3}[family]
        dec = spaces.make_flag_family(family.upper(), *ints)
        return dec, catalog.closed_form(catalog.record(line), tuple(ints)), line
    if family in ("su-u", "so-u"):
        if len(ints) != 1:
            raise InputError(f"{family} needs --params l")
        if family == "su-u":
            dec, line = spaces.make_su_u(ints[0]), 4
        else:
            dec, line = spaces.make_so_u(ints[0]), 5
        return dec, catalog.closed_form(catalog.record(line), tuple(ints)), line
    if family == "ledger-obata":
        if len(params) != 2:
            raise InputError("ledger-obata needs --params FAMILY,n (e.g. su,2)")
        try:
            n = int(params[1])
        except ValueError as exc:
            raise InputError(f"bad size {params[1]!r}") from exc
        dec = spaces.make_ledger_obata(params[0], n)
        f = dec.alg.summand
        A = Fraction(f.dim, 4)
        return dec, catalog.ClosedForm(dec.dims, (Fraction(1, 4),) * 3, A), None
    if family == "sym-product":
        n = ints[0] if ints else 3
        dec = spaces.make_symmetric_product(n)
        return dec, catalog.ClosedForm(dec.dims, (Fraction(0),) * 3, Fraction(0)), None
    raise InputError(f"unknown family {family!r}; choose from {', '.join(_COMPUTE_FAMILIES)}")


def cmd_compute(args, out) -> int:
    from .decomp import validate_grading
    from .invariants import verify_identities

    params = [p for p in args.params.split(",") if p] if args.params else []
    dec, cf, line = _build(args.family.lower(), params)
    rep = verify_identities(dec, args.tol)
    grading = validate_grading(dec)
    dev = max(abs(x - float(y)) for x, y in zip(sorted(rep.a), sorted(cf.a)))
    ok = rep.passed and grading.passed and dev <= args.tol
    data = rep.to_dict()
    data.update({
        "table1_line": line,
        "closed_form": {"d": list(cf.d), "a": [_frac_str(x) for x in cf.a], "A": _frac_str(cf.A)},
        "closed_form_deviation": dev,
        "grading_residuals": dict(sorted(grading.residuals.items())),
        "passed": ok,
    })
    if args.format == "json":
        out.write(_dump(data))
    else:
        rows = [["name", dec.name], ["d", " ".join(map(str, rep.dims))],
                ["a (brute force)", " ".join(f"{x:.12g}" for x in rep.a)],
                ["a (closed form)", " ".join(_frac_str(x) for x in cf.a)],
                ["A", f"{rep.A:.12g}"], ["c", " ".join(f"{x:.12g}" for x in rep.c)],
                ["deviation", f"{dev:.2e}"], ["equality cases", str(list(rep.equality_cases))]]
        rows += [[k, f"{v:.2e}"] for k, v in sorted(rep.identity_residuals.items())]
        rows.append(["passed", str(ok)])
        out.write(catalog.format_table(rows, ["quantity", "value"]))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args, out) -> int:
    if args.mode == "float":
        pt = tuple(float(parse_rational(x)) for x in (args.a1, args.a2, args.a3))
    else:
        pt = tuple(parse_rational(x) for x in (args.a1, args.a2, args.a3))
    lab = omega.classify(pt, omega.ClassifyOptions(mode=args.mode, samples=args.samples))
    data = lab.to_dict()
    data["Q"] = _frac_str(lab.Q) if isinstance(lab.Q, Fraction) else format(float(lab.Q), ".17g")
    if lab.component in (omega.Component.O1, omega.Component.O2, omega.Component.O3):
        data["profile"] = omega.singular_profile(lab).to_dict()
    else:
        data["profile"] = None
    if args.format == "json":
        out.write(_dump(data))
    else:
        rows = [["point", " ".join(data["point"])], ["Q", data["Q"]], ["label", data["label"]],
                ["profile", data["profile"]["text"] if data["profile"] else "-"]]
        for w in lab.witness:
            rows.append([f"path to {w.target}", f"{'ok' if w.ok else 'crosses Omega'} ({w.method}, zeros={w.zeros})"])
        out.write(catalog.format_table(rows, ["field", "value"]))
    return EXIT_OK


def cmd_slice(args, out) -> int:
    a3 = parse_rational(args.a3)
    segs = omega.surface_slice(a3, args.grid)
    if args.format == "json":
        out.write(_dump({"a3": _frac_str(a3), "grid": args.grid,
                         "segments": [[float(format(x, ".17g")) for x in row] for row in segs.tolist()]}))
    else:
        out.write(omega.slice_csv(segs))
    return EXIT_OK


def cmd_curve(args, out) -> int:
    t0, t1 = parse_rational(args.t_min), parse_rational(args.t_max)
    pts = omega.curve_samples(t0, t1, args.steps)
    rows = []
    for cp in pts:
        a1, t, _ = cp.point
        rows.append({"t": _frac_str(t), "a1": _frac_str(a1), "a2": _frac_str(t), "a3": _frac_str(t),
                     "inside": cp.inside, "Q": _frac_str(omega.eval_Q(cp.point))})
    if args.format == "json":
        out.write(_dump(rows))
    else:
        lines = ["t,a1,a2,a3,inside,Q"]
        lines += [f"{r['t']},{r['a1']},{r['a2']},{r['a3']},{int(r['inside'])},{r['Q']}" for r in rows]
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify_all(args, out) -> int:
    from .verify import run_all

    results = run_all(seed=args.seed)
    if args.format == "json":
        out.write(_dump([{"criterion": r.number, "title": r.title, "passed": r.passed,
                          "details": r.details} for r in results]))
    else:
        for r in results:
            out.write(r.line() + "\n")
            for d in r.details:
                out.write(f"    {d}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for parallel kernels (default: $WALLACH_NUM_THREADS)")

    p = argparse.ArgumentParser(prog="wallach", description="Generalized Wallach spaces: invariants, tables and the surface Omega.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, formats, default):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("--format", choices=formats, default=default)
        return sp

    c = add("catalog", "dump Table 1, 2 or 3", ("json", "table"), "table")
    c.add_argument("--table", type=int, choices=(1, 2, 3), default=1)
    c.set_defaults(func=cmd_catalog)

    c = add("compute", "brute-force invariants, closed form and identity report", ("json", "table"), "json")
    c.add_argument("family", help=", ".join(_COMPUTE_FAMILIES))
    c.add_argument("--params", default="", help="comma separated, e.g. 2,2,1 or su,2 for ledger-obata")
    c.add_argument("--tol", type=float, default=VALUE_TOL)
    c.set_defaults(func=cmd_compute)

    c = add("classify", "Q, component label and singular profile of (a1, a2, a3)", ("json", "table"), "json")
    for n in ("a1", "a2", "a3"):
        c.add_argument(n)
    c.add_argument("--mode", choices=("exact", "float"), default="exact")
    c.add_argument("--samples", type=int, default=omega.DEFAULT_SAMPLES)
    c.set_defaults(func=cmd_classify)

    c = add("slice", "zero contour of Q at fixed a3", ("csv", "json"), "csv")
    c.add_argument("--a3", required=True)
    c.add_argument("--grid", type=int, default=256)
    c.set_defaults(func=cmd_slice)

    c = add("curve", "points of the singular curve (a1(t), t, t)", ("csv", "json"), "csv")
    c.add_argument("--t-min", required=True)
    c.add_argument("--t-max", required=True)
    c.add_argument("--steps", type=int, default=10)
    c.set_defaults(func=cmd_curve)

    c = add("verify-all", "run every acceptance check", ("table", "json"), "table")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_verify_all)
    return p


def _threads(args) -> int | None:
    if getattr(args, "threads", None) is not None:
        return args.threads
    env = os.environ.get("WALLACH_NUM_THREADS", "").strip()
    if not env:
        return None
    try:
        return int(env)
    except ValueError as exc:
        raise InputError(f"WALLACH_NUM_THREADS must be an integer, got {env!r}") from exc


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cfg = RunConfig(args.command, args.format, _threads(args), getattr(args, "mode", "exact"),
                        getattr(args, "tol", VALUE_TOL))
        if cfg.threads is not None:
            _kernels.set_num_threads(cfg.threads)
        return args.func(args, out)
    except (InputError, DomainError, SizeLimitError) as exc:
        err.write(f"wallach: error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
