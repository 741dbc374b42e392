"""Command-line front end: ``cdl verify|scheme|bound|construct|molien|derive``.

Exit codes: 0 when the verdict is true (or the command simply succeeded),
1 when the computation finished with a negative verdict, 2 on bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

import numpy as np

from . import bounds, construct, design, grouprep, scheme
from .fileformat import ParseError, load_points, read_annihilator, write_points
from .poly import parse_lower_set
from .space import angle_set, derived_code

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _complex_list(vals):
    return [[float(complex(v).real), float(complex(v).imag)] for v in vals]


def _angles_dict(X):
    A = angle_set(X)
    return {"s": A.s, "alphas": _complex_list(A.alphas), "counts": [int(c) for c in A.counts]}


def _threads(args):
    if args.threads is not None:
        return args.threads
    env = os.environ.get("CDL_THREADS")
    return int(env) if env else 1


####
# subcommands: each returns (exit code, result dict)
####

def cmd_verify(args):
    X = load_points(args.file)
    rep = design.max_design_strength(X, args.cutoff, args.tol)
    inv = scheme.invariance_check(X)
    res = {"n": len(X), "dim": X.dim, "angles": _angles_dict(X), "design": rep.to_dict(),
           "inner_product_invariant": inv.invariant, "valencies": inv.valencies}
    code = EXIT_TRUE
    if args.design:
        ok, drep = design.is_design(X, parse_lower_set(args.design), args.tol)
        res["requested"] = {"T": args.design, "holds": ok}
        code = EXIT_TRUE if ok else EXIT_FALSE
    return code, res


def _cost_estimate(n, s):
    # (s+1)^2 dense n x n products
    return {"n": n, "relations": s + 1, "matrix_products": (s + 1) ** 2,
            "flops": 2.0 * n ** 3 * (s + 1) ** 2, "bytes_per_matrix": 8 * n * n}


def cmd_scheme(args):
    X = load_points(args.file)
    rel = scheme.relations(X)
    if len(X) > scheme.SLOW_THRESHOLD and not args.slow:
        raise UsageError(
            f"{len(X)} points exceeds {scheme.SLOW_THRESHOLD}; rerun with --slow "
            f"(estimate: {json.dumps(_cost_estimate(len(X), rel.s))})")
    rep = scheme.check_scheme(rel, threads=_threads(args))
    res = {"scheme": rep.to_dict()}
    if rep.is_scheme:
        kd = scheme.krein_design_check(rep, 1, cutoff=args.cutoff, rtol=args.tol)
        ds = design.max_design_strength(X, args.cutoff, args.tol)
        res["krein_design"] = kd.to_dict()
        res["design"] = str(ds.verdict)
        res["krein_matches_design"] = kd.verdict.members == ds.verdict.members
    return (EXIT_TRUE if rep.is_scheme else EXIT_FALSE), res


def _parse_angles(text):
    return np.array([complex(t.replace("i", "j")) for t in text.replace(",", " ").split()])


def cmd_bound(args):
    d = args.dim
    if args.absolute:
        U = parse_lower_set(args.absolute)
        mode = args.mode or "upper"
        fn = bounds.absolute_design_bound if mode == "lower" else bounds.absolute_code_bound
        cert = bounds.BoundCertificate("absolute-" + mode, fn(d, U), {"U": U})
        return EXIT_TRUE, {"certificate": cert.to_dict()}
    if args.antipodal:
        if not args.n:
            raise UsageError("--antipodal needs --n")
        cert = bounds.antipodal_bound(d, parse_lower_set(args.antipodal), args.n)
        return EXIT_TRUE, {"certificate": cert.to_dict()}
    if not args.annihilator:
        raise UsageError("give one of --annihilator, --absolute, --antipodal")
    T = parse_lower_set(args.design) if args.design else None
    if args.annihilator in bounds.BUILTIN_ANNIHILATORS:
        fF, fA, mode = bounds.BUILTIN_ANNIHILATORS[args.annihilator]
        F = fF(d)
        angles = fA(d) if fA is not None else np.array([])
        mode = args.mode or mode
        if mode == "lower" and T is None:
            T = parse_lower_set("cl{(1,0),(0,1)}")
    else:
        with open(args.annihilator) as fh:
            F = read_annihilator(fh.read())
        mode = args.mode or "upper"
        angles = np.array([])
    if args.angles:
        angles = _parse_angles(args.angles)
    try:
        cert = bounds.lp_bound(d, F, mode, angles, T)
    except bounds.BoundError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_TRUE, {"certificate": cert.to_dict(), "rechecked": bounds.recheck(cert)}


def _write_or_print(X, out):
    text = write_points(X)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        return {"written": out}
    sys.stdout.write(text)
    return None


def cmd_construct(args):
    try:
        X = construct.build(args.name, *args.params)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    res = {"name": args.name, "params": args.params, "n": len(X), "dim": X.dim}
    w = _write_or_print(X, args.output)
    if w is None:
        return EXIT_TRUE, None
    res.update(w)
    return EXIT_TRUE, res


GROUPS = {
    "pauli": lambda d: grouprep.pauli_group(int(d)),
    "pauli-phase": lambda d: grouprep.pauli_group(int(d), phase=True),
    "trivial": lambda d: grouprep.trivial_group(int(d)),
    "sic-d2": grouprep.sic_d2_group,
    "hoggar": grouprep.hoggar_group,
}


def cmd_molien(args):
    words = args.group
    if len(words) < 3:
        raise UsageError("usage: molien GROUP [PARAM] KMAX LMAX")
    *gspec, kmax, lmax = words
    name, params = gspec[0], gspec[1:]
    if name in GROUPS:
        try:
            G = GROUPS[name](*params)
        except TypeError:
            raise UsageError(f"wrong parameters for group {name!r}") from None
    elif os.path.exists(name):
        with open(name) as fh:
            G = grouprep.read_group(fh.read())
    else:
        raise UsageError(f"unknown group {name!r} (and no such file)")
    kmax, lmax = int(kmax), int(lmax)
    table = grouprep.molien_harm(G, kmax, lmax)
    irr = {f"{k},{l}": grouprep.harm_irreducible(G, (k, l))
           for k in range(kmax + 1) for l in range(lmax + 1) if (k, l) != (0, 0)}
    return EXIT_TRUE, {"group": name, "order": G.order, "dim": G.dim,
                       "molien_harm": table.to_dict(), "harm_irreducible": irr}


def cmd_derive(args):
    X = load_points(args.file)
    A = angle_set(X)
    if not 1 <= args.alpha_index <= A.s:
        raise UsageError(f"alpha index must be in 1..{A.s}")
    if not 0 <= args.z_index < len(X):
        raise UsageError(f"z index must be in 0..{len(X) - 1}")
    alpha = A.alphas[args.alpha_index - 1]
    try:
        Y = derived_code(X, args.z_index, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = {"alpha": _complex_list([alpha])[0], "n": len(Y), "dim": Y.dim}
    w = _write_or_print(Y, args.output)
    if w is None:
        return EXIT_TRUE, None
    res.update(w)
    return EXIT_TRUE, res


####
# output
####

def _jsonable(o):
    if isinstance(o, Fraction):
        return {"numerator": o.numerator, "denominator": o.denominator, "decimal": float(o)}
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    if isinstance(o, (np.bool_,)):
        return bool(o)
    if isinstance(o, complex):
        return [o.real, o.imag]
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _text_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for k in obj:
            yield from _text_lines(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _text_lines(v, f"{prefix}[{i}]")
    else:
        yield f"{prefix}: {json.dumps(obj, default=_jsonable)}"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=design.DESIGN_TOL)
    common.add_argument("--cutoff", type=int, default=design.DEFAULT_CUTOFF)
    common.add_argument("--slow", action="store_true", help="allow expensive runs (n > 500)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $CDL_THREADS or 1)")
    common.add_argument("-o", "--output", default=None)

    p = argparse.ArgumentParser(prog="cdl", description="Complex spherical designs and schemes.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="angle set, design strength, invariance")
    v.add_argument("file")
    v.add_argument("--design", help="also test a specific lower set, e.g. 'k+l<=2'")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scheme", parents=[common], help="association scheme and Krein data")
    s.add_argument("file")
    s.set_defaults(func=cmd_scheme)

    b = sub.add_parser("bound", parents=[common], help="LP, absolute and antipodal bounds")
    b.add_argument("dim", type=int)
    b.add_argument("--annihilator", help="builtin name (%s) or a file" %
                   ", ".join(bounds.BUILTIN_ANNIHILATORS))
    b.add_argument("--mode", choices=["upper", "lower"])
    b.add_argument("--angles", help="angles, e.g. '0.5 -0.5+0.1j'")
    b.add_argument("--design", help="design strength T for lower bounds")
    b.add_argument("--absolute", metavar="LOWERSET")
    b.add_argument("--antipodal", metavar="LOWERSET")
    b.add_argument("--n", type=int)
    b.set_defaults(func=cmd_bound)

    c = sub.add_parser("construct", parents=[common], help="build a gallery point set")
    c.add_argument("name", choices=sorted(construct.GENERATORS))
    c.add_argument("params", nargs="*")
    c.set_defaults(func=cmd_construct)

    m = sub.add_parser("molien", parents=[common], help="invariant dimensions of Harm(k,l)")
    m.add_argument("group", nargs="+", help="GROUP [PARAM] KMAX LMAX")
    m.set_defaults(func=cmd_molien)

    dv = sub.add_parser("derive", parents=[common], help="derived code at (z, alpha)")
    dv.add_argument("file")
    dv.add_argument("z_index", type=int)
    dv.add_argument("alpha_index", type=int, help="1-based index into the angle set")
    dv.set_defaults(func=cmd_derive)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    t0 = time.perf_counter()
    try:
        code, result = args.func(args)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"cdl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if result is None:
        return code
    inputs = {}
    if getattr(args, "file", None):
        inputs[args.file] = _digest(args.file)
    report = {
        "command": ["cdl"] + argv,
        "inputs": inputs,
        "settings": {"tol": args.tol, "cutoff": args.cutoff, "slow": args.slow,
                     "threads": _threads(args)},
        "exit_code": code,
        "result": result,
        "timings": {"wall_seconds": round(time.perf_counter() - t0, 6)},
    }
    if args.fmt == "json":
        out = json.dumps(report, default=_jsonable, indent=2)
    else:
        report.pop("timings")
        out = "\n".join(_text_lines(report))
    if args.output and args.command in ("verify", "scheme", "bound", "molien"):
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
