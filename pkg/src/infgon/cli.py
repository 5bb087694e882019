"""Command-line front end.

Exit codes: 0 Holds, 1 Fails, 2 HoldsUpToBound, 3 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .certificate import EXIT_CODES, Certificate, Verdict, worst
from .classify import flip, is_cluster_tilting, precover
from .conditions import is_torsion_first_half, nc2_window_check
from .errors import InfgonError, InvalidInputError
from .io import load_model, parse_diagonal_arg, serialize_model
from .oracle import finite_report
from .render import RenderSpec, write_svg
from .window import nc_window

EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _witnesses(cert: Certificate) -> list[str]:
    out = []
    if cert.verdict is Verdict.FAILS:
        leaf = cert.failing_leaf()
        out.append(f"{leaf.name}: {leaf.witness}")
    for sub in cert.trace:
        for w in _witnesses(sub):
            if w not in out:
                out.append(w)
    return out


def _bounds(cert: Certificate, acc: dict) -> dict:
    if cert.bound is not None:
        acc[cert.name] = cert.bound
    for sub in cert.trace:
        _bounds(sub, acc)
    return acc


def _headline(cert: Certificate) -> str:
    if cert.verdict is Verdict.FAILS:
        leaf = cert.failing_leaf()
        return f"{cert.name}: Fails ({leaf.name}: {leaf.witness})"
    line = f"{cert.name}: {cert.summary()}"
    return line + (f" ({cert.note})" if cert.note else "")


def cmd_check(args) -> tuple[Verdict, dict, list[str]]:
    S = load_model(args.model)
    timings = {}
    t = time.perf_counter()
    torsion = is_torsion_first_half(S, args.bound)
    timings["torsion"] = time.perf_counter() - t
    t = time.perf_counter()
    ct = is_cluster_tilting(S, args.window)
    timings["cluster-tilting"] = time.perf_counter() - t
    lines = ["; ".join(_headline(c) for c in (torsion, ct)), torsion.render(), ct.render()]
    info = {"witnesses": _witnesses(torsion) + _witnesses(ct),
            "bounds": _bounds(ct, _bounds(torsion, {})), "timings": timings,
            "certificates": [torsion.to_json(), ct.to_json()]}
    return worst([torsion.verdict, ct.verdict]), info, lines


def cmd_precover(args):
    S = load_model(args.model)
    Y = parse_diagonal_arg(args.target)
    t = time.perf_counter()
    out = precover(S, Y)
    info = {"witnesses": [], "bounds": {}, "timings": {"precover": time.perf_counter() - t},
            "precover": [str(d) for d in out]}
    lines = [f"precover of {Y}: " + (", ".join(str(d) for d in out) if out else "(empty)")]
    return Verdict.HOLDS, info, lines


def cmd_nc(args):
    S = load_model(args.model)
    t = time.perf_counter()
    diags = nc_window(S, args.window)
    cert = nc2_window_check(S, args.window)
    info = {"witnesses": _witnesses(cert), "bounds": _bounds(cert, {}),
            "timings": {"nc": time.perf_counter() - t}, "nc": [str(d) for d in diags]}
    lines = [f"nc on window {args.window}: {len(diags)} diagonal(s)"]
    lines += [f"  {d}" for d in diags]
    lines.append(cert.render())
    return cert.verdict, info, lines


def cmd_flip(args):
    S = load_model(args.model)
    d = parse_diagonal_arg(args.diagonal)
    t = time.perf_counter()
    T = flip(S, d, args.window)
    text = serialize_model(T)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        lines = [f"flipped {d}; wrote {args.output}"]
    else:
        lines = [text.rstrip("\n")]
    info = {"witnesses": [], "bounds": {}, "timings": {"flip": time.perf_counter() - t}}
    return Verdict.HOLDS, info, lines


def cmd_render(args):
    S = load_model(args.model)
    t = time.perf_counter()
    write_svg(S, args.output, RenderSpec(window=args.window))
    info = {"witnesses": [], "bounds": {}, "timings": {"render": time.perf_counter() - t}}
    return Verdict.HOLDS, info, [f"wrote {args.output}"]


def cmd_oracle(args):
    exhaustive = True if args.exhaustive else (False if args.samples else None)
    rep = finite_report(args.polygon, exhaustive=exhaustive,
                        samples=args.samples or 20000, seed=args.seed)
    verdict = Verdict.HOLDS if rep.ok else Verdict.FAILS
    wit = [f"equivalence: {m}" for m in rep.equivalence_violations] + \
          [f"galois: {m}" for m in rep.galois_violations]
    info = {"witnesses": wit, "bounds": {}, "timings": {"oracle": rep.seconds},
            "counts": {"triangulations": rep.triangulations,
                       "ptolemy_diagrams": rep.ptolemy_diagrams,
                       "subsets": rep.subsets}}
    return verdict, info, rep.lines()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report instead of text")

    p = _Parser(prog="infgon", description="Torsion pairs and cluster tilting in infinity-gons")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="torsion and cluster-tilting certificates")
    c.add_argument("model")
    c.add_argument("--window", type=int, default=32)
    c.add_argument("--bound", type=int, default=64)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("precover", parents=[common], help="precover of a target diagonal")
    c.add_argument("model")
    c.add_argument("--target", required=True, help='target diagonal "arc:pos,arc:pos"')
    c.set_defaults(func=cmd_precover)

    c = sub.add_parser("nc", parents=[common], help="nc on a window and the nc-nc comparison")
    c.add_argument("model")
    c.add_argument("--window", type=int, default=8)
    c.set_defaults(func=cmd_nc)

    c = sub.add_parser("flip", parents=[common], help="flip one diagonal of a triangulation")
    c.add_argument("model")
    c.add_argument("--diagonal", required=True, help='"arc:pos,arc:pos"')
    c.add_argument("--window", type=int, default=32)
    c.add_argument("-o", "--output", help="write the flipped model here")
    c.set_defaults(func=cmd_flip)

    c = sub.add_parser("render", parents=[common], help="SVG picture of a window")
    c.add_argument("model")
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--window", type=int, default=8)
    c.set_defaults(func=cmd_render)

    c = sub.add_parser("oracle", parents=[common], help="brute force on a finite polygon")
    c.add_argument("--polygon", type=int, required=True)
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        verdict, info, lines = args.func(args)
    except (InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfgonError as exc:
        verdict, info = Verdict.FAILS, {"witnesses": [str(exc)], "bounds": {}, "timings": {}}
        lines = [f"{args.command}: Fails ({type(exc).__name__}: {exc})"]
    if args.json:
        report = {"command": args.command, "verdict": verdict.value, **info}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_CODES[verdict]


if __name__ == "__main__":
    sys.exit(main())
