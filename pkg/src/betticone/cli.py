"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 not in cone,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import asymptotics, decomposition, diagrams, secant
from .errors import BettiConeError, NotInCone

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_IN_CONE = 3
EXIT_IO = 4


def _parse_int_list(text: str):
    return [int(part) for part in text.split(",") if part != ""]


def _parse_float_list(text: str):
    return [float(part) for part in text.split(",") if part != ""]


def render_table(b: diagrams.BettiDiagram) -> str:
    """Aligned text table, rows q = 0..regularity, columns p = 0..pd.

    Zeros inside the rectangle print as "-".
    """
    pd = diagrams.projective_dimension(b)
    reg = diagrams.regularity(b)
    q_lo = min(q for (_, q) in b.support())
    q_lo = min(q_lo, 0)
    header = [""] + [str(p) for p in range(pd + 1)]
    grid = [header]
    for q in range(q_lo, reg + 1):
        row = [str(q)]
        for p in range(pd + 1):
            v = b.get(p, q)
            if v == 0:
                row.append("-")
            else:
                row.append(str(v) if v.denominator != 1 else str(v.numerator))
        grid.append(row)
    widths = [max(len(r[c]) for r in grid) for c in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in grid]
    return "\n".join(lines)


def _emit_diagram(b: diagrams.BettiDiagram, fmt: str, prefix: str = "") -> None:
    if prefix:
        sys.stdout.write(prefix)
    if fmt == "table":
        sys.stdout.write(render_table(b) + "\n")
    else:
        sys.stdout.write(json.dumps(b.to_json_obj(), indent=2) + "\n")


def _read_diagram_file(path: str) -> diagrams.BettiDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        text = "".join(line for line in fh if not line.lstrip().startswith("#"))
    return diagrams.BettiDiagram.from_json_obj(json.loads(text))


def cmd_pure(args) -> int:
    e = diagrams.DegreeSequence(_parse_int_list(args.degseq))
    _emit_diagram(diagrams.pure_diagram(e), args.format)
    return EXIT_OK


def cmd_secant_pure(args) -> int:
    params = secant.SecantParams(args.g, args.k, args.d)
    if args.dominant:
        tup = secant.dominant_tuple(params)
    elif args.tuple is not None:
        tup = tuple(_parse_int_list(args.tuple))
    else:
        print("need --tuple or --dominant", file=sys.stderr)
        return EXIT_BAD_INPUT
    e = secant.degree_sequence(params, tup)
    comment = "# degseq: " + ",".join(str(x) for x in e) + "\n"
    _emit_diagram(diagrams.pure_diagram(e), args.format, prefix=comment)
    return EXIT_OK


def cmd_decompose(args) -> int:
    b = _read_diagram_file(args.input)
    if not b.is_nonnegative():
        print("input diagram has a negative entry", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        dec = decomposition.decompose(b)
    except NotInCone as exc:
        print(f"not in cone: {exc}", file=sys.stderr)
        if exc.partial is not None:
            print(json.dumps(exc.partial.to_json_obj(), indent=2), file=sys.stderr)
        return EXIT_NOT_IN_CONE
    sys.stdout.write(json.dumps(dec.to_json_obj(), indent=2) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.kind == "purity":
        if args.d_min is None or args.d_max is None:
            print("purity sweep needs --d-min and --d-max", file=sys.stderr)
            return EXIT_BAD_INPUT
        rows = asymptotics.purity_sweep(args.g, args.k, args.d_min, args.d_max, args.step)
        asymptotics.write_purity_csv(args.g, args.k, rows, args.out)
    else:
        if args.d is None:
            print("distribution sweep needs --d", file=sys.stderr)
            return EXIT_BAD_INPUT
        rows = asymptotics.distribution_sweep(
            args.g, args.k, _parse_float_list(args.a), _parse_int_list(args.d)
        )
        asymptotics.write_distribution_csv(args.g, args.k, rows, args.out)
    return EXIT_OK


def _grid(args):
    for g in range(1, args.g_max + 1):
        for k in range(0, args.k_max + 1):
            for d in range(2 * g + 2 * k + 1, args.d_max + 1):
                yield secant.SecantParams(g, k, d)


def _suite_multiplicity(args):
    checked = failed = 0
    for params in _grid(args):
        for tup in secant.jump_tuples(params.g, params.k):
            checked += 1
            if diagrams.multiplicity(secant.secant_pure_diagram(params, tup)) != 1:
                failed += 1
    return checked, failed


def _suite_dominant_kappa(args):
    checked = failed = 0
    for params in _grid(args):
        table = secant.secant_pure_diagram(params, secant.dominant_tuple(params))
        for p in range(1, params.r - params.g - 2 * params.k):
            checked += 1
            if secant.kappa_dominant(params, p) != table.get(p, params.k + 1):
                failed += 1
    return checked, failed


def _suite_hn_leading(args):
    checked = failed = 0
    for params in _grid(args):
        for tup in secant.jump_tuples(params.g, params.k):
            if tup[0] < 1:
                continue
            checked += 1
            claimed = secant.hn_leading_coefficient(
                params, tup, alt_denominator=args.alt_denominator
            )
            hn = diagrams.hilbert_numerator(secant.secant_pure_diagram(params, tup))
            if claimed != hn.coefficient(2 * params.k + 2):
                failed += 1
    return checked, failed


def _suite_herzog_kuhl(args):
    rng = random.Random(args.seed)
    checked = failed = 0
    for _ in range(args.count):
        n = rng.randint(1, 11)
        start = rng.randint(-3, 3)
        seq = [start]
        for _ in range(n):
            seq.append(seq[-1] + rng.randint(1, 4))
        table = diagrams.pure_diagram(seq)
        kappas = [(p, e, table.get(p, e - p)) for p, e in enumerate(seq)]
        for j in range(n):
            checked += 1
            total = sum(
                (-1) ** p * v * Fraction(e) ** j for p, e, v in kappas
            )
            if total != 0:
                failed += 1
    return checked, failed


_SUITES = {
    "multiplicity": _suite_multiplicity,
    "dominant-kappa": _suite_dominant_kappa,
    "hn-leading": _suite_hn_leading,
    "herzog-kuhl": _suite_herzog_kuhl,
}


def cmd_verify(args) -> int:
    checked, failed = _SUITES[args.suite](args)
    status = "FAIL" if failed else "ok"
    print(f"{args.suite}: {checked - failed}/{checked} passed ({status})")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_calibrate(args) -> int:
    result = asymptotics.calibrate_purity(
        args.g, args.k, args.d_max, Fraction(args.threshold)
    )
    payload = json.dumps(result, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="betticone")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pure", help="pure diagram of a degree sequence")
    p.add_argument("--degseq", required=True, help="comma separated, e.g. 0,3,4,6,7,9")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(fn=cmd_pure)

    p = sub.add_parser("secant-pure", help="family pure diagram of a jump tuple")
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--tuple", help="comma separated jump tuple, e.g. 1,3")
    p.add_argument("--dominant", action="store_true", help="use the tuple (g,...,g)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(fn=cmd_secant_pure)

    p = sub.add_parser("decompose", help="greedy decomposition of a diagram JSON file")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("sweep", help="write a purity or distribution CSV")
    p.add_argument("kind", choices=("purity", "distribution"))
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--d-min", type=int, default=None)
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--a", default="0", help="comma separated a targets (distribution)")
    p.add_argument("--d", default=None, help="comma separated d values (distribution)")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", help="run an exact oracle sweep")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--g-max", type=int, default=3)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--d-max", type=int, default=40)
    p.add_argument(
        "--alt-denominator",
        action="store_true",
        help="hn-leading only: use the wider denominator range to show it fails",
    )
    p.add_argument("--seed", type=int, default=0, help="herzog-kuhl only")
    p.add_argument("--count", type=int, default=500, help="herzog-kuhl only")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("calibrate", help="freeze purity sweep thresholds as JSON")
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--threshold", default="99/100")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_calibrate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except NotInCone as exc:
        print(f"not in cone: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_CONE
    except (BettiConeError, ValueError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
