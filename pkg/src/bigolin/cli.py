"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 axiom violation,
3 inconsistency (failed relation, unrealizable zigzag vector, golden mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cohomology as coh
from . import iwasawa, zigzag
from .double_complex import DoubleComplex
from .forms import AxiomError, LieAlgebraSpec, ParseError, SpecError, build_complex, parse_structure_equations, torus

EXIT_OK, EXIT_USAGE, EXIT_AXIOM, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means "axiom violation" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="structure-equation file, or - for stdin")
    p.add_argument("--preset", metavar="NAME", help="iwasawa:<class> or torus:<n>")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bigolin", description="Window (Bigolin) cohomology of invariant double complexes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="verify the double complex axioms")
    _add_input(p)

    p = sub.add_parser("cohomology", help="Betti, Dolbeault, ∂, Aeppli, Bott-Chern and window numbers")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--all", action="store_true", help="print every h^k_{p,q}, not only the invariants")

    p = sub.add_parser("bigolin", help="a single h^k_{p,q}")
    _add_input(p)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("zigzags", help="zigzag multiplicities of a complex threefold")
    _add_input(p)
    p.add_argument("--invariants", metavar="FILE", help="JSON invariant vector instead of a complex")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("audit", help="check the known relations between the cohomologies")
    _add_input(p)
    p.add_argument("--all", action="store_true", help="list every individual check")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list the independent (p, q, k) invariants")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("golden", help="recompute the Iwasawa deformation table and the class ii.b zigzags")
    p.add_argument("--json", action="store_true")
    return parser


# input handling


def load_spec(args: argparse.Namespace) -> LieAlgebraSpec:
    if (args.input is None) == (args.preset is None):
        raise UsageError("give exactly one of a file path (or -) and --preset")
    if args.preset is not None:
        return resolve_preset(args.preset)
    if args.input == "-":
        return parse_structure_equations(sys.stdin.read(), name="<stdin>")
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_structure_equations(text, name=args.input)


def resolve_preset(name: str) -> LieAlgebraSpec:
    family, _, arg = name.partition(":")
    if family == "iwasawa":
        if arg not in iwasawa.CLASSES:
            raise UsageError(f"unknown Iwasawa class {arg!r}; choose from {', '.join(iwasawa.CLASSES)}")
        return iwasawa.preset(arg)
    if family == "torus":
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"torus preset needs an integer dimension, got {arg!r}") from None
        if n < 0:
            raise UsageError("torus dimension must be nonnegative")
        return torus(n)
    raise UsageError(f"unknown preset {name!r}; use iwasawa:<class> or torus:<n>")


def load_complex(args: argparse.Namespace) -> DoubleComplex:
    return build_complex(load_spec(args))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _grid(title: str, values: dict, n: int) -> list[str]:
    lines = [title, "      " + " ".join(f"q={q:<3}" for q in range(n + 1))]
    for p in range(n + 1):
        lines.append(f"p={p:<3} " + " ".join(f"{values[(p, q)]:<5}" for q in range(n + 1)))
    return lines


# commands


def cmd_check(args, out) -> int:
    spec = load_spec(args)
    report = build_complex(spec, check=False).verify_axioms()
    if report.ok:
        print(f"{spec.name or 'input'}: all axioms hold", file=out)
        return EXIT_OK
    for v in report:
        print(v, file=out)
    return EXIT_AXIOM


def cmd_cohomology(args, out) -> int:
    c = load_complex(args)
    n = c.n
    if c.almost_complex:
        data = {"n": n, "betti": {str(k): coh.betti(c, k) for k in range(2 * n + 1)},
                "h1_B": coh.h1_B(c), "h_top_B": coh.h_top_B(c)}  # fmt: skip
        if args.json:
            print(_dump(data), file=out)
        else:
            print("non-integrable structure: only de Rham and h^1_B, h^{2n-1}_B are defined", file=out)
            print("betti: " + " ".join(str(v) for v in data["betti"].values()), file=out)
            print(f"h1_B = {data['h1_B']}   h_top_B = {data['h_top_B']}", file=out)
        return EXIT_OK
    prof = coh.profile(c)
    triples = sorted(prof.bigolin) if args.all else coh.enumerate_invariants(n) if n >= 1 else []
    if args.json:
        data = prof.to_json()
        if not args.all:
            data["bigolin"] = {f"{p},{q},{k}": prof.bigolin[(p, q, k)] for p, q, k in triples}
        data["h1_B"] = coh.h1_B(c)
        data["h_top_B"] = coh.h_top_B(c)
        print(_dump(data), file=out)
        return EXIT_OK
    lines = [f"n = {n}", "betti: " + " ".join(str(prof.betti[k]) for k in range(2 * n + 1)), ""]
    for title, table in (("Dolbeault h^{p,q}", prof.dolbeault), ("∂-cohomology", prof.partial),
                         ("Aeppli", prof.aeppli), ("Bott-Chern", prof.bott_chern)):  # fmt: skip
        lines += _grid(title, table, n) + [""]
    lines.append("window cohomology h^k_{p,q}")
    lines += [f"  h^{k}_({p},{q}) = {prof.bigolin[(p, q, k)]}" for p, q, k in triples]
    lines.append(f"h1_B = {coh.h1_B(c)}   h_top_B = {coh.h_top_B(c)}")
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_bigolin(args, out) -> int:
    c = load_complex(args)
    for name, v in (("p", args.p), ("q", args.q)):
        if not -1 <= v <= c.n:
            raise UsageError(f"{name} must lie in -1..{c.n}")
    value = coh.bigolin(c, args.p, args.q, args.k)
    print(_dump({"p": args.p, "q": args.q, "k": args.k, "dim": value}) if args.json else value, file=out)
    return EXIT_OK


def _read_invariants(path: str) -> dict[str, int]:
    try:
        with open(path, encoding="utf-8") if path != "-" else sys.stdin as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(data, dict):
        raise UsageError("invariant file must hold a JSON object")
    missing = [k for k in zigzag.INVARIANTS17 if k not in data]
    unknown = [k for k in data if k not in zigzag.INVARIANTS22]
    if missing or unknown:
        raise UsageError(f"invariant file: missing {missing}, unknown {unknown}")
    if not all(isinstance(v, int) and v >= 0 for v in data.values()):
        raise UsageError("invariant values must be nonnegative integers")
    return data


def cmd_zigzags(args, out) -> int:
    if args.invariants is not None:
        if args.input is not None or args.preset is not None:
            raise UsageError("--invariants replaces the complex input")
        v = _read_invariants(args.invariants)
    else:
        c = load_complex(args)
        if c.n != 3:
            print(f"zigzags: the zigzag classification is implemented for complex dimension 3 only (got n = {c.n})",
                  file=sys.stderr)  # fmt: skip
            return EXIT_USAGE
        if c.almost_complex:
            raise UsageError("zigzags need an integrable structure")
        v = zigzag.invariant_vector22(c)
    inv = zigzag.multiplicities_from_cohomology(zigzag.restrict17(v))
    relations = zigzag.consistency_relations(v) if all(k in v for k in zigzag.INVARIANTS22) else []
    status = EXIT_OK
    if not inv.ok:
        status = EXIT_INCONSISTENT
        for f in inv.findings:
            print(f"finding: {f}", file=sys.stderr)
    else:
        mult = inv.multiplicities
        predicted = zigzag.apply_T(mult)
        for name in zigzag.INVARIANTS22:
            if name in v and v[name] != predicted[name]:
                print(f"finding: {name} = {v[name]} but the multiplicities predict {predicted[name]}", file=sys.stderr)
                status = EXIT_INCONSISTENT
    for r in relations:
        if not r.passed:
            print(f"finding: {r}", file=sys.stderr)
            status = EXIT_INCONSISTENT
    if args.json:
        payload = {x: (int(val) if val.denominator == 1 else str(val)) for x, val in inv.values.items()}
        print(_dump(payload), file=out)
        return status
    print("zigzag  " + " ".join(f"{x:>3}" for x in zigzag.LETTERS), file=out)
    print("mult    " + " ".join(f"{str(inv.values[x]):>3}" for x in zigzag.LETTERS), file=out)
    print(f"D from the invariants: {zigzag.D_expression(v)}", file=out)
    for r in relations:
        print(r, file=out)
    return status


def cmd_audit(args, out) -> int:
    c = load_complex(args)
    report = coh.relation_audit(c)
    if args.json:
        payload = {"ok": report.ok, "checks": [
            {"relation": ch.relation, "detail": ch.detail, "lhs": ch.lhs, "rhs": ch.rhs,
             "kind": ch.kind, "passed": ch.passed} for ch in report.checks]}  # fmt: skip
        print(_dump(payload), file=out)
    else:
        print(report.summary(), file=out)
        if args.all:
            print("", file=out)
            for ch in report.checks:
                print(ch, file=out)
        else:
            for ch in report.failures:
                print(ch, file=out)
        h11, b1 = coh.strictness_witness(c)
        print(f"h^1_(1,1) = {h11}, b^1 = {b1}", file=out)
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def cmd_enumerate(args, out) -> int:
    if args.n < 1:
        raise UsageError("-n must be at least 1")
    triples = coh.enumerate_invariants(args.n)
    if args.json:
        print(_dump({"n": args.n, "count": len(triples), "triples": [list(t) for t in triples]}), file=out)
    else:
        print("[" + ", ".join(f"({p},{q},{k})" for p, q, k in triples) + "]", file=out)
        print(f"count: {len(triples)}", file=out)
    return EXIT_OK


def cmd_golden(args, out) -> int:
    table = iwasawa.golden_table()
    zz = iwasawa.golden_zigzags()
    mismatches = iwasawa.table_mismatches(table)
    iib = zz["ii.b"].inversion
    t3_ok = iib.ok and iib.multiplicities == zigzag.REFERENCE_IIB
    if not t3_ok:
        mismatches.append("class ii.b zigzag multiplicities differ from the reference vector")
    for label, res in zz.items():
        if not res.reproduces_invariants:
            mismatches.append(f"class {label}: T m does not reproduce the computed invariants")
    if args.json:
        payload = {
            "table": {label: dict(zip(iwasawa.TRIPLE_NAMES, row)) for label, row in table.items()},
            "zigzags": {label: (res.inversion.multiplicities if res.inversion.ok else None) for label, res in zz.items()},
            "mismatches": mismatches,
        }
        print(_dump(payload), file=out)
    else:
        header = "class  " + " ".join(f"{name:>6}" for name in iwasawa.TRIPLE_NAMES)
        print(header, file=out)
        for label, row in table.items():
            print(f"{label:<6} " + " ".join(f"{v:>6}" for v in row), file=out)
        print("", file=out)
        print("zigzag " + " ".join(f"{x:>3}" for x in zigzag.LETTERS), file=out)
        for label, res in zz.items():
            vals = res.inversion.values
            print(f"{label:<6} " + " ".join(f"{str(vals[x]):>3}" for x in zigzag.LETTERS), file=out)
        print(f"{'ref':<6} " + " ".join(f"{zigzag.REFERENCE_IIB[x]:>3}" for x in zigzag.LETTERS), file=out)
        print("", file=out)
        print("all values match" if not mismatches else "\n".join(mismatches), file=out)
    return EXIT_OK if not mismatches else EXIT_INCONSISTENT


COMMANDS = {
    "check": cmd_check,
    "cohomology": cmd_cohomology,
    "bigolin": cmd_bigolin,
    "zigzags": cmd_zigzags,
    "audit": cmd_audit,
    "enumerate": cmd_enumerate,
    "golden": cmd_golden,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, SpecError, coh.UnsupportedStructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AxiomError as exc:
        print("axiom violation:", file=sys.stderr)
        for v in exc.report:
            print(f"  {v}", file=sys.stderr)
        return EXIT_AXIOM


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
