"""Command-line interface.

Exit status: 0 on success (and verified/expected outcomes), 1 when a
verification or --expect check fails, 2 on usage or formula-parse errors,
3 when an exhaustive operation exceeds the row cap.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations
from typing import Optional, Sequence

from .boolcore import CapacityError, DEFAULT_MAX_VARS, Dnf, truth_table
from .cointoss import exact_probs, simulate
from .construction import family
from .parser import ParseError, read_formulas, render
from .verify import TheoremReport, VerificationError, k_way_report, verify_theorem

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="jointmutex",
        description=(
            "Build and check families of propositions whose joint conjunction "
            "is identically false although no smaller conjunction is."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_max_n(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-n",
            type=int,
            default=DEFAULT_MAX_VARS,
            metavar="N",
            help=(
                "raise the exhaustive-enumeration cap (default %(default)s); "
                "passing this acknowledges the 2**N row cost"
            ),
        )

    p = sub.add_parser("build", help="print the family for n variables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dnf", "csv"), default="dnf")
    p.add_argument("--out", metavar="PATH")
    add_max_n(p)

    p = sub.add_parser("table", help="truth-table CSV for the family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--conjunctions",
        metavar="SPEC",
        help="conjunction columns to include: 'all' or 'k=<k>'",
    )
    p.add_argument("--out", metavar="PATH")
    add_max_n(p)

    p = sub.add_parser("verify", help="verify the family's exclusion structure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "symbolic", "both"), default="both")
    p.add_argument(
        "--full-scan",
        action="store_true",
        help="scan every k-subset in exhaustive mode regardless of n",
    )
    add_max_n(p)

    p = sub.add_parser("check", help="k-way exclusion report for formulas from files")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, help="variable count (default: from the files)")
    p.add_argument("--expect", choices=("zero", "nonzero"))
    p.add_argument("files", nargs="+", metavar="FILE")
    add_max_n(p)

    p = sub.add_parser("cointoss", help="coin-toss probabilities and simulation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--exact-only", action="store_true")
    p.add_argument("--format", choices=("text", "kv"), default="text")
    add_max_n(p)

    p = sub.add_parser("witness", help="first row satisfying all formulas from files")
    p.add_argument("--n", type=int, help="variable count (default: from the files)")
    p.add_argument("files", nargs="+", metavar="FILE")
    add_max_n(p)

    return ap


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_csv(n: int, conjunctions: Optional[str], max_n: int) -> str:
    fam = family(n)
    tables = [truth_table(p, n, max_n=max_n).bits for p in fam.propositions]
    columns: list[tuple[str, int]] = [
        (f"P_{j}", tables[j - 1]) for j in range(1, n + 1)
    ]
    ks: list[int] = []
    if conjunctions == "all":
        ks = list(range(2, n + 1))
    elif conjunctions is not None:
        if not conjunctions.startswith("k="):
            raise ValueError(f"bad conjunction spec {conjunctions!r}: use 'all' or 'k=<k>'")
        k = int(conjunctions[2:])
        if not 2 <= k <= n:
            raise ValueError(f"conjunction size {k} out of range 2..{n}")
        ks = [k]
    for k in ks:
        for sub in combinations(range(1, n + 1), k):
            acc = tables[sub[0] - 1]
            for j in sub[1:]:
                acc &= tables[j - 1]
            columns.append(("".join(f"P_{j}" for j in sub), acc))

    header = ",".join([f"A_{v}" for v in range(1, n + 1)] + [name for name, _ in columns])
    lines = [header]
    for r in range(1 << n):
        cells = [str((r >> (n - v)) & 1) for v in range(1, n + 1)]
        cells += [str((bits >> r) & 1) for _, bits in columns]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _cmd_build(args: argparse.Namespace) -> int:
    if args.format == "csv":
        _emit(_family_csv(args.n, None, args.max_n), args.out)
        return EXIT_OK
    fam = family(args.n)
    lines = [f"vars={args.n}"] + [render(p) for p in fam.propositions]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    _emit(_family_csv(args.n, args.conjunctions, args.max_n), args.out)
    return EXIT_OK


def _format_report(report: TheoremReport) -> str:
    lines = [
        f"verify n={report.n} mode={report.mode}",
        f"joint conjunction zero: {'yes' if report.joint_zero else 'NO'}",
        f"component conjunctions nonzero: {'yes' if report.component_ok else 'NO'}",
    ]
    for comp in report.components:
        if comp.implied:
            lines.append(f"  k={comp.k}: implied nonzero")
        else:
            lines.append(f"  k={comp.k}: {comp.nonzero}/{comp.checked} nonzero")
    for d in report.details:
        parts = [f"  without P_{d.j}: {'nonzero' if d.nonzero else 'ZERO'}"]
        if d.cube is not None:
            parts.append(f"cube[{d.cube}]")
        if d.witness is not None:
            parts.append(f"witness={d.witness}")
        if d.modes_agree is not None:
            parts.append(f"modes-agree={'yes' if d.modes_agree else 'NO'}")
        lines.append(" ".join(parts))
    obs = report.observations
    if obs is not None:
        scope = "complete" if obs.complete else "sampled"
        lines.append(
            f"conjunction rules: {len(obs.failures)} failures "
            f"({scope}, {obs.checks_run()} checks)"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"result: {'VERIFIED' if report.verified else 'VIOLATED'}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_theorem(
        args.n,
        args.mode,
        full_scan=True if args.full_scan else None,
        max_n=args.max_n,
    )
    sys.stdout.write(_format_report(report))
    return EXIT_OK if report.verified else EXIT_FAILED


def _read_formula_files(paths: Sequence[str]) -> tuple[list[Dnf], Optional[int]]:
    formulas: list[Dnf] = []
    declared: Optional[int] = None
    for path in paths:
        with open(path, "r", encoding="utf-8") as fh:
            ff = read_formulas(fh)
        formulas.extend(ff.formulas)
        for line_no, term_no in ff.dropped_terms:
            print(
                f"warning: {path} line {line_no}: term {term_no} is contradictory "
                "and was dropped",
                file=sys.stderr,
            )
        if ff.declared_vars is not None:
            declared = max(declared or 0, ff.declared_vars)
    return formulas, declared


def _cmd_check(args: argparse.Namespace) -> int:
    formulas, declared = _read_formula_files(args.files)
    n = args.n if args.n is not None else declared
    if n is None:
        n = max((f.max_var() for f in formulas), default=0)
    report = k_way_report(formulas, args.k, n, max_n=args.max_n)
    for e in report.entries:
        subset = "{" + ",".join(str(i) for i in e.indices) + "}"
        if e.zero:
            print(f"subset {subset}: zero")
        else:
            print(f"subset {subset}: nonzero witness={e.witness}")
    if args.expect == "zero" and not report.all_zero:
        return EXIT_FAILED
    if args.expect == "nonzero" and not report.all_nonzero:
        return EXIT_FAILED
    return EXIT_OK


def _cmd_cointoss(args: argparse.Namespace) -> int:
    prob = exact_probs(args.n, max_n=args.max_n)
    sections: list[str] = []
    if args.format == "kv":
        sections.append("\n".join("exact." + line for line in prob.as_kv_lines()))
    else:
        sections.append(prob.as_text())
    if not args.exact_only and args.samples > 0:
        sim = simulate(args.n, args.samples, args.seed, workers=args.workers)
        if args.format == "kv":
            sections.append("\n".join("sim." + line for line in sim.as_kv_lines()))
        else:
            sections.append(sim.as_text())
    sys.stdout.write("\n".join(sections) + "\n")
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    from .boolcore import witness as find_witness

    formulas, declared = _read_formula_files(args.files)
    n = args.n if args.n is not None else declared
    if n is None:
        n = max((f.max_var() for f in formulas), default=0)
    asg = find_witness(formulas, n, max_n=args.max_n)
    print("none" if asg is None else asg.bitstring())
    return EXIT_OK


_HANDLERS = {
    "build": _cmd_build,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "check": _cmd_check,
    "cointoss": _cmd_cointoss,
    "witness": _cmd_witness,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
