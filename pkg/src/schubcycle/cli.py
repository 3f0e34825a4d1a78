"""Command-line front end.

Exit codes: 0 success (whatever the verdict), 2 invalid input, 3 size guard
exceeded, 4 closed form and oracle disagree.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Sequence

from . import document
from .gorenstein import OracleDisagreementError, gorenstein_report
from .irreducible import filter_shape, join_irreducibles, phi
from .minor import GammaContext, InvalidMinorError, Minor
from .poset import (
    DEFAULT_SIZE_GUARD,
    GuardExceededError,
    coheight_in,
    enumerate_lattice,
    induced_subposet,
    join_irreducibles_oracle,
    poset_of_minors,
)

EXIT_INVALID = 2
EXIT_GUARD = 3
EXIT_DISAGREE = 4


def _context(args) -> GammaContext:
    if args.gamma is not None:
        return GammaContext(args.n, Minor.parse(args.gamma))
    return GammaContext.from_schubert(Minor.parse(args.schubert), args.n)


def _fmt_list(xs) -> str:
    return " ".join(map(str, xs)) if xs else "(none)"


# -- gorenstein ---------------------------------------------------------------

def _gorenstein_text(doc: dict) -> str:
    lines = [
        f"n = {doc['n']}, m = {doc['m']}, gamma = {Minor(doc['gamma'])}",
        f"l-set: {_fmt_list(doc['l_set'])}",
        f"b_l - 2l: {_fmt_list(doc['criterion_values'])}",
        "minimal join-irreducibles:",
    ]
    for entry in doc["minimal_join_irreducibles"]:
        p, q = entry["pq"]
        lines.append(f"  {Minor(entry['minor'])}  (p,q)=({p},{q})  coheight {entry['coheight']}")
    arms = ", ".join(f"{q}:{top}" for q, top in doc["filter"]["arm_limits"])
    lines.append(f"filter arms (q:p_max): {arms or '(empty)'}")
    lines.append(f"|P| = {doc['filter']['point_count']}")
    if "oracle" in doc:
        o = doc["oracle"]
        lines.append(
            f"oracle: lattice size {o['lattice_size']}, |P| = {o['p_size']}, "
            f"pure = {'yes' if o['pure'] else 'no'} (agrees)"
        )
    lines.append(f"Gorenstein: {'yes' if doc['gorenstein'] else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_gorenstein(args, out) -> int:
    ctx = _context(args)
    report = gorenstein_report(ctx, run_oracle=args.oracle, size_guard=args.guard)
    doc = document.gorenstein_document(report)
    out.write(document.emit(doc) if args.format == "machine" else _gorenstein_text(doc))
    return 0


# -- irreducibles -------------------------------------------------------------

def irreducible_rows(ctx: GammaContext, source: str, size_guard: int):
    """(minor, (p, q), coheight) for every join-irreducible, lex order."""
    if source == "oracle":
        view = enumerate_lattice(ctx, size_guard)
        sub = induced_subposet(view, join_irreducibles_oracle(view))
        return [(c, tuple(phi(c, ctx)), coheight_in(sub, c)) for c in sub.elements]
    count = filter_shape(ctx).point_count
    if count > size_guard:
        raise GuardExceededError(count, size_guard, "join-irreducible poset")
    rows = []
    for c in join_irreducibles(ctx):
        pq = phi(c, ctx)
        rows.append((c, tuple(pq), pq.p + pq.q))
    return rows


def cmd_irreducibles(args, out) -> int:
    ctx = _context(args)
    source = "oracle" if args.source == "oracle" else "closed-form"
    rows = irreducible_rows(ctx, source, args.guard)
    if args.format == "machine":
        out.write(document.emit(document.irreducibles_document(ctx, rows, source)))
        return 0
    out.write(f"n = {ctx.n}, m = {ctx.m}, gamma = {ctx.gamma}, source = {source}\n")
    out.write(f"{len(rows)} join-irreducible elements\n")
    for c, (p, q), h in rows:
        out.write(f"  {c}  (p,q)=({p},{q})  coheight {h}\n")
    return 0


# -- hasse --------------------------------------------------------------------

def hasse_dot(ctx: GammaContext, target: str, size_guard: int) -> str:
    if target == "lattice":
        view = enumerate_lattice(ctx, size_guard)
        labels = [str(c) for c in view.elements]
        name = "lattice"
    else:
        count = filter_shape(ctx).point_count
        if count > size_guard:
            raise GuardExceededError(count, size_guard, "join-irreducible poset")
        view = poset_of_minors(join_irreducibles(ctx))
        labels = [f"{c} {phi(c, ctx)!r}" for c in view.elements]
        name = "P"
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    lines += [f'  n{k} [label="{label}"];' for k, label in enumerate(labels)]
    lines += [f"  n{lo} -> n{hi};" for lo, hi in view.edges.tolist()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_hasse(args, out) -> int:
    text = hasse_dot(_context(args), args.target, args.guard)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


# -- sweep --------------------------------------------------------------------

def iter_contexts(n: int, m: int | None):
    for rows in [m] if m is not None else range(1, n + 1):
        for gamma in itertools.combinations(range(1, n + 1), rows):
            yield GammaContext(n, Minor(gamma))


def cmd_sweep(args, out) -> int:
    if args.m is not None and not 1 <= args.m <= args.n:
        raise InvalidMinorError(f"need 1 <= m <= n, got m={args.m}, n={args.n}")
    counts = {"instances": 0, "gorenstein": 0, "non_gorenstein": 0, "oracle_checked": 0}
    for ctx in iter_contexts(args.n, args.m):
        try:
            report = gorenstein_report(ctx, run_oracle=args.oracle, size_guard=args.guard)
        except GuardExceededError as exc:
            raise GuardExceededError(exc.count, exc.guard, f"lattice for gamma={ctx.gamma}") from exc
        counts["instances"] += 1
        counts["gorenstein" if report.gorenstein else "non_gorenstein"] += 1
        counts["oracle_checked"] += report.oracle is not None
        if args.format == "machine":
            out.write(document.emit(document.gorenstein_document(report)))
        else:
            suffix = ""
            if report.oracle is not None:
                suffix = f"  pure={'yes' if report.oracle.pure else 'no'}"
            verdict = "yes" if report.gorenstein else "no"
            out.write(f"n={ctx.n} gamma={ctx.gamma} gorenstein={verdict}{suffix}\n")
    if args.format == "machine":
        out.write(document.emit(document.summary_document(args.n, args.m, counts)))
    else:
        out.write(
            f"{counts['instances']} instances: {counts['gorenstein']} Gorenstein, "
            f"{counts['non_gorenstein']} not; {counts['oracle_checked']} oracle-checked\n"
        )
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of columns")
    common.add_argument("--guard", type=int, default=DEFAULT_SIZE_GUARD,
                        help="refuse to enumerate posets larger than this")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    instance = argparse.ArgumentParser(add_help=False, parents=[common])
    which = instance.add_mutually_exclusive_group(required=True)
    which.add_argument("--gamma", help="bottom minor, e.g. 2,4,5,9")
    which.add_argument("--schubert", help="Schubert conditions a_1,...,a_m")

    parser = argparse.ArgumentParser(
        prog="schubcycle",
        description="Join-irreducible posets and the Gorenstein criterion for Schubert cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gorenstein", parents=[instance], help="decide Gorensteinness")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute-force purity")
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("irreducibles", parents=[instance], help="list join-irreducibles")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--closed-form", dest="source", action="store_const", const="closed-form")
    src.add_argument("--oracle", dest="source", action="store_const", const="oracle")
    p.set_defaults(func=cmd_irreducibles, source="closed-form")

    p = sub.add_parser("hasse", parents=[instance], help="emit a Hasse diagram as DOT")
    p.add_argument("--target", choices=("p", "lattice"), default="p")
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("sweep", parents=[common], help="run every gamma for given n")
    p.add_argument("--m", type=int, help="restrict to this many rows")
    p.add_argument("--oracle", action="store_true", help="cross-check each instance")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidMinorError as exc:
        print(f"schubcycle: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GuardExceededError as exc:
        print(f"schubcycle: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OracleDisagreementError as exc:
        print(f"schubcycle: oracle disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
