"""Command-line interface.  Data goes to stdout, logs to stderr.

Exit codes: 0 success (or property holds), 1 property violated,
2 usage or input error, 3 undecided within the search budget.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bounds, construct, grid2d, search, seqstats
from .core import BudgetExhausted, ChsetsError, Mode, Params, format_set, read_set_file
from .verify import DEFAULT_BUDGET, DEFAULT_MAX_WITNESSES, check

log = logging.getLogger("chsets")

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


def _params(args) -> Params:
    return Params(args.h, args.g, Mode.WEAK if getattr(args, "weak", False) else Mode.STRICT)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _report(rep, show_all: bool, fmt, size: int) -> int:
    print(f"RESULT={rep.verdict}")
    print(f"size={size}")
    print(f"shapes_examined={rep.shapes_examined}")
    if rep.budget_exhausted:
        print("budget_exhausted=true")
    shown = rep.witnesses if show_all else rep.witnesses[:1]
    for w in shown:
        print(fmt(w))
    if rep.holds is None:
        return EXIT_UNDECIDED
    return EXIT_OK if rep.holds else EXIT_VIOLATED


def _fmt_witness(w) -> str:
    return (f"witness shape={','.join(map(str, w.shape.points))} "
            f"offsets={','.join(map(str, w.offsets))} disjoint={str(w.disjoint).lower()}")


def _fmt_grid_witness(w) -> str:
    pts = ";".join(f"{x},{y}" for x, y in w.shape.points)
    offs = ";".join(f"{x},{y}" for x, y in w.offsets)
    return f"witness shape={pts} offsets={offs} disjoint={str(w.disjoint).lower()}"


def cmd_verify(args) -> int:
    a = read_set_file(args.set)
    rep = check(a, _params(args), args.budget, args.max_witnesses)
    return _report(rep, args.witnesses, _fmt_witness, len(a))


def cmd_random_deletion(args) -> int:
    trace = construct.random_deletion(args.n, _params(args), args.seed, args.retries, args.budget)
    record = trace.to_record()
    summary = [line for line in record.splitlines()
               if not line.startswith(("sample=", "bad=", "result="))]
    text = format_set(trace.result, summary)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.trace:
        Path(args.trace).write_text(record, encoding="utf-8")
    if not trace.success:
        log.warning("size thresholds not met after %d retries", args.retries)
    return EXIT_OK


def cmd_greedy(args) -> int:
    p = _params(args)
    a = construct.greedy(args.n, p, args.budget)
    sys.stdout.write(format_set(a, [f"greedy n={args.n} h={p.h} g={p.g} mode={p.mode.value}",
                                    f"size={len(a)}"]))
    return EXIT_OK


def cmd_sidon(args) -> int:
    a = construct.sidon_erdos_turan(args.prime)
    sys.stdout.write(format_set(a, [f"sidon q={args.prime}", f"size={len(a)}"]))
    return EXIT_OK


def cmd_bounds(args) -> int:
    h, g = min(args.h, args.g), max(args.h, args.g)
    if (h, g) != (args.h, args.g):
        log.info("C_%d[%d] = C_%d[%d]: using h=%d, g=%d", args.h, args.g, h, g, h, g)
    p = bounds.deletion_p(args.n, h, g)
    lines = [
        ("n", args.n),
        ("h", args.h),
        ("g", args.g),
        ("leading", repr(bounds.thm1_leading(args.n, h, g))),
    ]
    if args.rigorous:
        lines.append(("rigorous", bounds.thm1_rigorous(args.n, h, g)))
    lines += [
        ("thm2_exponent", repr(bounds.thm2_exponent(h, g))),
        ("thm2_exponent_exact", str(bounds.thm2_exponent_exact(h, g))),
        ("p", repr(p)),
        ("np", repr(args.n * p)),
    ]
    for k, v in lines:
        print(f"{k}={v}")
    return EXIT_OK


def cmd_search(args) -> int:
    rows = search.extremal_table(args.nmax, _params(args), args.timeout, args.budget)
    sys.stdout.write(search.table_csv(rows))
    if not all(r.optimal for r in rows):
        log.warning("time budget ran out; rows marked optimal=false are lower bounds")
    return EXIT_OK


def cmd_blocks(args) -> int:
    prof = seqstats.block_profile(read_set_file(args.set), args.N, Params(args.h, args.g))
    sys.stdout.write(prof.to_csv())
    return EXIT_OK


def cmd_tau(args) -> int:
    a = read_set_file(args.set)
    xs = args.xs
    if xs is None:
        xs = seqstats.geometric_grid(max(args.m, 2), a[-1] if len(a) else 0)
    value = seqstats.tau(a, args.m, xs, args.h)
    print(f"m={args.m}")
    print(f"h={args.h}")
    print(f"samples={','.join(map(str, xs))}")
    print(f"tau_upper_estimate={value!r}")
    return EXIT_OK


def cmd_grid_verify(args) -> int:
    a = grid2d.read_points_file(args.points)
    rep = grid2d.is_grid_chg(a, _params(args), args.budget, args.max_witnesses)
    return _report(rep, args.witnesses, _fmt_grid_witness, len(a))


def _check_order(args) -> Optional[str]:
    if args.order == "random" and args.seed is None:
        return "--order random needs --seed"
    return None


def cmd_grid_greedy(args) -> int:
    p = _params(args)
    a = grid2d.grid_greedy(args.n, p, args.order, args.seed, args.budget)
    head = [f"grid greedy n={args.n} h={p.h} g={p.g} mode={p.mode.value} order={args.order}"]
    if args.seed is not None:
        head.append(f"seed={args.seed}")
    head.append(f"size={len(a)}")
    sys.stdout.write(grid2d.format_points(a, head))
    return EXIT_OK


def cmd_grid_density(args) -> int:
    rows = grid2d.density_rows(args.ns, _params(args), args.order, args.seed)
    sys.stdout.write(grid2d.density_csv(rows))
    return EXIT_OK


def cmd_grid_figure(args) -> int:
    sys.stdout.write(grid2d.format_points(grid2d.GridSet(grid2d.FIGURE_POINTS),
                                          ["three translated triangles"]))
    return EXIT_OK


def _hg(p: argparse.ArgumentParser, weak: bool = True) -> None:
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    if weak:
        p.add_argument("--weak", action="store_true", help="require the g translates to be pairwise disjoint")


def _budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="node budget for the disjoint-translate search")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chsets", description="C_h[g] and weak-C_h[g] integer sets")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="decide the property for a set file")
    p.add_argument("--set", required=True)
    _hg(p)
    p.add_argument("--witnesses", action="store_true", help="print every witness found, not just the first")
    p.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)
    _budget(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build sets")
    csub = p.add_subparsers(dest="method", required=True)
    q = csub.add_parser("random-deletion", help="sample and delete bad elements")
    q.add_argument("--n", type=int, required=True)
    _hg(q, weak=False)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--retries", type=int, default=8)
    q.add_argument("--out", help="write the set here instead of stdout")
    q.add_argument("--trace", help="write the full key=value trace here")
    _budget(q)
    q.set_defaults(func=cmd_random_deletion, weak=True)
    q = csub.add_parser("greedy", help="greedy scan of [1, n]")
    q.add_argument("--n", type=int, required=True)
    _hg(q)
    _budget(q)
    q.set_defaults(func=cmd_greedy)
    q = csub.add_parser("sidon", help="Erdos-Turan Sidon set for a prime")
    q.add_argument("--prime", type=int, required=True)
    q.set_defaults(func=cmd_sidon)

    p = sub.add_parser("bounds", help="upper bound and deletion density")
    p.add_argument("--n", type=int, required=True)
    _hg(p, weak=False)
    p.add_argument("--rigorous", action="store_true", help="also print the finite-n upper bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exact extremal table for n = 1..nmax")
    p.add_argument("--nmax", type=int, required=True)
    _hg(p)
    p.add_argument("--timeout", type=float, default=None, help="seconds for the whole table")
    _budget(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("blocks", help="block profile CSV")
    p.add_argument("--set", required=True)
    p.add_argument("--N", type=int, required=True)
    _hg(p, weak=False)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("tau", help="finite-data upper estimate of tau(m)")
    p.add_argument("--set", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--xs", type=_ints, default=None, help="comma-separated sample points")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("grid2d", help="planar version")
    gsub = p.add_subparsers(dest="action", required=True)
    q = gsub.add_parser("verify", help="decide the property for a point file")
    q.add_argument("--points", required=True)
    _hg(q)
    q.add_argument("--witnesses", action="store_true")
    q.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)
    _budget(q)
    q.set_defaults(func=cmd_grid_verify)
    for name, func, help_ in (("greedy", cmd_grid_greedy, "greedy scan of [1, n]^2"),
                              ("density", cmd_grid_density, "greedy sizes as CSV")):
        q = gsub.add_parser(name, help=help_)
        if name == "greedy":
            q.add_argument("--n", type=int, required=True)
        else:
            q.add_argument("--ns", type=_ints, default=[8, 16, 32])
        _hg(q)
        q.add_argument("--order", choices=["row-major", "random"], default="row-major")
        q.add_argument("--seed", type=int, default=None)
        _budget(q)
        q.set_defaults(func=func)
    q = gsub.add_parser("figure", help="print the nine-dot triangle configuration")
    q.set_defaults(func=cmd_grid_figure)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if hasattr(args, "order"):
        err = _check_order(args)
        if err:
            ap.print_usage(sys.stderr)
            print(f"chsets: error: {err}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExhausted as e:
        print(f"chsets: undecided: {e}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (ChsetsError, ValueError, OSError) as e:
        print(f"chsets: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
