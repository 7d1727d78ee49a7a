"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails (reports are still
printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cache import TableCache, resolve_dir
from .combinatorics import DEFAULT_BOUND, check_size, involution_descent_table
from .errors import PhiDefectError, SrimatError
from .matrices import count_table, parse_matrix, render_matrix
from .pairing import classify, leading_index, pair_all, phi
from .verify import (
    VerificationReport,
    observe_odd_zero_diagonal,
    oracle_T_from_involutions,
    shape_checks,
    verify_alternating_sum,
    verify_corollary,
    verify_main_theorem,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=_positive, default=DEFAULT_BOUND,
                        help=f"largest n any enumeration may use (default {DEFAULT_BOUND})")
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--cache", action="store_true",
                        help="read and write count tables in the cache directory")
    common.add_argument("--cache-dir", default=None,
                        help="cache directory (default: $DM_CACHE_DIR or .srimat-cache)")

    parser = argparse.ArgumentParser(
        prog="srimat",
        description="Involution descent tables, symmetric matrix families and their pairing map.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="count triangles for n = 1..N")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--family", choices=("T", "W", "I"), default="T")

    p = sub.add_parser("verify", parents=[common], help="check the identities at one n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--identity", choices=("main1", "main2", "alt-sum", "corollary", "all"),
                   default="all")

    for name, text in (("phi", "apply the pairing map to one matrix"),
                       ("classify", "show the case label of one matrix")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--input", default=None, help="matrix file (default: standard input)")

    p = sub.add_parser("pair", parents=[common], help="JSON line per member of S with its image")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--zero-diagonal", action="store_true")

    p = sub.add_parser("oracle", parents=[common],
                       help="recover T(n,.) from involution counts and compare")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("shapes", parents=[common], help="symmetry/unimodality/log-concavity")
    p.add_argument("--max-n", type=_positive, required=True)
    return parser


class Tables:
    """Count lookups for one CLI run; the on-disk cache is used only when enabled."""

    def __init__(self, cache: TableCache, bound: int):
        self.cache = cache
        self.bound = bound
        self._seen: dict[tuple[str, int], list[int]] = {}

    def _compute(self, family: str, n: int) -> list[int]:
        if family == "I":
            return involution_descent_table(n, self.bound)
        return count_table(n, family == "W", self.bound)

    def counts(self, family: str, n: int) -> list[int]:
        check_size(n, self.bound)
        key = (family, n)
        if key not in self._seen:
            if self.cache.enabled:
                self._seen[key] = self.cache.get(family, n, lambda: self._compute(family, n))
            else:
                self._seen[key] = self._compute(family, n)
        return self._seen[key]


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _reject_csv(args) -> None:
    if args.format == "csv":
        raise UsageError(f"--format csv is only available for 'tables', not '{args.command}'")


def cmd_tables(args, tables: Tables, out) -> int:
    check_size(args.max_n, args.bound)
    k_start = 0 if args.family == "I" else 1
    rows = [tables.counts(args.family, n) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        _emit(out, json.dumps({"family": args.family, "k_start": k_start, "rows": rows}))
    elif args.format == "csv":
        lines = ["n,k,count"]
        for n, row in enumerate(rows, start=1):
            lines.extend(f"{n},{k},{c}" for k, c in enumerate(row, start=k_start))
        _emit(out, "\n".join(lines))
    else:
        _emit(out, "\n".join(f"{n}: " + " ".join(map(str, row)) for n, row in enumerate(rows, start=1)))
    return EXIT_OK


def _reports(args, tables: Tables) -> list[VerificationReport]:
    n, which, bound = args.n, args.identity, args.bound
    if which == "corollary" and n % 2:
        raise UsageError(f"corollary holds for even n only; got n={n}")
    check_size(n, bound)
    reports = []
    if which in ("main1", "main2", "all"):
        T, I = tables.counts("T", n), tables.counts("I", n)
        if which in ("main1", "all"):
            reports.append(verify_main_theorem(n, "first", t_counts=T, i_counts=I, bound=bound))
        if which in ("main2", "all"):
            reports.append(verify_main_theorem(n, "second", t_counts=T, i_counts=I, bound=bound))
    if which in ("alt-sum", "all"):
        by_counts = verify_alternating_sum(n, "by_counts", t_counts=tables.counts("T", n), bound=bound)
        by_pairing = verify_alternating_sum(n, "by_pairing", bound=bound)
        reports += [by_counts, by_pairing]
        agree = by_counts.lhs == by_pairing.lhs
        reports.append(VerificationReport(
            "alt-sum:modes-agree", n, by_counts.lhs, by_pairing.lhs, agree,
            None if agree else "count and pairing modes disagree",
        ))
    if which in ("corollary", "all"):
        if n % 2 == 0:
            reports.append(verify_corollary(n, w_counts=tables.counts("W", n), bound=bound))
        else:
            reports.append(observe_odd_zero_diagonal(n, bound))
    return reports


def cmd_verify(args, tables: Tables, out) -> int:
    _reject_csv(args)
    reports = _reports(args, tables)
    for r in reports:
        _emit(out, json.dumps(r.to_dict()) if args.format == "json" else r.summary())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _read_matrix(args):
    if args.input is None:
        data = sys.stdin.read()
    else:
        try:
            data = Path(args.input).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
    return parse_matrix(data)


def cmd_phi(args, tables: Tables, out) -> int:
    _reject_csv(args)
    X = _read_matrix(args)
    res = phi(X)
    if args.format == "json":
        obj = {"entries": res.image.to_lists(), **{k: v for k, v in res.to_dict().items() if k != "image"}}
        obj["n"] = X.total()
        _emit(out, json.dumps(obj))
        return EXIT_OK
    lines = [render_matrix(res.image).decode().rstrip("\n"), f"# label: {res.label}",
             f"# m: {res.m}", f"# x: {res.x}"]
    if res.inner_label is not None:
        lines.append(f"# inner_label: {res.inner_label}")
    _emit(out, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args, tables: Tables, out) -> int:
    _reject_csv(args)
    X = _read_matrix(args)
    label = classify(X)
    m, x = leading_index(X)
    info = {"label": label.value, "m": m, "x": x, "n": X.total(), "dim": X.dim}
    inner = phi(X).inner_label if label.case == 4 else None
    if inner is not None:
        info["inner_label"] = inner.value
    if args.format == "json":
        _emit(out, json.dumps(info))
    else:
        _emit(out, "\n".join(f"{k}: {v}" for k, v in info.items()))
    return EXIT_OK


def cmd_pair(args, tables: Tables, out) -> int:
    for X, res in pair_all(args.n, zero_diagonal=args.zero_diagonal, bound=args.bound):
        obj = {"input": X.to_lists(), "sign": (-1) ** X.dim, **res.to_dict()}
        _emit(out, json.dumps(obj))
    return EXIT_OK


def cmd_oracle(args, tables: Tables, out) -> int:
    _reject_csv(args)
    recovered = oracle_T_from_involutions(args.n, i_counts=tables.counts("I", args.n), bound=args.bound)
    direct = tables.counts("T", args.n)
    ok = recovered == direct
    if args.format == "json":
        _emit(out, json.dumps({"n": args.n, "from_involutions": recovered, "direct": direct, "passed": ok}))
    else:
        _emit(out, f"from involutions: {' '.join(map(str, recovered))}\n"
                   f"direct:           {' '.join(map(str, direct))}\n"
                   f"{'PASS' if ok else 'FAIL'} oracle n={args.n}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_shapes(args, tables: Tables, out) -> int:
    _reject_csv(args)
    report = shape_checks(args.max_n, args.bound)
    if args.format == "json":
        _emit(out, json.dumps(report.to_dict()))
        return EXIT_OK
    yn = {True: "yes", False: "no"}
    lines = ["n symmetric unimodal log_concave row"]
    for r in report.rows:
        lines.append(f"{r.n} {yn[r.symmetric]} {yn[r.unimodal]} {yn[r.log_concave]} "
                     + " ".join(map(str, r.row)))
    failure = report.first_log_concave_failure
    lines.append(f"first log-concavity failure: {failure if failure is not None else f'none for n <= {args.max_n}'}")
    _emit(out, "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "tables": cmd_tables,
    "verify": cmd_verify,
    "phi": cmd_phi,
    "classify": cmd_classify,
    "pair": cmd_pair,
    "oracle": cmd_oracle,
    "shapes": cmd_shapes,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = TableCache(resolve_dir(args.cache_dir) if args.cache else None)
    tables = Tables(cache, args.bound)
    try:
        return COMMANDS[args.command](args, tables, sys.stdout)
    except PhiDefectError as exc:
        print(f"srimat {args.command}: internal defect: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, SrimatError, ValueError) as exc:
        print(f"srimat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
