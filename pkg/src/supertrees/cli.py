"""Command-line entry point: ``supertrees <command> ...``.

Exit status is 0 on success, 1 when a verification report fails and 2 on
usage, input or numerical errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .enumeration import catalog_csv, enumerate_supertrees, export_catalog, format_number
from .errors import HypergraphError, NoConvergence
from .generators import double_hyperstar, hyperpath, superstar
from .hypergraph import Hypergraph, read_hgt, write_hgt
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, adjacency_matrix, spectral_radius, write_matrix_market
from .verify import (
    MERGE_CASES,
    SEP_TOL,
    VerificationReport,
    verify_branch_split,
    verify_edge_addition,
    verify_edge_shift,
    verify_extremal,
    verify_grafting,
    verify_merge_split,
    verify_pendant_identities,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    sep_tol: float = SEP_TOL
    method: str = "power"
    fmt: str = "text"
    vertex_budget: int = 5000

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if not self.sep_tol >= self.tol:
            raise UsageError("--sep-tol must be at least --tol")
        if self.max_iter < 1:
            raise UsageError("--max-iter must be positive")
        if self.vertex_budget < 1:
            raise UsageError("--budget must be positive")


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        tol=getattr(args, "tol", DEFAULT_TOL),
        max_iter=getattr(args, "max_iter", DEFAULT_MAX_ITER),
        sep_tol=getattr(args, "sep_tol", SEP_TOL),
        method=getattr(args, "method", "power"),
        fmt=getattr(args, "format", None) or "text",
        vertex_budget=getattr(args, "budget", 5000),
    )


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_graph(path: str) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return read_hgt(text)


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


# -- commands ---------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "double-hyperstar":
        if args.l1 is None or args.l2 is None:
            raise UsageError("double-hyperstar needs --l1 and --l2")
        H = double_hyperstar(args.k, args.l1, args.l2)
    else:
        if args.m is None:
            raise UsageError(f"{args.family} needs --m")
        H = (hyperpath if args.family == "hyperpath" else superstar)(args.k, args.m)
    _write_text(args.output, write_hgt(H))
    return EXIT_OK


def cmd_rho(args: argparse.Namespace) -> int:
    cfg = _config(args)
    res = spectral_radius(_read_graph(args.file), tol=cfg.tol, max_iter=cfg.max_iter, method=cfg.method)
    if cfg.fmt == "json":
        import json

        print(json.dumps({"rho": res.rho, "iterations": res.iterations, "residual": res.residual,
                          "method": res.method}, sort_keys=True))
    else:
        print(f"rho = {format_number(res.rho)}")
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    cfg = _config(args)
    catalog = enumerate_supertrees(args.k, args.m, method=cfg.method, tol=cfg.tol, max_iter=cfg.max_iter,
                                   vertex_budget=cfg.vertex_budget)
    paths = export_catalog(catalog, args.out, args.csv)
    if cfg.fmt == "csv":
        sys.stdout.write(catalog_csv(catalog))
    else:
        print(f"{len(paths)} classes for k={args.k} m={args.m}")
        for path, entry in zip(paths, catalog.entries):
            print(f"{path.name} rho = {format_number(entry.spectrum.rho)}")
    return EXIT_OK


def _report_text(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    if not report.applicable:
        status += " (not applicable)"
    lines = [f"{report.check}: {status}"]
    for tag, items in (("ok", report.witnesses), ("FAILED", report.failures)):
        for w in items:
            vals = " ".join(
                f"{k}={format_number(v) if isinstance(v, float) else v}" for k, v in sorted(w.values.items())
            )
            lines.append(f"  [{tag}] {w.description} {vals}".rstrip())
    lines.extend(f"  note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


def _shift_item(text: str) -> tuple[list[int], list[int], list[int]]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("shift must be EDGE:REMOVED:TARGET, e.g. 4,5,6:4:2")
    return tuple(_int_list(p) for p in parts)  # type: ignore[return-value]


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    check = args.check
    common = {"method": cfg.method, "tol": cfg.tol}
    if check == "extremal":
        report = verify_extremal(args.k, args.m, cfg.sep_tol, max_iter=cfg.max_iter, **common)
    elif check == "pendant":
        report = verify_pendant_identities(_read_graph(args.file), tol=args.identity_tol, method=cfg.method)
    elif check == "addition":
        report = verify_edge_addition(_read_graph(args.file), args.edge, **common)
    elif check == "shift":
        report = verify_edge_shift(_read_graph(args.file), args.shift, **common)
    elif check == "graft":
        report = verify_grafting(_read_graph(args.base), args.v, args.p, args.q, args.k, **common)
    elif check == "split":
        report = verify_branch_split(_read_graph(args.base), args.v0, args.k, args.L0, args.branches, **common)
    else:
        report = verify_merge_split(_read_graph(args.file), args.case, args.t, e1=args.e1, e2=args.e2,
                                    sep_tol=cfg.sep_tol, **common)
    text = report.to_json() + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    sys.stdout.write(text if (args.format or "json") == "json" else _report_text(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_export(args: argparse.Namespace) -> int:
    H = _read_graph(args.file)
    _write_text(args.output, write_matrix_market(adjacency_matrix(H)))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=("power", "dense"), default="power")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigen-residual tolerance")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supertrees", description="Spectral radii of uniform supertrees.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a named supertree as HGT")
    g.add_argument("family", choices=("hyperpath", "superstar", "double-hyperstar"))
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--l1", type=int)
    g.add_argument("--l2", type=int)
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("rho", help="spectral radius of an HGT file ('-' for stdin)")
    r.add_argument("file")
    _solver_flags(r)
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_rho)

    e = sub.add_parser("enum", help="all k-uniform supertrees with m edges up to isomorphism")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--out", required=True, help="directory for class_NNN.hgt files")
    e.add_argument("--csv", help="also write the catalog CSV here")
    e.add_argument("--budget", type=int, default=5000, help="maximum vertex count")
    e.add_argument("--format", choices=("text", "csv"), default="text")
    _solver_flags(e)
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", help="run a verification check")
    checks = v.add_subparsers(dest="check", required=True)

    def check(name: str, help_text: str) -> argparse.ArgumentParser:
        p = checks.add_parser(name, help=help_text)
        _solver_flags(p)
        p.add_argument("--sep-tol", type=float, default=SEP_TOL)
        p.add_argument("--format", choices=("json", "text"), default=None, help="default json")
        p.add_argument("--report", help="also write the JSON report to this path")
        p.set_defaults(func=cmd_verify)
        return p

    p = check("extremal", "extreme classes over the full catalog")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = check("pendant", "eigenvector identities on interior and pendant edges")
    p.add_argument("file")
    p.add_argument("--identity-tol", type=float, default=1e-9)

    p = check("addition", "adding an edge raises rho")
    p.add_argument("file")
    p.add_argument("--edge", type=_int_list, required=True)

    p = check("shift", "moving edges onto heavier vertices raises rho")
    p.add_argument("file")
    p.add_argument("--shift", type=_shift_item, action="append", required=True,
                   metavar="EDGE:REMOVED:TARGET")

    p = check("graft", "splitting a pendant path at its base raises rho")
    p.add_argument("--base", required=True, help="HGT file of the base hypergraph")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = check("split", "branching a pendant path on its first edge raises rho")
    p.add_argument("--base", required=True)
    p.add_argument("--v0", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--L0", type=int, required=True)
    p.add_argument("--branches", type=_int_list, required=True)

    p = check("merge", "merging or splitting edges along a degree-2 run")
    p.add_argument("file")
    p.add_argument("--case", choices=MERGE_CASES, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--e1", type=_int_list)
    p.add_argument("--e2", type=_int_list)

    x = sub.add_parser("export", help="export matrices")
    x.add_argument("kind", choices=("mm",))
    x.add_argument("file")
    x.add_argument("-o", "--output", default="-")
    x.set_defaults(func=cmd_export)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except (UsageError, HypergraphError, NoConvergence, OSError, ValueError) as exc:
        print(f"supertrees {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
