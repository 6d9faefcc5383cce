"""Command-line driver: JSON reports, result caching, batch verification.

Exit codes: 0 success, 1 usage or unsupported parameters, 2 resource budget
exceeded, 3 a verification check failed.  Output is JSON by default
(``--format table`` for aligned text); reports are cached per (n, w) under
``--cache-dir`` and keyed by the boundary-convention tag, so a change of
convention invalidates old caches.

Environment overrides: STRIPTC_CACHE_DIR, STRIPTC_MEMORY_BUDGET,
STRIPTC_MAX_CELLS, STRIPTC_THREADS.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import chains
from .certificates import verify_certificate
from .chains import BOUNDARY_CONVENTION, build_complex
from .cohomology import evaluate_witness, surviving_terms, witness_factor_count
from .errors import InvalidParamsError, ResourceLimitError, UnknownSpaceError
from .reports import reference_values, tc_value
from .symbols import ComplexParams, cell_count

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_VERIFICATION = 3


@dataclass
class RunConfig:
    memory_budget: int
    max_cells: int
    cache_dir: Path | None
    threads: int
    fmt: str

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        cache = args.cache_dir or os.environ.get("STRIPTC_CACHE_DIR")
        budget = args.memory_budget or int(
            os.environ.get("STRIPTC_MEMORY_BUDGET", chains.DEFAULT_MEMORY_BUDGET)
        )
        max_cells = args.max_cells or int(
            os.environ.get("STRIPTC_MAX_CELLS", chains.DEFAULT_MAX_CELLS)
        )
        threads = int(os.environ.get("STRIPTC_THREADS", "1"))
        if budget <= 0 or max_cells <= 0:
            raise InvalidParamsError("budgets must be positive")
        return cls(
            memory_budget=budget,
            max_cells=max_cells,
            cache_dir=Path(cache) if cache else None,
            threads=threads,
            fmt=args.format,
        )


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):  # usage problems exit 1, not argparse's 2
        raise _UsageError(message)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        width = max((len(k) for k in payload), default=0)
        for key in sorted(payload):
            print(f"{key.ljust(width)}  {payload[key]}")


def _cache_path(cfg: RunConfig, kind: str, n: int, w: int) -> Path | None:
    if cfg.cache_dir is None:
        return None
    return cfg.cache_dir / f"{kind}_n{n}_w{w}_{BOUNDARY_CONVENTION}.json"


def _cache_load(path: Path | None) -> dict | None:
    if path is None or not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("convention") != BOUNDARY_CONVENTION:
        return None
    return data


def _cache_store(path: Path | None, payload: dict) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True))


def cmd_cells(args, cfg: RunConfig) -> int:
    params = ComplexParams(args.n, args.w)
    counts = [
        cell_count(params, d) for d in range(params.top_dimension + 1)
    ]
    top_nonempty = max(d for d, c in enumerate(counts) if c)
    payload = {
        "n": args.n,
        "w": args.w,
        "cells": counts,
        "top_dimension": top_nonempty,
        "formula_top_dimension": params.top_dimension,
        "dimension_formula_holds": top_nonempty == params.top_dimension,
        "convention": BOUNDARY_CONVENTION,
    }
    _emit(payload, cfg.fmt)
    return EXIT_OK if payload["dimension_formula_holds"] else EXIT_VERIFICATION


def cmd_betti(args, cfg: RunConfig) -> int:
    params = ComplexParams(args.n, args.w)
    path = _cache_path(cfg, "betti", args.n, args.w)
    cached = _cache_load(path)
    if cached is not None:
        cached["cached"] = True
        _emit(cached, cfg.fmt)
        return EXIT_OK
    t0 = time.perf_counter()
    cx = build_complex(
        params, max_cells=cfg.max_cells, memory_budget=cfg.memory_budget
    )
    betti = cx.betti()
    payload = {
        "n": args.n,
        "w": args.w,
        "betti": betti,
        "cells": cx.cell_counts(),
        "euler": cx.euler_characteristic(),
        "top_dimension": cx.top_dimension,
        "elapsed_s": round(time.perf_counter() - t0, 3),
        "convention": BOUNDARY_CONVENTION,
        "cached": False,
    }
    _cache_store(path, payload)
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_certify(args, cfg: RunConfig) -> int:
    params = ComplexParams(args.n, args.w)
    chain_flag: bool | None
    if args.verify == "symbolic":
        chain_flag = False
    elif args.verify == "chain" or args.verify == "both":
        chain_flag = None  # budget-gated; an over-budget request is a resource miss
    report = verify_certificate(params, chain=chain_flag)
    payload = report.to_json(r=args.r)
    _emit(payload, cfg.fmt)

    checks = [report.decomposable_A, report.decomposable_B, report.disjoint_symbolic]
    if report.support_classes_disjoint is not None:
        checks.append(report.support_classes_disjoint)
    if report.projection_full_rank is not None:
        checks.append(report.projection_full_rank)
    if args.verify in ("chain", "both"):
        if report.disjoint_chain is None:
            print(
                f"chain verification skipped: {report.chain_skipped_reason}",
                file=sys.stderr,
            )
            return EXIT_RESOURCE
        checks.append(report.disjoint_chain)
    checks.append(report.consistent)
    return EXIT_OK if all(checks) else EXIT_VERIFICATION


def cmd_tc(args, cfg: RunConfig) -> int:
    report = tc_value(args.n, args.w, args.r)
    _emit(report.to_json(), cfg.fmt)
    return EXIT_OK


def cmd_witness(args, cfg: RunConfig) -> int:
    value = evaluate_witness(args.m, args.l, args.r)
    terms = surviving_terms(args.m, args.l, args.r)
    payload = {
        "m": args.m,
        "l": args.l,
        "r": args.r,
        "value": int(value) if value.denominator == 1 else str(value),
        "factors": witness_factor_count(args.m, args.l, args.r),
        "surviving_terms": len(terms),
    }
    _emit(payload, cfg.fmt)
    ok = abs(value) == 1 and len(terms) == 1
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_reference(args, cfg: RunConfig) -> int:
    query = {}
    for key in ("n", "m", "w", "r"):
        val = getattr(args, key)
        if val is not None:
            query[key] = val
    values = reference_values(args.space, **query)
    _emit({"values": [v.to_json() for v in values]}, cfg.fmt)
    return EXIT_OK


def _verify_all_rows(cfg: RunConfig, max_n: int):
    """Yield (label, ok, detail) for the full verification grid."""
    # torus certificates, chain-checked where the complex fits the budget
    grid = [
        (n, w) for n in range(2, max_n + 1) for w in range(2, n)
    ] + [(n, w) for w in range(2, 6) for n in range(2, w + 1)]
    if max_n >= 8:
        grid.append((8, 2))
    for (n, w) in sorted(set(grid)):
        params = ComplexParams(n, w)
        report = verify_certificate(params)
        ok = (
            report.passed_symbolic
            and report.consistent
            and report.support_classes_disjoint is not False
            and report.projection_full_rank is not False
        )
        mode = "chain+symbolic" if report.disjoint_chain is not None else "symbolic"
        yield f"certificate ({n},{w})", ok, mode

    # exact values against the closed forms, bounds meeting where claimed
    for (n, w) in sorted(set(grid)):
        good = True
        for r in range(2, 6):
            rep = tc_value(n, w, r)
            if n > w:
                hdim = ComplexParams(n, w).top_dimension
                good &= rep.tc == rep.dtc == r * hdim
                good &= rep.lower_tori == rep.upper_bgrt == rep.tc
            else:
                good &= rep.tc == rep.dtc == r * (n - 1) - 1
                good &= rep.lower_tori == rep.tc
                good &= rep.upper_bgrt - rep.tc == 1
        yield f"exact values ({n},{w}) r=2..5", good, "closed form"

    # zero-divisor witness grid
    wit_ok = True
    for m in range(1, 5):
        for l in range(1, m + 1):
            for r in range(2, 5):
                v = evaluate_witness(m, l, r)
                wit_ok &= abs(v) == 1 and len(surviving_terms(m, l, r)) == 1
    yield "zero-divisor witness grid (m,l<=4, r<=4)", wit_ok, "exterior algebra"

    # known Betti tables where the strip is as wide as the disk count
    for n in range(2, 7):
        coeffs = [1]
        for k in range(1, n):
            coeffs = [
                (coeffs[i] if i < len(coeffs) else 0)
                + (k * coeffs[i - 1] if i >= 1 else 0)
                for i in range(len(coeffs) + 1)
            ]
        cx = chains.get_complex(ComplexParams(n, n))
        yield f"betti ({n},{n}) vs point-space polynomial", cx.betti() == coeffs, "rank reduction"


def cmd_verify_all(args, cfg: RunConfig) -> int:
    failures = 0
    rows = []
    t0 = time.perf_counter()
    for label, ok, detail in _verify_all_rows(cfg, args.max_n):
        rows.append((label, ok, detail))
        if not ok:
            failures += 1
        print(f"{'PASS' if ok else 'FAIL'}  {label}  [{detail}]")
    print(
        f"{len(rows) - failures}/{len(rows)} checks passed "
        f"in {time.perf_counter() - t0:.1f}s"
    )
    return EXIT_OK if failures == 0 else EXIT_VERIFICATION


def _add_common(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    # shared options are accepted both before and after the subcommand; the
    # post-subcommand copies use SUPPRESS so they never clobber earlier values
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument(
        "--format", choices=("json", "table"), **(kw or {"default": "json"})
    )
    parser.add_argument("--cache-dir", **(kw or {"default": None}))
    parser.add_argument(
        "--memory-budget", type=int, metavar="BYTES", **(kw or {"default": None})
    )
    parser.add_argument(
        "--max-cells", type=int, metavar="N", **(kw or {"default": None})
    )


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="striptc",
        description=(
            "Mechanical verification of sequential (distributional) "
            "topological complexity for disk configurations in a strip."
        ),
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cells", help="per-dimension cell counts and the dimension formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("betti", help="Betti numbers of the (n, w) model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("certify", help="build and verify the disjoint-tori pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument(
        "--verify", choices=("symbolic", "chain", "both"), default="symbolic"
    )
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("tc", help="exact TC_r and dTC_r with provenance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_tc)

    p = sub.add_parser("witness", help="evaluate the zero-divisor product")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("reference", help="tabulated values for reference spaces")
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--w", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_reference)

    p = sub.add_parser("verify-all", help="run the whole verification grid")
    p.add_argument("--max-n", type=int, default=8)
    _add_common(p, suppress=True)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParamsError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownSpaceError as exc:
        print(f"unknown space: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
