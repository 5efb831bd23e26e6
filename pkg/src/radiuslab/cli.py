"""Command-line front end.

Subcommands: ``verify`` (ensemble sweeps over the bound catalog),
``compare`` (tightness-chain checks), ``sharpness`` (minimal-slack witness
search), ``eval`` (single-matrix inspection).  Exit codes: 0 on success,
1 when an applicable trial failed or a comparison was violated, 2 on
configuration, parse, or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import catalog_ids, parse_bound_spec
from .ensembles import KINDS, EnsembleSpec
from .errors import RadiusLabError
from .harness import RunConfig, run_compare, run_eval, run_sharpness, run_verify
from .radius import SweepConfig


def _add_sampling_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ensemble", default="ginibre", choices=KINDS, help="matrix class to sample")
    p.add_argument("--dim", type=int, default=6, help="matrix dimension")
    p.add_argument("--scale", type=float, default=1.0, help="overall scale factor")
    p.add_argument("--seed", type=int, default=0, help="base RNG seed")
    p.add_argument("--trials", type=int, default=100, help="number of sampled trials")
    p.add_argument("--tol", type=float, default=1e-7, help="relative slack tolerance")
    p.add_argument("--grid", type=int, default=720, help="coarse theta-grid density")
    p.add_argument("--refine-tol", type=float, default=1e-10, help="theta refinement tolerance")
    p.add_argument("--out", default=None, help="report output path")
    p.add_argument("--format", default="json", choices=("json", "csv"), help="report format")


def _build_config(args, bounds) -> RunConfig:
    return RunConfig(
        bounds=bounds,
        ensemble=EnsembleSpec(kind=args.ensemble, dim=args.dim, scale=args.scale, seed=args.seed),
        trials=args.trials,
        tol_rel=args.tol,
        sweep=SweepConfig(coarse_grid=args.grid, refine_tol=args.refine_tol),
        output_path=args.out,
        output_format=args.format,
    )


def _parse_bounds_arg(raw: str) -> list[str]:
    if raw.strip() == "all":
        return catalog_ids()
    specs = [piece.strip() for piece in raw.split(",") if piece.strip()]
    # Rejoin "id@k=v" specs that straddle commas inside the parameter list,
    # e.g. "prop4@r=2" is safe but "thm24,prop4@r=2" splits cleanly too.
    for spec in specs:
        parse_bound_spec(spec)
    return specs


def _summarize_verify(report: dict) -> None:
    for agg in report["bounds"]:
        status = "ok" if agg["fail_count"] == 0 else "FAIL"
        print(
            f"{agg['bound_id']:<24} applicable {agg['applicable_count']:>5}/{agg['trials']:<5} "
            f"pass {agg['pass_count']:>5}  min_rel_slack {agg['min_rel_slack']:+.3e}  [{status}]"
        )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="radiuslab",
        description="Verify, compare, and probe numerical-radius inequalities on random matrix ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run bound suites over an ensemble")
    p_verify.add_argument("--bounds", required=True, help="comma-separated bound ids, or 'all'")
    _add_sampling_args(p_verify)

    p_compare = sub.add_parser("compare", help="check a claimed-tighter bound against a looser one")
    p_compare.add_argument("--tighter", required=True)
    p_compare.add_argument("--looser", required=True)
    _add_sampling_args(p_compare)

    p_sharp = sub.add_parser("sharpness", help="search for minimal-slack witnesses")
    p_sharp.add_argument("--bound", required=True)
    p_sharp.add_argument("--multistarts", type=int, default=64)
    p_sharp.add_argument("--steps", type=int, default=500)
    _add_sampling_args(p_sharp)

    p_eval = sub.add_parser("eval", help="evaluate bounds on a matrix file")
    p_eval.add_argument("--matrix", required=True, help="path to a JSON matrix file")
    p_eval.add_argument("--bounds", required=True, help="comma-separated bound ids, or 'all'")
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--tol", type=float, default=1e-7)
    p_eval.add_argument("--grid", type=int, default=720)
    p_eval.add_argument("--refine-tol", type=float, default=1e-10)
    p_eval.add_argument("--out", default=None)
    p_eval.add_argument("--format", default="json", choices=("json", "csv"))

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            config = _build_config(args, _parse_bounds_arg(args.bounds))
            report = run_verify(config)
            _summarize_verify(report)
            return 1 if report["failed"] else 0
        if args.command == "compare":
            config = _build_config(args, [])
            report = run_compare(config, args.tighter, args.looser)
            print(
                f"compare {report['tighter']} <= {report['looser']}: "
                f"{report['violation_count']} violations over {report['trials']} trials, "
                f"min margin {report['min_margin']:+.3e}"
            )
            return 1 if report["failed"] else 0
        if args.command == "sharpness":
            config = _build_config(args, [])
            report = run_sharpness(config, args.bound, args.multistarts, args.steps)
            best = report["best_rel_slack"]
            print(
                f"sharpness {report['bound_id']}: best slack/scale "
                f"{best:.3e}" if best is not None else
                f"sharpness {report['bound_id']}: no applicable start"
            )
            return 0
        if args.command == "eval":
            report = run_eval(
                args.matrix,
                _parse_bounds_arg(args.bounds),
                sweep=SweepConfig(coarse_grid=args.grid, refine_tol=args.refine_tol),
                tol_rel=args.tol,
                seed=args.seed,
                output_path=args.out,
                output_format=args.format,
            )
            for r in report["reports"]:
                flag = "ok" if r["holds"] else "FAIL"
                if not r["applicable"]:
                    flag = f"n/a ({r['reason']})"
                print(f"{r['bound_id']:<24} lhs {r['lhs']:+.12e}  rhs {r['rhs']:+.12e}  [{flag}]")
            return 1 if report["failed"] else 0
    except RadiusLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
