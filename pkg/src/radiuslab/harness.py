"""Batch verification harness: ensemble sweeps, bound comparison, sharpness
search, single-matrix evaluation, and report serialization.

Reports are deterministic for a fixed configuration: per-trial inputs are
derived from (seed, trial index, slot) counters, trials are reduced in
index order regardless of worker scheduling, and JSON/CSV output uses
round-trip float formatting.  Only the wall-time field varies between
runs.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bounds import (
    DEFAULT_TOL_REL,
    BoundReport,
    Operand,
    TrialInputs,
    parse_bound_spec,
)
from .ensembles import EnsembleSpec, sample, trial_seed, trial_spec
from .errors import IncomparableBoundsError, UnknownBoundError
from .linalg import TOL_FLOOR, operator_norm
from .matrixio import load_matrix, matrix_to_payload
from .radius import DEFAULT_SWEEP, SweepConfig

SCHEMA_VERSION = 1

#: Environment variable capping the trial worker count.
THREADS_ENV = "RADIUSLAB_THREADS"


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one harness run."""

    bounds: Sequence[str]
    ensemble: EnsembleSpec
    trials: int = 100
    tol_rel: float = DEFAULT_TOL_REL
    sweep: SweepConfig = field(default_factory=SweepConfig)
    output_path: str | None = None
    output_format: str = "json"

    def echo(self) -> dict:
        return {
            "bounds": list(self.bounds),
            "ensemble": {
                "kind": self.ensemble.kind,
                "dim": int(self.ensemble.dim),
                "scale": float(self.ensemble.scale),
                "seed": int(self.ensemble.seed),
            },
            "trials": int(self.trials),
            "tol_rel": float(self.tol_rel),
            "sweep": {
                "coarse_grid": int(self.sweep.coarse_grid),
                "refine_tol": float(self.sweep.refine_tol),
                "max_refine_iters": int(self.sweep.max_refine_iters),
            },
        }


def worker_count() -> int:
    """Trial parallelism: min(4, cpu count), capped by RADIUSLAB_THREADS."""
    n = min(4, os.cpu_count() or 1)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            n = min(n, max(1, int(env)))
        except ValueError:
            pass
    return n


def _map_trials(fn, count: int) -> list:
    """Order-preserving map over trial indices, optionally threaded.

    Trials are pure functions of their index, so the reduction is
    deterministic regardless of scheduling.
    """
    workers = worker_count()
    if workers <= 1 or count <= 1:
        return [fn(t) for t in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def _unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def _trial_inputs(config: RunConfig, trial: int, arity: int, vectors: int) -> TrialInputs:
    s = Operand(sample(trial_spec(config.ensemble, trial, 0)), config.sweep)
    t = None
    if arity > 1:
        t = Operand(sample(trial_spec(config.ensemble, trial, 1)), config.sweep)
    x = y = None
    if vectors:
        rng = np.random.default_rng(trial_seed(config.ensemble.seed, trial, 2))
        x = _unit_vector(rng, s.n)
        if vectors > 1:
            y = _unit_vector(rng, s.n)
    return TrialInputs(s=s, t=t, x=x, y=y)


def _aggregate(bound_id: str, reports: list[tuple[int, BoundReport]], trials: int) -> dict:
    applicable = [(t, r) for t, r in reports if r.applicable]
    agg = {
        "bound_id": bound_id,
        "trials": trials,
        "applicable_count": len(applicable),
        "pass_count": sum(1 for _, r in applicable if r.holds),
        "fail_count": sum(1 for _, r in applicable if not r.holds),
        "min_slack": min((r.slack for _, r in applicable), default=0.0),
        "mean_slack": (
            sum(r.slack for _, r in applicable) / len(applicable) if applicable else 0.0
        ),
        "min_rel_slack": min((r.rel_slack for _, r in applicable), default=0.0),
        "worst_trial": None,
        "worst_report": None,
        "worst_witness": None,  # filled by the caller, which holds the matrices
    }
    if applicable:
        worst_t, worst_r = min(applicable, key=lambda tr: (tr[1].rel_slack, tr[0]))
        agg["worst_trial"] = worst_t
        agg["worst_report"] = worst_r.as_dict()
    return agg


def _witness_payload(ti: TrialInputs) -> dict:
    payload = {"S": matrix_to_payload(ti.s.matrix)}
    if ti.t is not None:
        payload["T"] = matrix_to_payload(ti.t.matrix)
    return payload


def run_verify(config: RunConfig) -> dict:
    """Sample ``config.trials`` inputs, evaluate every requested bound on
    each, and aggregate per-bound statistics.

    The report's ``failed`` flag is True iff some applicable trial failed.
    """
    t0 = time.perf_counter()
    resolved = [parse_bound_spec(s) for s in config.bounds]
    if not resolved:
        raise UnknownBoundError("no bounds requested")
    arity = max(entry.arity for entry, _, _ in resolved)
    vectors = max(entry.vectors for entry, _, _ in resolved)

    def one_trial(t: int):
        ti = _trial_inputs(config, t, arity, vectors)
        reports = [
            entry.run(ti, params, config.sweep, config.tol_rel)
            for entry, params, _ in resolved
        ]
        return ti, reports

    outcomes = _map_trials(one_trial, config.trials)

    summaries = []
    failed = False
    for k, (_, params, canonical) in enumerate(resolved):
        per_bound = [(t, outcomes[t][1][k]) for t in range(config.trials)]
        agg = _aggregate(canonical, per_bound, config.trials)
        if agg["worst_trial"] is not None:
            agg["worst_witness"] = _witness_payload(outcomes[agg["worst_trial"]][0])
        if agg["fail_count"]:
            failed = True
        summaries.append(agg)

    report = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "config": config.echo(),
        "seed": int(config.ensemble.seed),
        "bounds": summaries,
        "failed": failed,
        "wall_time_s": time.perf_counter() - t0,
    }
    if config.output_path:
        write_report(report, config.output_path, config.output_format)
    return report


def run_compare(config: RunConfig, tighter: str, looser: str) -> dict:
    """Check per-trial that the claimed-tighter bound's right side never
    exceeds the looser one's beyond tolerance.

    Both identifiers must upper-bound the same quantity.
    """
    t0 = time.perf_counter()
    e_tight, p_tight, id_tight = parse_bound_spec(tighter)
    e_loose, p_loose, id_loose = parse_bound_spec(looser)
    if (
        e_tight.quantity is None
        or e_loose.quantity is None
        or e_tight.quantity != e_loose.quantity
    ):
        raise IncomparableBoundsError(
            f"{id_tight} and {id_loose} do not upper-bound the same quantity"
        )

    def one_trial(t: int):
        ti = _trial_inputs(config, t, 1, 0)
        rt = e_tight.run(ti, p_tight, config.sweep, config.tol_rel)
        rl = e_loose.run(ti, p_loose, config.sweep, config.tol_rel)
        margin = rl.rhs - rt.rhs
        tol = max(config.tol_rel * rt.scale, TOL_FLOOR)
        return ti, margin, rt.scale, margin < -tol

    outcomes = _map_trials(one_trial, config.trials)
    margins = [m for _, m, _, _ in outcomes]
    violations = [t for t, (_, _, _, bad) in enumerate(outcomes) if bad]
    worst_idx = min(range(len(outcomes)), key=lambda t: (margins[t], t)) if outcomes else None
    report = {
        "schema": SCHEMA_VERSION,
        "command": "compare",
        "config": config.echo(),
        "seed": int(config.ensemble.seed),
        "tighter": id_tight,
        "looser": id_loose,
        "trials": config.trials,
        "violation_count": len(violations),
        "violation_trials": violations[:32],
        "min_margin": min(margins, default=0.0),
        "mean_margin": sum(margins) / len(margins) if margins else 0.0,
        "worst_witness": _witness_payload(outcomes[worst_idx][0]) if worst_idx is not None else None,
        "failed": bool(violations),
        "wall_time_s": time.perf_counter() - t0,
    }
    if config.output_path:
        write_report(report, config.output_path, config.output_format)
    return report


def run_sharpness(config: RunConfig, bound_spec: str, multistarts: int = 64, steps: int = 500) -> dict:
    """Search for minimal normalized slack (sharpness witnesses).

    Random multistart from the configured ensemble plus coordinate
    perturbation descent: one random entry of one operand is perturbed per
    step, a greedy line search doubles any accepted move while it keeps
    improving, and the step size anneals by 0.9 on each non-improvement.
    Moves that leave the bound's admissible class are rejected.  ``steps``
    counts objective evaluations per start.
    """
    t0 = time.perf_counter()
    entry, params, canonical = parse_bound_spec(bound_spec)

    def objective(mats: list[np.ndarray], vecs) -> float | None:
        ops = [Operand(m, config.sweep) for m in mats]
        ti = TrialInputs(
            s=ops[0],
            t=ops[1] if len(ops) > 1 else None,
            x=vecs[0] if vecs else None,
            y=vecs[1] if len(vecs) > 1 else None,
        )
        rep = entry.run(ti, params, config.sweep, config.tol_rel)
        if not rep.applicable:
            return None
        return rep.rel_slack

    def one_start(m: int):
        mats = [sample(trial_spec(config.ensemble, m, j)) for j in range(entry.arity)]
        rng = np.random.default_rng(trial_seed(config.ensemble.seed, m, 97))
        vecs = [_unit_vector(rng, mats[0].shape[0]) for _ in range(entry.vectors)]
        val = objective(mats, vecs)
        if val is None:
            return None
        step = 0.1 * max(max(operator_norm(M) for M in mats), TOL_FLOOR)
        used = 0
        while used < steps:
            k = int(rng.integers(len(mats)))
            i = int(rng.integers(mats[k].shape[0]))
            j = int(rng.integers(mats[k].shape[1]))
            delta = step * complex(rng.standard_normal(), rng.standard_normal()) / math.sqrt(2)
            cand = [M.copy() for M in mats]
            cand[k][i, j] += delta
            cval = objective(cand, vecs)
            used += 1
            if cval is None or cval >= val:
                step *= 0.9
                continue
            mats, val = cand, cval
            while used < steps:
                delta *= 2.0
                cand = [M.copy() for M in mats]
                cand[k][i, j] += delta
                cval = objective(cand, vecs)
                used += 1
                if cval is not None and cval < val:
                    mats, val = cand, cval
                else:
                    break
        return val, mats

    results = _map_trials(one_start, multistarts)
    usable = [(m, r) for m, r in enumerate(results) if r is not None]
    best = min(usable, key=lambda mr: (mr[1][0], mr[0])) if usable else None
    report = {
        "schema": SCHEMA_VERSION,
        "command": "sharpness",
        "config": config.echo(),
        "seed": int(config.ensemble.seed),
        "bound_id": canonical,
        "multistarts": multistarts,
        "steps": steps,
        "started": len(usable),
        "best_rel_slack": best[1][0] if best else None,
        "best_start": best[0] if best else None,
        "witness": (
            {"S": matrix_to_payload(best[1][1][0])}
            | ({"T": matrix_to_payload(best[1][1][1])} if len(best[1][1]) > 1 else {})
            if best
            else None
        ),
        "failed": False,
        "wall_time_s": time.perf_counter() - t0,
    }
    if config.output_path:
        write_report(report, config.output_path, config.output_format)
    return report


def run_eval(
    matrix_path: str,
    bound_specs: Sequence[str],
    sweep: SweepConfig = DEFAULT_SWEEP,
    tol_rel: float = DEFAULT_TOL_REL,
    seed: int = 0,
    output_path: str | None = None,
    output_format: str = "json",
) -> dict:
    """Evaluate bounds on one matrix loaded from the JSON format.

    Two-operand bounds are evaluated with the second operand equal to the
    first; vector inputs come from a generator seeded by ``seed``.
    """
    t0 = time.perf_counter()
    S = load_matrix(matrix_path)
    resolved = [parse_bound_spec(s) for s in bound_specs]
    op = Operand(S, sweep)
    rng = np.random.default_rng(seed)
    x = _unit_vector(rng, op.n)
    y = _unit_vector(rng, op.n)
    ti = TrialInputs(s=op, t=op, x=x, y=y)
    reports = [entry.run(ti, params, sweep, tol_rel) for entry, params, _ in resolved]
    report = {
        "schema": SCHEMA_VERSION,
        "command": "eval",
        "matrix_path": str(matrix_path),
        "matrix": matrix_to_payload(S),
        "seed": int(seed),
        "reports": [r.as_dict() for r in reports],
        "failed": any(r.applicable and not r.holds for r in reports),
        "wall_time_s": time.perf_counter() - t0,
    }
    if output_path:
        write_report(report, output_path, output_format)
    return report


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, float):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_to_json(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2, allow_nan=False) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(_jsonable(v), sort_keys=True, allow_nan=False)
    return str(v)


def report_to_csv(report: dict) -> str:
    """Flat CSV rendering: one row per bound summary (verify) or one row of
    scalars (other commands).  Numeric cells use round-trip float
    formatting, so values match the JSON rendering exactly."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.get("command") == "verify":
        cols = [
            "bound_id",
            "trials",
            "applicable_count",
            "pass_count",
            "fail_count",
            "min_slack",
            "mean_slack",
            "min_rel_slack",
            "worst_trial",
            "worst_witness",
        ]
        writer.writerow(cols)
        for agg in report["bounds"]:
            writer.writerow([_csv_cell(agg.get(c)) for c in cols])
    else:
        keys = [k for k in sorted(report) if k not in ("schema", "config", "wall_time_s")]
        writer.writerow(keys)
        writer.writerow([_csv_cell(report[k]) for k in keys])
    return buf.getvalue()


def write_report(report: dict, path: str, fmt: str = "json") -> None:
    text = report_to_json(report) if fmt == "json" else report_to_csv(report)
    with open(path, "w") as fh:
        fh.write(text)
