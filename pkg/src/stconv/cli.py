"""Command-line front end.

One subcommand per analysis: ``density``, ``converge``, ``bounded``,
``cauchy``, ``classify``, ``suite``.  Reports go to standard output as JSON
(default) or CSV; all defaults are resolved once and echoed into the report
so a run is reproducible from its own output.

Exit status: 0 on success, 1 when ``--expect`` is not met or the suite has
failures, 2 on descriptor or argument errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import density, operators, sequences, spaces, stanalysis
from .classify import (
    DEFAULT_CLASSIFY_HORIZON,
    DEFAULT_CLASSIFY_TOLERANCE,
    PROPERTIES,
    classify as run_classify,
    run_suite,
    suite_passed,
)
from .parsing import ParseError

ENV_HORIZON = "STCONV_HORIZON"

_COMMAND_HORIZONS = {
    "density": density.DEFAULT_HORIZON,
    "converge": stanalysis.DEFAULT_ANALYSIS_HORIZON,
    "bounded": stanalysis.DEFAULT_ANALYSIS_HORIZON,
    "cauchy": stanalysis.DEFAULT_ANALYSIS_HORIZON,
    "classify": DEFAULT_CLASSIFY_HORIZON,
    "suite": DEFAULT_CLASSIFY_HORIZON,
}

_COMMAND_TOLERANCES = {
    "density": density.DEFAULT_TOLERANCE,
    "converge": stanalysis.DEFAULT_ST_TOLERANCE,
    "bounded": stanalysis.DEFAULT_ST_TOLERANCE,
    "cauchy": stanalysis.DEFAULT_ST_TOLERANCE,
    "classify": DEFAULT_CLASSIFY_TOLERANCE,
    "suite": DEFAULT_CLASSIFY_TOLERANCE,
}


def _float_list(text):
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _int_list(text):
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _add_common(sub, with_eps=True):
    sub.add_argument("--horizon", type=int, default=None,
                     help=f"analysis horizon (default per command; ${ENV_HORIZON} overrides)")
    sub.add_argument("--tolerance", type=float, default=None,
                     help="verdict tolerance (default per command)")
    if with_eps:
        sub.add_argument("--eps", type=_float_list, default=None, metavar="A,B,C",
                         help="epsilon grid, comma separated")
    sub.add_argument("--schedule", default=None, metavar="KIND:VALUE",
                     help="checkpoint schedule, e.g. geometric:10 or linear:5000")
    sub.add_argument("--output", choices=("json", "csv"), default="json")
    sub.add_argument("--expect", default=None,
                     choices=("confirmed", "refuted", "inconclusive", "consistent"),
                     help="exit 1 unless the decision matches")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stconv",
        description="statistical-convergence analyses over index sets, sequences, and operators",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("density", help="density profile and verdict for an index set")
    p.add_argument("--set", required=True, dest="index_set",
                   help="index-set descriptor, e.g. primes or union(multiples(3),squares)")
    p.add_argument("--target", type=float, default=None,
                   help="density target (default: the analytic density when known)")
    _add_common(p, with_eps=False)

    p = subs.add_parser("converge", help="statistical convergence verdict for a sequence")
    p.add_argument("--sequence", required=True, help="sequence descriptor, e.g. harmonic")
    p.add_argument("--candidate", default=None,
                   help="limit candidate element (default: zero)")
    p.add_argument("--operator", default=None,
                   help="analyze the image under this operator descriptor")
    p.add_argument("--seed", type=int, default=7, help="default seed for random descriptors")
    _add_common(p)

    p = subs.add_parser("bounded", help="statistical boundedness verdict for a sequence")
    p.add_argument("--sequence", required=True)
    p.add_argument("--probes", type=_float_list, default=None, metavar="A,B,C",
                   help="norm probe ladder (default: doubling 1..1024)")
    p.add_argument("--operator", default=None)
    p.add_argument("--weak", action="store_true",
                   help="use linear-functional probes (dense sequences only)")
    p.add_argument("--seed", type=int, default=7)
    _add_common(p, with_eps=False)

    p = subs.add_parser("cauchy", help="statistical Cauchy verdict for a sequence")
    p.add_argument("--sequence", required=True)
    p.add_argument("--anchors", type=_int_list, default=None, metavar="A,B,C",
                   help="anchor indices (default: 10, 100, ... up to horizon/10)")
    p.add_argument("--operator", default=None)
    p.add_argument("--seed", type=int, default=7)
    _add_common(p)

    p = subs.add_parser("classify", help="classify an operator property against the corpus")
    p.add_argument("--operator", required=True)
    p.add_argument("--property", required=True, dest="prop",
                   choices=PROPERTIES)
    _add_common(p, with_eps=False)

    p = subs.add_parser("suite", help="run the full theorem-check suite")
    _add_common(p, with_eps=False)

    return parser


def _resolve_horizon(args):
    if args.horizon is not None:
        return int(args.horizon)
    env = os.environ.get(ENV_HORIZON)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(env, 0, f"${ENV_HORIZON} is not an integer")
    return _COMMAND_HORIZONS[args.command]


def _resolve_tolerance(args):
    if args.tolerance is not None:
        return float(args.tolerance)
    return _COMMAND_TOLERANCES[args.command]


def _resolve_schedule(args):
    if getattr(args, "schedule", None):
        return density.parse_schedule(args.schedule)
    return density.DEFAULT_SCHEDULE


def _emit_json(report):
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _emit_verdict_csv(verdict_dicts):
    """Flatten per-epsilon profiles to (epsilon, checkpoint, count, ratio) rows."""
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["epsilon", "checkpoint", "count", "ratio"])
    for entry in verdict_dicts:
        eps = entry.get("epsilon", "")
        profile = entry["profile"]
        for cp, cnt, ratio in zip(
            profile["checkpoints"], profile["counts"], profile["ratios"]
        ):
            writer.writerow([eps, cp, cnt, repr(ratio)])


def _sequence_under_analysis(args):
    seq = sequences.parse_sequence(args.sequence, default_seed=args.seed)
    if args.operator:
        op = operators.parse_operator(args.operator)
        seq = operators.image_sequence(op, seq)
    return seq


def _verdict_csv_entries(verdict):
    entries = []
    for rep in verdict.per_epsilon:
        entries.append({
            "epsilon": rep.epsilon,
            "profile": rep.verdict.profile.to_json_dict(),
        })
    return entries


def _check_expect(expect, decision):
    if expect is None:
        return 0
    want = expect
    if want == "confirmed" and decision == "consistent":
        return 0
    return 0 if decision == want else 1


def _run_density(args):
    horizon = _resolve_horizon(args)
    tolerance = _resolve_tolerance(args)
    schedule = _resolve_schedule(args)
    index_set = density.parse_index_set(args.index_set)
    profile = density.density_profile(index_set, horizon, schedule)
    analytic = index_set.analytic_density
    target = args.target if args.target is not None else (
        float(analytic) if analytic is not None else None
    )
    verdict = None
    if target is not None:
        verdict = density.density_verdict(profile, target, tolerance)
    report = {
        "command": "density",
        "config": {
            "set": args.index_set,
            "horizon": horizon,
            "tolerance": tolerance,
            "target": target,
            "schedule": schedule.describe(),
        },
        "analytic_density": float(analytic) if analytic is not None else None,
        "final_ratio": profile.final_ratio,
        "profile": profile.to_json_dict(),
        "verdict": verdict.to_json_dict() if verdict is not None else None,
    }
    if args.output == "csv":
        _emit_verdict_csv([{"epsilon": "", "profile": profile.to_json_dict()}])
    else:
        _emit_json(report)
    decision = verdict.decision if verdict is not None else "none"
    return _check_expect(args.expect, decision)


def _run_converge(args):
    horizon = _resolve_horizon(args)
    tolerance = _resolve_tolerance(args)
    schedule = _resolve_schedule(args)
    grid = args.eps or stanalysis.DEFAULT_EPS_GRID
    seq = _sequence_under_analysis(args)
    candidate = spaces.parse_element(args.candidate) if args.candidate else None
    verdict = stanalysis.st_converges(
        seq, candidate, grid, horizon, tolerance, schedule
    )
    report = {
        "command": "converge",
        "config": {
            "sequence": args.sequence,
            "candidate": args.candidate,
            "operator": args.operator,
            "horizon": horizon,
            "tolerance": tolerance,
            "epsilon_grid": list(verdict.epsilon_grid),
            "seed": args.seed,
            "schedule": schedule.describe(),
        },
        "verdict": verdict.to_json_dict(),
    }
    if args.output == "csv":
        _emit_verdict_csv(_verdict_csv_entries(verdict))
    else:
        _emit_json(report)
    return _check_expect(args.expect, verdict.decision)


def _run_bounded(args):
    horizon = _resolve_horizon(args)
    tolerance = _resolve_tolerance(args)
    schedule = _resolve_schedule(args)
    probes = args.probes or stanalysis.DEFAULT_PROBES
    seq = _sequence_under_analysis(args)
    if args.weak:
        verdict = stanalysis.weakly_st_bounded(
            seq, probes=probes, horizon=horizon, tolerance=tolerance, schedule=schedule
        )
    else:
        verdict = stanalysis.st_bounded(
            seq, probes, horizon, tolerance, schedule
        )
    report = {
        "command": "bounded",
        "config": {
            "sequence": args.sequence,
            "operator": args.operator,
            "probes": list(probes),
            "weak": bool(args.weak),
            "horizon": horizon,
            "tolerance": tolerance,
            "seed": args.seed,
            "schedule": schedule.describe(),
        },
        "verdict": verdict.to_json_dict(),
    }
    if args.output == "csv":
        _emit_verdict_csv(_verdict_csv_entries(verdict))
    else:
        _emit_json(report)
    return _check_expect(args.expect, verdict.decision)


def _run_cauchy(args):
    horizon = _resolve_horizon(args)
    tolerance = _resolve_tolerance(args)
    schedule = _resolve_schedule(args)
    grid = args.eps or stanalysis.DEFAULT_EPS_GRID
    seq = _sequence_under_analysis(args)
    verdict = stanalysis.st_cauchy(
        seq, grid, horizon, tolerance, anchors=args.anchors, schedule=schedule
    )
    report = {
        "command": "cauchy",
        "config": {
            "sequence": args.sequence,
            "operator": args.operator,
            "horizon": horizon,
            "tolerance": tolerance,
            "epsilon_grid": list(verdict.epsilon_grid),
            "anchors": list(args.anchors) if args.anchors else list(
                stanalysis.default_anchors(horizon)
            ),
            "seed": args.seed,
            "schedule": schedule.describe(),
        },
        "verdict": verdict.to_json_dict(),
    }
    if args.output == "csv":
        _emit_verdict_csv(_verdict_csv_entries(verdict))
    else:
        _emit_json(report)
    return _check_expect(args.expect, verdict.decision)


def _run_classify(args):
    horizon = _resolve_horizon(args)
    tolerance = _resolve_tolerance(args)
    if args.output == "csv":
        raise ParseError(args.operator, 0, "classify reports are JSON only")
    op = operators.parse_operator(args.operator)
    report = run_classify(
        op, args.prop, horizon=horizon, tolerance=tolerance
    )
    payload = {
        "command": "classify",
        "config": {
            "operator": args.operator,
            "property": args.prop,
            "horizon": horizon,
            "tolerance": tolerance,
        },
        "report": report.to_json_dict(),
    }
    _emit_json(payload)
    return _check_expect(args.expect, report.outcome)


def _run_suite(args):
    horizon = _resolve_horizon(args)
    tolerance = _resolve_tolerance(args)
    if args.output == "csv":
        raise ParseError("suite", 0, "suite reports are JSON only")
    results = run_suite(horizon, tolerance)
    payload = {
        "command": "suite",
        "config": {"horizon": horizon, "tolerance": tolerance},
        "checks": [r.to_json_dict() for r in results],
        "passed": suite_passed(results),
    }
    _emit_json(payload)
    return 0 if payload["passed"] else 1


_RUNNERS = {
    "density": _run_density,
    "converge": _run_converge,
    "bounded": _run_bounded,
    "cauchy": _run_cauchy,
    "classify": _run_classify,
    "suite": _run_suite,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, density.HorizonExhausted) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
