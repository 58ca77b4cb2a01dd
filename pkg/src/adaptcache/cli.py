"""Command line: ``adaptcache {plan,allocate,simulate,verify,sweep}``.

Exit codes: 0 success, 1 a verification or decoding check failed, 2 input
error, 3 infeasible target, 4 enumeration too large (use ``--force``).
"""

import argparse
import json
import random
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from . import allocation, checks, delivery, sweeps, timing
from .combinatorics import binom, rational_of, render
from .errors import (
    AdaptCacheError,
    ConsistencyError,
    InfeasibleTargetError,
    ScaleError,
)
from .files import allocation_block, load_scenario, make_plan, scenario_to_dict
from .model import MAN, build_scenario

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_SCALE = 0, 1, 2, 3, 4

SWEEP_HELP = """\
CSV columns by kind (every exact column x is followed by x_decimal):
  two_type_quality  alpha, q_star, baseline
  boost_vs_w        t, gamma, w, q_star, boost
  compare_methods   method, position, user, alpha, q, ratio
"""


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _scenario(args):
    sf = load_scenario(args.scenario)
    target = sf.target_time
    if getattr(args, "target", None) is not None:
        target = MAN if args.target == MAN else rational_of(args.target)
    scenario = build_scenario(sf.users, sf.gamma, sf.alpha, target)
    method = getattr(args, "method", None) or sf.method
    return scenario, method, sf.q


def cmd_plan(args):
    scenario, method, q = _scenario(args)
    result = allocation.allocate(scenario, method, q)
    plan = make_plan(scenario, result)
    with _output(args.output) as out:
        out.write(plan.dumps() + "\n")
    return EXIT_OK


def cmd_allocate(args):
    scenario, method, q = _scenario(args)
    result = allocation.allocate(scenario, method, q)
    with _output(args.output) as out:
        out.write(json.dumps(allocation_block(scenario, result), indent=2) + "\n")
    return EXIT_OK


def cmd_simulate(args):
    scenario, method, q = _scenario(args)
    result = allocation.allocate(scenario, method, q)
    asg = delivery.assign_intervals(scenario, result.Q, force=args.force)
    report = delivery.verify_decoding(scenario, result.Q, asg)
    closed = timing.load_profile(scenario, result.Q).ell

    trace = args.output or str(Path(args.scenario).with_suffix(".trace.csv"))
    with _output(trace) as fh:
        delivery.write_trace(asg, fh)

    print(f"method {result.method}, {binom(scenario.K, scenario.t + 1)} multicast messages")
    for k in range(1, scenario.K + 1):
        uid = scenario.user_ids[k - 1]
        verdict = "pass" if report.passed[k] else "FAIL"
        print(f"user {uid} (sorted {k}): {verdict}")
        for err in report.failures[k][:3]:
            print(f"  {err}")
    print("sub_signal,measured,closed_form,match")
    for n, (m, c) in enumerate(zip(report.loads, closed), 1):
        print(f"{n},{render(m)},{render(c)},{m == c}")
    if trace != "-":
        print(f"trace written to {trace}")
    ok = report.ok and tuple(report.loads) == tuple(closed)
    return EXIT_OK if ok else EXIT_FAIL


def _fixture_scenarios():
    return [
        ("multi-rate example", build_scenario(6, Fraction(1, 3), [
            Fraction(1, 2), Fraction(5, 8), Fraction(3, 4), Fraction(7, 8), 1, 1])),
        ("two-type example", build_scenario(6, Fraction(2, 6), [
            Fraction(2, 3), Fraction(2, 3), 1, 1, 1, 1])),
    ]


def cmd_verify(args):
    rng = random.Random(args.seed)
    cases = []
    if args.scenario:
        scenario, _, _ = _scenario(args)
        cases.append((args.scenario, scenario))
    if args.random:
        for i in range(args.random):
            cases.append((f"random #{i + 1}", checks.random_scenario(rng, args.max_users)))
    if not cases:
        cases = _fixture_scenarios()

    totals = {name: [0, 0] for name in checks.CHECKS}
    failed = None
    for label, scenario in cases:
        report = checks.run_checks(scenario, rng)
        for name, errs in report.items():
            totals[name][0] += 1
            if errs:
                totals[name][1] += 1
                if failed is None:
                    failed = (label, scenario, name, errs)
    for name, (ran, bad) in totals.items():
        if ran:
            status = "PASS" if bad == 0 else "FAIL"
            print(f"{status} {name}: {ran - bad}/{ran} scenarios")
    if failed is None:
        print(f"all checks passed on {len(cases)} scenario(s)")
        return EXIT_OK
    label, scenario, name, errs = failed
    print(f"counterexample ({label}, check {name}): {errs[0]}")
    print(json.dumps(scenario_to_dict(scenario), indent=2))
    return EXIT_FAIL


def cmd_sweep(args):
    kind = args.kind
    if kind == "two_type_quality":
        header, rows = sweeps.two_type_quality(args.users, args.cache_degree, args.degraded, args.steps)
    elif kind == "boost_vs_w":
        degrees = [int(x) for x in args.cache_degrees.split(",")]
        header, rows = sweeps.boost_vs_w(args.users, rational_of(args.alpha), degrees)
    else:
        if args.scenario:
            scenario, _, _ = _scenario(args)
        else:
            target = MAN if args.target in (None, MAN) else rational_of(args.target)
            scenario = sweeps.fig_scenario(
                args.users, args.cache_degree, rational_of(args.alpha_low), target
            )
        header, rows = sweeps.compare_methods(scenario)
    with _output(args.output) as out:
        sweeps.write_csv(header, rows, out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="adaptcache",
        description="Quality-adaptive coded caching planner and verifier.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, scenario_required=True):
        if scenario_required:
            sp.add_argument("scenario", help="scenario JSON file")
        sp.add_argument("--method", choices=allocation.METHODS)
        sp.add_argument("--target", help="target delivery time: MAN or a rational")
        sp.add_argument("--output", help="output path ('-' for stdout)")

    sp = sub.add_parser("plan", help="allocate qualities and build the power plan")
    common(sp)
    sp.set_defaults(func=cmd_plan)

    sp = sub.add_parser("allocate", help="run one allocation method only")
    common(sp)
    sp.set_defaults(func=cmd_allocate)

    sp = sub.add_parser("simulate", help="symbolic delivery with decoding check")
    common(sp)
    sp.add_argument("--force", action="store_true", help="allow more than 10^6 messages")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("verify", help="run the property suite")
    sp.add_argument("scenario", nargs="?")
    common(sp, scenario_required=False)
    sp.add_argument("--random", type=int, default=0, metavar="N")
    sp.add_argument("--max-users", type=int, default=12, metavar="K")
    sp.add_argument("--seed", type=int, default=0, metavar="S")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser(
        "sweep",
        help="figure data as CSV",
        epilog=SWEEP_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("kind", help="two_type_quality | boost_vs_w | compare_methods")
    sp.add_argument("--scenario", help="scenario file (compare_methods)")
    sp.add_argument("--users", type=int, default=None)
    sp.add_argument("--cache-degree", type=int, default=None, help="t = K * gamma")
    sp.add_argument("--degraded", type=int, default=10, help="w (two_type_quality)")
    sp.add_argument("--steps", type=int, default=100, help="alpha grid size")
    sp.add_argument("--alpha", default="3/5", help="degraded strength (boost_vs_w)")
    sp.add_argument("--cache-degrees", default="1,5,10,20", help="t values (boost_vs_w)")
    sp.add_argument("--alpha-low", default="4/5", help="weakest strength (compare_methods)")
    sp.add_argument("--target", help="target time (compare_methods)")
    sp.add_argument("--output", help="CSV path (default stdout)")
    sp.set_defaults(func=cmd_sweep)
    return p


_SWEEP_DEFAULTS = {
    "two_type_quality": {"users": 100, "cache_degree": 10},
    "boost_vs_w": {"users": 100, "cache_degree": 10},
    "compare_methods": {"users": 20, "cache_degree": 3},
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        if args.kind not in sweeps.KINDS:
            print(f"error: unknown sweep kind {args.kind!r}; choose from {', '.join(sweeps.KINDS)}",
                  file=sys.stderr)
            return EXIT_INPUT
        for key, value in _SWEEP_DEFAULTS[args.kind].items():
            if getattr(args, key) is None:
                setattr(args, key, value)
    try:
        return args.func(args)
    except ScaleError as exc:
        print(f"error: {exc}; pass --force to enumerate anyway", file=sys.stderr)
        return EXIT_SCALE
    except InfeasibleTargetError as exc:
        print(f"error: infeasible target: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ConsistencyError:
        raise
    except (AdaptCacheError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
