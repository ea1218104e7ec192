"""Command-line entry point: ``ratrec <subcommand> ...``.

Exit codes: 0 success, 1 domain error (forbidden input, wrong regime, ...),
2 usage error (bad arguments, malformed scenario).
"""
import argparse
import sys

from . import analysis, closedform, scenario_io
from .errors import DomainError, ForbiddenInitialConditions, UsageError
from .numerics import Mode, render
from .recurrence import first_forbidden_index, simulate
from .verify import REGIMES, format_report, run_sweep


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="ratrec", description=(
        "Simulate, solve and classify x[n+1] = alpha x[n-3] / (A + B x[n-1] x[n-3])."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("simulate", help="iterate a scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--horizon", type=int)
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--csv")
    p.add_argument("--svg")

    p = sub.add_parser("closed-form", help="evaluate x[n] from the explicit solution")
    p.add_argument("--scenario", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=("auto",) + closedform.FORMS, default="auto")

    p = sub.add_parser("classify", help="long-run behaviour of a scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="random closed-form vs iteration sweep")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--regime", choices=("all", "gt", "eq+", "eq-", "lt"), default="all")

    p = sub.add_parser("example", help="run one of the four worked examples")
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--horizon", type=int)
    p.add_argument("--csv")
    p.add_argument("--svg")
    p.add_argument("--classify", action="store_true")

    p = sub.add_parser("forbidden", help="first index with a vanishing denominator")
    p.add_argument("--scenario", required=True)
    p.add_argument("--horizon", type=int, required=True)
    return parser


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _export(traj, title, csv_path, svg_path, out):
    if csv_path:
        _write(csv_path, scenario_io.export_csv(traj))
    if svg_path:
        _write(svg_path, scenario_io.emit_plot(traj, title))
    if not (csv_path or svg_path):
        out.write(scenario_io.export_csv(traj))


def _positive(value, name):
    if value is not None and value < 1:
        raise UsageError(f"--{name} must be >= 1")


def _cmd_simulate(args, out):
    sc = scenario_io.load_scenario(args.scenario)
    _positive(args.horizon, "horizon")
    mode = Mode(args.mode) if args.mode else sc.mode
    traj = simulate(sc.params, sc.init, args.horizon or sc.horizon, mode=mode)
    _export(traj, sc.label or args.scenario, args.csv, args.svg, out)
    if args.csv or args.svg:
        out.write(f"status: {traj.status}\n")
    return 0


def _cmd_closed_form(args, out):
    sc = scenario_io.load_scenario(args.scenario)
    if args.n < -3:
        raise UsageError("--n must be >= -3")
    form = args.form
    if form == "auto":
        form = closedform.select_form(sc.params) if args.n >= 1 else "initial"
    x = closedform.closed_form(sc.params, sc.init, args.n, args.form)
    out.write(f"{render(x)} ({form})\n")
    return 0


def _cmd_classify(args, out):
    sc = scenario_io.load_scenario(args.scenario)
    return _classify(sc, args.json, out)


def _classify(sc, as_json, out):
    try:
        verdict = analysis.classify(sc.params, sc.init)
    except ForbiddenInitialConditions as exc:
        out.write(f"class: {analysis.AsymptoticClass.FORBIDDEN.value}\n"
                  f"forbidden_at: {exc.index}\n")
        return 1
    out.write(analysis.verdict_to_json(verdict) + "\n" if as_json else analysis.report(verdict))
    return 0


def _cmd_verify(args, out):
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    _positive(args.horizon, "horizon")
    result = run_sweep(args.trials, args.seed, args.horizon, args.regime)
    out.write(format_report(result))
    return 0 if result.first_failure is None else 1


def _cmd_example(args, out):
    sc = scenario_io.paper_example(args.id)
    _positive(args.horizon, "horizon")
    traj = simulate(sc.params, sc.init, args.horizon or sc.horizon)
    out.write(f"{sc.label}\n{sc.params} {sc.init}\nstatus: {traj.status}\n")
    if traj.complete and len(traj) >= 30:
        period = analysis.detect_period(traj, 8)
        out.write(f"prime period of tail: {period if period else 'none'}\n")
    if args.csv or args.svg:
        _export(traj, sc.label, args.csv, args.svg, out)
    if args.classify:
        return _classify(sc, False, out)
    return 0


def _cmd_forbidden(args, out):
    sc = scenario_io.load_scenario(args.scenario)
    _positive(args.horizon, "horizon")
    k = first_forbidden_index(sc.params, sc.init, args.horizon)
    out.write(f"{k if k is not None else 'none'}\n")
    return 0


_COMMANDS = {
    "simulate": _cmd_simulate, "closed-form": _cmd_closed_form,
    "classify": _cmd_classify, "verify": _cmd_verify,
    "example": _cmd_example, "forbidden": _cmd_forbidden,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"ratrec: error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"ratrec: error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"ratrec: {type(exc).__name__}: {exc}\n")
        return 1


def main():
    sys.exit(run())
