# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""
The RAMANUJAN main program.

This submodule provides the hook for the command line program ``ramanujan``.
Every subcommand builds a :class:`~ramanujan.model.Report`, writes it as JSON
to stdout and a short summary to stderr, and exits with status 1 if any
check failed.
"""

import cmath
import logging
from datetime import datetime as dt
from pathlib import Path

import click

import ramanujan.io
from . import flow, formal, gaussmanin, qseries, symplectic, vectorfields
from ._version import __version__, copyright, license
from .exact import RatMatrix, clear_delta, has_denominator_support
from .model import Chart, CheckStatus, Report, Settings

startup = dt.now().isoformat()
logger = logging.getLogger("ramanujan")
logger.addHandler(logging.NullHandler())
logger.setLevel(logging.DEBUG)

DEFAULTS = Settings()

FLOW_MATCH = 1e-8
"""Largest accepted difference between a flow endpoint and the series"""
FLOW_CHART_CHANGE = 1e-7
"""Largest accepted difference between the b-flow and the e-flow after mapping"""
INTEGRALITY_ORDER = 500
"""Minimum order for the Eisenstein integrality checks"""
CHART_PRIMES = {Chart.E: (2, 3), Chart.B: (2,)}
"""Primes allowed in the denominators of each derived chart"""
MAX_FORMAL_COMMUTATION_G = 6


def print_license(ctx: click.Context, param, value):
    """
    Print the license for ramanujan.

    This is a click option callback function.
    """
    if not value or ctx.resilient_parsing:
        return
    click.echo_via_pager(license)
    ctx.exit()


def print_copyright(ctx: click.Context, param, value):
    """
    Print the copyright for ramanujan.

    This is a click option callback function.
    """
    if not value or ctx.resilient_parsing:
        return
    click.echo_via_pager(copyright)
    ctx.exit()


def load_config(ctx: click.Context, param, value):
    """Load a settings file into the subcommand defaults.

    This is a click option callback function.
    """
    if value is None or ctx.resilient_parsing:
        return
    try:
        settings = ramanujan.io.read_settings(value)
    except (TypeError, ValueError, RuntimeError) as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)
    ctx.default_map = settings.default_map()


class _Echo:
    """Filter messages output using ``click.secho``.

    Output is determined by comparing the verbosity level and quiet-mode flag
    to the rules for for the method used.

    .. rubric:: Rules

    ``__call__(...)``
        Output message if not in quiet mode.
    ``verbose(...)``
        Output message only if verbose is non-zero.
    ``force(...)``
        Always output the message.

    The parameters for each of the calls is the same as :meth:`click.echo`.


    Parameters
    ----------
    verbosity : int
        The verbosity level, by default 0.
    quiet : bool
        Quiet-mode flag, by default False.
    """

    def __init__(self, verbosity: int = 0, quiet: bool = False):
        self.verbosity = verbosity
        self.quiet = quiet

    def __call__(
        self,
        message=None,
        file=None,
        nl: bool = True,
        err: bool = False,
        color: bool = None,
        **styles,
    ):
        """Output message unless :attr:`quiet` was set to True."""
        if self.quiet:
            return
        click.secho(message=message, file=file, nl=nl, err=err, color=color, **styles)

    def verbose(
        self,
        message=None,
        file=None,
        nl: bool = True,
        err: bool = False,
        color: bool = None,
        **styles,
    ):
        """Output message iff :attr:`verbose` >= 1."""
        if not self.verbosity or self.quiet:
            return
        click.secho(message=message, file=file, nl=nl, err=err, color=color, **styles)

    def force(
        self,
        message=None,
        file=None,
        nl: bool = True,
        err: bool = False,
        color: bool = None,
        **styles,
    ):
        """Output message even if :attr:`quiet` was set to True."""
        click.secho(message=message, file=file, nl=nl, err=err, color=color, **styles)


def _options(ctx: click.Context) -> dict:
    opts = dict(report_dir=None, verbose=0, quiet=False, debug=False, json=True)
    if isinstance(ctx.obj, dict):
        opts.update(ctx.obj)
    return opts


def _start_log(opts: dict, subcommand: str) -> logging.Handler:
    """Attach a file log in the report directory, if there is one."""
    report_dir = opts["report_dir"]
    if report_dir is None:
        return None
    report_dir = Path(report_dir)
    report_dir.mkdir(parents=True, exist_ok=True)
    log_file = report_dir.joinpath(subcommand).with_suffix(".log")
    with open(log_file, "w") as flog:
        flog.write(f"program:  ramanujan v{__version__}\n")
        flog.write(f"startup:  {startup}\n")
        flog.write(f"command:  {subcommand}\n")
        flog.write("run-log:\n")

    verbose, debug, quiet = opts["verbose"], opts["debug"], opts["quiet"]
    file_log = logging.FileHandler(log_file)
    if debug:
        file_log.setFormatter(
            logging.Formatter(
                "- time: %(asctime)s\n  level: %(levelname)s\n  file: %(filename)s:%(lineno)d\n  funcName: %(funcName)s\n  message: %(message)s",
                datefmt="%Y-%m-%dT%H:%M:%S",
            )
        )
    elif verbose < 2:
        file_log.setFormatter(logging.Formatter("- %(message)s"))
    else:
        file_log.setFormatter(logging.Formatter("- message: %(message)s"))

    if debug or verbose > 2:
        file_log.setLevel(logging.DEBUG)
    elif verbose >= 1:
        file_log.setLevel(logging.INFO)
    elif quiet:
        file_log.setLevel(logging.WARNING)
    else:
        file_log.setLevel(logging.INFO)
    logger.addHandler(file_log)
    return file_log


def _stop_log(file_log: logging.Handler):
    if file_log is None:
        return
    file_log.flush()
    file_log.stream.write(f"shutdown: {dt.now().isoformat()}\n")
    logger.removeHandler(file_log)
    file_log.close()


def _versions() -> dict:
    return {
        "ramanujan": __version__,
        "data-sha256": ramanujan.io.data_file_hash(),
    }


def _finish(ctx: click.Context, report: Report, opts: dict) -> Report:
    """Emit a report and set the exit status."""
    report.versions = _versions()
    echo = _Echo(verbosity=opts["verbose"], quiet=opts["quiet"])
    text = ramanujan.io.write_report(report)
    if opts["json"]:
        echo.force(text)
    if opts["report_dir"] is not None:
        ramanujan.io.write_report(
            report, Path(opts["report_dir"]).joinpath(report.subcommand).with_suffix(".json")
        )
    for check in report.checks:
        if check.status == CheckStatus.FAIL:
            echo(f"FAIL  {check.name}", err=True, fg="red")
        else:
            echo.verbose(f"{check.status.name:<5} {check.name}", err=True)
    counts = report.counts
    echo(
        f"{report.subcommand}: {counts['pass']} passed, {counts['fail']} failed, "
        f"{counts['info']} informational",
        err=True,
        fg="green" if report.passed else "red",
    )
    if not report.passed:
        logger.critical(f"{counts['fail']} check(s) failed in {report.subcommand}")
        ctx.exit(1)
    return report


def _run(ctx: click.Context, subcommand: str, builder, *args, **kwargs) -> Report:
    opts = _options(ctx)
    file_log = _start_log(opts, subcommand)
    try:
        report = builder(*args, **kwargs)
    except Exception as e:
        logger.critical(str(e))
        _stop_log(file_log)
        raise e
    _stop_log(file_log)
    return _finish(ctx, report, opts)


def _counts_to_checks(report: Report, prefix: str, counts: dict):
    for name, tally in counts.items():
        report.add(f"{prefix}/{name}", tally["failed"] == 0, **tally)


def qseries_report(order: int) -> Report:
    """Verify the Ramanujan system, the Chazy equation and integrality."""
    report = Report("verify-qseries", inputs={"order": order})
    residuals = qseries.verify_ramanujan(order)
    equations = [
        ("ramanujan-e2", "theta E2 = (E2^2 - E4)/12", "theta E2"),
        ("ramanujan-e4", "theta E4 = (E2 E4 - E6)/3", "theta E3"),
        ("ramanujan-e6", "theta E6 = (E2 E6 - E4^2)/2", "theta E4"),
    ]
    for (name, equation, printed), residual in zip(equations, residuals):
        report.add(
            name,
            residual.is_zero(),
            equation=equation,
            printed_lhs=printed,
            order=order,
            residual_zero=residual.is_zero(),
            first_nonzero_index=residual.first_nonzero_index(),
        )
    # the literal reading puts theta E4 on the left of the last equation
    e2, e4, e6 = (qseries.eisenstein(w, order) for w in (2, 4, 6))
    literal = qseries.theta(e4) - (e2 * e6 - e4 * e4) / 2
    report.add(
        "ramanujan-literal-reading",
        CheckStatus.INFO,
        equation="theta E4 = (E2 E6 - E4^2)/2",
        residual_zero=literal.is_zero(),
        first_nonzero_index=literal.first_nonzero_index(),
        note="no E3 series exists; theta E3 and theta E4 are read as theta E4 and theta E6",
    )

    chazy = qseries.verify_chazy(order)
    report.add(
        "chazy",
        chazy.is_zero(),
        equation="theta^3 E2 = E2 theta^2 E2 - 3/2 (theta E2)^2",
        order=order,
        residual_zero=chazy.is_zero(),
        first_nonzero_index=chazy.first_nonzero_index(),
    )
    b2, b4, b6 = qseries.chazy_triple(order)
    report.add(
        "chazy-triple",
        qseries.theta(b2) == 2 * b4
        and qseries.theta(b4) == 3 * b6
        and qseries.theta(b6) == b2 * b6 - b4 * b4,
        order=order,
    )

    delta = qseries.delta_series(order)
    report.add(
        "delta-series",
        delta.first_nonzero_index() == 1 and delta[1] == 1728,
        first_nonzero_index=delta.first_nonzero_index(),
    )

    integrality_order = max(order, INTEGRALITY_ORDER)
    for w in (2, 4, 6):
        s = qseries.eisenstein(w, integrality_order)
        bad = [n for n, c in enumerate(s.coeffs) if c.denominator != 1]
        report.add(f"integrality-e{w}", not bad, order=integrality_order, non_integral=bad[:10])
    return report


def symplectic_report(g: int, trials: int, torsor_trials: int, seed: int) -> Report:
    """Run the randomized symplectic property suite for every g up to ``g``."""
    report = Report(
        "symplectic-selftest",
        inputs={"g": g, "trials": trials, "torsor_trials": torsor_trials, "seed": seed},
    )
    for gg in range(1, g + 1):
        # the torsor properties are exercised up to g = 5
        torsor = torsor_trials if gg <= 5 else 0
        counts = symplectic.selftest(gg, trials=trials, torsor_trials=torsor, seed=seed)
        _counts_to_checks(report, f"g{gg}", counts)
    return report


def _matrix_support(conn, primes) -> list:
    bad = []
    for c in conn.coordinates:
        for i, row in enumerate(conn.omega(c).rows):
            for j, entry in enumerate(row):
                if not has_denominator_support(clear_delta(entry, conn.delta), primes):
                    bad.append(f"{c}:{i + 1}{j + 1}")
    return bad


def rederive_report(chart) -> Report:
    """Rederive a chart's connection from the Weierstrass chart and check it."""
    chart = Chart.coerce(chart)
    if chart not in CHART_PRIMES:
        raise ValueError(f"cannot rederive the {chart.name.lower()} chart")
    name = chart.name.lower()
    report = Report("rederive-connection", inputs={"chart": name})
    printed = gaussmanin.builtin_chart(chart)
    derived = gaussmanin.derived_chart(chart)

    mismatches = [r for r in gaussmanin.diff_charts(printed, derived) if not r["equal"]]
    if chart == Chart.E:
        report.add("matches-printed", not mismatches, mismatches=mismatches)
    else:
        report.add(
            "printed-diff",
            CheckStatus.INFO,
            mismatches=mismatches,
            anomalies=list(printed.anomalies),
        )
        report.add(
            "printed-homogeneity",
            CheckStatus.INFO,
            **gaussmanin.check_homogeneity(printed),
        )

    for c, ok in gaussmanin.check_symplectic_compatibility(derived).items():
        report.add(f"symplectic/{c}", ok)
    report.add(
        "omega22",
        all(derived.omega(c)[1, 1] == -derived.omega(c)[0, 0] for c in derived.coordinates),
    )
    for (c, d), ok in gaussmanin.check_curvature(derived).items():
        report.add(f"curvature/{c},{d}", ok)
    for c, ok in gaussmanin.check_homogeneity(derived).items():
        report.add(f"homogeneity/{c}", ok)
    primes = CHART_PRIMES[chart]
    bad = _matrix_support(derived, primes)
    report.add("integrality", not bad, primes=list(primes), offending=bad)

    M = gaussmanin.contract(derived, vectorfields.ramanujan_field(chart))
    report.add("contract-field", M == RatMatrix([[0, 0], [1, 0]]), matrix=M.to_text())
    report.add(
        "derived",
        CheckStatus.INFO,
        delta=derived.delta.to_text(),
        omega={c: derived.omega(c).to_text() for c in derived.coordinates},
    )
    return report


def solve_field_report(chart) -> Report:
    """Solve for the Ramanujan field on a derived chart and compare it."""
    chart = Chart.coerce(chart)
    name = chart.name.lower()
    report = Report("solve-field", inputs={"chart": name})
    conn = gaussmanin.derived_chart(chart)
    fields = vectorfields.solve_higher_ramanujan(conn)
    v = fields[(1, 1)]
    printed = vectorfields.ramanujan_field(chart)
    report.add("matches-printed", v == printed, derived=v.to_dict(), printed=printed.to_dict())
    report.add("polynomial", v.is_polynomial())
    K = gaussmanin.kodaira_spencer(conn, v)
    report.add("kodaira-spencer", K == gaussmanin.phi_matrix(1, 1, 1), matrix=K.to_text())
    exponent = vectorfields.scaling_exponent(v, conn.weights)
    report.add("scaling-exponent", exponent == -2, exponent=exponent)
    if chart == Chart.B:
        pushed = vectorfields.pushforward(v, vectorfields.b_to_e_isomorphism())
        report.add(
            "pushforward-to-e",
            pushed == vectorfields.ramanujan_field(Chart.E),
            pushed=pushed.to_dict(),
        )
    return report


def formal_report(g: int, trials: int, seed: int) -> Report:
    """Run the formal derivation identities for every g up to ``g``."""
    report = Report("formal-check", inputs={"g": g, "trials": trials, "seed": seed})
    for gg in range(1, g + 1):
        _counts_to_checks(report, f"g{gg}", formal.selftest(gg, trials=trials, seed=seed))
    for gg in range(g + 1, MAX_FORMAL_COMMUTATION_G + 1):
        report.add(f"g{gg}/commutation", formal.check_commutation(gg))
    return report


def _max_diff(a, b) -> float:
    return max(abs(complex(x) - complex(y)) for x, y in zip(a, b))


def _flow_checks(report: Report, chart: Chart, q0: float, q1: float, tol: float, series_order: int):
    name = chart.name.lower()
    result = flow.compare_with_series(chart, q0, q1, tol, series_order)
    run = result.pop("result")
    report.add(f"{name}/series", result["max_abs_err"] <= FLOW_MATCH, **result)

    v = vectorfields.ramanujan_field(chart)
    dtau = cmath.log(q1) - cmath.log(q0)
    start = flow.FlowState(chart, flow.series_point(chart, q0, series_order), cmath.log(q0))
    back = flow.integrate(v, run.state, -dtau, tol)
    err = _max_diff(back.point, start.point)
    report.add(f"{name}/reversibility", err <= 10 * tol, max_abs_err=err)

    if chart == Chart.B:
        mapped = flow.e_from_b(run.state.point)
        e_start = flow.FlowState(Chart.E, flow.e_from_b(start.point), start.time)
        e_end = flow.integrate(vectorfields.ramanujan_field(Chart.E), e_start, dtau, tol)
        err = _max_diff(mapped, e_end.point)
        report.add(f"{name}/chart-change", err <= FLOW_CHART_CHANGE, max_abs_err=err)
    return run


def flow_report(
    chart, q0: float, q1: float, tol: float, series_order: int, dump_csv: Path = None
) -> Report:
    """Integrate the Ramanujan flow and compare with the series curve."""
    chart = Chart.coerce(chart)
    report = Report(
        "flow",
        inputs={
            "chart": chart.name.lower(),
            "q0": q0,
            "q1": q1,
            "tol": tol,
            "series_order": series_order,
        },
    )
    run = _flow_checks(report, chart, q0, q1, tol, series_order)
    if dump_csv is not None:
        ramanujan.io.write_trajectory_csv(run.samples, dump_csv)
    return report


def all_report(
    order: int,
    g: int,
    trials: int,
    torsor_trials: int,
    formal_trials: int,
    tol: float,
    seed: int,
    q0: float = DEFAULTS.q0,
    q1: float = DEFAULTS.q1,
    series_order: int = DEFAULTS.series_order,
) -> Report:
    """Run every verification with one set of options."""
    report = Report(
        "all",
        inputs={
            "order": order,
            "g": g,
            "trials": trials,
            "torsor_trials": torsor_trials,
            "formal_trials": formal_trials,
            "tol": tol,
            "seed": seed,
            "q0": q0,
            "q1": q1,
            "series_order": series_order,
        },
    )
    report.extend(qseries_report(order), "verify-qseries")
    report.extend(symplectic_report(min(g, 6), trials, torsor_trials, seed), "symplectic-selftest")
    for chart in (Chart.E, Chart.B):
        report.extend(rederive_report(chart), f"rederive-connection/{chart.name.lower()}")
        report.extend(solve_field_report(chart), f"solve-field/{chart.name.lower()}")
    report.extend(formal_report(g, formal_trials, seed), "formal-check")
    for chart in (Chart.E, Chart.B):
        report.extend(flow_report(chart, q0, q1, tol, series_order), "flow")
    return report


_chart_choice = click.Choice(["e", "b"], case_sensitive=False)


@click.group()
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False, resolve_path=True, path_type=Path),
    callback=load_config,
    expose_value=False,
    is_eager=True,
    help="Settings file (TOML, JSON or YAML) with defaults for every subcommand.",
)
@click.option(
    "--report-dir",
    type=click.Path(file_okay=False, dir_okay=True, resolve_path=True, path_type=Path),
    envvar="RAMANUJAN_REPORT_DIR",
    default=None,
    help="Directory for JSON reports and log files.  [env var: RAMANUJAN_REPORT_DIR]",
)
@click.option(
    "-v",
    "--verbose",
    count=True,
    help="Increase log details.",
    show_default=True,
)
@click.option(
    "-q",
    "--quiet",
    is_flag=True,
    default=False,
    help="Suppress the summary on stderr.",
    show_default=True,
)
@click.option(
    "--debug",
    is_flag=True,
    default=False,
    help="Output debug information.",
    show_default=True,
)
@click.option(
    "--json/--no-json",
    "json_",
    default=True,
    help="Write the JSON report to stdout.",
    show_default=True,
)
@click.version_option(__version__, prog_name="ramanujan", message="%(version)s")
@click.option(
    "--license",
    is_flag=True,
    callback=print_license,
    expose_value=False,
    is_eager=True,
    help="Show license and exit.",
)
@click.option(
    "--copyright",
    is_flag=True,
    callback=print_copyright,
    expose_value=False,
    is_eager=True,
    help="Print copyright and exit.",
)
@click.pass_context
def cli(ctx, report_dir=None, verbose=0, quiet=False, debug=False, json_=True):
    """Verify Eisenstein series identities and Ramanujan vector fields."""
    ctx.obj = dict(
        report_dir=report_dir,
        verbose=4 if debug else verbose,
        quiet=quiet,
        debug=debug,
        json=json_,
    )


@cli.command("verify-qseries")
@click.option(
    "--order",
    type=click.IntRange(min=2),
    default=DEFAULTS.order,
    show_default=True,
    help="Truncation order of the q-series.",
)
@click.pass_context
def verify_qseries(ctx, order):
    """Check the Ramanujan and Chazy equations exactly."""
    return _run(ctx, "verify-qseries", qseries_report, order)


@cli.command("symplectic-selftest")
@click.option("--g", type=click.IntRange(min=1), default=DEFAULTS.g, show_default=True, help="Largest g.")
@click.option("--trials", type=click.IntRange(min=0), default=DEFAULTS.trials, show_default=True, help="Random trials per property.")
@click.option("--torsor-trials", type=click.IntRange(min=0), default=DEFAULTS.torsor_trials, show_default=True, help="Random trials per torsor property.")
@click.option("--seed", type=int, default=DEFAULTS.seed, show_default=True, help="Random seed.")
@click.pass_context
def symplectic_selftest(ctx, g, trials, torsor_trials, seed):
    """Randomized checks of symplectic bases and the parabolic action."""
    return _run(ctx, "symplectic-selftest", symplectic_report, g, trials, torsor_trials, seed)


@cli.command("rederive-connection")
@click.option("--chart", type=_chart_choice, default="b", show_default=True, help="Chart to rederive.")
@click.pass_context
def rederive_connection(ctx, chart):
    """Pull the Weierstrass connection back and compare with the printed one."""
    return _run(ctx, "rederive-connection", rederive_report, chart)


@cli.command("solve-field")
@click.option("--chart", type=_chart_choice, default="b", show_default=True, help="Chart to solve on.")
@click.pass_context
def solve_field(ctx, chart):
    """Derive the Ramanujan vector field from the connection."""
    return _run(ctx, "solve-field", solve_field_report, chart)


@cli.command("formal-check")
@click.option("--g", type=click.IntRange(min=1), default=DEFAULTS.g, show_default=True, help="Largest g.")
@click.option("--trials", type=click.IntRange(min=0), default=DEFAULTS.formal_trials, show_default=True, help="Random matrices per g.")
@click.option("--seed", type=int, default=DEFAULTS.seed, show_default=True, help="Random seed.")
@click.pass_context
def formal_check(ctx, g, trials, seed):
    """Check the formal derivation identities for every g."""
    return _run(ctx, "formal-check", formal_report, g, trials, seed)


@cli.command("flow")
@click.option("--chart", type=_chart_choice, default="e", show_default=True, help="Chart to integrate on.")
@click.option("--q0", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=DEFAULTS.q0, show_default=True, help="Start of the series comparison.")
@click.option("--q1", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=DEFAULTS.q1, show_default=True, help="End of the series comparison.")
@click.option("--tol", type=click.FloatRange(0, min_open=True), default=DEFAULTS.tol, show_default=True, help="Local error tolerance per unit step.")
@click.option("--series-order", type=click.IntRange(min=2), default=DEFAULTS.series_order, show_default=True, help="Order of the series oracle.")
@click.option(
    "--dump-csv",
    type=click.Path(dir_okay=False, writable=True, resolve_path=True, path_type=Path),
    default=None,
    help="Write the trajectory samples to this CSV file.",
)
@click.pass_context
def flow_command(ctx, chart, q0, q1, tol, series_order, dump_csv):
    """Integrate the Ramanujan flow and compare with the Eisenstein curve."""
    return _run(ctx, "flow", flow_report, chart, q0, q1, tol, series_order, dump_csv)


@cli.command("all")
@click.option("--order", type=click.IntRange(min=2), default=DEFAULTS.order, show_default=True, help="Truncation order of the q-series.")
@click.option("--g", type=click.IntRange(min=1), default=DEFAULTS.g, show_default=True, help="Largest g.")
@click.option("--trials", type=click.IntRange(min=0), default=DEFAULTS.trials, show_default=True, help="Random trials per symplectic property.")
@click.option("--torsor-trials", type=click.IntRange(min=0), default=DEFAULTS.torsor_trials, show_default=True, help="Random trials per torsor property.")
@click.option("--formal-trials", type=click.IntRange(min=0), default=DEFAULTS.formal_trials, show_default=True, help="Random matrices per g in the formal checks.")
@click.option("--tol", type=click.FloatRange(0, min_open=True), default=DEFAULTS.tol, show_default=True, help="Flow tolerance.")
@click.option("--q0", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=DEFAULTS.q0, show_default=True, help="Start of the flow series comparison.")
@click.option("--q1", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=DEFAULTS.q1, show_default=True, help="End of the flow series comparison.")
@click.option("--series-order", type=click.IntRange(min=2), default=DEFAULTS.series_order, show_default=True, help="Order of the flow series oracle.")
@click.option("--seed", type=int, default=DEFAULTS.seed, show_default=True, help="Random seed.")
@click.pass_context
def all_command(ctx, order, g, trials, torsor_trials, formal_trials, tol, q0, q1, series_order, seed):
    """Run the full verification suite."""
    return _run(
        ctx,
        "all",
        all_report,
        order,
        g,
        trials,
        torsor_trials,
        formal_trials,
        tol,
        seed,
        q0,
        q1,
        series_order,
    )


if __name__ == "__main__":
    cli()  # pragma: no cover
