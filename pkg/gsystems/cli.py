"""
Command line entry point. Every command loads one scenario file, runs either
its declared tasks (``report``) or a single task built from the options, and
exits with 0 (all passed), 1 (some check failed) or 2 (input error).
"""
import logging
import os

import click

from gsystems import __version__
from gsystems.application import TOOL_NAME, ScenarioApp
from gsystems.context import Context
from gsystems.errors import GSystemsError
from gsystems.objects import CheckReport, CohomologyReport, ObstructionCertificate, Task

logger = logging.getLogger(__name__)

VERBOSITY_ENV = "GSYSTEMS_VERBOSITY"
LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _configure_logging(verbose: int) -> None:
    if not verbose:
        try:
            verbose = int(os.environ.get(VERBOSITY_ENV, "0"))
        except ValueError:
            verbose = 0
    level = LEVELS[min(max(verbose, 0), len(LEVELS) - 1)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


OUTPUT_OPTIONS = (
    click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True,
                 help="Report format."),
    click.option("--output", "-o", type=click.Path(dir_okay=False, writable=True), default=None,
                 help="Write the report to FILE instead of standard output."),
    click.option("--timing", is_flag=True, help="Record elapsed seconds per task."),
)


def output_options(command):
    for option in reversed(OUTPUT_OPTIONS):
        command = option(command)
    return command


def _witness_line(w) -> str:
    where = ",".join(str(a) for a in w.arguments)
    return f"    witness ({where})" + (f": {w.note}" if w.note else "")


def render_text(report) -> str:
    lines = [f"{report.tool} {report.version}  scenario {report.scenario}  sha256 {report.scenario_hash}"]
    for outcome in report.outcomes:
        line = f"{outcome.status.upper():5} {outcome.name} ({outcome.kind})"
        if outcome.elapsed is not None:
            line += f"  {outcome.elapsed:.3f}s"
        lines.append(line)
        result = outcome.result
        match result:
            case CohomologyReport():
                lines.append(f"    H^{result.window.k} dim {result.h_dim} on n={result.window.n} D={result.window.D_in}"
                             f" (ker {result.dim_kernel}, im {result.dim_image}, {result.label})")
            case CheckReport():
                lines.extend(_witness_line(w) for w in result.witnesses)
            case ObstructionCertificate():
                lines.append(f"    obstructed at order {result.order}: rank {result.rank} < {result.rank_augmented}")
            case dict() if "trace" in result:
                for record in result["trace"].records:
                    lines.append(f"    order {record.order}: {record.source}, rank {record.rank}, free {record.free}")
        if outcome.error and not isinstance(result, ObstructionCertificate):
            lines.append(f"    error: {outcome.error}")
    lines.append(f"exit code {report.exit_code}")
    return "\n".join(lines) + "\n"


def _emit(text: str, output) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def run_scenario(path, tasks=None, *, fmt="text", output=None, timing=False) -> int:
    """
    Load ``path``, run ``tasks`` (a callable from the context to a task list,
    or None for the declared tasks) and emit the report. Returns the exit code.
    """
    try:
        context = Context(path)
    except GSystemsError as err:
        click.echo(f"error: {err}", err=True)
        return 2
    app = ScenarioApp(context, timing=timing)
    report = app.run(tasks(context) if tasks is not None else None)
    text = context.dumps(report) + "\n" if fmt == "json" else render_text(report)
    _emit(text, output)
    return report.exit_code


def _single(kind, **args):
    args = {k: v for k, v in args.items() if v is not None}

    def tasks(context):
        return [Task(kind, kind, args)]
    return tasks


@click.group()
@click.version_option(__version__, prog_name=TOOL_NAME)
@click.option("-v", "--verbose", count=True, help=f"More logging (-v info, -vv debug); default from ${VERBOSITY_ENV}.")
def cli(verbose):
    """Exact checks and solvers for Maurer-Cartan elements of G-amplitude cochains."""
    _configure_logging(verbose)


@cli.command()
@click.argument("scenario", type=click.Path(dir_okay=False))
@output_options
@click.pass_context
def report(ctx, scenario, fmt, output, timing):
    """Run every task declared in SCENARIO."""
    ctx.exit(run_scenario(scenario, fmt=fmt, output=output, timing=timing))


@cli.group()
def check():
    """Verification suites."""


@check.command("dga")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.option("--cochain", "cochains", multiple=True, help="Restrict to these cochains (repeatable).")
@output_options
@click.pass_context
def check_dga(ctx, scenario, cochains, fmt, output, timing):
    """d∘d = 0, Leibniz rule and associativity on the scenario's cochains."""
    tasks = _single("check_dga", cochains=list(cochains) or None)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


@check.command("mc")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("cochain")
@output_options
@click.pass_context
def check_mc(ctx, scenario, cochain, fmt, output, timing):
    """Maurer-Cartan residual of COCHAIN."""
    ctx.exit(run_scenario(scenario, _single("check_mc", cochain=cochain), fmt=fmt, output=output, timing=timing))


@check.command("representation")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("cochain")
@click.option("--probes", is_flag=True, help="Also compare operators on monomial probe functions.")
@output_options
@click.pass_context
def check_representation(ctx, scenario, cochain, probes, fmt, output, timing):
    """a_{g1} ⋆ a_{g2} = a_{g1 g2} for COCHAIN."""
    tasks = _single("check_representation", cochain=cochain, probes=probes)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


@check.command("cocycle")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("name")
@click.option("--multiplicative/--additive", default=True,
              help="NAME is a ξ-free cochain (multiplicative) or a phase table (additive).")
@output_options
@click.pass_context
def check_cocycle(ctx, scenario, name, multiplicative, fmt, output, timing):
    """Multiplicative or additive cocycle condition."""
    if multiplicative:
        tasks = _single("check_cocycle", mode="multiplicative", cochain=name)
    else:
        tasks = _single("check_cocycle", mode="additive", phases=name)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


@check.command("intertwiner")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("phases")
@click.argument("phases_tilde")
@click.argument("function")
@output_options
@click.pass_context
def check_intertwiner(ctx, scenario, phases, phases_tilde, function, fmt, output, timing):
    """PHASES_TILDE - PHASES is the coboundary of FUNCTION."""
    tasks = _single("check_intertwiner", phases=phases, phases_tilde=phases_tilde, function=function)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


@check.command("gauge")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("a")
@click.argument("b")
@click.argument("unit")
@output_options
@click.pass_context
def check_gauge(ctx, scenario, a, b, unit, fmt, output, timing):
    """a_g ⋆ UNIT = UNIT ⋆ b_g for every g."""
    ctx.exit(run_scenario(scenario, _single("check_gauge", a=a, b=b, unit=unit), fmt=fmt, output=output, timing=timing))


@check.command("split")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("cochain")
@output_options
@click.pass_context
def check_split(ctx, scenario, cochain, fmt, output, timing):
    """Coefficientwise group differential for the trivial action."""
    ctx.exit(run_scenario(scenario, _single("check_split", cochain=cochain), fmt=fmt, output=output, timing=timing))


@cli.group()
def solve():
    """Order-by-order solvers."""


@solve.command("mc")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.option("--order", "-N", type=click.IntRange(min=0), required=True, help="Truncation order.")
@click.option("--p0", default=None, help="Leading Maurer-Cartan element (default: the unit cochain).")
@click.option("--p1", default="P1", show_default=True, help="First-order term, a d_P0-cocycle.")
@output_options
@click.pass_context
def solve_mc(ctx, scenario, order, p0, p1, fmt, output, timing):
    """Extend P0 + ħP1 to a Maurer-Cartan element through ħ^N."""
    tasks = _single("solve_mc", order=order, p0=p0, p1=p1)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


@solve.command("rigidity")
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.argument("cochain")
@click.option("--order", "-N", type=click.IntRange(min=0), required=True, help="Truncation order.")
@output_options
@click.pass_context
def solve_rigidity(ctx, scenario, cochain, order, fmt, output, timing):
    """A unit gauging COCHAIN to its leading term."""
    tasks = _single("solve_rigidity", cochain=cochain, order=order)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


@cli.command()
@click.argument("scenario", type=click.Path(dir_okay=False))
@click.option("--xi-degree", "xi_degree", type=click.IntRange(min=0), required=True, help="n: ξ-degree and ħ-level.")
@click.option("--cochain-degree", "cochain_degree", type=click.IntRange(min=0), required=True, help="k.")
@click.option("--x-degree", "x_degree", type=click.IntRange(min=0), required=True, help="D: x-degree window.")
@click.option("--p0", default=None, help="Twisting Maurer-Cartan element (default: the unit cochain).")
@click.option("--cross-check", is_flag=True, help="Ask the averaging oracle for primitives.")
@output_options
@click.pass_context
def cohomology(ctx, scenario, xi_degree, cochain_degree, x_degree, p0, cross_check, fmt, output, timing):
    """Exact rank of H^k of the twisted differential on one window."""
    tasks = _single("cohomology", xi_degree=xi_degree, cochain_degree=cochain_degree, x_degree=x_degree,
                    p0=p0, cross_check=cross_check)
    ctx.exit(run_scenario(scenario, tasks, fmt=fmt, output=output, timing=timing))


def main():
    cli(prog_name=TOOL_NAME)


if __name__ == "__main__":
    main()
