"""
The scenario runner: task handlers keyed by task kind, error handlers keyed
by exception type, and the report they produce together.
"""
import logging
import time

from gsystems import __version__
from gsystems.context import Context, ScenarioError
from gsystems.dga import (additive_cocycle_check,
                          coboundary_intertwiner_check,
                          dga_axioms_check,
                          gauge_relation_check,
                          mc_check,
                          operator_representation_check,
                          quotient_differential_check,
                          representation_check,
                          xi_multiplicative_cocycle_check,
                          )
from gsystems.errors import GSystemsError
from gsystems.groups import action_validate
from gsystems.objects import ERROR, FAIL, PASS, ExtensionTrace, Report, Task, TaskOutcome
from gsystems.solver import ObstructionError, cohomology_report, mc_extend, rigidity_gauge, trivial_action_split_check

__all__ = ("ScenarioApp", "DEFAULT_TASKHANDLERS", "TOOL_NAME")

logger = logging.getLogger(__name__)

TOOL_NAME = "gsystems"

_REQUIRED = object()

DEFAULT_TASKHANDLERS = {}


def _default(kind: str):
    def handler_func(callback):
        DEFAULT_TASKHANDLERS[kind] = callback
        return callback
    return handler_func


def _arg(task: Task, key: str, default=_REQUIRED):
    if key in task.args:
        return task.args[key]
    if default is _REQUIRED:
        raise ScenarioError(task.name, f"task of kind {task.kind!r} needs argument {key!r}")
    return default


@_default("check_action")
def _check_action(task, context):
    report = action_validate(context.scenario.action)
    return report.passed, report


@_default("check_dga")
def _check_dga(task, context):
    names = _arg(task, "cochains", sorted(context.scenario.cochains))
    report = dga_axioms_check({name: context.cochain(name) for name in names})
    return report.passed, report


@_default("check_mc")
def _check_mc(task, context):
    report = mc_check(context.cochain(_arg(task, "cochain")))
    return report.passed, report


@_default("check_representation")
def _check_representation(task, context):
    a = context.cochain(_arg(task, "cochain"))
    report = representation_check(a)
    if _arg(task, "probes", False):
        by_operators = operator_representation_check(a, max_degree=_arg(task, "max_degree", 3))
        report.details["operator_check"] = by_operators.passed
        if by_operators.passed != report.passed:
            raise ScenarioError(task.name, "symbol and operator representation checks disagree")
    return report.passed, report


@_default("check_cocycle")
def _check_cocycle(task, context):
    match _arg(task, "mode", "multiplicative"):
        case "multiplicative":
            report = xi_multiplicative_cocycle_check(context.cochain(_arg(task, "cochain")))
        case "additive":
            report = additive_cocycle_check(context.scenario.action, context.lookup("phases", _arg(task, "phases")))
        case mode:
            raise ScenarioError(task.name, f"unknown cocycle mode {mode!r}")
    return report.passed, report


@_default("check_intertwiner")
def _check_intertwiner(task, context):
    report = coboundary_intertwiner_check(
        context.scenario.action,
        context.lookup("phases", _arg(task, "phases")),
        context.lookup("phases", _arg(task, "phases_tilde")),
        context.lookup("functions", _arg(task, "function")),
    )
    return report.passed, report


@_default("check_gauge")
def _check_gauge(task, context):
    report = gauge_relation_check(
        context.cochain(_arg(task, "a")),
        context.cochain(_arg(task, "b")),
        context.lookup("symbols", _arg(task, "unit")),
    )
    return report.passed, report


@_default("check_split")
def _check_split(task, context):
    report = trivial_action_split_check(context.cochain(_arg(task, "cochain")))
    return report.passed, report


@_default("check_quotient")
def _check_quotient(task, context):
    report = quotient_differential_check(
        context.mc_element(_arg(task, "p0", None)),
        context.cochain(_arg(task, "p1")),
        context.cochain(_arg(task, "cochain")),
    )
    return report.passed, report


@_default("solve_mc")
def _solve_mc(task, context):
    order = _arg(task, "order")
    trace = ExtensionTrace("mc_extend", order)
    omega = mc_extend(context.mc_element(_arg(task, "p0", None)), context.cochain(_arg(task, "p1")), order, trace=trace)
    return True, {"trace": trace, "solution": omega, "residual_zero": True}


@_default("solve_rigidity")
def _solve_rigidity(task, context):
    order = _arg(task, "order")
    trace = ExtensionTrace("rigidity_gauge", order)
    u = rigidity_gauge(context.cochain(_arg(task, "cochain")), order, trace=trace)
    return True, {"trace": trace, "unit": u, "intertwines": True}


@_default("cohomology")
def _cohomology(task, context):
    report = cohomology_report(
        context.mc_element(_arg(task, "p0", None)),
        _arg(task, "xi_degree"),
        _arg(task, "cochain_degree"),
        _arg(task, "x_degree"),
        cross_check=_arg(task, "cross_check", False),
    )
    expected = _arg(task, "expect", None)
    return expected is None or report.h_dim == expected, report


def _obstructed(exp: ObstructionError, outcome: TaskOutcome):
    outcome.status = FAIL
    outcome.result = exp.certificate
    outcome.error = str(exp)


def _input_error(exp: GSystemsError, outcome: TaskOutcome):
    outcome.status = ERROR
    outcome.error = f"{type(exp).__name__}: {exp}"


class ScenarioApp:
    """
    Runs the tasks of a loaded scenario in declared order.
    """
    def __init__(self, context: Context, *, timing: bool = False) -> None:
        self._context = context
        self._timing = timing
        self._taskhandlers = dict(DEFAULT_TASKHANDLERS)
        self._errorhandlers = {}
        self.add_errorhandler(GSystemsError, _input_error)
        self.add_errorhandler(ObstructionError, _obstructed)

    def add_taskhandler(self, kind: str):
        """
        Registers a function to be called for every task of the given kind.
        The callback receives the task and the context and returns a pair
        (passed, result).
        Args:
            kind (str): task kind, e.g. "check_mc"
        """

        def handler_func(callback):
            self._taskhandlers[kind] = callback
            return callback

        return handler_func

    def remove_taskhandler(self, kind):
        """
        Remove a task kind and its callback from the register.
        Args:
            kind (str): task kind to remove from handler table
        Raises:
            ValueError
        """

        try:
            self._taskhandlers.pop(kind)
        except KeyError:
            raise ValueError(f"task kind {kind} was not registered.")

    def add_errorhandler(self, exception, handler):
        """
        Adds an exception handler. The handler is called with the raised
        exception and the outcome of the failing task, which it may update.
        The most specific registered class of the exception wins.
        """
        self._errorhandlers[exception] = handler

    def _errorhandler_for(self, exp):
        for cls in type(exp).__mro__:
            if cls in self._errorhandlers:
                return self._errorhandlers[cls]
        return None

    def _run_task(self, task: Task) -> TaskOutcome:
        outcome = TaskOutcome(task.name, task.kind, None)
        start = time.perf_counter()
        try:
            try:
                handler = self._taskhandlers[task.kind]
            except KeyError:
                raise ScenarioError(task.name, f"unknown task kind {task.kind!r}") from None
            passed, outcome.result = handler(task, self._context)
            outcome.status = PASS if passed else FAIL
        except Exception as exp:
            handler = self._errorhandler_for(exp)
            if handler is None:
                raise
            handler(exp, outcome)
        if self._timing:
            outcome.elapsed = round(time.perf_counter() - start, 6)
        logger.info("task %s (%s): %s", task.name, task.kind, outcome.status)
        return outcome

    def run(self, tasks=None) -> Report:
        """
        Run ``tasks`` (default: every task of the scenario) and summarize.
        """
        scenario = self._context.scenario
        report = Report(TOOL_NAME, __version__, scenario.name, scenario.digest)
        for task in scenario.tasks if tasks is None else tasks:
            report.add_outcome(self._run_task(task))
        report.summarize()
        return report
