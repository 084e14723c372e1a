from __future__ import annotations
from gsystems.objects.base import BaseObject
from typing import Optional

PASS = "pass"
FAIL = "fail"
ERROR = "error"


class TaskOutcome(BaseObject):
    """
    Result of running one task.

    Args:
        name (str): task name

        kind (str): task kind

        status (str): "pass", "fail" or "error"

        result (object): Optional. report, certificate, trace or domain object produced by the task

        error (str): Optional. error message when status is "error"

        elapsed (float): Optional. seconds spent, only recorded when timing is requested
    """

    def __init__(self, name: str = None, kind: str = None, status: str = None) -> None:
        self.name = name
        self.kind = kind
        self.status = status
        self.result: Optional[object] = None
        self.error: Optional[str] = None
        self.elapsed: Optional[float] = None


class Report(BaseObject):
    """
    Everything a scenario run produced.

    Args:
        tool (str): tool name

        version (str): tool version

        scenario (str): scenario name

        scenario_hash (str): sha256 of the scenario file

        outcomes (list[:class:`TaskOutcome`]): outcomes in declared task order

        exit_code (int): 0 when all passed, 1 when some check failed, 2 on input errors
    """

    def __init__(self, tool: str = None, version: str = None, scenario: str = None,
                 scenario_hash: str = None) -> None:
        self.tool = tool
        self.version = version
        self.scenario = scenario
        self.scenario_hash = scenario_hash
        self.outcomes: list[TaskOutcome] = []
        self.exit_code: Optional[int] = None

    def add_outcome(self, outcome: TaskOutcome) -> None:
        self.outcomes.append(outcome)

    def summarize(self) -> int:
        statuses = {o.status for o in self.outcomes}
        if ERROR in statuses:
            self.exit_code = 2
        elif FAIL in statuses:
            self.exit_code = 1
        else:
            self.exit_code = 0
        return self.exit_code
