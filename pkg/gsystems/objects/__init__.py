from .base import BaseObject
from .witness import Witness
from .checkreport import ActionReport, CheckReport
from .cohomology import CohomologyReport, OracleResult, Window
from .certificate import ObstructionCertificate
from .trace import ExtensionTrace, OrderRecord
from .scenario import Scenario, Task
from .outcome import (ERROR,
                      FAIL,
                      PASS,
                      Report,
                      TaskOutcome,
                      )

__all__ = (
    "BaseObject",
    "Witness",
    "ActionReport",
    "CheckReport",
    "CohomologyReport",
    "OracleResult",
    "Window",
    "ObstructionCertificate",
    "ExtensionTrace",
    "OrderRecord",
    "Scenario",
    "Task",
    "ERROR",
    "FAIL",
    "PASS",
    "Report",
    "TaskOutcome",
)
