from __future__ import annotations
from gsystems.objects.base import BaseObject
from typing import Optional


class Task(BaseObject):
    """
    One declared task of a scenario.

    Args:
        name (str): unique task name used in the report

        kind (str): task kind, e.g. "check_mc", "solve_mc", "cohomology"

        args (dict): kind-specific arguments as read from the scenario file
    """

    def __init__(self, name: str = None, kind: str = None, args: dict = None) -> None:
        self.name = name
        self.kind = kind
        self.args = args if args is not None else {}


class Scenario(BaseObject):
    """
    A loaded and validated scenario file.

    Args:
        name (str): scenario name

        dimension (int): dimension d of R^d

        order (int): truncation order N shared by every cochain

        group (:class:`FiniteGroup`): validated finite group

        action (:class:`AffineAction`): validated affine action

        cochains (dict): named cochains

        phases (dict): Optional. named additive cocycles (tables of functions)

        functions (dict): Optional. named coefficient functions

        symbols (dict): Optional. named formal symbols (degree-0 data, e.g. units)

        tasks (list[:class:`Task`]): tasks in declared order

        source (str): Optional. path the scenario was read from

        digest (str): Optional. sha256 of the scenario bytes
    """

    def __init__(self, name: str = None, dimension: int = None, order: int = None,
                 group=None, action=None) -> None:
        self.name = name
        self.dimension = dimension
        self.order = order
        self.group = group
        self.action = action
        self.cochains: dict = {}
        self.phases: dict = {}
        self.functions: dict = {}
        self.symbols: dict = {}
        self.tasks: list[Task] = []
        self.source: Optional[str] = None
        self.digest: Optional[str] = None
