from __future__ import annotations
from gsystems.objects.base import BaseObject
from gsystems.objects.cohomology import Window


class OrderRecord(BaseObject):
    """
    One solved ħ-order of an order-by-order construction.

    Args:
        order (int): the ħ-order n that was solved

        window (:class:`Window`): window of the linear system

        rank (int): rank of the differential on the window

        free (int): number of free coordinates, set to zero in the chosen solution

        rhs_zero (bool): True when the right-hand side vanished

        source (str): "solved" for a linear solve, "input" for data supplied by the caller
    """

    def __init__(self, order: int = None, window: Window = None, rank: int = None,
                 free: int = None, rhs_zero: bool = None) -> None:
        self.order = order
        self.window = window
        self.rank = rank
        self.free = free
        self.rhs_zero = rhs_zero
        self.source = "solved"


class ExtensionTrace(BaseObject):
    """
    Per-order records of ``mc_extend`` or ``rigidity_gauge``.

    Args:
        problem (str): "mc_extend" or "rigidity_gauge"

        target_order (int): truncation order N requested

        records (list[:class:`OrderRecord`]): one record per solved order
    """

    def __init__(self, problem: str = None, target_order: int = None) -> None:
        self.problem = problem
        self.target_order = target_order
        self.records: list[OrderRecord] = []
