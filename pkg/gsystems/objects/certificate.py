from __future__ import annotations
from gsystems.objects.base import BaseObject
from gsystems.objects.cohomology import Window
from typing import Optional


class ObstructionCertificate(BaseObject):
    """
    Evidence that an order-by-order linear system has no solution: the
    right-hand side is a cocycle outside the image of the differential.

    Args:
        problem (str): "mc_extend" or "rigidity_gauge"

        order (int): ħ-order at which the system failed

        window (:class:`Window`): window of the linear system

        rhs (object): the offending cocycle (a Cochain) in table form

        rank (int): rank of the differential on the window

        rank_augmented (int): rank after appending the right-hand side column

        rhs_coordinates (list): Optional. coordinates of the right-hand side in the window basis
    """

    def __init__(self, problem: str = None, order: int = None, window: Window = None,
                 rhs=None, rank: int = None, rank_augmented: int = None) -> None:
        self.problem = problem
        self.order = order
        self.window = window
        self.rhs = rhs
        self.rank = rank
        self.rank_augmented = rank_augmented
        self.rhs_coordinates: Optional[list] = None
