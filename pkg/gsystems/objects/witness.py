from __future__ import annotations
from gsystems.objects.base import BaseObject
from typing import Optional


class Witness(BaseObject):
    """
    A replayable failure of one check at one argument tuple.

    Args:
        arguments (list[str]): group elements (or labels) at which the check failed

        expected (object): value required by the identity, a domain object or a string

        actual (object): value actually computed

        difference (object): Optional. actual minus expected, when the values are symbols or functions

        note (str): Optional. short human-readable reason
    """

    def __init__(self, arguments: list = None, expected=None, actual=None) -> None:
        self.arguments = arguments
        self.expected = expected
        self.actual = actual
        self.difference: Optional[object] = None
        self.note: Optional[str] = None
