from __future__ import annotations
from gsystems.objects.base import BaseObject
from gsystems.objects.witness import Witness
from typing import Optional


class CheckReport(BaseObject):
    """
    Outcome of a report-valued check. A failed check is data, not an exception.

    Args:
        name (str): which check produced the report, e.g. "representation"

        passed (bool): True when every checked instance satisfied the identity

        checked (int): number of instances (tuples, pairs, probes) examined

        witnesses (list[:class:`Witness`]): failing instances, empty when passed

        details (dict): Optional. check-specific extras such as cross-check verdicts
    """

    def __init__(self, name: str = None, passed: bool = None, checked: int = None) -> None:
        self.name = name
        self.passed = passed
        self.checked = checked
        self.witnesses: list[Witness] = []
        self.details: Optional[dict] = None

    def add_witness(self, witness: Witness) -> None:
        self.witnesses.append(witness)
        self.passed = False

    def __bool__(self):
        return bool(self.passed)

    def __repr__(self):
        state = "passed" if self.passed else f"failed ({len(self.witnesses)} witnesses)"
        return f"<CheckReport {self.name}: {state}>"


class ActionReport(CheckReport):
    """
    Validation report of an affine action: identity law and homomorphism law.
    Witness arguments are the failing element or pair.
    """
