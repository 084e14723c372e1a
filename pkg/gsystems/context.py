"""
This module contains the context of a scenario run: the loaded and validated
scenario file together with the parser and composer used to read and write it.
"""
import hashlib
import json
import logging
from pathlib import Path

from gsystems.dga import MCElement, as_mc_element, unit_cochain
from gsystems.errors import GSystemsError
from gsystems.objects import Scenario, Task
from gsystems.parser import Composer, Parser

__all__ = ("Context", "ScenarioError")

logger = logging.getLogger(__name__)

# task argument -> scenario table it names
REFERENCES = {
    "cochain": "cochains",
    "p0": "cochains",
    "p1": "cochains",
    "a": "cochains",
    "b": "cochains",
    "cochains": "cochains",
    "phases": "phases",
    "phases_tilde": "phases",
    "function": "functions",
    "unit": "symbols",
}


class ScenarioError(GSystemsError):
    """
    raised when a scenario file is unreadable, inconsistent or references
    something it does not define
    """
    def __init__(self, source, desc):
        self.source = source
        self.desc = desc
        super().__init__(f"Scenario <{source}>:: {desc}")


class Context:
    parser = Parser()

    composer = Composer()

    def __init__(
        self,
        path, *,
        parser=None,
        composer=None
    ):
        """
        Context holds one scenario, loaded from ``path`` and validated
        completely before any task can run.
        """
        if parser is not None:
            self.parser = parser
        if composer is not None:
            self.composer = composer
        self.path = Path(path)
        try:
            raw = self.path.read_bytes()
        except OSError as err:
            raise ScenarioError(str(self.path), f"cannot read file: {err.strerror}") from err
        self.scenario = self._load(raw)
        logger.info("loaded scenario %s (%d tasks)", self.scenario.name, len(self.scenario.tasks))

    def _read_json(self, raw: bytes, source: str):
        try:
            return json.loads(raw)
        except (json.JSONDecodeError, UnicodeDecodeError) as err:
            raise ScenarioError(source, f"invalid JSON: {err}") from err

    def _resolve(self, value, location: str):
        """
        Inline objects are returned as they are, strings are read as paths
        relative to the scenario file.
        """
        if not isinstance(value, str):
            return value
        ref = self.path.parent / value
        try:
            return self._read_json(ref.read_bytes(), str(ref))
        except OSError as err:
            raise ScenarioError(location, f"unresolved reference {value!r}: {err.strerror}") from err

    def _inline(self, data: dict) -> dict:
        """
        Copy of ``data`` with every file reference replaced by the document it names.
        """
        data = dict(data)
        for key in ("group", "action"):
            if key in data:
                data[key] = self._resolve(data[key], f"$.{key}")
        for table in ("cochains", "phases", "functions", "symbols"):
            if isinstance(data.get(table), dict):
                data[table] = {name: self._resolve(value, f"$.{table}[{name!r}]")
                               for name, value in data[table].items()}
        return data

    def _load(self, raw: bytes) -> Scenario:
        source = str(self.path)
        data = self._read_json(raw, source)
        if not isinstance(data, dict):
            raise ScenarioError(source, "top level must be an object")
        scenario = self.parser.parse(self._inline(data), "scenario")
        scenario.source = source
        scenario.digest = hashlib.sha256(raw).hexdigest()
        for i, task in enumerate(scenario.tasks):
            self._check_references(scenario, task, f"$.tasks[{i}]")
        return scenario

    def _check_references(self, scenario: Scenario, task: Task, location: str):
        for key, table in REFERENCES.items():
            if key not in task.args:
                continue
            names = task.args[key]
            for name in names if isinstance(names, list) else [names]:
                if name not in getattr(scenario, table):
                    raise ScenarioError(location, f"unknown {table[:-1]} {name!r} in argument {key!r}")

    def lookup(self, table: str, name: str):
        """
        A named object of the scenario. Raises ScenarioError for unknown names.
        """
        entries = getattr(self.scenario, table)
        try:
            return entries[name]
        except KeyError:
            raise ScenarioError(self.scenario.source, f"unknown {table[:-1]} {name!r}") from None

    def cochain(self, name: str):
        return self.lookup("cochains", name)

    def mc_element(self, name: str = None) -> MCElement:
        """
        A named Maurer-Cartan element; without a name, the unit cochain
        (the pullback representation).
        """
        if name is None:
            return MCElement(unit_cochain(self.scenario.action, 1, self.scenario.order))
        return as_mc_element(self.cochain(name))

    def dumps(self, obj) -> str:
        """
        Deterministic JSON text of ``obj``.
        """
        return json.dumps(self.composer.compose(obj), sort_keys=True, indent=2, ensure_ascii=False)
