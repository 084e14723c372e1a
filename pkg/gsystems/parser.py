"""
JSON <-> domain objects. ``Parser.parse`` builds validated objects from
decoded JSON; ``Composer.compose`` turns domain and report objects into
JSON-ready structures with every scalar written as an exact string.
"""
from gsystems.algebra import (AffineDiffeo,
                              GaussianRational,
                              PolyFunction,
                              format_rational,
                              gaussian,
                              )
from gsystems.dga import Cochain
from gsystems.errors import GSystemsError
from gsystems.groups import AffineAction, FiniteGroup, build_group, validated_action
from gsystems.objects import BaseObject, Scenario, Task
from gsystems.symbols import FormalSymbol, XiPolynomial

__all__ = ("Parser", "Composer", "ParseError", "FORMAT_VERSION", "TASK_FIELDS")

FORMAT_VERSION = 1

# task argument -> expected JSON type: "count" is an int >= 0, "names" a list of str
TASK_FIELDS = {
    "order": "count",
    "xi_degree": "count",
    "cochain_degree": "count",
    "x_degree": "count",
    "max_degree": "count",
    "expect": "count",
    "probes": bool,
    "cross_check": bool,
    "mode": str,
    "cochain": str,
    "p0": str,
    "p1": str,
    "a": str,
    "b": str,
    "phases": str,
    "phases_tilde": str,
    "function": str,
    "unit": str,
    "cochains": "names",
}


class ParseError(GSystemsError):
    """
    raised when a JSON document does not describe a valid object
    """
    def __init__(self, location, desc):
        self.location = location
        self.desc = desc
        super().__init__(f"Parse error at <{location}>:: {desc}")


def _tuple_key(key: str) -> tuple:
    key = key.strip()
    return tuple(k.strip() for k in key.split(",")) if key else ()


def _tuple_label(t) -> str:
    return ",".join(t)


def _is_count(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


class Parser:

    def parse(self, json_data, root_object: str, *, location: str = "$", **context):
        """
        Build the object named by ``root_object`` from decoded JSON. The
        context keywords supply what a document does not carry itself:
        ``dimension`` for polynomials and symbols, ``group`` for actions,
        ``action`` and ``order`` for cochains. A scenario document must be
        fully inline.
        """
        try:
            match root_object:
                case "rational":
                    return self._parse_scalar(json_data, location)
                case "poly":
                    return self._parse_poly(json_data, location, context.get("dimension"))
                case "affine":
                    return self._parse_affine(json_data, location)
                case "symbol":
                    return self._parse_symbol(json_data, location, context.get("dimension"), context.get("order"))
                case "group":
                    return self._parse_group(json_data, location)
                case "action":
                    return self._parse_action(json_data, location, context["group"])
                case "cochain":
                    return self._parse_cochain(json_data, location, context["action"], context.get("order"))
                case "phases":
                    return self._parse_phases(json_data, location, context["action"])
                case "task":
                    return self._parse_task(json_data, location, context.get("index", 0))
                case "scenario":
                    return self._parse_scenario(json_data, location)
                case _:
                    raise ParseError(location, f"unknown root object {root_object!r}")
        except ParseError:
            raise
        except GSystemsError as err:
            raise ParseError(location, str(err)) from err
        except (KeyError, TypeError, ValueError, AttributeError) as err:
            raise ParseError(location, f"{type(err).__name__}: {err}") from err

    def check_version(self, json_data: dict, location: str, *, required: bool = False):
        version = json_data.get("format_version", None if required else FORMAT_VERSION)
        if version != FORMAT_VERSION:
            raise ParseError(location, f"unsupported format_version {version!r}, expected {FORMAT_VERSION}")

    def _expect(self, value, kind, location):
        if not isinstance(value, kind):
            name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
            raise ParseError(location, f"expected {name}, got {type(value).__name__}")
        return value

    def _expect_count(self, value, location) -> int:
        if not _is_count(value):
            raise ParseError(location, f"expected a nonnegative integer, got {value!r}")
        return value

    def _exponent(self, val, location) -> tuple:
        self._expect(val, list, location)
        return tuple(self._expect_count(e, f"{location}[{i}]") for i, e in enumerate(val))

    def _parse_scalar(self, val, location) -> GaussianRational:
        match val:
            case dict():
                return gaussian(val.get("re", "0"), val.get("im", "0"))
            case str() | int() if not isinstance(val, bool):
                return gaussian(val)
        raise ParseError(location, f"expected a rational string or {{re, im}}, got {val!r}")

    def _parse_poly(self, val, location, dimension) -> PolyFunction:
        self._expect(val, list, location)
        terms = {}
        for i, term in enumerate(val):
            here = f"{location}[{i}]"
            self._expect(term, dict, here)
            beta = self._exponent(term["beta"], f"{here}.beta")
            if dimension is None:
                dimension = len(beta)
            if len(beta) != dimension:
                raise ParseError(here, f"exponent {list(beta)} has length {len(beta)}, expected {dimension}")
            if beta in terms:
                raise ParseError(here, f"duplicate exponent {list(beta)}")
            terms[beta] = self._parse_scalar(term, here)
        if dimension is None:
            raise ParseError(location, "cannot infer the dimension of an empty polynomial")
        return PolyFunction.from_terms(dimension, terms)

    def _parse_affine(self, val, location) -> AffineDiffeo:
        self._expect(val, dict, location)
        rows = self._expect(val["A"], list, f"{location}.A")
        matrix = [[self._parse_scalar(a, f"{location}.A[{i}][{j}]") for j, a in enumerate(row)]
                  for i, row in enumerate(rows)]
        offset = val.get("b")
        if offset is not None:
            offset = [self._parse_scalar(b, f"{location}.b[{i}]") for i, b in enumerate(offset)]
        return AffineDiffeo(matrix, offset)

    def _parse_symbol(self, val, location, dimension, order) -> FormalSymbol:
        """
        {order, levels: [{n, terms: [{alpha, poly}]}]}; absent levels are zero.
        A bare polynomial list is read as an x-only symbol.
        """
        if isinstance(val, list):
            f = self._parse_poly(val, location, dimension)
            return FormalSymbol.from_function(f, order or 0)
        self._expect(val, dict, location)
        declared = val.get("order", order)
        if declared is None:
            raise ParseError(location, "symbol has no truncation order")
        self._expect_count(declared, f"{location}.order")
        if order is not None and declared != order:
            raise ParseError(location, f"symbol order {declared} differs from the required order {order}")
        if dimension is None:
            raise ParseError(location, "symbol dimension unknown")
        levels = [XiPolynomial.zero(dimension) for _ in range(declared + 1)]
        for i, level in enumerate(val.get("levels", [])):
            here = f"{location}.levels[{i}]"
            n = self._expect_count(level["n"], f"{here}.n")
            if n > declared:
                raise ParseError(here, f"level {n} outside 0..{declared}")
            coefficients = {}
            for j, term in enumerate(level.get("terms", [])):
                alpha = self._exponent(term["alpha"], f"{here}.terms[{j}].alpha")
                if len(alpha) != dimension:
                    raise ParseError(f"{here}.terms[{j}]",
                                     f"xi exponent {list(alpha)} has length {len(alpha)}, expected {dimension}")
                f = self._parse_poly(term["poly"], f"{here}.terms[{j}].poly", dimension)
                coefficients[alpha] = coefficients.get(alpha, PolyFunction.zero(dimension)) + f
            levels[n] = levels[n] + XiPolynomial.from_coefficients(dimension, coefficients)
        return FormalSymbol(dimension, levels)

    def _parse_group(self, val, location) -> FiniteGroup:
        self._expect(val, dict, location)
        self.check_version(val, location)
        elements = [str(g) for g in val["elements"]]
        table = {}
        for key, gh in val["table"].items():
            pair = _tuple_key(key)
            if len(pair) != 2:
                raise ParseError(f"{location}.table[{key!r}]", "table keys must be 'g,h'")
            table[pair] = str(gh)
        return build_group(elements, table)

    def _parse_action(self, val, location, group: FiniteGroup) -> AffineAction:
        self._expect(val, dict, location)
        self.check_version(val, location)
        maps = val.get("maps", {k: v for k, v in val.items() if k not in ("format_version", "dimension")})
        parsed = {str(g): self._parse_affine(m, f"{location}.maps[{g!r}]") for g, m in maps.items()}
        return validated_action(AffineAction(group, parsed))

    def _parse_cochain(self, val, location, action: AffineAction, order) -> Cochain:
        self._expect(val, dict, location)
        self.check_version(val, location)
        degree = self._expect_count(val["degree"], f"{location}.degree")
        values = {}
        for key, symbol in val["values"].items():
            t = _tuple_key(key)
            if len(t) != degree:
                raise ParseError(f"{location}.values[{key!r}]", f"tuple of length {len(t)} in a degree-{degree} cochain")
            values[t] = self._parse_symbol(symbol, f"{location}.values[{key!r}]", action.dimension, order)
        cochain = Cochain(action, degree, values)
        if not val.get("correction", False):
            return cochain.check_normalized()
        # correction terms vanish at the identity so that P0 + ħP1 stays normalized
        if degree and cochain.values[cochain.identity_tuple()]:
            raise ParseError(f"{location}.values", "correction term is nonzero at the identity tuple")
        return cochain

    def _parse_phases(self, val, location, action: AffineAction) -> dict:
        self._expect(val, dict, location)
        return {str(g): self._parse_poly(p, f"{location}[{g!r}]", action.dimension) for g, p in val.items()}

    def _parse_task(self, val, location, index: int) -> Task:
        """
        {name?, kind, ...arguments}. Known arguments are type-checked here;
        whether a name refers to a defined object is checked by the context.
        """
        self._expect(val, dict, location)
        if "kind" not in val:
            raise ParseError(location, "a task needs at least a 'kind'")
        kind = self._expect(val["kind"], str, f"{location}.kind")
        name = self._expect(val.get("name", f"{kind}-{index}"), str, f"{location}.name")
        args = {k: v for k, v in val.items() if k not in ("name", "kind")}
        for key, value in args.items():
            here = f"{location}.{key}"
            match TASK_FIELDS.get(key):
                case None:
                    pass
                case "count":
                    self._expect_count(value, here)
                case "names":
                    for i, v in enumerate(self._expect(value, list, here)):
                        self._expect(v, str, f"{here}[{i}]")
                case expected if not isinstance(value, expected):
                    raise ParseError(here, f"expected {expected.__name__}, got {type(value).__name__}")
        return Task(name, kind, args)

    def _parse_scenario(self, val, location) -> Scenario:
        """
        A scenario document with every group, action and table entry inline.
        Task names must be unique.
        """
        self._expect(val, dict, location)
        self.check_version(val, location, required=True)
        for key in ("name", "dimension", "order", "group", "action"):
            if key not in val:
                raise ParseError(location, f"missing field {key!r}")
        name = self._expect(val["name"], str, f"{location}.name")
        d = self._expect_count(val["dimension"], f"{location}.dimension")
        order = self._expect_count(val["order"], f"{location}.order")

        group = self.parse(val["group"], "group", location=f"{location}.group")
        action = self.parse(val["action"], "action", location=f"{location}.action", group=group)
        if action.dimension != d:
            raise ParseError(f"{location}.action", f"action has dimension {action.dimension}, scenario declares {d}")

        scenario = Scenario(name, d, order, group, action)
        tables = (
            ("cochains", "cochain", {"action": action, "order": order}),
            ("phases", "phases", {"action": action}),
            ("functions", "poly", {"dimension": d}),
            ("symbols", "symbol", {"dimension": d, "order": order}),
        )
        for table, root, context in tables:
            entries = getattr(scenario, table)
            for key, value in self._expect(val.get(table, {}), dict, f"{location}.{table}").items():
                entries[key] = self.parse(value, root, location=f"{location}.{table}[{key!r}]", **context)

        for i, item in enumerate(self._expect(val.get("tasks", []), list, f"{location}.tasks")):
            task = self._parse_task(item, f"{location}.tasks[{i}]", i)
            if any(t.name == task.name for t in scenario.tasks):
                raise ParseError(f"{location}.tasks[{i}]", f"duplicate task name {task.name!r}")
            scenario.tasks.append(task)
        return scenario


class Composer:

    def compose(self, obj):
        """
        JSON-ready form of ``obj``: report objects become dicts without None
        fields, domain objects their file format, scalars exact strings.
        """
        match obj:
            case None | bool() | int() | float() | str():
                return obj
            case GaussianRational():
                return self._scalar(obj)
            case PolyFunction():
                return [dict(beta=list(beta), **self._scalar(c)) for beta, c in obj.terms()]
            case XiPolynomial():
                return [{"alpha": list(alpha), "poly": self.compose(f)} for alpha, f in obj.coefficients().items()]
            case FormalSymbol():
                return {
                    "order": obj.order,
                    "levels": [{"n": n, "terms": self.compose(lv)} for n, lv in enumerate(obj.levels) if lv],
                }
            case AffineDiffeo():
                return {
                    "A": [[self._real_or_complex(a) for a in row] for row in obj.matrix],
                    "b": [self._real_or_complex(b) for b in obj.offset],
                }
            case FiniteGroup():
                return {"format_version": FORMAT_VERSION, "elements": list(obj.elements), "table": obj.table_json()}
            case AffineAction():
                return {"format_version": FORMAT_VERSION, "maps": {g: self.compose(m) for g, m in obj.maps.items()}}
            case Cochain():
                return {
                    "format_version": FORMAT_VERSION,
                    "degree": obj.degree,
                    "values": {_tuple_label(t): self.compose(v) for t, v in obj.values.items()},
                }
            case BaseObject():
                return self._clean({k: self.compose(v) for k, v in vars(obj).items()})
            case dict():
                return self._clean({str(k) if not isinstance(k, tuple) else _tuple_label(k): self.compose(v)
                                    for k, v in obj.items()})
            case list() | tuple():
                return [self.compose(v) for v in obj]
        raise TypeError(f"cannot compose object of type {type(obj).__name__}")

    def _scalar(self, c) -> dict:
        return {"re": format_rational(c.x), "im": format_rational(c.y)}

    def _real_or_complex(self, c):
        return format_rational(c.x) if not c.y else self._scalar(c)

    def _clean(self, resp: dict) -> dict:
        return {k: v for k, v in resp.items() if v is not None}
