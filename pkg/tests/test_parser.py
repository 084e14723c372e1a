import json

import pytest
from hypothesis import given, settings

from gsystems.algebra import I, AffineDiffeo, PolyFunction, gaussian
from gsystems.context import Context, ScenarioError
from gsystems.dga import Cochain, NormalizationError, unit_cochain
from gsystems.groups import ActionError, GroupAxiomError
from gsystems.objects import TaskOutcome, Window
from gsystems.parser import Composer, ParseError, Parser
from gsystems.symbols import FormalSymbol, GradingError, XiPolynomial
from strategies import ACTIONS, make_poly, make_xi, symbols

parser = Parser()
composer = Composer()

X = PolyFunction.variable(1, 1)
ONE = [{"beta": [0], "re": "1"}]
Z2 = {"elements": ["e", "s"], "table": {"e,e": "e", "e,s": "s", "s,e": "s", "s,s": "e"}}
REFLECTION = {"maps": {"e": {"A": [["1"]]}, "s": {"A": [["-1"]]}}}


def write_scenario(path, **fields):
    data = {"format_version": 1, "name": "tmp", "dimension": 1, "order": 0, "group": Z2, "action": REFLECTION}
    data.update(fields)
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


class TestParseScalars:

    def test_forms(self):
        assert parser.parse("3/6", "rational") == gaussian("1/2")
        assert parser.parse(-4, "rational") == gaussian(-4)
        assert parser.parse({"re": "1", "im": "-2"}, "rational") == gaussian(1, -2)
        assert parser.parse({"im": "1"}, "rational") == I

    @pytest.mark.parametrize("value", [True, 1.5, None, ["1"]])
    def test_rejected(self, value):
        with pytest.raises(ParseError) as err:
            parser.parse(value, "rational", location="$.x")
        assert err.value.location == "$.x"

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parser.parse("1/0", "rational")


class TestParsePoly:

    def test_terms(self):
        f = parser.parse([{"beta": [2], "re": "1/2"}, {"beta": [0], "re": "3"}], "poly")
        assert f == make_poly(1, {(2,): "1/2", (0,): 3})

    def test_empty_needs_dimension(self):
        assert parser.parse([], "poly", dimension=2) == PolyFunction.zero(2)
        with pytest.raises(ParseError):
            parser.parse([], "poly")

    def test_wrong_length_reports_term(self):
        with pytest.raises(ParseError) as err:
            parser.parse([{"beta": [0], "re": "1"}, {"beta": [0, 1], "re": "1"}], "poly", dimension=1)
        assert err.value.location == "$[1]"

    def test_duplicate_exponent(self):
        with pytest.raises(ParseError) as err:
            parser.parse([{"beta": [1], "re": "1"}, {"beta": [1], "re": "2"}], "poly")
        assert "duplicate" in err.value.desc


    @pytest.mark.parametrize("entry", [1.5, True, -1, "1"])
    def test_exponent_entries_are_counts(self, entry):
        with pytest.raises(ParseError) as err:
            parser.parse([{"beta": [entry], "re": "1"}], "poly")
        assert err.value.location == "$[0].beta[0]"

class TestParseSymbol:

    def test_levels(self):
        data = {
            "order": 1,
            "levels": [{"n": 1, "terms": [
                {"alpha": [1], "poly": ONE},
                {"alpha": [0], "poly": [{"beta": [1], "re": "2"}]},
            ]}],
        }
        a = parser.parse(data, "symbol", dimension=1)
        assert a == FormalSymbol(1, [XiPolynomial.zero(1), make_xi(1, {(1,): {(0,): 1}, (0,): {(1,): 2}})])

    def test_bare_polynomial(self):
        assert parser.parse(ONE, "symbol", dimension=1, order=2) == FormalSymbol.one(1, 2)

    def test_order_mismatch(self):
        with pytest.raises(ParseError):
            parser.parse({"order": 1}, "symbol", dimension=1, order=2)

    def test_level_out_of_range(self):
        with pytest.raises(ParseError) as err:
            parser.parse({"order": 1, "levels": [{"n": 2, "terms": []}]}, "symbol", dimension=1)
        assert err.value.location == "$.levels[0]"

    def test_grading_violation(self):
        data = {"order": 1, "levels": [{"n": 0, "terms": [{"alpha": [1], "poly": ONE}]}]}
        with pytest.raises(ParseError) as err:
            parser.parse(data, "symbol", dimension=1)
        assert isinstance(err.value.__cause__, GradingError)


    @pytest.mark.parametrize("entry", [1.5, False, -2])
    def test_xi_exponent_entries_are_counts(self, entry):
        data = {"order": 1, "levels": [{"n": 1, "terms": [{"alpha": [entry], "poly": ONE}]}]}
        with pytest.raises(ParseError) as err:
            parser.parse(data, "symbol", dimension=1)
        assert err.value.location == "$.levels[0].terms[0].alpha[0]"

    def test_level_index_is_a_count(self):
        with pytest.raises(ParseError):
            parser.parse({"order": 1, "levels": [{"n": 0.5, "terms": []}]}, "symbol", dimension=1)
    @given(symbols(2, 2))
    @settings(max_examples=30, deadline=None)
    def test_composed_form_reads_back(self, a):
        assert parser.parse(composer.compose(a), "symbol", dimension=2) == a


class TestParseGroupAndAction:

    def test_group(self):
        G = parser.parse(Z2, "group")
        assert G.order == 2 and G.inv("s") == "s"

    def test_bad_table(self):
        table = dict(Z2["table"], **{"s,s": "s"})
        with pytest.raises(ParseError) as err:
            parser.parse({"elements": ["e", "s"], "table": table}, "group")
        assert isinstance(err.value.__cause__, GroupAxiomError)

    def test_bad_table_key(self):
        with pytest.raises(ParseError):
            parser.parse({"elements": ["e"], "table": {"e": "e"}}, "group")

    def test_version(self):
        with pytest.raises(ParseError):
            parser.parse(dict(Z2, format_version=2), "group")

    def test_action(self):
        action = parser.parse(REFLECTION, "action", group=parser.parse(Z2, "group"))
        assert action.phi("s") == AffineDiffeo([[-1]])
        assert action.dimension == 1

    def test_invalid_action(self):
        maps = {"maps": {"e": {"A": [["1"]]}, "s": {"A": [["1"]], "b": ["1"]}}}
        with pytest.raises(ParseError) as err:
            parser.parse(maps, "action", group=parser.parse(Z2, "group"), location="$.action")
        assert err.value.location == "$.action"
        assert isinstance(err.value.__cause__, ActionError)

    def test_affine(self):
        assert parser.parse({"A": [["2"]], "b": ["1/2"]}, "affine") == AffineDiffeo([[2]], ["1/2"])
        with pytest.raises(ParseError):
            parser.parse({"A": [["0"]]}, "affine")


class TestParseCochain:

    def test_normalized(self, reflection):
        data = {"degree": 1, "values": {"e": ONE, "s": [{"beta": [0], "re": "-1"}]}}
        c = parser.parse(data, "cochain", action=reflection, order=0)
        assert c["s"] == FormalSymbol.constant(1, 0, -1)
        assert c.is_normalized()

    def test_not_normalized(self, reflection):
        data = {"degree": 1, "values": {"e": {"order": 0}, "s": ONE}}
        with pytest.raises(ParseError) as err:
            parser.parse(data, "cochain", action=reflection, order=0)
        assert isinstance(err.value.__cause__, NormalizationError)

    def test_correction_vanishes_at_identity(self, reflection):
        data = {"degree": 1, "correction": True, "values": {"e": {"order": 1}, "s": [{"beta": [1], "re": "1"}]}}
        c = parser.parse(data, "cochain", action=reflection, order=1)
        assert c["e"].is_zero()
        data["values"]["e"] = ONE
        with pytest.raises(ParseError) as err:
            parser.parse(data, "cochain", action=reflection, order=1)
        assert err.value.location == "$.values"

    def test_tuple_length(self, reflection):
        data = {"degree": 1, "values": {"e": ONE, "e,s": ONE}}
        with pytest.raises(ParseError) as err:
            parser.parse(data, "cochain", action=reflection, order=0)
        assert err.value.location == "$.values['e,s']"

    def test_missing_value(self, reflection):
        with pytest.raises(ParseError):
            parser.parse({"degree": 1, "values": {"e": ONE}}, "cochain", action=reflection, order=0)

    def test_phases(self, reflection):
        phases = parser.parse({"e": [], "s": [{"beta": [1], "re": "1"}]}, "phases", action=reflection)
        assert phases == {"e": PolyFunction.zero(1), "s": X}

    def test_unknown_root(self):
        with pytest.raises(ParseError):
            parser.parse({}, "matrix")


class TestParseTask:

    def test_default_name(self):
        task = parser.parse({"kind": "check_mc", "cochain": "a"}, "task", index=3)
        assert task.name == "check_mc-3"
        assert task.args == {"cochain": "a"}

    @pytest.mark.parametrize("field, value", [
        ("order", "4"),
        ("order", -1),
        ("order", True),
        ("xi_degree", 1.0),
        ("probes", 1),
        ("cross_check", "yes"),
        ("cochain", 7),
        ("mode", None),
    ])
    def test_argument_types(self, field, value):
        with pytest.raises(ParseError) as err:
            parser.parse({"kind": "solve_mc", field: value}, "task", location="$.tasks[0]")
        assert err.value.location == f"$.tasks[0].{field}"

    def test_cochain_names(self):
        with pytest.raises(ParseError) as err:
            parser.parse({"kind": "check_dga", "cochains": ["a", 1]}, "task")
        assert err.value.location == "$.cochains[1]"

    def test_kind_required(self):
        with pytest.raises(ParseError):
            parser.parse({"order": 2}, "task")

    def test_unknown_arguments_pass_through(self):
        assert parser.parse({"kind": "custom", "weight": 0.5}, "task").args == {"weight": 0.5}


class TestParseScenario:

    def scenario(self, **fields):
        data = {"format_version": 1, "name": "inline", "dimension": 1, "order": 1, "group": Z2,
                "action": REFLECTION}
        data.update(fields)
        return data

    def test_inline_document(self):
        data = self.scenario(
            cochains={"pullback": {"degree": 1, "values": {"e": ONE, "s": ONE}}},
            functions={"K": [{"beta": [1], "re": "1"}]},
            tasks=[{"kind": "check_mc", "cochain": "pullback"}, {"name": "ext", "kind": "solve_mc", "order": 3}],
        )
        scenario = parser.parse(data, "scenario")
        assert scenario.order == 1
        assert scenario.cochains["pullback"]["s"] == FormalSymbol.one(1, 1)
        assert scenario.action.phi("s") == AffineDiffeo([[-1]])
        assert scenario.functions["K"] == X
        assert [t.name for t in scenario.tasks] == ["check_mc-0", "ext"]

    def test_version_is_required(self):
        data = self.scenario()
        del data["format_version"]
        with pytest.raises(ParseError):
            parser.parse(data, "scenario")

    @pytest.mark.parametrize("field, value", [("dimension", "1"), ("order", -1), ("name", 3)])
    def test_header_types(self, field, value):
        with pytest.raises(ParseError) as err:
            parser.parse(self.scenario(**{field: value}), "scenario")
        assert err.value.location == f"$.{field}"

    def test_table_locations(self):
        data = self.scenario(cochains={"bad": {"degree": 1, "values": {"e": ONE}}})
        with pytest.raises(ParseError) as err:
            parser.parse(data, "scenario")
        assert err.value.location == "$.cochains['bad']"


class TestComposer:

    def test_scalars(self):
        assert composer.compose(gaussian("-1/3", 2)) == {"re": "-1/3", "im": "2"}

    def test_affine(self):
        assert composer.compose(AffineDiffeo([[-1]], [1])) == {"A": [["-1"]], "b": ["1"]}
        assert composer.compose(AffineDiffeo([[I]])) == {"A": [[{"re": "0", "im": "1"}]], "b": ["0"]}

    def test_zero_symbol(self):
        assert composer.compose(FormalSymbol.zero(1, 2)) == {"order": 2, "levels": []}

    def test_cochain_keys(self, reflection):
        data = composer.compose(unit_cochain(reflection, 2, 0))
        assert data["degree"] == 2
        assert sorted(data["values"]) == ["e,e", "e,s", "s,e", "s,s"]

    def test_cochain_reads_back(self, reflection):
        c = Cochain(reflection, 1, {
            ("e",): FormalSymbol.one(1, 1),
            ("s",): FormalSymbol(1, [XiPolynomial.from_function(X), XiPolynomial.xi(1, 1)]),
        })
        assert parser.parse(composer.compose(c), "cochain", action=reflection, order=1) == c

    def test_action(self):
        data = composer.compose(ACTIONS["z2_reflection"])
        assert data["maps"]["s"] == {"A": [["-1"]], "b": ["0"]}

    def test_report_objects_drop_empty_fields(self):
        assert composer.compose(TaskOutcome("a", "check_mc", "pass")) == {
            "name": "a", "kind": "check_mc", "status": "pass"}

    def test_report_repr(self):
        assert repr(Window(1, 2, 3)) == "Window(n=1, k=2, D_in=3)"

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            composer.compose(object())


class TestContext:

    def test_bundled_scenarios(self, scenarios_dir):
        for path in sorted(scenarios_dir.glob("*.json")):
            context = Context(path)
            assert context.scenario.tasks
            assert len(context.scenario.digest) == 64

    def test_references_resolve_relative_to_file(self, scenarios_dir):
        context = Context(scenarios_dir / "z2_extend.json")
        assert context.scenario.action.phi("s") == AffineDiffeo([[-1]])
        assert context.cochain("P1")["e"].is_zero()
        assert context.lookup("symbols", "u").order == 2

    def test_default_p0_is_the_unit(self, scenarios_dir):
        context = Context(scenarios_dir / "z2_sign_character.json")
        assert context.mc_element() == unit_cochain(context.scenario.action, 1, 2)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ScenarioError):
            Context(tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(ScenarioError):
            Context(path)

    def test_version(self, tmp_path):
        with pytest.raises(ParseError):
            Context(write_scenario(tmp_path / "s.json", format_version=3))

    def test_missing_field(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text(json.dumps({"format_version": 1, "name": "x"}), encoding="utf-8")
        with pytest.raises(ParseError) as err:
            Context(path)
        assert "dimension" in str(err.value)

    def test_dimension_mismatch(self, tmp_path):
        with pytest.raises(ParseError):
            Context(write_scenario(tmp_path / "s.json", dimension=2))

    def test_unknown_reference(self, tmp_path):
        path = write_scenario(tmp_path / "s.json", tasks=[{"kind": "check_mc", "cochain": "ghost"}])
        with pytest.raises(ScenarioError) as err:
            Context(path)
        assert err.value.source == "$.tasks[0]"

    def test_duplicate_task_names(self, tmp_path):
        tasks = [{"name": "t", "kind": "check_action"}, {"name": "t", "kind": "check_action"}]
        with pytest.raises(ParseError):
            Context(write_scenario(tmp_path / "s.json", tasks=tasks))

    def test_default_task_names(self, tmp_path):
        context = Context(write_scenario(tmp_path / "s.json", tasks=[{"kind": "check_action"}]))
        assert context.scenario.tasks[0].name == "check_action-0"

    def test_dumps_is_deterministic(self, scenarios_dir):
        context = Context(scenarios_dir / "z2_extend.json")
        cochain = context.cochain("gauged")
        assert context.dumps(cochain) == Context(scenarios_dir / "z2_extend.json").dumps(cochain)

    def test_task_argument_types(self, tmp_path):
        path = write_scenario(tmp_path / "s.json", order=0, tasks=[{"kind": "solve_mc", "p1": "P1", "order": "4"}])
        with pytest.raises(ParseError) as err:
            Context(path)
        assert err.value.location == "$.tasks[0].order"

    def test_unresolved_reference(self, tmp_path):
        with pytest.raises(ScenarioError) as err:
            Context(write_scenario(tmp_path / "s.json", group="groups/absent.json"))
        assert err.value.source == "$.group"
