"""Scenario loading, the five subcommands, and exit codes."""

import copy
import json

import pytest

from posdec import worked_example
from posdec.cli import (
    EXIT_BOUND,
    EXIT_OK,
    EXIT_VALIDATION,
    EXIT_VERIFICATION,
    ScenarioError,
    load_scenario,
    main,
    parse_scenario,
    serialize_scenario,
)

WORKED = "scenarios/worked_example.json"
ANOMALY = "scenarios/anomaly.json"


def write_scenario(tmp_path, data, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


@pytest.fixture()
def decision_scenario_path(tmp_path):
    data = copy.deepcopy(worked_example.SCENARIO)
    data["states"] = ["s1", "s2", "s3"]
    data["state_possibility"] = {"s1": "1", "s2": ".7", "s3": ".5"}
    data["decisions"] = {
        "steady": {"s1": "x2", "s2": "x2", "s3": "x2"},
        "gamble": {"s1": "x1", "s2": "x4", "s3": "x4"},
    }
    return write_scenario(tmp_path, data)


class TestLoadScenario:
    def test_bundled_worked_example(self):
        scenario = load_scenario(WORKED)
        assert len(scenario.outcomes.outcomes) == 4
        assert len(scenario.scale_v) == 4
        assert set(scenario.lotteries) == {"pi1", "pi2"}

    def test_bundled_file_matches_embedded_data(self):
        with open(WORKED, encoding="utf-8") as handle:
            assert json.load(handle) == worked_example.SCENARIO
        with open(ANOMALY, encoding="utf-8") as handle:
            assert json.load(handle) == worked_example.ANOMALY_SCENARIO

    def test_non_normalized_lottery_is_named(self, tmp_path):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["lotteries"]["bad"] = {"x1": ".7", "x2": ".5", "x3": "0", "x4": "0"}
        path = write_scenario(tmp_path, data)
        with pytest.raises(ScenarioError, match="lottery 'bad'.*'.7'"):
            load_scenario(path)

    def test_undeclared_outcome_is_named(self, tmp_path):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["lotteries"]["bad"] = {
            "x1": "1", "x2": "0", "x3": "0", "x4": "0", "x9": "0"
        }
        path = write_scenario(tmp_path, data)
        with pytest.raises(ScenarioError, match="x9"):
            load_scenario(path)

    def test_parse_error_carries_location(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\n  \"scale_v\": [,\n}", encoding="utf-8")
        with pytest.raises(ScenarioError, match="line 2"):
            load_scenario(str(path))

    def test_missing_file(self):
        with pytest.raises(ScenarioError):
            load_scenario("no-such-file.json")

    def test_round_trip(self, decision_scenario_path, tmp_path):
        first = load_scenario(decision_scenario_path)
        rewritten = write_scenario(tmp_path, serialize_scenario(first), "again.json")
        second = load_scenario(rewritten)
        assert first == second

    def test_unknown_level_label(self, tmp_path):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["lotteries"]["pi1"]["x1"] = ".9"
        path = write_scenario(tmp_path, data)
        with pytest.raises(ScenarioError, match="'.9'"):
            load_scenario(path)


class TestEvaluate:
    def test_pessimistic_rows(self, capsys):
        assert main(["evaluate", "--scenario", WORKED, "--method", "pessimistic",
                     "pi1", "pi2"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[0].split() == ["pi1", ".5"]
        assert out[1].split() == ["pi2", "0"]

    def test_binary_rows(self, capsys):
        assert main(["evaluate", "--scenario", WORKED, "--method", "binary"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "pi1  ⟨1,.5⟩" in out
        assert "pi2  ⟨1,1⟩" in out

    def test_optimistic_runs(self, capsys):
        assert main(["evaluate", "--scenario", WORKED, "--method", "optimistic"]) == EXIT_OK
        assert capsys.readouterr().out.strip()

    def test_decision_targets_are_converted(self, decision_scenario_path, capsys):
        assert main(
            ["evaluate", "--scenario", decision_scenario_path, "--method",
             "pessimistic", "steady", "gamble"]
        ) == EXIT_OK
        out = dict(line.split() for line in capsys.readouterr().out.splitlines())
        # steady always yields x2, so it evaluates like the x2 point mass;
        # gamble puts weight .7 on the worst prize, pinning the min at nh(.7).
        assert out["steady"] == ".5"
        assert out["gamble"] == ".3"

    def test_missing_config_for_method(self, tmp_path, capsys):
        data = copy.deepcopy(worked_example.SCENARIO)
        del data["pessimistic_config"]
        path = write_scenario(tmp_path, data)
        assert main(["evaluate", "--scenario", path, "--method", "pessimistic"]) == \
            EXIT_VALIDATION
        assert "pessimistic_config" in capsys.readouterr().err

    def test_unknown_target(self, capsys):
        assert main(["evaluate", "--scenario", WORKED, "--method", "binary",
                     "nope"]) == EXIT_VALIDATION
        assert "unknown target" in capsys.readouterr().err

    def test_nothing_to_evaluate(self, tmp_path, capsys):
        data = copy.deepcopy(worked_example.SCENARIO)
        del data["lotteries"]
        path = write_scenario(tmp_path, data)
        assert main(["evaluate", "--scenario", path, "--method", "binary"]) == \
            EXIT_VALIDATION
        assert "neither lotteries nor decisions" in capsys.readouterr().err


class TestRank:
    def test_worked_example_binary(self, capsys):
        assert main(["rank", "--scenario", WORKED, "--method", "binary"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["1. pi1", "2. pi2"]

    def test_worked_example_pessimistic(self, capsys):
        assert main(["rank", "--scenario", WORKED, "--method", "pessimistic"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["1. pi1", "2. pi2"]

    def test_anomaly_tie_on_one_line(self, capsys):
        assert main(["rank", "--scenario", ANOMALY, "--method", "pessimistic"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["1. hope, sure_worst"]

    def test_anomaly_strict_under_binary(self, capsys):
        assert main(["rank", "--scenario", ANOMALY, "--method", "binary"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["1. hope", "2. sure_worst"]

    def test_single_lottery(self, tmp_path, capsys):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["lotteries"] = {"pi1": data["lotteries"]["pi1"]}
        path = write_scenario(tmp_path, data)
        assert main(["rank", "--scenario", path, "--method", "binary"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["1. pi1"]

    def test_missing_config_for_method(self, tmp_path, capsys):
        data = copy.deepcopy(worked_example.SCENARIO)
        del data["assessment"]
        path = write_scenario(tmp_path, data)
        assert main(["rank", "--scenario", path, "--method", "binary"]) == \
            EXIT_VALIDATION
        assert "assessment" in capsys.readouterr().err

    def test_ranking_consistent_with_evaluation(self, capsys):
        main(["evaluate", "--scenario", WORKED, "--method", "pessimistic"])
        rows = dict(line.split() for line in capsys.readouterr().out.splitlines())
        main(["rank", "--scenario", WORKED, "--method", "pessimistic"])
        order = [line.split(" ", 1)[1] for line in capsys.readouterr().out.splitlines()]
        assert rows[order[0]] == ".5" and rows[order[1]] == "0"


class TestVerify:
    def test_defaults_pass_on_worked_example(self, tmp_path, capsys):
        out = str(tmp_path / "report.txt")
        code = main(["verify", "--scenario", WORKED, "--out", out])
        assert code == EXIT_OK
        assert "all expected outcomes hold" in capsys.readouterr().out
        text = open(out, encoding="utf-8").read()
        assert "scenario-pessimistic\tA1-\tsatisfied" in text
        assert "scenario-binary\tB2\tsatisfied" in text

    def test_seeded_report_is_byte_identical(self, tmp_path):
        out1 = str(tmp_path / "a.txt")
        out2 = str(tmp_path / "b.txt")
        for out in (out1, out2):
            assert main(["verify", "--scenario", WORKED, "--seed", "3",
                         "--sample", "10", "--out", out]) == EXIT_OK
        assert open(out1, "rb").read() == open(out2, "rb").read()

    def test_fault_injection_fails_with_witness(self, tmp_path, capsys):
        out = str(tmp_path / "report.txt")
        code = main(["verify", "--scenario", ANOMALY, "--sample", "5",
                     "--inject-fault", "--out", out])
        assert code == EXIT_VERIFICATION
        err = capsys.readouterr().err
        assert "unexpected outcome" in err
        text = open(out, encoding="utf-8").read()
        assert "reflexivity fails" in text

    def test_bound_exceeded(self, tmp_path, capsys):
        out = str(tmp_path / "report.txt")
        code = main(["verify", "--scenario", WORKED, "--max-levels", "3", "--out", out])
        assert code == EXIT_BOUND
        assert "over the bound" in capsys.readouterr().err

    def test_cap_needs_unsafe_flag(self, capsys):
        assert main(["verify", "--scenario", WORKED, "--max-levels", "9"]) == EXIT_BOUND
        assert "--unsafe-bounds" in capsys.readouterr().err


class TestConvertSpohn:
    def test_to_possibility(self, tmp_path, capsys):
        path = write_scenario(tmp_path, {"s1": 0, "s2": 1, "s3": "infinity"}, "delta.json")
        assert main(["convert-spohn", path, "--direction", "to-possibility"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["values"] == {"s1": "1", "s2": ".5", "s3": "0"}
        assert payload["scale"] == ["0", ".5", "1"]

    def test_all_zero_ranking(self, tmp_path, capsys):
        path = write_scenario(tmp_path, {"s1": 0, "s2": 0}, "delta.json")
        assert main(["convert-spohn", path, "--direction", "to-possibility"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert set(payload["values"].values()) == {"1"}

    def test_to_disbelief(self, tmp_path, capsys):
        data = {"scale": ["0", ".5", "1"], "values": {"s1": "1", "s2": ".5", "s3": "0"}}
        path = write_scenario(tmp_path, data, "pi.json")
        assert main(["convert-spohn", path, "--direction", "to-disbelief"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["values"] == {"s1": 0, "s2": 1, "s3": "infinity"}

    def test_cli_round_trip(self, tmp_path, capsys):
        delta_path = write_scenario(
            tmp_path, {"a": 0, "b": 2, "c": 5, "d": "infinity"}, "delta.json"
        )
        pi_path = str(tmp_path / "pi.json")
        assert main(["convert-spohn", delta_path, "--direction", "to-possibility",
                     "--base", "2", "--out", pi_path]) == EXIT_OK
        assert main(["convert-spohn", pi_path, "--direction", "to-disbelief",
                     "--base", "2"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["values"] == {"a": 0, "b": 2, "c": 5, "d": "infinity"}

    def test_fractional_base(self, tmp_path, capsys):
        path = write_scenario(tmp_path, {"s1": 0, "s2": 1}, "delta.json")
        assert main(["convert-spohn", path, "--direction", "to-possibility",
                     "--base", "5/2"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["values"]["s2"] == ".4"

    def test_invalid_disbelief_value(self, tmp_path, capsys):
        path = write_scenario(tmp_path, {"s1": 0, "s2": "soon"}, "delta.json")
        assert main(["convert-spohn", path, "--direction", "to-possibility"]) == \
            EXIT_VALIDATION
        assert "non-negative" in capsys.readouterr().err

    def test_non_normalized_input(self, tmp_path, capsys):
        path = write_scenario(tmp_path, {"s1": 1, "s2": 2}, "delta.json")
        assert main(["convert-spohn", path, "--direction", "to-possibility"]) == \
            EXIT_VALIDATION
        assert "normalized" in capsys.readouterr().err


class TestPaperExample:
    def test_contains_expected_rows(self, capsys):
        assert main(["paper-example"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "min{1, .5, .5, .5} = .5" in out
        assert "min{1, .5, 1, 0} = 0" in out
        assert "max{⟨.7,0⟩, ⟨1,.5⟩, ⟨.5,.5⟩, ⟨.5,.5⟩} = ⟨1,.5⟩" in out
        assert "= ⟨1,1⟩" in out
        assert "pi1 is strictly preferred to pi2 under both criteria" in out

    def test_deterministic(self, capsys):
        main(["paper-example"])
        first = capsys.readouterr().out
        main(["paper-example"])
        assert capsys.readouterr().out == first


class TestScenarioParsing:
    def test_state_possibility_requires_states(self):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["state_possibility"] = {"s1": "1"}
        with pytest.raises(ScenarioError, match="without states"):
            parse_scenario(data)

    def test_decision_requires_states(self):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["decisions"] = {"d": {"s1": "x1"}}
        with pytest.raises(ScenarioError, match="without states"):
            parse_scenario(data)

    def test_decision_to_unknown_outcome(self):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["states"] = ["s1"]
        data["decisions"] = {"d": {"s1": "x9"}}
        with pytest.raises(ScenarioError, match="x9"):
            parse_scenario(data)

    def test_assessment_must_be_pairs(self):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["assessment"]["x2"] = ["1"]
        with pytest.raises(ScenarioError, match="two-element"):
            parse_scenario(data)

    def test_inconsistent_assessment(self):
        data = copy.deepcopy(worked_example.SCENARIO)
        data["assessment"]["x2"], data["assessment"]["x3"] = (
            data["assessment"]["x3"],
            data["assessment"]["x2"],
        )
        with pytest.raises(ScenarioError, match="inconsistent"):
            parse_scenario(data)

    def test_scale_u_defaults_to_scale_v(self, anomaly_scenario):
        assert anomaly_scenario.scale_u is None
        assert anomaly_scenario.utility_scale == anomaly_scenario.scale_v
