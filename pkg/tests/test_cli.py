# -*- coding: utf-8 -*-
import json
from importlib import resources

import pytest

from gap_logic.cli import build_parser, describe_verdict, main, parse_value
from gap_logic.config import ConfigManager
from gap_logic.prop3 import TruthValue3


@pytest.fixture
def model_file(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps({"domain": ["a", "b"], "predicates": {"F": [], "G": [["a"]]}}), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParser:

    def test_subcommands(self):
        args = build_parser().parse_args(["godel", "unroll", "default", "--max-n", "5", "--format", "json"])
        assert (args.command, args.action, args.system, args.max_n, args.format) == (
            "godel", "unroll", "default", 5, "json")

    def test_no_command(self, capsys):
        code, out, _ = run(capsys)
        assert code == 2
        assert "gaplog" in out

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_parse_value(self):
        assert parse_value("3") == 3
        assert parse_value("True") is True
        assert parse_value("presup") == "presup"


class TestProp:

    def test_contradictory_antecedent_is_not_truth_relevant(self, capsys):
        code, out, _ = run(capsys, "prop", "taut", "(P & ~P) -> Q")
        assert code == 1
        assert "classical tautology: yes" in out
        assert "NOT a truth-relevant tautology (vacuous on all rows)" in out

    def test_truth_relevant(self, capsys):
        code, out, _ = run(capsys, "prop", "taut", "P | ~P")
        assert code == 0
        assert "truth-relevant tautology (T on all 2 rows)" in out

    def test_partial(self, capsys):
        code, out, _ = run(capsys, "prop", "taut", "P -> Q")
        assert code == 1
        assert "(3/4 rows T)" in out

    def test_table_csv(self, capsys):
        code, out, _ = run(capsys, "prop", "table", "P & Q", "--csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "P;Q;value"
        assert lines[-1] == "T;T;T"
        assert len(lines) == 5

    def test_json(self, capsys):
        code, out, _ = run(capsys, "prop", "taut", "P -> P", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["trt_tautology"] is True
        assert [row["value"] for row in data["rows"]] == ["T", "T"]

    def test_syntax_error_shows_caret(self, capsys):
        code, _, err = run(capsys, "prop", "taut", "P &")
        assert code == 2
        assert "^" in err

    def test_atom_cap(self, capsys, config_override):
        config_override("limits.atom_cap", 1)
        assert run(capsys, "prop", "table", "P & Q")[0] == 3


class TestFol:

    def test_presupposition_failure(self, capsys, model_file):
        code, out, _ = run(capsys, "fol", model_file, "forall x. (F(x) -> G(x))")
        assert code == 0
        assert out.strip() == "N (presupposition failed: term F is empty)"

    def test_classical(self, capsys, model_file):
        code, out, _ = run(capsys, "fol", model_file, "forall x. (F(x) -> G(x))", "--semantics", "classical")
        assert code == 0
        assert out.strip() == "T"

    def test_shipped_example_model(self, capsys):
        path = resources.files("gap_logic.data").joinpath("empty_f.json")
        with resources.as_file(path) as model:
            code, out, _ = run(capsys, "fol", str(model), "~exists x. (F(x) & G(x))")
        assert code == 0
        assert out.strip() == "N (presupposition failed: term F is empty)"

    def test_json(self, capsys, model_file):
        _, out, _ = run(capsys, "fol", model_file, "exists x. G(x)", "--format", "json")
        assert json.loads(out)["value"] == "T"

    def test_model_errors(self, capsys, tmp_path, model_file):
        assert run(capsys, "fol", str(tmp_path / "missing.json"), "exists x. F(x)")[0] == 2
        assert run(capsys, "fol", model_file, "exists x. H(x)")[0] == 2
        assert run(capsys, "fol", model_file, "F(x)")[0] == 2

    def test_describe_verdict(self):
        assert describe_verdict(TruthValue3.T, ()) == "T"
        assert describe_verdict(TruthValue3.N, ("F", "~G")) == "N (presupposition failed: terms F, ~G are empty)"
        assert describe_verdict(TruthValue3.N, (), "vacuous negation of (P & ~P)") == "N (vacuous negation of (P & ~P))"


class TestSyllogism:

    def test_square_table1(self, capsys):
        code, out, _ = run(capsys, "syllogism", "square", "--scheme", "table1", "--max-domain", "4")
        assert code == 0
        assert "FAIL contraries: countermodel |D|=1 F={} G={}" in out
        assert "as expected" in out

    def test_square_table2_names_o_reading(self, capsys):
        code, out, _ = run(capsys, "syllogism", "square", "--scheme", "table2", "--max-domain", "3")
        assert code == 0
        assert "reading: O(F,G) als kontradiktorisches Gegenstück zu A" in out
        _, out, _ = run(capsys, "syllogism", "square", "--scheme", "table2", "--max-domain", "3", "--format", "json")
        assert json.loads(out)["reading"].startswith("O(F,G)")

    def test_square_presup(self, capsys):
        code, out, _ = run(capsys, "syllogism", "square", "--scheme", "presup", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["matches"] is True
        assert all(law["passed"] for law in data["laws"])

    def test_unknown_scheme(self, capsys):
        assert run(capsys, "syllogism", "square", "--scheme", "table9")[0] == 2

    def test_model_cap(self, capsys, config_override):
        config_override("limits.model_cap", 10)
        code = run(capsys, "syllogism", "square", "--exhaustive", "--max-domain", "3")[0]
        assert code == 3

    @pytest.mark.slow
    def test_moods(self, capsys):
        code, out, _ = run(capsys, "syllogism", "moods", "--scheme", "table2")
        assert code == 0
        assert out.splitlines()[0] == "24/256 valid; matches traditional catalog"
        assert "Barbara" in out


class TestGodel:

    def test_build(self, capsys):
        code, out, _ = run(capsys, "godel", "build", "default")
        assert code == 0
        assert "diag(k) = <G> verified" in out
        assert "closure: 5 sentences; G provable: no" in out

    def test_unroll(self, capsys):
        code, out, _ = run(capsys, "godel", "unroll", "default", "--max-n", "3")
        assert code == 0
        assert "G (unrolled, z first): N" in out
        assert "G (as written, classical): T" in out
        assert "G (unrolled, x first): N" in out

    def test_unroll_json(self, capsys):
        _, out, _ = run(capsys, "godel", "unroll", "default", "--max-n", "3", "--format", "json")
        data = json.loads(out)
        assert [r["n"] for r in data["instances"]] == ["1", "2", "3"]
        assert data["overall"]["value"] == "N"

    def test_report(self, capsys):
        code, out, _ = run(capsys, "godel", "report", "default")
        assert code == 0
        assert "K: N (Prf-term empty) / H: T / J: N -- equivalence fails" in out
        assert "classical: K: T / G: T / H: T / J: T -- equivalence holds" in out
        _, out, _ = run(capsys, "godel", "report", "default", "--format", "json")
        data = json.loads(out)
        assert data["K"]["verdict"] == "N"
        assert data["K"]["classical"] == "T"

    def test_self_check_failure(self, capsys, monkeypatch):
        monkeypatch.setattr("gap_logic.goedel.fixed_point.diag", lambda y: None)
        assert run(capsys, "godel", "build", "default")[0] == 4

    def test_missing_system(self, capsys, tmp_path):
        assert run(capsys, "godel", "build", str(tmp_path / "nope.json"))[0] == 2


class TestConfig:

    def test_schemes(self, capsys):
        code, out, _ = run(capsys, "schemes")
        assert code == 0
        assert "table1" in out and "presup" in out
        assert "(exists x)(Fx & Gx)" in out

    def test_edit_requires_file(self, capsys):
        assert run(capsys, "config", "edit", "defaults.max_domain", "3")[0] == 2

    def test_init_edit_show(self, capsys, tmp_path):
        assert run(capsys, "config", "init")[0] == 0
        assert (tmp_path / ".config" / "gap_logic" / "config.yaml").exists()
        assert run(capsys, "config", "edit", "defaults.max_domain", "3")[0] == 0
        assert ConfigManager.get("defaults.max_domain") == 3
        code, out, _ = run(capsys, "config", "show")
        assert code == 0
        assert "max_domain: 3" in out

    def test_config_default_applies(self, capsys, config_override):
        config_override("defaults.format", "json")
        _, out, _ = run(capsys, "prop", "taut", "P -> P")
        assert json.loads(out)["classical_tautology"] is True
