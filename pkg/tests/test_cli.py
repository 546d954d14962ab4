"""Tests for the command-line front end."""

import io
import json

import pytest

from adfnlp import __version__
from adfnlp.cli import (
    EXIT_CAPACITY,
    EXIT_EMPTY,
    EXIT_INPUT,
    EXIT_OK,
    L_STABLE_OUTSIDE_ADFPLUS,
    InputFormat,
    SolveRequest,
    main,
)
from adfnlp.config import ENV_VARIABLES
from adfnlp.parsers import parse_adf

from .conftest import (
    ADF_TEXT,
    ADFPLUS_TEXT,
    KLEENE_ADF_TEXT,
    PROGRAM_TEXT,
    REDUNDANT_ADF_TEXT,
    SETAF_TEXT,
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for variable in ENV_VARIABLES:
        monkeypatch.delenv(variable, raising=False)


class TestSolve:
    """Test suite for the solve subcommand."""

    def test_well_founded(self, write_input, capsys):
        path = write_input(PROGRAM_TEXT)
        code = main(["solve", path, "--format", "nlp", "--semantics", "wellfounded"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "{c, d}\n"

    def test_complete_models(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        code = main(["solve", path, "--format", "adf", "--semantics", "complete"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 6
        assert "{}" in lines
        assert "{a, ~b}" in lines
        assert "{d, ~c, ~e}" in lines

    def test_json_output(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        args = ["solve", path, "--format", "adf", "--semantics", "grounded"]
        assert main(args + ["--output", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["models"] == [{s: "u" for s in "abcde"}]

    def test_unicode(self, write_input, capsys):
        path = write_input(PROGRAM_TEXT)
        args = ["solve", path, "--format", "nlp", "--semantics", "lpstable"]
        assert main(args + ["--unicode"]) == EXIT_OK
        assert capsys.readouterr().out == "{b, c, d, p, ¬a}\n"

    def test_no_models_exits_one(self, write_input, capsys):
        path = write_input(ADFPLUS_TEXT)
        code = main(["solve", path, "--format", "adf", "--semantics", "stable"])
        assert code == EXIT_EMPTY
        assert capsys.readouterr().out == ""

    def test_setaf_input(self, write_input, capsys):
        path = write_input(SETAF_TEXT)
        code = main(["solve", path, "--format", "setaf", "--semantics", "stable"])
        assert code == EXIT_OK
        lines = set(capsys.readouterr().out.splitlines())
        assert lines == {"{a, b, ~c}", "{b, c, ~a}"}

    def test_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.StringIO(PROGRAM_TEXT))
        code = main(["solve", "-", "--format", "nlp", "--semantics", "psm"])
        assert code == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 3

    def test_l_stable_label_on_general_adf(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        code = main(["solve", path, "--format", "adf", "--semantics", "lstable"])
        header, *lines = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        assert header == f"% {L_STABLE_OUTSIDE_ADFPLUS}"
        assert len(lines) == 3

    def test_l_stable_label_in_json(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        args = ["solve", path, "--format", "adf", "--semantics", "lstable"]
        assert main(args + ["--output", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["label"] == L_STABLE_OUTSIDE_ADFPLUS
        assert len(payload["models"]) == 3

    def test_l_stable_unlabelled_on_adfplus(self, write_input, capsys):
        path = write_input(REDUNDANT_ADF_TEXT)
        main(["solve", path, "--format", "adf", "--semantics", "lstable"])
        assert not capsys.readouterr().out.startswith("%")

    def test_part1_semantics(self, write_input, capsys):
        path = write_input(KLEENE_ADF_TEXT)
        code = main(["solve", path, "--format", "adf", "--semantics", "regular"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "{a, ~b, ~c}\n"


class TestSolveErrors:
    """Test suite for solve error handling and exit codes."""

    def test_parse_error(self, write_input, capsys):
        path = write_input("s(a).\nac(a,neg(a)\n")
        code = main(["solve", path, "--format", "adf", "--semantics", "complete"])
        assert code == EXIT_INPUT
        assert capsys.readouterr().err.startswith("error: line")

    def test_missing_file(self, tmp_path, capsys):
        path = str(tmp_path / "missing.adf")
        code = main(["solve", path, "--format", "adf", "--semantics", "complete"])
        assert code == EXIT_INPUT
        assert "error:" in capsys.readouterr().err

    def test_semantics_must_fit_format(self, write_input, capsys):
        path = write_input(PROGRAM_TEXT)
        code = main(["solve", path, "--format", "nlp", "--semantics", "complete"])
        assert code == EXIT_INPUT
        assert "did you mean 'psm'" in capsys.readouterr().err

    def test_program_semantics_on_framework(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        code = main(["solve", path, "--format", "adf", "--semantics", "psm"])
        assert code == EXIT_INPUT
        assert "--format nlp" in capsys.readouterr().err

    def test_assert_adfplus(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        args = ["solve", path, "--format", "adf", "--semantics", "complete"]
        assert main(args + ["--assert-adfplus"]) == EXIT_INPUT
        assert "link (e,c) is not attacking" in capsys.readouterr().err

    def test_capacity(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        args = ["solve", path, "--format", "adf", "--semantics", "complete"]
        assert main(args + ["--max-statements", "2"]) == EXIT_CAPACITY
        assert "(required 243, bound 9)" in capsys.readouterr().err

    def test_bad_environment(self, write_input, monkeypatch, capsys):
        monkeypatch.setenv("ADFNLP_MAX_STATEMENTS", "lots")
        path = write_input(ADF_TEXT)
        code = main(["solve", path, "--format", "adf", "--semantics", "grounded"])
        assert code == EXIT_INPUT
        assert "ADFNLP_MAX_STATEMENTS" in capsys.readouterr().err

    def test_request_validation(self):
        with pytest.raises(ValueError, match="unknown semantics"):
            SolveRequest(path="-", format=InputFormat.ADF, semantics="grand")


class TestTranslate:
    """Test suite for the translate subcommand."""

    def test_program_to_adf(self, write_input, capsys):
        path = write_input(PROGRAM_TEXT)
        assert main(["translate", path, "--from", "nlp", "--to", "adf"]) == EXIT_OK
        D = parse_adf(capsys.readouterr().out)
        assert D.statements == ("b", "c", "a", "d", "p")

    def test_naive(self, write_input, capsys):
        path = write_input("a :- b. a :- not c. b. c :- c.")
        args = ["translate", path, "--from", "nlp", "--to", "adf", "--naive"]
        assert main(args) == EXIT_OK
        assert "ac(a,or(b,neg(c)))." in capsys.readouterr().out

    def test_adf_to_program(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        assert main(["translate", path, "--from", "adf", "--to", "nlp"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "c :- e, not b.\n" in out
        assert len(out.splitlines()) == 5

    def test_round_trip(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        args = ["translate", path, "--from", "adf", "--to", "nlp", "--round-trip"]
        assert main(args) == EXIT_OK
        assert parse_adf(capsys.readouterr().out).statements == tuple("abcde")

    def test_setaf_to_adf(self, write_input, capsys):
        path = write_input(SETAF_TEXT)
        assert main(["translate", path, "--from", "setaf", "--to", "adf"]) == EXIT_OK
        assert "ac(a,neg(c))." in capsys.readouterr().out

    def test_unsupported_direction(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        assert main(["translate", path, "--from", "adf", "--to", "adf"]) == EXIT_INPUT
        assert "cannot translate adf to adf" in capsys.readouterr().err

    def test_setaf_round_trip_rejected(self, write_input, capsys):
        path = write_input(SETAF_TEXT)
        args = ["translate", path, "--from", "setaf", "--to", "adf", "--round-trip"]
        assert main(args) == EXIT_INPUT


class TestLinks:
    """Test suite for the links subcommand."""

    def test_general_adf(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        assert main(["links", path]) == EXIT_OK
        lines = set(capsys.readouterr().out.splitlines())
        assert "(e,c): supporting" in lines
        assert "(b,c): attacking" in lines
        assert len(lines) == 6

    def test_adfplus_redundancy(self, write_input, capsys):
        path = write_input(REDUNDANT_ADF_TEXT)
        assert main(["links", path]) == EXIT_OK
        lines = set(capsys.readouterr().out.splitlines())
        assert lines == {"(b,a): redundant", "(c,a): attacking"}

    def test_json(self, write_input, capsys):
        path = write_input(REDUNDANT_ADF_TEXT)
        assert main(["links", path, "--output", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert {"link": ["b", "a"], "class": "redundant"} in payload["links"]

    def test_prune_redundant(self, write_input, capsys):
        path = write_input(REDUNDANT_ADF_TEXT)
        assert main(["links", path, "--prune-redundant"]) == EXIT_OK
        assert "ac(a,neg(c)).\n" in capsys.readouterr().out

    def test_prune_needs_adfplus(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        assert main(["links", path, "--prune-redundant"]) == EXIT_INPUT
        assert "pruning needs an ADF+" in capsys.readouterr().err


class TestVerify:
    """Test suite for the verify subcommand."""

    def test_single_check(self, capsys):
        assert main(["verify", "psm-model", "--trials", "3"]) == EXIT_OK
        assert capsys.readouterr().out == "psm-model: PASS (1 fixed, 3 trials)\n"

    def test_alias_and_json(self, capsys):
        args = ["verify", "pstable↔complete", "--trials", "2", "--output", "json"]
        assert main(args) == EXIT_OK
        [report] = json.loads(capsys.readouterr().out)
        assert report["check"] == "pstable-complete"
        assert report["failures"] == []

    def test_unknown_check(self, capsys):
        assert main(["verify", "no-such-check"]) == EXIT_INPUT
        assert "Unknown check 'no-such-check'" in capsys.readouterr().err

    def test_search_negatives(self, capsys):
        assert main(["verify", "search-negatives", "--trials", "0"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("search-negatives: 0 trials\n")
        assert "  preferred-not-regular:\n    s(a).\n" in out


class TestParser:
    """Test suite for argument parsing."""

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert capsys.readouterr().out.strip() == f"adfnlp {__version__}"

    def test_subcommand_required(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_unknown_semantics_choice(self, write_input, capsys):
        path = write_input(ADF_TEXT)
        with pytest.raises(SystemExit):
            main(["solve", path, "--format", "adf", "--semantics", "grand"])
