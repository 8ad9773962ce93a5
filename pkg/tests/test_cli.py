"""
Tests for the qgain command line.
"""

import json

import pytest

from qgain.cli import build_parser, main
from qgain.core.enums import ExitCode
from qgain.core.exceptions import NotHermitianError, ZeroDivisorError
from qgain.services.analysis import AnalysisService

WORKED_DET_TEXT = "3.343145750508"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestParser:
    """Test argument parsing."""

    def test_det_defaults(self):
        """Test det uses both routes by default."""
        args = build_parser().parse_args(["det", "--input", "g.json"])
        assert args.command == "det"
        assert str(args.method) == "both"
        assert args.tol is None
        assert not args.json

    def test_verify_defaults(self):
        """Test verify defaults to seed 0 and 25 trials without a graph."""
        args = build_parser().parse_args(["verify"])
        assert (args.seed, args.trials, args.input) == (0, 25, None)

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["det"],
            ["det", "-i", "g.json", "--method", "fastest"],
            ["det", "-i", "g.json", "--tol", "0"],
            ["verify", "--trials", "-1"],
            ["cycles", "-i", "g.json", "--max-len", "x"],
        ],
    )
    def test_usage_errors(self, argv):
        """Test malformed command lines exit with status 2."""
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(argv)
        assert excinfo.value.code == 2


class TestDetCommand:
    """Test the det subcommand."""

    def test_worked_example_both(self, capsys, worked_document, write_graph):
        """Test both routes print 9 - 4 sqrt 2."""
        code, out = run(capsys, "det", "--input", write_graph(worked_document))
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert lines[0] == f"direct: {WORKED_DET_TEXT}"
        assert lines[1] == f"combinatorial: {WORKED_DET_TEXT}"
        assert lines[2].startswith("discrepancy: ")

    def test_single_method(self, capsys, worked_document, write_graph):
        """Test a single route prints one line."""
        code, out = run(capsys, "det", "-i", write_graph(worked_document), "--method", "combinatorial")
        assert code == ExitCode.OK
        assert out.strip() == f"combinatorial: {WORKED_DET_TEXT}"

    def test_path_is_zero(self, capsys, path_document, write_graph):
        """Test a path graph has determinant 0."""
        code, out = run(capsys, "det", "-i", write_graph(path_document))
        assert code == ExitCode.OK
        assert out.splitlines()[:2] == ["direct: 0", "combinatorial: 0"]

    def test_json_report(self, capsys, worked_document, write_graph):
        """Test --json prints a camelCase report."""
        path = write_graph(worked_document)
        code, out = run(capsys, "det", "-i", path, "--json")
        assert code == ExitCode.OK
        payload = json.loads(out)
        assert payload["graphDescriptor"] == path
        assert payload["method"] == "both"
        assert payload["detDirect"] == WORKED_DET_TEXT
        assert payload["detCombinatorial"] == WORKED_DET_TEXT
        assert payload["agree"] is True

    def test_non_unit_gain(self, capsys, path_document, write_graph):
        """Test a non-unit gain exits with status 3."""
        path_document["edges"][0]["gain"] = [0.5, 0.5, 0, 0]
        code, out = run(capsys, "det", "-i", write_graph(path_document))
        assert code == ExitCode.NON_UNIT_GAIN
        assert out == ""

    def test_malformed_document(self, capsys, tmp_path):
        """Test unparsable input exits with status 2."""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _ = run(capsys, "det", "-i", str(path))
        assert code == ExitCode.INVALID_INPUT

    def test_missing_file(self, capsys, tmp_path):
        """Test a missing input file exits with status 2."""
        code, _ = run(capsys, "det", "-i", str(tmp_path / "absent.json"))
        assert code == ExitCode.INVALID_INPUT

    def test_undecodable_file(self, capsys, tmp_path):
        """Test a file that is not UTF-8 exits with status 2."""
        path = tmp_path / "binary.json"
        path.write_bytes(b"\xff")
        code, out = run(capsys, "det", "-i", str(path))
        assert code == ExitCode.INVALID_INPUT
        assert out == ""

    @pytest.mark.parametrize("error", [NotHermitianError("not hermitian"), ZeroDivisorError("zero divisor")])
    def test_algebra_errors(self, capsys, monkeypatch, worked_document, write_graph, error):
        """Test matrix and quaternion errors exit with status 2."""

        def fail(*args, **kwargs):
            raise error

        monkeypatch.setattr(AnalysisService, "determinant", fail)
        code, _ = run(capsys, "det", "-i", write_graph(worked_document))
        assert code == ExitCode.INVALID_INPUT

    def test_self_loop(self, capsys, path_document, write_graph):
        """Test a structurally invalid graph exits with status 2."""
        path_document["edges"][0]["to"] = "v1"
        code, _ = run(capsys, "det", "-i", write_graph(path_document))
        assert code == ExitCode.INVALID_INPUT

    def test_budget_exceeded(self, capsys, monkeypatch, worked_document, write_graph):
        """Test exceeding the reduction budget exits with status 4."""
        monkeypatch.setenv("QGAIN_REDUCTION_BUDGET", "4")
        code, _ = run(capsys, "det", "-i", write_graph(worked_document))
        assert code == ExitCode.LIMIT_EXCEEDED

    def test_size_cap_exceeded(self, capsys, monkeypatch, worked_document, write_graph):
        """Test exceeding the permutation-sum cap exits with status 4."""
        monkeypatch.setenv("QGAIN_SIZE_CAP", "3")
        code, _ = run(capsys, "det", "-i", write_graph(worked_document), "--method", "direct")
        assert code == ExitCode.LIMIT_EXCEEDED


class TestGraphCommands:
    """Test the balanced, reductions and cycles subcommands."""

    def test_balanced(self, capsys, worked_document, path_document, write_graph):
        """Test balanced exits 0 for a tree and 1 for the worked example."""
        code, out = run(capsys, "balanced", "-i", write_graph(path_document, "path.json"))
        assert (code, out.strip()) == (ExitCode.OK, "balanced")
        code, out = run(capsys, "balanced", "-i", write_graph(worked_document, "worked.json"))
        assert (code, out.strip()) == (ExitCode.FAILED, "unbalanced")

    def test_reductions(self, capsys, worked_document, write_graph):
        """Test the reductions listing and its total."""
        code, out = run(capsys, "reductions", "-i", write_graph(worked_document))
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert len(lines) == 6
        assert lines[0].startswith("{e1,e2,e3,e4}  det 0.585786437627  unicyclic[v1,v2,v3,v4]")
        assert lines[1].startswith("{e1,e2,e3,e5}  det 1  unicyclic")
        assert lines[-1] == f"reductions: 5  total: {WORKED_DET_TEXT}"

    def test_reductions_json(self, capsys, worked_document, write_graph):
        """Test the reductions JSON payload."""
        code, out = run(capsys, "reductions", "-i", write_graph(worked_document), "--json")
        payload = json.loads(out)
        assert code == ExitCode.OK
        assert payload["total"] == WORKED_DET_TEXT
        first = payload["reductions"][0]
        assert first["columns"] == ["e1", "e2", "e3", "e4"]
        assert first["unicycleLike"] is True
        assert first["components"][0]["cycle"]["vertices"] == ["v1", "v2", "v3", "v1"]

    def test_cycles(self, capsys, worked_document, write_graph):
        """Test the cycle listing."""
        code, out = run(capsys, "cycles", "-i", write_graph(worked_document))
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert lines[-1] == "cycles: 3"
        assert lines[2] == (
            "v1 v2 v3 v4 v1  gain 0.5+0.5i-0.5j-0.5k  contribution 1  unbalanced"
        )

    def test_cycles_max_length(self, capsys, worked_document, write_graph):
        """Test --max-len limits the listing."""
        code, out = run(capsys, "cycles", "-i", write_graph(worked_document), "--max-len", "3", "--json")
        assert code == ExitCode.OK
        cycles = json.loads(out)["cycles"]
        assert [c["vertices"] for c in cycles] == [["v1", "v2", "v3", "v1"], ["v1", "v3", "v4", "v1"]]
        assert all(c["balance"] == "unbalanced" for c in cycles)


class TestVerifyCommand:
    """Test the verify subcommand."""

    def test_cross_check_only(self, capsys, worked_document, write_graph):
        """Test verify with no trials cross-checks the graph."""
        code, out = run(capsys, "verify", "-i", write_graph(worked_document), "--trials", "0")
        assert code == ExitCode.OK
        lines = out.splitlines()
        assert f"direct: {WORKED_DET_TEXT}" in lines
        assert lines[-1] == "passed"

    def test_lemma_subset_json(self, capsys):
        """Test a short seeded suite run as JSON."""
        code, out = run(capsys, "verify", "--seed", "3", "--trials", "2", "--json")
        assert code == ExitCode.OK
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["graphDescriptor"] == "lemma-suite"
        assert all(result["passed"] for result in payload["lemmaResults"])
        assert "detDirect" in payload and payload["detDirect"] is None
