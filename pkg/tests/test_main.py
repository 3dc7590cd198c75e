"""
Tests for the grpwild command-line interface.

These tests run main() in-process and check the JSON report on stdout, the
error body on stderr and the exit code.
"""

import json
import logging
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from main import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main

CONFIGS = os.path.join(os.path.dirname(__file__), "..", "configs")


@pytest.fixture(autouse=True)
def restore_root_logger():
    """main() reconfigures the root logger on the captured stderr; undo that."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)


def run(capsys, *argv):
    """Run one command; returns (exit code, report or None, error or None)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    out_lines = [line for line in captured.out.splitlines() if line.strip()]
    err_lines = [line for line in captured.err.splitlines() if line.strip()]
    report = json.loads(out_lines[-1]) if out_lines else None
    error = None
    if err_lines and err_lines[-1].startswith("{"):
        error = json.loads(err_lines[-1])["error"]
    return code, report, error


class TestConstruct:
    """Tests for the construct command."""

    def test_semidirect(self, capsys):
        """G(2, C2) has order 16, r = 3 and dimension 3."""
        code, report, _ = run(capsys, "construct", "G(2, C2)")
        assert code == EXIT_OK
        assert report["command"] == "construct"
        assert report["order"] == "16"
        assert report["exit_code"] == 0
        result = report["result"]
        assert result["kind"] == "semidirect"
        assert (result["p"], result["r"], result["dimension"]) == (2, 3, 3)
        assert result["enumerable"] is True

    def test_saksonov(self, capsys):
        """Sak(S3) reports its order as a factor tower."""
        code, report, _ = run(capsys, "construct", "Sak(S3)")
        assert code == EXIT_OK
        assert report["order"] == "2^(5*(2*3^26-1)) * 2 * 3^26"
        assert report["result"]["kind"] == "saksonov"
        assert [lvl["prime"] for lvl in report["result"]["sak"]["levels"]] == [3, 2]

    def test_table(self, capsys):
        """Catalog products are table groups."""
        code, report, _ = run(capsys, "construct", "A5 x C2")
        assert code == EXIT_OK
        assert report["order"] == "120"
        assert report["result"]["kind"] == "table"
        assert report["result"]["abelian"] is False

    def test_canonical_expression(self, capsys):
        """The report carries the canonical rendering of the expression."""
        _, report, _ = run(capsys, "construct", "G( 2 ,C3 )")
        assert report["expression"] == "G(2, C3)"

    def test_config_echoed(self, capsys):
        """Effective settings are part of the report; timings are off by default."""
        _, report, _ = run(capsys, "construct", "C3", "--seed", "7")
        assert report["config"]["seed"] == 7
        assert "cache_dir" not in report["config"]
        assert report["timings"] is None


class TestVerifyPWild:
    """Tests for the verify-pwild command."""

    def test_not_wild(self, capsys):
        """A5 is not <2>-wild: exit 1."""
        code, report, _ = run(capsys, "verify-pwild", "A5", "--prime", "2")
        assert code == EXIT_REFUTED
        assert report["result"]["status"] == "not-wild-exact"

    def test_exact_wild(self, capsys):
        """(C2)^3 is <2>-wild by exhaustion."""
        code, report, _ = run(capsys, "verify-pwild", "C2 x C2 x C2", "--prime", "2", "--mode", "exact")
        assert code == EXIT_OK
        assert report["result"]["status"] == "wild-exact"

    def test_witnessed(self, capsys):
        """G(2, C3) is <2>-wild with re-verified witnesses."""
        code, report, _ = run(capsys, "verify-pwild", "G(2, C3)", "--prime", "2")
        assert code == EXIT_OK
        assert report["result"]["status"] == "wild-witnessed"
        assert report["result"]["witnesses_verified"] is True
        assert len(report["result"]["witnesses"]) == 5

    def test_depth_zero_inconclusive(self, capsys):
        """A search without words leaves classes unresolved: exit 2."""
        code, report, _ = run(capsys, "verify-pwild", "G(2, C3)", "--prime", "2", "--depth", "0")
        assert code == EXIT_INCONCLUSIVE
        assert report["result"]["status"] == "inconclusive"

    def test_missing_prime(self, capsys):
        """--prime is required."""
        code, report, error = run(capsys, "verify-pwild", "A5")
        assert code == EXIT_USAGE
        assert report is None
        assert error["type"] == "usage"
        assert error["code"] == 3

    def test_non_prime(self, capsys):
        """Composite primes are rejected."""
        code, _, error = run(capsys, "verify-pwild", "A5", "--prime", "4")
        assert code == EXIT_USAGE
        assert error["type"] == "invalid_parameter"


class TestXi:
    """Tests for the xi command."""

    def test_sak_c2(self, capsys):
        """xi(Sak(C2)) = {2}."""
        code, report, _ = run(capsys, "xi", "Sak(C2)", "--mode", "exact")
        assert code == EXIT_OK
        assert report["result"]["pi"] == [2]
        assert report["result"]["xi"] == [2]

    def test_abelian_not_wild(self, capsys):
        """C6 has two primes and no wild one."""
        code, report, _ = run(capsys, "xi", "C6", "--mode", "exact")
        assert code == EXIT_OK
        assert report["result"]["pi"] == [2, 3]
        assert report["result"]["xi"] == []


class TestVerifyTriplet:
    """Tests for the verify-triplet command."""

    def test_from_file(self, capsys):
        """The Klein-four triplet with an order-3 automorphism is wild."""
        path = os.path.join(CONFIGS, "triplet_klein_c3.json")
        code, report, _ = run(capsys, "verify-triplet", "--file", path)
        assert code == EXIT_OK
        assert report["expression"] == "C2 x C2"
        assert report["result"]["wild"] is True

    def test_not_wild(self, capsys):
        """(A5, Inn, Aut) is ordinary but not wild: exit 1."""
        code, report, _ = run(capsys, "verify-triplet", "A5")
        assert code == EXIT_REFUTED
        assert report["result"]["ordinary"] is True
        assert report["result"]["wild"] is False

    def test_unreadable_file(self, capsys, tmp_path):
        """Broken triplet files are usage errors."""
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, error = run(capsys, "verify-triplet", "--file", str(path))
        assert code == EXIT_USAGE
        assert error["type"] == "usage"

    @pytest.mark.parametrize("d1", [[["nope", 3]], 5])
    def test_bad_automorphism_spec(self, capsys, tmp_path, d1):
        """Unknown labels and non-list specs exit 3 with invalid_parameter."""
        path = tmp_path / "bad_d1.json"
        path.write_text(json.dumps({"group": "C2 x C2", "d1": d1}))
        code, _, error = run(capsys, "verify-triplet", "--file", str(path))
        assert code == EXIT_USAGE
        assert error["type"] == "invalid_parameter"

    def test_needs_expression(self, capsys):
        """Either an expression or --file is required."""
        code, _, error = run(capsys, "verify-triplet")
        assert code == EXIT_USAGE
        assert error["type"] == "usage"

    def test_semidirect_rejected(self, capsys):
        """Triplets are checked over table groups only."""
        code, _, error = run(capsys, "verify-triplet", "G(2, C2)")
        assert code == EXIT_USAGE
        assert error["type"] == "usage"


class TestTheorem1:
    """Tests for the theorem1 harness command."""

    def test_small_run(self, capsys):
        """Two samples per group: no violations and the corollary holds."""
        code, report, _ = run(capsys, "theorem1", "--samples", "2")
        assert code == EXIT_OK
        result = report["result"]
        assert result["violations"] == []
        assert result["errors"] == []
        assert [c["group"] for c in result["corollary"]] == ["A5", "S5", "A5 x C2"]
        assert all(not c["refuted"] for c in result["corollary"])
        assert all(c["preconditions_met"] for c in result["corollary"])

    @pytest.mark.slow
    def test_twenty_samples(self, capsys):
        """Twenty random intermediate D1 per group: no violations."""
        code, report, _ = run(capsys, "theorem1", "--samples", "20")
        assert code == EXIT_OK
        assert report["result"]["violations"] == []
        assert all(c["preconditions_met"] for c in report["result"]["corollary"])

    def test_negative_samples(self, capsys):
        """A negative sample count is a usage error."""
        code, _, error = run(capsys, "theorem1", "--samples", "-1")
        assert code == EXIT_USAGE
        assert error["type"] == "usage"


class TestLemma5Demo:
    """Tests for the lemma5-demo command."""

    def test_sampled(self, capsys):
        """Sampled involutions of G(2, C2) outside B are all conjugated."""
        code, report, _ = run(capsys, "lemma5-demo", "G(2, C2)", "--samples", "3")
        assert code == EXIT_OK
        certificates = report["result"]["certificates"]
        assert len(certificates) == 3
        assert all(c["verified"] for c in certificates)

    def test_explicit_rank(self, capsys):
        """--element accepts a rank."""
        code, report, _ = run(capsys, "lemma5-demo", "G(2, C2)", "--element", "3")
        assert code == EXIT_OK
        assert len(report["result"]["certificates"]) == 1

    @pytest.mark.parametrize("element", ["-1", "54"])
    def test_rank_out_of_range(self, capsys, element):
        """Ranks outside 0..|G|-1 exit 3 instead of looping."""
        code, _, error = run(capsys, "lemma5-demo", "G(3, C2)", "--element", element)
        assert code == EXIT_USAGE
        assert error["type"] == "invalid_parameter"

    def test_malformed_element(self, capsys):
        """Non-numeric coordinates are rejected."""
        code, _, error = run(capsys, "lemma5-demo", "G(3, C2)", "--element", '{"a": 1, "v": {"x": 1}}')
        assert code == EXIT_USAGE
        assert error["type"] == "invalid_parameter"

    def test_no_candidates(self, capsys):
        """G(2, C3) has no involution outside B."""
        code, _, error = run(capsys, "lemma5-demo", "G(2, C3)")
        assert code == EXIT_USAGE
        assert error["type"] == "precondition"

    def test_zero_samples(self, capsys):
        """Sampling needs at least one element."""
        code, _, error = run(capsys, "lemma5-demo", "G(2, C2)", "--samples", "0")
        assert code == EXIT_USAGE
        assert error["type"] == "usage"

    def test_needs_semidirect(self, capsys):
        """Catalog groups are not G(p, A)."""
        code, _, error = run(capsys, "lemma5-demo", "A5")
        assert code == EXIT_USAGE
        assert error["type"] == "usage"


class TestErrors:
    """Tests for error bodies and exit codes."""

    def test_syntax_error(self, capsys):
        """Malformed expressions exit 3 with a syntax error body."""
        code, report, error = run(capsys, "construct", "C2 x x C2")
        assert code == EXIT_USAGE
        assert report is None
        assert error["type"] == "syntax"
        assert error["code"] == 3

    def test_unknown_atom(self, capsys):
        """Atoms outside the catalog exit 3."""
        code, _, error = run(capsys, "construct", "S7")
        assert code == EXIT_USAGE
        assert error["type"] == "unknown_atom"

    def test_limit_exceeded(self, capsys):
        """Enumerations beyond --max-enum exit 3."""
        code, _, error = run(capsys, "construct", "S5 x S5", "--max-enum", "1000")
        assert code == EXIT_USAGE
        assert error["type"] == "limit_exceeded"

    @pytest.mark.parametrize("option", [["--threads", "0"], ["--max-enum", "-5"]])
    def test_out_of_range_option(self, capsys, option):
        """Options that fail validation exit 3 instead of crashing."""
        code, report, error = run(capsys, "verify-pwild", "G(2, C3)", "--prime", "2", *option)
        assert code == EXIT_USAGE
        assert report is None
        assert error["type"] == "usage"

    def test_unknown_command(self, capsys):
        """Unknown subcommands are usage errors."""
        code, _, error = run(capsys, "frobnicate")
        assert code == EXIT_USAGE
        assert error["type"] == "usage"


class TestOutputOptions:
    """Tests for --json, --cache-dir and --timings."""

    def test_json_file(self, capsys, tmp_path):
        """--json writes the same report line to a file."""
        path = tmp_path / "out" / "report.json"
        _, report, _ = run(capsys, "construct", "C2 x C3", "--json", str(path))
        assert json.loads(path.read_text()) == report

    def test_cache_dir(self, capsys, tmp_path):
        """--cache-dir stores the class partition and reuses it."""
        cache = tmp_path / "cache"
        first = run(capsys, "verify-pwild", "S4", "--prime", "2", "--cache-dir", str(cache))
        assert len(list(cache.glob("*.npz"))) == 1
        second = run(capsys, "verify-pwild", "S4", "--prime", "2", "--cache-dir", str(cache))
        assert first[1]["result"] == second[1]["result"]

    def test_timings(self, capsys):
        """--timings adds the total run time."""
        _, report, _ = run(capsys, "construct", "C2", "--timings")
        assert report["timings"]["total_seconds"] >= 0

    def test_threads_do_not_change_result(self, capsys):
        """Reports for 1, 4 and 8 workers differ only in the echoed thread count."""
        results = []
        for threads in ("1", "4", "8"):
            _, report, _ = run(capsys, "verify-pwild", "G(2, C3)", "--prime", "2", "--threads", threads)
            assert report["config"]["threads"] == int(threads)
            results.append(report["result"])
        assert results[0]["status"] == "wild-witnessed"
        assert results[0] == results[1] == results[2]

    def test_table_aut_flag(self, capsys):
        """--table-aut lets witness mode resolve an elementary abelian table."""
        code, _, _ = run(capsys, "verify-pwild", "C2 x C2 x C2", "--prime", "2")
        assert code == EXIT_INCONCLUSIVE
        code, report, _ = run(capsys, "verify-pwild", "C2 x C2 x C2", "--prime", "2", "--table-aut")
        assert code == EXIT_OK
        assert report["config"]["witness_table_aut"] is True
