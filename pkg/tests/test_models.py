"""
Tests for the pydantic report models.

These tests verify validation of automorphism word letters and the JSON
shape of reports and error bodies.
"""

import json
import os
import sys

import pytest
from pydantic import ValidationError

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from models import (
    SCHEMA_VERSION,
    TOOL_VERSION,
    ClassWitness,
    ErrorBody,
    ErrorDetail,
    PrimitiveSpec,
    Report,
    WildReport,
    WildStatus,
)


class TestPrimitiveSpec:
    """Tests for automorphism word letters."""

    def test_defaults(self):
        """A bare letter has power 1 and no parameters."""
        spec = PrimitiveSpec(kind="psi")
        assert spec.power == 1
        assert spec.index is None

    def test_unknown_kind_rejected(self):
        """Only the documented primitive kinds validate."""
        with pytest.raises(ValidationError):
            PrimitiveSpec(kind="frobenius")

    def test_round_trip(self):
        """A letter survives JSON serialisation."""
        spec = PrimitiveSpec(kind="psi_i", index=2, power=-1)
        assert PrimitiveSpec.model_validate_json(spec.model_dump_json()) == spec


class TestWildStatus:
    """Tests for the wildness status enumeration."""

    def test_wild_statuses(self):
        """Both wild-* statuses count as wild."""
        assert WildStatus.WILD_EXACT.is_wild
        assert WildStatus.WILD_WITNESSED.is_wild

    def test_non_wild_statuses(self):
        """not-wild-exact and inconclusive never count as wild."""
        assert not WildStatus.NOT_WILD_EXACT.is_wild
        assert not WildStatus.INCONCLUSIVE.is_wild

    def test_serialised_values(self):
        """Statuses serialise to their hyphenated names."""
        report = WildReport(prime=2, mode="exact", status=WildStatus.NOT_WILD_EXACT, fixed_class=1)
        data = json.loads(report.model_dump_json())
        assert data["status"] == "not-wild-exact"
        assert data["fixed_class"] == 1

    def test_witness_holds_word(self):
        """A witness keeps its letters in order."""
        witness = ClassWitness(
            class_id=3,
            representative={"a": 0, "v": {"0": 1}},
            word=[PrimitiveSpec(kind="psi"), PrimitiveSpec(kind="phi")],
            image_class=5,
        )
        assert [w.kind for w in witness.word] == ["psi", "phi"]


class TestReportEnvelope:
    """Tests for the top-level report and error body."""

    def test_report_versions(self):
        """Reports are stamped with schema and tool versions."""
        report = Report(command="construct", exit_code=0)
        assert report.schema_version == SCHEMA_VERSION
        assert report.tool_version == TOOL_VERSION

    def test_report_is_one_line(self):
        """A report serialises to a single JSON line."""
        report = Report(command="xi", expression="Sak(C2)", order="16", exit_code=0, result={"xi": [2]})
        line = report.model_dump_json()
        assert "\n" not in line
        assert json.loads(line)["result"] == {"xi": [2]}

    def test_timings_absent_by_default(self):
        """Timings are null unless requested."""
        assert Report(command="xi", exit_code=0).timings is None

    def test_error_body_shape(self):
        """Errors serialise as {"error": {"message", "type", "code"}}."""
        body = ErrorBody(error=ErrorDetail(message="bad", type="syntax", code=3))
        assert json.loads(body.model_dump_json()) == {
            "error": {"message": "bad", "type": "syntax", "code": 3}
        }
