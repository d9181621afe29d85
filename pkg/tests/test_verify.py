"""Tests for the verification scenarios and runner."""

import pytest

from braidforge.services.errors import InvariantViolation
from braidforge.services.verify import (
    SCENARIOS,
    Check,
    Report,
    ReportStatus,
    Scenario,
    VerificationRunner,
    run_all,
    run_scenario,
)
from braidforge.services.verify.relations import ERRATA, index_pairs, is_erasable, normalize
from braidforge.services.verify.scenarios import check_relations, relation_verdict
from braidforge.services.words import parse_word

SCENARIO_IDS = [
    "abelianization-flat",
    "abelianization-wb",
    "cor-3.2-perfect-fvb",
    "cor-3.2-perfect-fwb",
    "lemma-2.1-generators",
    "lemma-2.2-relations",
    "lemma-2.3-script",
    "lemma-2.4-script",
    "lemma-3.3-generators",
    "lemma-3.4-duplicate-relation",
    "lemma-3.4-fvb-script",
    "lemma-3.4-fwb-script",
    "n34-not-perfect",
    "oracle-relators",
    "telescoping",
    "thm-1.1-perfect",
    "thm-3.1-explicit-n3",
]


def _scenario(run, scenario_id="fake"):
    return Scenario(id=scenario_id, anchor="a fake claim", params={}, run=run)


class TestRegistry:
    """Tests for the scenario registry."""

    def test_ids(self):
        """Test every scenario is registered, in id order."""
        assert list(SCENARIOS) == SCENARIO_IDS

    def test_anchors(self):
        """Test every anchor cites a lemma, theorem, corollary or section before its claim."""
        for s in SCENARIOS.values():
            location, _, claim = s.anchor.partition(": ")
            assert location.startswith(("Lemma", "Theorem", "Corollar", "Section")), s.id
            assert claim, s.id

    def test_anchor_locations(self):
        """Test scenario anchors point at the results their ids name."""
        assert SCENARIOS["lemma-2.2-relations"].anchor.startswith("Lemma 2.2")
        assert SCENARIOS["thm-3.1-explicit-n3"].anchor.startswith("Theorem 3.1")
        assert "Lemma 3.4" in SCENARIOS["lemma-3.4-fvb-script"].anchor


class TestRunner:
    """Tests for running scenarios into reports."""

    def test_exception_becomes_error(self):
        """Test an aborted scenario is a failed report, not a crash."""

        def boom(_):
            raise ValueError("boom")

        report = VerificationRunner({"fake": _scenario(boom)}).run_all()[0]
        assert report.status is ReportStatus.FAILED
        assert report.errors == ["ValueError: boom"]
        assert not report.internal_error

    def test_invariant_violation_is_internal(self):
        """Test invariant violations are flagged as internal errors."""

        def broken(_):
            raise InvariantViolation("inconsistent")

        report = VerificationRunner({"fake": _scenario(broken)}).run_all()[0]
        assert report.internal_error
        assert not report.passed

    def test_no_checks_fails(self):
        """Test a scenario without checks does not pass."""
        report = VerificationRunner({"fake": _scenario(lambda _: [])}).run_all()[0]
        assert report.status is ReportStatus.FAILED

    def test_passing(self):
        """Test a scenario with passing checks passes."""
        report = VerificationRunner({"fake": _scenario(lambda _: [Check("ok", True, {"x": 1})])}).run_all()[0]
        assert report.passed
        assert "[PASSED] fake: a fake claim" in report.format_text()

    def test_prefix_selection(self):
        """Test prefixes select scenarios and unknown prefixes select none."""
        runner = VerificationRunner()
        assert [s.id for s in runner.select("lemma-3.4")] == [
            "lemma-3.4-duplicate-relation",
            "lemma-3.4-fvb-script",
            "lemma-3.4-fwb-script",
        ]
        assert run_all("nonexistent") == []

    def test_unknown_id(self):
        """Test run_scenario rejects unknown ids."""
        with pytest.raises(KeyError):
            run_scenario("nonexistent")

    async def test_async_order(self):
        """Test the async runner keeps id order."""
        scenarios = {
            sid: _scenario(lambda _: [Check("ok", True)], sid) for sid in ("b-second", "a-first", "c-third")
        }
        reports = await VerificationRunner(scenarios).run_all_async()
        assert [r.scenario for r in reports] == ["a-first", "b-second", "c-third"]

    def test_to_doc(self):
        """Test the structured report carries the schema version."""
        report = Report(scenario="fake", anchor="claim", checks=[Check("ok", True)])
        doc = report.to_doc()
        assert doc.schema_version == "1.0"
        assert doc.status == "passed"


class TestScenarios:
    """Tests that run the quick scenarios end to end."""

    @pytest.mark.parametrize(
        "scenario_id",
        [
            "abelianization-wb",
            "abelianization-flat",
            "oracle-relators",
            "thm-3.1-explicit-n3",
            "lemma-3.3-generators",
            "cor-3.2-perfect-fvb",
        ],
    )
    def test_scenario_passes(self, scenario_id):
        """Test the scenario passes with every check green."""
        report = run_scenario(scenario_id)
        assert report.errors == []
        assert report.passed, report.format_text()


class TestPrintedRelations:
    """Tests for the printed relation families."""

    def test_index_pairs(self):
        """Test far pairs and adjacent indices per family."""
        assert index_pairs("braid-commute", 4) == [(1, 3)]
        assert index_pairs("mixed-commute", 4) == [(1, 3), (3, 1)]
        assert index_pairs("braid", 4) == [(1, 0), (2, 0)]

    def test_erasable(self):
        """Test which graded generators are erased."""
        assert is_erasable("alpha[3,0,1]")
        assert is_erasable("beta[-1,1,1]")
        assert not is_erasable("alpha[0,1,1]")
        assert not is_erasable("c1")

    def test_normalize(self):
        """Test normalization erases trivial generators before comparing."""
        assert normalize(parse_word("alpha[0,0,1] alpha[0,0,2]")) == normalize(parse_word("alpha[0,0,2]"))


def _counts(literal=0, trivial=0, equivalent=0, erratum=0, discrepancy=0):
    return {
        "literal": literal,
        "trivial": trivial,
        "equivalent": equivalent,
        "erratum": erratum,
        "discrepancy": discrepancy,
    }


class TestRelationVerdict:
    """Tests for the per-family verdict on printed relations."""

    def test_discrepancy_without_erratum_fails(self):
        """Test a family with refuted instances and no erratum record fails."""
        assert "braid" not in ERRATA
        literal, equivalent = relation_verdict("braid", 4, _counts(literal=5, discrepancy=1))
        assert literal.passed
        assert not equivalent.passed
        assert equivalent.evidence["discrepancy"] == 1

    def test_literal_support_does_not_mask_discrepancy(self):
        """Test matching instances do not outweigh a refuted one."""
        _, equivalent = relation_verdict("sym-braid", 5, _counts(literal=6, equivalent=6, discrepancy=6))
        assert equivalent.status is ReportStatus.FAILED

    def test_erratum_is_reported(self):
        """Test instances excused by an erratum pass with the note attached."""
        _, equivalent = relation_verdict("forbidden", 4, _counts(literal=6, erratum=6))
        assert equivalent.passed
        assert equivalent.evidence["erratum"] == 6
        assert equivalent.detail == f"erratum: {ERRATA['forbidden'].note}"

    def test_literal_and_equivalent_are_separate(self):
        """Test literal matches and oracle-equivalent matches are separate checks."""
        literal, equivalent = relation_verdict("braid", 4, _counts(literal=2, trivial=1, equivalent=3))
        assert literal.name == "printed-braid-4-literal"
        assert literal.evidence == {"literal": 2, "trivial": 1, "instances": 6}
        assert equivalent.name == "printed-braid-4-equivalent"
        assert equivalent.evidence == {"equivalent": 3, "erratum": 0, "discrepancy": 0}

    def test_no_instances(self):
        """Test a family with no instances passes and says so."""
        _, equivalent = relation_verdict("braid-commute", 3, _counts())
        assert equivalent.passed
        assert equivalent.detail == "no instances at this strand count"

    def test_forbidden_r2_is_an_erratum(self):
        """Test the refuted r = 2 forbidden instances land under the erratum on WB_4'."""
        checks = {c.name: c for c in check_relations({"strands": [4], "window": 3})}
        equivalent = checks["printed-forbidden-4-equivalent"]
        assert equivalent.evidence["erratum"] == 6
        assert equivalent.evidence["discrepancy"] == 0
        assert checks["printed-forbidden-4-literal"].evidence["literal"] == 6

    def test_erratum_starts_at_min_r(self):
        """Test the forbidden erratum does not excuse r = 1 instances."""
        assert not ERRATA["forbidden"].excuses(1)
        assert ERRATA["forbidden"].excuses(2)
