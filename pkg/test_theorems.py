import pytest
from pydantic import ValidationError as ModelError

from algebra import theorems
from algebra.errors import NotInvertible
from algebra.theorems import Analysis, background_checks, check, check_instance, counterexample_search
from models.report_models import Caps, ConclusionResult, Status, TheoremId, TheoremReport, Verdict


def run(instance, theorem, caps=None, masks=None):
    return check(theorem, Analysis(instance.ring, instance.group, caps), masks)


def test_n1_positive_instance(named):
    report = run(named["F4_0/sym3"], TheoremId.N1)
    assert [h.status for h in report.hypotheses] == [Status.HOLDS] * 4
    assert "d(2) = 1" in report.hypotheses[-1].witness
    assert report.conclusion.status == Status.DOMINATED
    assert report.verdict == Verdict.VERIFIED


def test_n1_vacuous_without_bad_primes(named):
    report = run(named["F3xF3/swap"], TheoremId.N1)
    assert report.verdict == Verdict.VACUOUS
    assert report.failed_hypotheses == ["bad-primes"]


def test_bergman_isaacs_on_zero_ring(named):
    report = run(named["F3^2_0/swap"], TheoremId.BI_1_4)
    assert all(h.status == Status.HOLDS for h in report.hypotheses)
    assert report.conclusion.status.ok
    assert report.verdict == Verdict.VERIFIED


def test_montgomery_nilpotence(named):
    report = run(named["F4_0/sym3"], TheoremId.MONT_1_7)
    assert report.verdict == Verdict.VERIFIED


def test_radical_equality_positive(named):
    report = run(named["F3xF3/swap"], TheoremId.RAD_1_4)
    assert report.verdict == Verdict.VERIFIED


def test_radical_equality_negative(named):
    report = run(named["M2(F2)/inner"], TheoremId.RAD_1_4)
    assert report.verdict == Verdict.VACUOUS
    assert report.failed_hypotheses == ["unit"]
    clause = report.conclusion.clauses[0]
    assert clause.status == Status.FAILS
    assert clause.witness == "(0,1,0,0) only on the left side"


def test_masked_hypothesis_gives_counterexample(named):
    report = run(named["M2(F2)/inner"], TheoremId.RAD_1_4, masks={"unit"})
    assert report.hypotheses[0].masked
    assert report.verdict == Verdict.COUNTEREXAMPLE
    assert report.conclusion.witness is not None


def test_counterexample_search_with_masks(named):
    instances = [named["F3xF3/swap"], named["M2(F2)/inner"]]
    hits = counterexample_search([TheoremId.RAD_1_4], instances, budget=2, masks={TheoremId.RAD_1_4: {"unit"}})
    assert [(h.ring, h.group) for h in hits] == [("M2(F2)", "inner")]
    assert counterexample_search([TheoremId.RAD_1_4], instances, budget=2) == []


def test_levitzki_and_semisimple_transfer(named):
    instance = named["M2(F3)/diag"]
    assert run(instance, TheoremId.LEVITZKI).verdict == Verdict.VERIFIED
    assert run(instance, TheoremId.COR_B8).verdict == Verdict.VACUOUS


def test_lemmas_on_averaging_splitting(named):
    instance = named["F3xF3/swap"]
    for theorem in (TheoremId.LEM_A6, TheoremId.LEM_B6, TheoremId.LEM_C6, TheoremId.COR_C8):
        report = run(instance, theorem)
        assert report.verdict == Verdict.VERIFIED, theorem
    lemma = run(instance, TheoremId.LEM_C6)
    assert any("Artinian" in c.text for c in lemma.conclusion.clauses)


def test_trace_nondegeneracy(named):
    assert run(named["F3xF3/swap"], TheoremId.C1_5).verdict == Verdict.VERIFIED


def test_prime_radical_restriction(named):
    for name in ("Z12/trivial", "F2[C2]/trivial", "F3xF3/swap"):
        assert run(named[name], TheoremId.TH_1_9).verdict == Verdict.VERIFIED


def test_cap_gives_skipped_verdict(named):
    report = run(named["F3^2_0/swap"], TheoremId.BI_1_4, caps=Caps(nilpotency=1))
    assert report.verdict == Verdict.SKIPPED
    assert report.conclusion.status == Status.CAPPED


def test_checker_error_is_reported_per_theorem(named, monkeypatch):
    def broken(report, analysis):
        raise NotInvertible("6 is not invertible")

    monkeypatch.setitem(theorems.CHECKERS, TheoremId.N1, broken)
    instance = named["F3xF3/swap"]
    reports = check_instance(instance.ring, instance.group)
    assert len(reports) == len(TheoremId)
    [n1] = [r for r in reports if r.theorem == TheoremId.N1]
    assert n1.verdict == Verdict.SKIPPED
    assert any("NotInvertible" in note for note in n1.notes)
    assert any(r.verdict == Verdict.VERIFIED for r in reports if r.theorem != TheoremId.N1)


def test_goldie_quotient_clause_holds_on_units(named):
    report = run(named["F3xF3/swap"], TheoremId.COR_A8)
    [clause] = [c for c in report.conclusion.clauses if c.text.startswith("Q_l(R)^G")]
    assert clause.status == Status.HOLDS


def test_named_catalog_has_no_counterexamples(named):
    for instance in named.values():
        for report in check_instance(instance.ring, instance.group):
            assert report.verdict != Verdict.COUNTEREXAMPLE, (report.theorem, instance.name)
            if report.verdict == Verdict.VACUOUS:
                assert report.failed_hypotheses


def test_reports_are_deterministic(named):
    instance = named["F2xF4_0/sym3"]
    first = [r.model_dump(mode="json") for r in check_instance(instance.ring, instance.group, seed=7)]
    second = [r.model_dump(mode="json") for r in check_instance(instance.ring, instance.group, seed=7)]
    assert first == second
    assert all(r["seed"] == 7 for r in first)


def test_background_inclusions_hold(named):
    for instance in named.values():
        clauses = background_checks(Analysis(instance.ring, instance.group))
        assert clauses
        assert all(c.status == Status.HOLDS for c in clauses), instance.name


def test_counterexample_report_needs_witness():
    with pytest.raises(ModelError):
        TheoremReport(
            theorem=TheoremId.N1,
            ring="R",
            group="G",
            conclusion=ConclusionResult(text="c", status=Status.HOLDS),
            verdict=Verdict.COUNTEREXAMPLE,
        )
