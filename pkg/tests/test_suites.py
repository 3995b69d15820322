import json

import pytest

from src.algebra import ideal_from_generators, whole_ideal, zero_ideal
from src.config import Settings
from src.data.corpus import CorpusSpec
from src.suites import (
    SUITE_CHOICES,
    SUITES,
    _basis_subsets,
    build_context,
    check_ideal_counts,
    check_local_tau_tilting,
    check_oracle_agreement,
    check_trace_ideal,
    resolve_suite,
    run_suite,
)


def _corpus(*entries):
    return [CorpusSpec.parse(e) for e in entries]


def test_ideal_counting_identities(a2, a3z):
    for I in (
        zero_ideal(a2),
        whole_ideal(a2),
        ideal_from_generators(a2, [a2.element("e1")]),
        ideal_from_generators(a2, [a2.element("a")]),
        ideal_from_generators(a3z, [a3z.element("e2")]),
    ):
        v = check_ideal_counts(I, "I")
        assert v.consistent, v.conditions
    v = check_ideal_counts(ideal_from_generators(a2, [a2.element("e1")]), "⟨e1⟩")
    assert v.witness == {"ideal_dim": 2, "stable_index": 1, "quotient_simples": 1}


def test_trace_ideals_act_fully(a3z, n32):
    for A in (a3z, n32):
        for v in range(A.simple_count):
            assert check_trace_ideal(A, v).consistent


def test_basis_subsets(a2, a3z):
    assert len(_basis_subsets(a2, 64, 0)) == 8
    sampled = _basis_subsets(a3z, 8, 0)
    assert len(sampled) == 8
    assert sampled[0] == ()
    assert tuple(range(a3z.dim)) in sampled


def test_suite_context_for_local_algebra():
    ctx = build_context(CorpusSpec.parse("LOC2"), Settings())
    assert ctx.cap == 2 and ctx.complete
    assert len(ctx.pool) == 2
    assert check_oracle_agreement(ctx).consistent
    assert check_local_tau_tilting(ctx).consistent
    assert ctx.sweep[0].name == "A"


def test_counts_suite_over_a2():
    report = run_suite("counts", _corpus("A2"), Settings())
    assert report.exit_code() == 0
    summary = report.enumerations[0]
    assert (summary.indecomposables, summary.tau_tilting, summary.support_tau_tilting) == (3, 2, 5)
    assert summary.complete
    assert {v.theorem for v in report.verdicts} >= {"ideal-counts", "quotient-rigidity", "trace-ideal", "oracle-agreement"}


def test_reduction_suite_over_a2():
    report = run_suite("reduction", _corpus("A2"), Settings())
    assert report.exit_code() == 0
    assert report.classifications
    assert not report.inconsistent


def test_dell_suite_over_a2():
    report = run_suite("dell", _corpus("A2"), Settings())
    assert report.exit_code() == 0
    assert len(report.dell) == 3
    assert report.global_dell[0].bound == 1
    assert report.global_dell[0].scope == "complete finite-type pool"


def test_unknown_suite():
    with pytest.raises(ValueError, match="Unknown suite"):
        run_suite("everything", _corpus("A2"), Settings())


def test_report_records_corpus_and_seed():
    settings = Settings()
    settings.suite.seed = 7
    report = run_suite("counts", _corpus("LOC2"), settings)
    assert report.corpus == ["TruncatedLocal(2)"]
    assert report.seed == 7
    assert report.config["suite"]["seed"] == 7
    assert '"schema": 1' in report.to_json()


@pytest.mark.slow
@pytest.mark.parametrize("suite", SUITES)
def test_suites_are_consistent_on_small_corpus(suite):
    report = run_suite(suite, _corpus("A2", "A3Z", "LOC2"), Settings())
    assert not report.inconsistent, [v.model_dump() for v in report.inconsistent]
    assert report.exit_code() in (0, 3)


@pytest.mark.slow
def test_all_suites_over_nakayama_and_linear():
    report = run_suite("all", _corpus("N32", "LinearA(3)"), Settings())
    assert not report.inconsistent
    assert not report.candidates


def test_suite_aliases():
    assert resolve_suite("thm1") == "reduction"
    assert resolve_suite("thm2") == "criteria"
    assert resolve_suite("dell") == "dell"
    assert set(SUITES) < set(SUITE_CHOICES)
    report = run_suite("thm1", _corpus("A2"), Settings())
    assert report.suite == "reduction"
    assert report.exit_code() == 0
    assert {v.theorem for v in report.verdicts} == {"tau-tilting-reduction", "classical-criteria", "support-routes"}


def test_report_json_is_reproducible_in_field_order():
    first = run_suite("counts", _corpus("A2"), Settings()).to_json()
    second = run_suite("counts", _corpus("A2"), Settings()).to_json()
    assert first == second
    keys = list(json.loads(first))
    assert keys[:5] == ["schema", "tool", "version", "command", "suite"]
    assert "timestamp" not in first
