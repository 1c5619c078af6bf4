"""Tests for verdict assembly and the t = 1 specialization."""

import pytest

from congruent.classgroup import Discriminant, class_number
from congruent.criteria import (
    InvariantViolation,
    Verdict,
    check_report_invariants,
    evaluate_prime_pair,
    evaluate,
)
from congruent.tunnell import Classification


def test_evaluate_table1_row():
    r = evaluate(52779)
    assert r.verdict == Verdict.CONSISTENT_WITH_CONGRUENT
    assert r.h_n == 80 and r.h_nq == 48 and r.modulus == 16
    assert r.congruence_holds is True
    assert r.s_n == 2 and r.r4 == 1 and r.r8_n == 1 and r.r8_nq == 1
    assert r.tunnell_label == Classification.CONGRUENT_UNDER_BSD
    check_report_invariants(r)


def test_evaluate_table2_row():
    r = evaluate(42267)
    assert r.verdict == Verdict.NON_CONGRUENT_CERTIFICATE
    assert r.h_n == 24 and r.h_nq == 96
    assert r.congruence_holds is False
    assert r.tunnell_label == Classification.NON_CONGRUENT_UNCONDITIONAL
    check_report_invariants(r)


def test_evaluate_exception_case():
    # congruence satisfied, yet the theta counts rule congruence out:
    # the criterion is necessary, never sufficient
    r = evaluate(68547)
    assert r.verdict == Verdict.CONSISTENT_WITH_CONGRUENT
    assert r.congruence_holds is True
    assert r.tunnell_label == Classification.NON_CONGRUENT_UNCONDITIONAL
    check_report_invariants(r)


def test_evaluate_hypothesis_failures():
    r = evaluate(12)
    assert r.verdict == Verdict.HYPOTHESIS_FAILED and "12" in r.reason
    r = evaluate(15)
    assert r.verdict == Verdict.HYPOTHESIS_FAILED
    assert r.tunnell_label is not None  # label still attached for squarefree n
    r = evaluate(51)  # shape fits, q is a non-residue mod 17
    assert r.verdict == Verdict.HYPOTHESIS_FAILED
    assert "non-residue" in r.reason
    assert r.h_n is not None and r.congruence_holds is not None
    r = evaluate(21243)  # (3/73) = (3/97) = +1 but (73/97) = +1: rank A != t - 1
    assert r.verdict == Verdict.HYPOTHESIS_FAILED
    assert "rank" in r.reason
    with pytest.raises(ValueError):
        evaluate(2)


def test_report_to_dict():
    d = evaluate(52779).to_dict()
    assert d["n"] == 52779 and d["h_n"] == 80 and d["h_nq"] == 48
    assert d["q"] == 3 and d["p_list"] == [73, 241] and d["t"] == 2
    assert d["verdict"] == "consistent"
    assert d["tunnell_label"] == "congruent_under_bsd"


def test_evaluate_prime_pair_73_3():
    r = evaluate_prime_pair(73, 3)
    assert r.n == 219 and r.modulus == 8
    assert r.h_n == class_number(Discriminant(m=0, D=-219)).h
    assert r.h_nq == class_number(Discriminant(m=0, D=-4 * 73)).h
    # verdict must not contradict the independent label
    if r.verdict == Verdict.NON_CONGRUENT_CERTIFICATE:
        assert r.tunnell_label == Classification.NON_CONGRUENT_UNCONDITIONAL
    check_report_invariants(r)


def test_evaluate_prime_pair_rejections():
    r = evaluate_prime_pair(17, 3)
    assert r.verdict == Verdict.HYPOTHESIS_FAILED  # (3/17) = -1
    r = evaluate_prime_pair(5, 3)
    assert r.verdict == Verdict.HYPOTHESIS_FAILED and "(mod 8)" in r.reason
    r = evaluate_prime_pair(15, 3)
    assert r.verdict == Verdict.HYPOTHESIS_FAILED and "prime" in r.reason


def test_invariant_checker_fires_on_forged_report():
    good = evaluate(42267)
    forged = type(good)(
        **{
            **{f: getattr(good, f) for f in good.__dataclass_fields__},
            "tunnell_label": Classification.CONGRUENT_UNDER_BSD,
        }
    )
    with pytest.raises(InvariantViolation):
        check_report_invariants(forged)
