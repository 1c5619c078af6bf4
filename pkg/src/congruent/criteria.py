"""Per-n verdict reports combining the class-number congruence with the rank
criteria and an independent Tunnell label.

The certificate logic is a contrapositive: when the hypothesis holds, a
congruent n must satisfy h(-n) = h(-n_q) (mod 2^(t+2)), so a failed
congruence rules congruence out.  When the congruence holds the report says "consistent" - the
criterion is necessary, not sufficient, and the exceptions prove it.  The
Tunnell label is evidence shown next to the verdict, never folded into it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .arith import NotSquarefree, is_prime
from .classgroup import class_number, fundamental_discriminant
from .redei import HypothesisN, WrongResidueShape, build_hypothesis, eight_rank_neg_n, eight_rank_neg_nq, four_rank
from .selmer import selmer_rank
from .tunnell import Classification, TunnellTable, classify


class Verdict(enum.Enum):
    NON_CONGRUENT_CERTIFICATE = "non_congruent_certificate"
    CONSISTENT_WITH_CONGRUENT = "consistent"
    HYPOTHESIS_FAILED = "hypothesis_failed"


@dataclass(frozen=True)
class CriterionReport:
    n: int
    verdict: Verdict
    reason: Optional[str] = None
    hypothesis: Optional[HypothesisN] = None
    s_n: Optional[int] = None
    r4: Optional[int] = None
    r8_n: Optional[int] = None
    r8_nq: Optional[int] = None
    h_n: Optional[int] = None
    h_nq: Optional[int] = None
    modulus: Optional[int] = None
    congruence_holds: Optional[bool] = None
    tunnell_label: Optional[Classification] = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "s_n": self.s_n,
            "r4": self.r4,
            "r8_n": self.r8_n,
            "r8_nq": self.r8_nq,
            "h_n": self.h_n,
            "h_nq": self.h_nq,
            "modulus": self.modulus,
            "congruence_holds": self.congruence_holds,
            "tunnell_label": self.tunnell_label.value if self.tunnell_label else None,
        }
        if self.hypothesis is not None:
            out["q"] = self.hypothesis.q
            out["p_list"] = list(self.hypothesis.p_list)
            out["t"] = self.hypothesis.t
            out["n_q"] = self.hypothesis.n_q
        return out


def _tunnell_label(n: int, table: Optional[TunnellTable]) -> Classification:
    if table is not None and n <= table.limit:
        return table.classify(n)
    return classify(n)


def evaluate(v: int, table: Optional[TunnellTable] = None) -> CriterionReport:
    """Full evidence bundle for one candidate n.

    A shared TunnellTable avoids re-enumerating theta counts during scans.
    """
    if v < 3:
        raise ValueError(f"need v >= 3, got {v}")
    try:
        h = build_hypothesis(v)
    except NotSquarefree as exc:
        return CriterionReport(n=v, verdict=Verdict.HYPOTHESIS_FAILED, reason=str(exc))
    except WrongResidueShape as exc:
        return CriterionReport(
            n=v,
            verdict=Verdict.HYPOTHESIS_FAILED,
            reason=str(exc),
            tunnell_label=_tunnell_label(v, table),
        )
    label = _tunnell_label(v, table)
    hn = class_number(fundamental_discriminant(v)).h
    hnq = class_number(fundamental_discriminant(h.n_q)).h
    modulus = h.modulus
    congruence = (hn - hnq) % modulus == 0
    if not h.holds():
        failed = "q is a non-residue mod some p_i" if not h.qr_condition else "rank A_n != t - 1"
        return CriterionReport(
            n=v,
            verdict=Verdict.HYPOTHESIS_FAILED,
            reason=failed,
            hypothesis=h,
            s_n=selmer_rank(h.n),
            r4=four_rank(h),
            r8_nq=eight_rank_neg_nq(h) if h.rank_condition else None,
            h_n=hn,
            h_nq=hnq,
            modulus=modulus,
            congruence_holds=congruence,
            tunnell_label=label,
        )
    verdict = Verdict.CONSISTENT_WITH_CONGRUENT if congruence else Verdict.NON_CONGRUENT_CERTIFICATE
    return CriterionReport(
        n=v,
        verdict=verdict,
        hypothesis=h,
        s_n=selmer_rank(h.n),
        r4=four_rank(h),
        r8_n=eight_rank_neg_n(h),
        r8_nq=eight_rank_neg_nq(h),
        h_n=hn,
        h_nq=hnq,
        modulus=modulus,
        congruence_holds=congruence,
        tunnell_label=label,
    )


def evaluate_prime_pair(p: int, q: int) -> CriterionReport:
    """The t = 1 case: n = pq with modulus 8, h(-pq) against h of disc -4p."""
    if not is_prime(p) or not is_prime(q):
        return CriterionReport(
            n=p * q, verdict=Verdict.HYPOTHESIS_FAILED, reason=f"{p} and {q} must both be prime"
        )
    if p % 8 != 1:
        return CriterionReport(
            n=p * q, verdict=Verdict.HYPOTHESIS_FAILED, reason=f"p = {p} is {p % 8} (mod 8), need 1"
        )
    if q % 8 != 3:
        return CriterionReport(
            n=p * q, verdict=Verdict.HYPOTHESIS_FAILED, reason=f"q = {q} is {q % 8} (mod 8), need 3"
        )
    report = evaluate(p * q)
    if report.modulus is not None and report.modulus != 8:
        raise ArithmeticError(f"t = 1 specialization produced modulus {report.modulus}")
    return report


class InvariantViolation(AssertionError):
    """A structural law the implementation must uphold failed on real data."""


def check_report_invariants(report: CriterionReport) -> None:
    """Loud cross-checks between the certificate and the independent evidence.

    A NonCongruentCertificate for a Tunnell-congruent n would falsify either
    the implementation or the criterion itself; it must not pass silently.
    """
    if report.verdict == Verdict.NON_CONGRUENT_CERTIFICATE:
        if report.tunnell_label == Classification.CONGRUENT_UNDER_BSD:
            raise InvariantViolation(
                f"n = {report.n}: certified non-congruent but Tunnell counts say congruent"
            )
    if report.verdict != Verdict.HYPOTHESIS_FAILED:
        modulus = report.modulus
        if report.h_n % (modulus // 2) or report.h_nq % (modulus // 2):
            raise InvariantViolation(f"n = {report.n}: 2^(t+1) does not divide both class numbers")
        if report.congruence_holds != (report.r8_n == report.r8_nq):
            raise InvariantViolation(f"n = {report.n}: congruence and 8-rank equality disagree")
        if (report.r8_n == 1) != (report.h_n % modulus == 0):
            raise InvariantViolation(f"n = {report.n}: r8(-n) inconsistent with v2(h(-n))")
        if (report.r8_nq == 1) != (report.h_nq % modulus == 0):
            raise InvariantViolation(f"n = {report.n}: r8(-n_q) inconsistent with v2(h(-n_q))")
