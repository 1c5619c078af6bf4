"""Hypothesis validation, the symbol matrix A_n, and 4-/8-rank criteria.

The inputs of interest are n = p_1 ... p_t * q with p_i = 1 and q = 3 (mod 8).
Two matrix constructions live here: A_n from Legendre symbols of the p_i
against each other, and the modified Redei matrix from Hilbert symbols
(p_i, -n / p_j).  They coincide exactly when q is a residue modulo every p_i,
which the test suite checks rather than assumes; the 4-rank always reads off
the Hilbert-symbol matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import FactoredSquarefree, factor_squarefree, hilbert, jacobi, legendre, quartic_symbol
from .gf2 import BitMatrix, rank_f2
from .norms import rep_2e2_f2


class WrongResidueShape(ValueError):
    """v is squarefree but its prime residues mod 8 do not fit p_i = 1, q = 3."""


class HypothesisNotMet(ValueError):
    """An operation was called on a HypothesisN whose conditions fail."""


@dataclass(frozen=True)
class HypothesisN:
    n: FactoredSquarefree
    q: int
    p_list: tuple[int, ...]
    n_q: int
    t: int
    qr_condition: bool
    A: BitMatrix
    rank_condition: bool

    def holds(self) -> bool:
        return self.qr_condition and self.rank_condition

    @property
    def n_q_factored(self) -> FactoredSquarefree:
        return FactoredSquarefree(self.n_q, self.p_list)

    @property
    def modulus(self) -> int:
        return 1 << (self.t + 2)


def _matrix_a(p_list: tuple[int, ...]) -> BitMatrix:
    t = len(p_list)
    rows = []
    for i, p in enumerate(p_list):
        row = [0] * t
        for j, pj in enumerate(p_list):
            if j != i:
                row[j] = 0 if legendre(pj, p) == 1 else 1
        row[i] = sum(row) % 2
        rows.append(row)
    return BitMatrix.from_rows(rows)


def build_hypothesis(v: int) -> HypothesisN:
    """Validate v = p_1 ... p_t * q and fill in the matrix and both conditions.

    Raises NotSquarefree or WrongResidueShape (with the failing condition)
    when v is not of that shape.
    """
    if v < 3:
        raise ValueError(f"need v >= 3, got {v}")
    n = factor_squarefree(v)
    qs = [p for p in n.primes if p % 8 == 3]
    ps = [p for p in n.primes if p % 8 == 1]
    if len(qs) != 1:
        raise WrongResidueShape(f"{v} has {len(qs)} prime factors = 3 (mod 8), need exactly 1")
    stray = [p for p in n.primes if p % 8 not in (1, 3)]
    if stray:
        raise WrongResidueShape(f"prime factors {stray} of {v} are not 1 or 3 (mod 8)")
    if not ps:
        raise WrongResidueShape(f"{v} has no prime factor = 1 (mod 8)")
    q = qs[0]
    p_list = tuple(ps)
    t = len(p_list)
    a = _matrix_a(p_list)
    return HypothesisN(
        n=n,
        q=q,
        p_list=p_list,
        n_q=v // q,
        t=t,
        qr_condition=all(legendre(q, p) == 1 for p in p_list),
        A=a,
        rank_condition=rank_f2(a) == t - 1,
    )


def redei_matrix(h: HypothesisN) -> BitMatrix:
    """t x t matrix of eps(hilbert(p_i, -n, p_j)), diagonal included."""
    rows = []
    for p_i in h.p_list:
        rows.append([0 if hilbert(p_i, -h.n.value, p_j) == 1 else 1 for p_j in h.p_list])
    return BitMatrix.from_rows(rows)


def four_rank(h: HypothesisN) -> int:
    return h.t - rank_f2(redei_matrix(h))


def eight_rank_neg_n(h: HypothesisN) -> int:
    """1 iff the quartic symbol (q / n_q)_4 is +1.  Needs both conditions."""
    if not h.holds():
        raise HypothesisNotMet(f"{h.n.value}: qr={h.qr_condition}, rank={h.rank_condition}")
    return 1 if quartic_symbol(h.q, h.n_q_factored) == 1 else 0


def eight_rank_neg_nq(h: HypothesisN) -> int:
    """1 iff (-1/e) = +1 for n_q = 2e^2 - f^2.  Needs the rank condition."""
    if not h.rank_condition:
        raise HypothesisNotMet(f"{h.n.value}: rank A != t - 1")
    e, _ = rep_2e2_f2(h.n_q_factored)
    return 1 if jacobi(-1, e) == 1 else 0
