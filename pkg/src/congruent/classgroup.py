"""Class numbers of imaginary quadratic fields by counting reduced forms.

h(D) is the number of reduced primitive binary quadratic forms (a, b, c) of
discriminant D < 0: b^2 - 4ac = D, |b| <= a <= c, gcd(a, b, c) = 1, and b >= 0
whenever |b| = a or a = c.  Counting is exact integer work; the inner sweep is
vectorized with numpy (int64 is exact throughout the supported range).

Results are memoized by discriminant: a scan revisits the same D many times.
Under CPython the dict update is atomic, so concurrent readers are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .arith import NotSquarefree, factor_squarefree


@dataclass(frozen=True)
class Discriminant:
    """Fundamental discriminant of Q(sqrt(-m)) for squarefree m."""

    m: int
    D: int


@dataclass(frozen=True)
class ClassNumberResult:
    D: Discriminant
    h: int
    v2: int


def fundamental_discriminant(m: int) -> Discriminant:
    """D = -m when -m = 1 (mod 4), else -4m.  m must be squarefree."""
    if m < 1:
        raise ValueError(f"expected positive m, got {m}")
    factor_squarefree(m)  # raises NotSquarefree otherwise
    if (-m) % 4 == 1:
        return Discriminant(m=m, D=-m)
    return Discriminant(m=m, D=-4 * m)


_memo: dict[int, int] = {}


def seed_cache(entries: dict[int, int]) -> None:
    """Preload memoized class numbers, e.g. from a scan cache file."""
    _memo.update(entries)


def cached_discriminants() -> dict[int, int]:
    """Snapshot of the memo (discriminant -> h)."""
    return dict(_memo)


def _count_reduced_forms(D: int) -> int:
    # Sweep b with b = D (mod 2), 0 <= b <= sqrt(|D|/3); for each b the reduced
    # forms are the factorizations (b^2 - D)/4 = a*c with b <= a <= c. Forms
    # with b > 0 not on the boundary (b = a or a = c, b = 0) count twice for -b.
    bmax = isqrt(-D // 3)
    bs = np.arange(D & 1, bmax + 1, 2, dtype=np.int64)
    if bs.size == 0:
        return 0
    vals = (bs * bs - D) >> 2
    amax = np.sqrt(vals.astype(np.float64)).astype(np.int64)
    amax += (amax + 1) * (amax + 1) <= vals
    amax -= amax * amax > vals
    lo = np.maximum(bs, 1)
    lengths = np.maximum(amax - lo + 1, 0)
    total = int(lengths.sum())
    if total == 0:
        return 0
    offsets = np.repeat(np.cumsum(lengths) - lengths, lengths)
    flat_a = np.arange(total, dtype=np.int64) - offsets + np.repeat(lo, lengths)
    flat_val = np.repeat(vals, lengths)
    mask = flat_val % flat_a == 0
    a_d = flat_a[mask]
    b_d = np.repeat(bs, lengths)[mask]
    c_d = flat_val[mask] // a_d
    primitive = np.gcd(np.gcd(a_d, b_d), c_d) == 1
    on_boundary = (b_d == 0) | (b_d == a_d) | (a_d == c_d)
    weights = np.where(on_boundary, 1, 2)
    return int(weights[primitive].sum())


def class_number(d: Discriminant) -> ClassNumberResult:
    """Exact h and its 2-adic valuation for a fundamental discriminant D < 0."""
    D = d.D
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"not a negative discriminant: {D}")
    h = _memo.get(D)
    if h is None:
        h = _count_reduced_forms(D)
        _memo[D] = h
    v2 = (h & -h).bit_length() - 1
    return ClassNumberResult(D=d, h=h, v2=v2)


def genus_two_rank(d: Discriminant) -> int:
    """Gauss genus theory: r_2 = (number of distinct primes dividing D) - 1."""
    primes = set(factor_squarefree(d.m).primes)
    if d.D == -4 * d.m:
        primes.add(2)
    return len(primes) - 1


__all__ = [
    "Discriminant",
    "ClassNumberResult",
    "NotSquarefree",
    "fundamental_discriminant",
    "class_number",
    "genus_two_rank",
    "seed_cache",
    "cached_discriminants",
]
