"""Congruent-number classification by ternary-form representation counts.

For odd squarefree n the two counts are over 2x^2 + y^2 + 32z^2 = n and
2x^2 + y^2 + 8z^2 = n; for even n the forms 4x^2 + y^2 + 32z^2 and
4x^2 + y^2 + 8z^2 are evaluated at n/2.  A congruent n forces
2*c32 = c8 unconditionally, so an inequality certifies non-congruence; the
converse direction holds only under BSD, and the labels say so.

Two independent paths: theta_counts enumerates the lattice box per n;
TunnellTable builds coefficient arrays for a whole range at once by convolving
the three one-variable theta series (exact int64 throughout).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .arith import factor_squarefree


class Classification(enum.Enum):
    NON_CONGRUENT_UNCONDITIONAL = "non_congruent_unconditional"
    CONGRUENT_UNDER_BSD = "congruent_under_bsd"


@dataclass(frozen=True)
class ThetaCounts:
    n: int
    c32: int
    c8: int
    parity_form: str  # "odd" or "even"

    def congruent_consistent(self) -> bool:
        return 2 * self.c32 == self.c8


def _count_form(a: int, c: int, target: int) -> int:
    """#{(x, y, z) in Z^3 : a x^2 + y^2 + c z^2 = target} by box enumeration."""
    count = 0
    for x in range(isqrt(target // a) + 1):
        wx = 1 if x == 0 else 2
        rest_x = target - a * x * x
        for z in range(isqrt(rest_x // c) + 1):
            wz = 1 if z == 0 else 2
            rest = rest_x - c * z * z
            y = isqrt(rest)
            if y * y == rest:
                count += wx * wz * (1 if y == 0 else 2)
    return count


def theta_counts(n: int) -> ThetaCounts:
    """Exhaustive representation counts for one squarefree n >= 1."""
    factor_squarefree(n)  # raises NotSquarefree otherwise
    if n % 2 == 1:
        return ThetaCounts(n=n, c32=_count_form(2, 32, n), c8=_count_form(2, 8, n), parity_form="odd")
    half = n // 2
    return ThetaCounts(n=n, c32=_count_form(4, 32, half), c8=_count_form(4, 8, half), parity_form="even")


def classify(n: int) -> Classification:
    counts = theta_counts(n)
    if counts.congruent_consistent():
        return Classification.CONGRUENT_UNDER_BSD
    return Classification.NON_CONGRUENT_UNCONDITIONAL


def _theta_weights(coeff: int, limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Indices coeff*k^2 <= limit and their theta weights (1 at k=0, else 2)."""
    ks = np.arange(isqrt(limit // coeff) + 1, dtype=np.int64)
    idx = coeff * ks * ks
    w = np.full(ks.size, 2, dtype=np.int64)
    if w.size:
        w[0] = 1
    return idx, w


def _convolve_three(a_coeff: int, c_coeff: int, limit: int) -> np.ndarray:
    """Coefficient array of #{a x^2 + y^2 + c z^2 = m} for m = 0..limit."""
    out = np.zeros(limit + 1, dtype=np.int64)
    x_idx, x_w = _theta_weights(a_coeff, limit)
    y_idx, y_w = _theta_weights(1, limit)
    ab = np.zeros(limit + 1, dtype=np.int64)
    for xi, xw in zip(x_idx, x_w):
        room = limit - xi
        cut = np.searchsorted(y_idx, room, side="right")
        # indices xi + y^2 are distinct within one x, so fancy += is safe
        ab[xi + y_idx[:cut]] += xw * y_w[:cut]
    z_idx, z_w = _theta_weights(c_coeff, limit)
    for zi, zw in zip(z_idx, z_w):
        out[zi:] += zw * ab[: limit + 1 - zi]
    return out


class TunnellTable:
    """Bulk representation counts for every n up to a limit.

    Built once in O(limit^1.5 / limit) vectorized passes; queries are O(1).
    """

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be positive")
        self.limit = limit
        self._odd32 = _convolve_three(2, 32, limit)
        self._odd8 = _convolve_three(2, 8, limit)
        half = limit // 2
        self._even32 = _convolve_three(4, 32, half)
        self._even8 = _convolve_three(4, 8, half)

    def counts(self, n: int) -> ThetaCounts:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n = {n} outside table range 1..{self.limit}")
        if n % 2 == 1:
            return ThetaCounts(n=n, c32=int(self._odd32[n]), c8=int(self._odd8[n]), parity_form="odd")
        half = n // 2
        return ThetaCounts(n=n, c32=int(self._even32[half]), c8=int(self._even8[half]), parity_form="even")

    def classify(self, n: int) -> Classification:
        if self.counts(n).congruent_consistent():
            return Classification.CONGRUENT_UNDER_BSD
        return Classification.NON_CONGRUENT_UNCONDITIONAL
