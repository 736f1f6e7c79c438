"""Rank-deficiency counters for matrices with exactly three 1s per row.

For each row, its 3-weight is the multiset of column sums at the row's
three support columns.  Three counters certify a rank bound:

* T  - all-zero columns (contribute nothing to the rank),
* U  - rows with 3-weight {1, 1, 1} (three private columns, only one of
       which can contribute),
* V  - rows with 3-weight {1, 1, a}, a >= 2 (two private columns, of
       which two contribute).

Together: rank(A) <= min(L, n - T - 2U - V).  Whenever T + 2U + V >
n - L the matrix cannot have full row rank.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from . import gf2
from .gf2 import BitMatrix


class UnsupportedWidthError(ValueError):
    """A row does not have exactly three 1-bits."""


@dataclass(frozen=True)
class WitnessCounts:
    """The (T, U, V) counters and the rank bound they certify.

    ``rank_bound`` stores min(rows, cols - t - 2u - v) without clamping;
    on adversarial tiny inputs the raw value can be negative, and
    keeping it raw is what makes the soundness inequality exactly the
    certified one.  Use ``rank_bound_clamped`` for display.
    """

    t: int
    u: int
    v: int
    rows: int
    cols: int
    rank_bound: int

    @property
    def rank_bound_clamped(self) -> int:
        return max(0, self.rank_bound)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(asdict(self), indent=indent)


def _supports_3(m: BitMatrix) -> np.ndarray:
    counts = m.row_popcounts()
    bad = np.nonzero(counts != 3)[0]
    if bad.size:
        raise UnsupportedWidthError(
            f"row {int(bad[0])} has {int(counts[bad[0]])} ones, counters need exactly 3"
        )
    if m.rows == 0:
        return np.zeros((0, 3), dtype=np.int64)
    # nonzero walks rows in order, three hits per row
    return np.nonzero(m.to_dense())[1].reshape(m.rows, 3)


def three_weight(m: BitMatrix, row: int) -> tuple[int, int, int]:
    """Multiset (as a sorted tuple) of the column sums at one row's support."""
    if not 0 <= row < m.rows:
        raise IndexError(f"row {row} out of range [0, {m.rows})")
    support = m.row_support(row)
    if support.size != 3:
        raise UnsupportedWidthError(f"row {row} has {support.size} ones, need exactly 3")
    sums = gf2.column_sums(m)
    a, b, c = sorted(int(sums[j]) for j in support)
    return (a, b, c)


def count_tuv(m: BitMatrix) -> WitnessCounts:
    """Single-pass (T, U, V) count and the certified rank bound."""
    supports = _supports_3(m)
    sums = gf2.column_sums(m)
    t = int((sums == 0).sum())
    if m.rows:
        weights = np.sort(sums[supports], axis=1)
        ones2 = (weights[:, 0] == 1) & (weights[:, 1] == 1)
        u = int((ones2 & (weights[:, 2] == 1)).sum())
        v = int((ones2 & (weights[:, 2] >= 2)).sum())
    else:
        u = v = 0
    raw = m.cols - t - 2 * u - v
    return WitnessCounts(
        t=t, u=u, v=v, rows=m.rows, cols=m.cols, rank_bound=min(m.rows, raw)
    )
