"""Bit-packed linear algebra over GF(2).

Matrices store each row as little-endian uint64 words, 64 columns per
word, so a row operation is a handful of word-wide XORs.  Elimination
vectorizes the row updates with numpy, which keeps the rank of a dense
1000 x 1000 matrix well under a second with no native extension.

Pivot selection is deterministic: the pivot for the leftmost unreduced
column is the first row (lowest index) carrying a 1 there, so echelon
output is reproducible across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

WORD_BITS = 64

_ONE = np.uint64(1)


def _n_words(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


def _tail_mask(cols: int) -> np.uint64:
    """Mask selecting the valid bits of the last word of a width-``cols`` row."""
    used = cols % WORD_BITS
    if used == 0:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return np.uint64((1 << used) - 1)


class BitMatrix:
    """Immutable L x n matrix over GF(2) with bit-packed rows.

    Invariants: bits at column positions >= ``cols`` are zero in every
    row, and the backing array is marked read-only, so values can be
    shared freely between threads.  All mutating-style operations
    (elimination, transpose) return new objects.
    """

    __slots__ = ("rows", "cols", "_words", "_echelon_cache")

    def __init__(self, words: np.ndarray, rows: int, cols: int):
        if cols < 1:
            raise ValueError("BitMatrix needs at least one column")
        if rows < 0:
            raise ValueError("row count must be >= 0")
        expected = (rows, _n_words(cols))
        words = np.array(words, dtype=np.uint64, copy=True, order="C")
        if words.shape != expected:
            raise ValueError(f"packed data has shape {words.shape}, expected {expected}")
        if rows:
            words[:, -1] &= _tail_mask(cols)
        words.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self._words = words
        self._echelon_cache: Optional[EchelonResult] = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, _n_words(cols)), dtype=np.uint64), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        """Build from an (L, n) array-like of 0/1 entries."""
        arr = np.asarray(dense, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("dense input must be 2-dimensional")
        rows, cols = arr.shape
        if cols < 1:
            raise ValueError("BitMatrix needs at least one column")
        if rows == 0:
            return cls.zeros(0, cols)
        packed = np.packbits(arr & 1, axis=1, bitorder="little")
        nbytes = _n_words(cols) * 8
        if packed.shape[1] < nbytes:
            pad = np.zeros((rows, nbytes - packed.shape[1]), dtype=np.uint8)
            packed = np.hstack([packed, pad])
        words = packed.view("<u8").astype(np.uint64)
        return cls(words, rows, cols)

    @classmethod
    def from_row_supports(cls, cols: int, supports: Sequence[Iterable[int]]) -> "BitMatrix":
        """Build from per-row lists of 0-based column indices."""
        rows = len(supports)
        words = np.zeros((rows, _n_words(cols)), dtype=np.uint64)
        for i, support in enumerate(supports):
            for c in support:
                c = int(c)
                if not 0 <= c < cols:
                    raise ValueError(f"column index {c} out of range [0, {cols})")
                words[i, c >> 6] |= _ONE << np.uint64(c & 63)
        return cls(words, rows, cols)

    # -- accessors ----------------------------------------------------

    @property
    def words(self) -> np.ndarray:
        """Read-only packed words, shape (rows, ceil(cols/64))."""
        return self._words

    def get(self, row: int, col: int) -> int:
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise IndexError("bit index out of range")
        return int((self._words[row, col >> 6] >> np.uint64(col & 63)) & _ONE)

    def row_support(self, row: int) -> np.ndarray:
        """Sorted 0-based column indices of the 1-bits of one row."""
        return np.nonzero(self.to_dense()[row])[0]

    def row_popcounts(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros(0, dtype=np.int64)
        return np.bitwise_count(self._words).sum(axis=1).astype(np.int64)

    def to_dense(self) -> np.ndarray:
        """Unpack to an (L, n) uint8 array of 0/1 entries."""
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        as_bytes = self._words.astype("<u8", copy=False).view(np.uint8)
        bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
        return bits[:, : self.cols]

    def transpose(self) -> "BitMatrix":
        if self.rows == 0:
            # a 0 x n transpose would be n x 0, which BitMatrix cannot hold
            raise ValueError("cannot transpose a matrix with zero rows")
        return BitMatrix.from_dense(self.to_dense().T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self._words, other._words)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix(rows={self.rows}, cols={self.cols})"


@dataclass(frozen=True)
class EchelonResult:
    """Reduced row echelon form of a BitMatrix.

    pivot_cols is strictly increasing with len(pivot_cols) == rank, and
    the row space of ``reduced`` equals the row space of the input.
    """

    rank: int
    pivot_cols: tuple[int, ...]
    reduced: BitMatrix


@dataclass(frozen=True)
class SolveResult:
    """Outcome of solving A x = b over GF(2).

    ``assignment`` is None exactly when the augmented system is
    inconsistent; otherwise it is one solution with all free variables
    set to 0.  ``rank`` is the rank of A (not of the augmented matrix).
    """

    assignment: Optional[np.ndarray]
    rank: int
    pivot_cols: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return self.assignment is not None


def _reduce(words: np.ndarray, rows: int, pivot_limit: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduce packed rows, pivoting over the first ``pivot_limit`` columns.

    Row operations always span the full packed width, so augmented
    columns beyond ``pivot_limit`` are carried along.  Returns the
    reduced array (RREF restricted to the pivot range) and the pivot
    column list.
    """
    R = words.copy()
    pivots: list[int] = []
    pr = 0
    for c in range(pivot_limit):
        if pr == rows:
            break
        w = c >> 6
        sh = np.uint64(c & 63)
        below = (R[pr:, w] >> sh) & _ONE
        hit = np.nonzero(below)[0]
        if hit.size == 0:
            continue
        p = pr + int(hit[0])
        if p != pr:
            R[[pr, p]] = R[[p, pr]]
        # clear column c everywhere else (above and below) in one pass
        ones = np.nonzero((R[:, w] >> sh) & _ONE)[0]
        ones = ones[ones != pr]
        if ones.size:
            R[ones] ^= R[pr]
        pivots.append(c)
        pr += 1
    return R, pivots


def echelon(m: BitMatrix) -> EchelonResult:
    """Reduced row echelon form; computed once per matrix and cached."""
    cached = m._echelon_cache
    if cached is not None:
        return cached
    reduced_words, pivots = _reduce(m.words, m.rows, m.cols)
    result = EchelonResult(
        rank=len(pivots),
        pivot_cols=tuple(pivots),
        reduced=BitMatrix(reduced_words, m.rows, m.cols),
    )
    m._echelon_cache = result
    return result


def rank(m: BitMatrix) -> int:
    """GF(2) rank; 0 <= rank <= min(rows, cols).  Empty matrices have rank 0."""
    return echelon(m).rank


def kernel_log2(m: BitMatrix) -> int:
    """log2 of the number of vectors x with A x = 0, i.e. cols - rank."""
    return m.cols - rank(m)


def cokernel_log2(m: BitMatrix) -> int:
    """log2 of the number of vectors u with u^T A = 0, i.e. rows - rank."""
    return m.rows - rank(m)


def solve(m: BitMatrix, rhs) -> SolveResult:
    """Solve A x = rhs over GF(2).

    Args:
        m: coefficient matrix, L x n.
        rhs: length-L vector of 0/1 entries.

    Returns:
        SolveResult with one solution (free variables 0) or with
        ``assignment=None`` when the system is inconsistent.  The rank
        of A is reported either way, from the same elimination pass.
    """
    b = np.asarray(rhs, dtype=np.uint64) & _ONE
    if b.shape != (m.rows,):
        raise ValueError(f"rhs has shape {b.shape}, expected ({m.rows},)")
    n = m.cols
    aug_words = _n_words(n + 1)
    words = np.zeros((m.rows, aug_words), dtype=np.uint64)
    words[:, : m.words.shape[1]] = m.words
    words[:, n >> 6] |= b << np.uint64(n & 63)

    R, pivots = _reduce(words, m.rows, n)
    r = len(pivots)
    w_rhs = n >> 6
    sh_rhs = np.uint64(n & 63)
    # rows beyond the pivot rows are zero in the A-part; a surviving rhs
    # bit there is a contradiction 0 = 1
    leftover = (R[r:, w_rhs] >> sh_rhs) & _ONE
    if leftover.any():
        return SolveResult(assignment=None, rank=r, pivot_cols=tuple(pivots))
    x = np.zeros(n, dtype=np.uint8)
    for i, c in enumerate(pivots):
        x[c] = int((R[i, w_rhs] >> sh_rhs) & _ONE)
    return SolveResult(assignment=x, rank=r, pivot_cols=tuple(pivots))


def matvec(m: BitMatrix, x) -> np.ndarray:
    """A x over GF(2): length-L vector of parities of row-masked x."""
    xv = np.asarray(x, dtype=np.uint8)
    if xv.shape != (m.cols,):
        raise ValueError(f"x has shape {xv.shape}, expected ({m.cols},)")
    packed = BitMatrix.from_dense(xv.reshape(1, -1)).words[0]
    if m.rows == 0:
        return np.zeros(0, dtype=np.uint8)
    return (np.bitwise_count(m.words & packed).sum(axis=1) & 1).astype(np.uint8)


def column_sums(m: BitMatrix) -> np.ndarray:
    """Integer number of 1-bits in each column, length cols."""
    if m.rows == 0:
        return np.zeros(m.cols, dtype=np.int64)
    return m.to_dense().sum(axis=0, dtype=np.int64)
