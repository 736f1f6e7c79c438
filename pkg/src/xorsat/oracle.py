"""Exhaustive brute-force references at tiny scale.

Ground truth for the rest of the library: everything here enumerates
its whole sample space and works in exact integer/rational arithmetic,
no floating point and no linear algebra shared with the fast paths.
Enumeration budgets are explicit preconditions so an over-budget call
fails deliberately rather than timing out.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .gf2 import BitMatrix

SAT_ENUM_BUDGET = 10**7      # ordered clause sequences, (2 C(n,k))^L
MATRIX_ENUM_BUDGET = 10**6   # support matrices, C(n,k)^L
RANK_ENUM_MAX_ROWS = 20      # 2^L row combinations
SUBSET_ENUM_BUDGET = 10**6   # k-subsets, C(n,k)


class BudgetExceededError(ValueError):
    """The requested enumeration exceeds the module's explicit budget."""


@dataclass(frozen=True)
class ExactProbability:
    """A probability as an unreduced exact fraction.

    ``denominator`` keeps the raw sample-space size (for the SAT
    probability: (2 C(n,k))^L); ``value`` reduces.
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if not 0 <= self.numerator <= self.denominator:
            raise ValueError("probability numerator out of [0, denominator]")

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def _check_model(n: int, L: int, k: int) -> None:
    if k < 3 or k > n:
        raise ValueError(f"need 3 <= k <= n, got k={k}, n={n}")
    if L < 0:
        raise ValueError(f"need L >= 0, got {L}")


def _support_masks(n: int, k: int) -> list[int]:
    return [sum(1 << c for c in s) for s in itertools.combinations(range(n), k)]


def _parity_table(n: int, support_mask: int) -> int:
    """Bit a is set iff assignment a has odd parity on the support."""
    table = 0
    for a in range(1 << n):
        if (a & support_mask).bit_count() & 1:
            table |= 1 << a
    return table


def exact_sat_probability(n: int, L: int, k: int) -> ExactProbability:
    """P(SAT) by enumerating every ordered clause sequence.

    Each sequence is tested by truth table: the set of satisfying
    assignments is intersected clause by clause (with dead branches
    pruned, which cannot change the count).  Budget:
    (2 C(n,k))^L <= 10^7 and a 2^n-bit truth table per clause.
    """
    _check_model(n, L, k)
    n_clauses = 2 * math.comb(n, k)
    if n_clauses**L > SAT_ENUM_BUDGET:
        raise BudgetExceededError(f"(2 C(n,k))^L = {n_clauses**L} exceeds {SAT_ENUM_BUDGET}")
    if n > 20:
        raise BudgetExceededError(f"truth table over 2^{n} assignments is over budget")
    full = (1 << (1 << n)) - 1
    clause_masks = []
    for smask in _support_masks(n, k):
        odd = _parity_table(n, smask)
        clause_masks.append(odd ^ full)  # parity bit 0: even-parity assignments
        clause_masks.append(odd)         # parity bit 1
    def count(depth: int, alive: int) -> int:
        if alive == 0:
            return 0
        if depth == L:
            return 1
        return sum(count(depth + 1, alive & cmask) for cmask in clause_masks)
    return ExactProbability(numerator=count(0, full), denominator=n_clauses**L)


def _rows_as_ints(m: BitMatrix) -> list[int]:
    dense = m.to_dense()
    return [int(sum(1 << j for j in range(m.cols) if dense[i, j])) for i in range(m.rows)]


def _span_size(rows: Iterable[int]) -> int:
    """Size of the GF(2) row space, built by incremental closure."""
    span = {0}
    for r in rows:
        if r not in span:
            span |= {s ^ r for s in span}
    return len(span)


def rank_bruteforce(m: BitMatrix) -> int:
    """log2 of the row-space size, by enumerating all 2^L row combinations.

    Walks the subsets in Gray-code order so each step is one XOR.
    Budget: L <= 20.
    """
    if m.rows > RANK_ENUM_MAX_ROWS:
        raise BudgetExceededError(f"L = {m.rows} exceeds 2^L enumeration budget")
    rows = _rows_as_ints(m)
    seen = {0}
    acc = 0
    prev_gray = 0
    for i in range(1, 1 << m.rows):
        gray = i ^ (i >> 1)
        flipped = (gray ^ prev_gray).bit_length() - 1
        acc ^= rows[flipped]
        seen.add(acc)
        prev_gray = gray
    size = len(seen)
    assert size & (size - 1) == 0, "row-space size must be a power of two"
    return size.bit_length() - 1


def _enumerate_support_rows(n: int, L: int, k: int):
    """All support matrices in row-as-int form; checks the matrix budget."""
    _check_model(n, L, k)
    n_supports = math.comb(n, k)
    if n_supports**L > MATRIX_ENUM_BUDGET:
        raise BudgetExceededError(f"C(n,k)^L = {n_supports**L} exceeds {MATRIX_ENUM_BUDGET}")
    masks = _support_masks(n, k)
    return itertools.product(masks, repeat=L), n_supports**L


def exact_expected_y(n: int, L: int, k: int) -> Fraction:
    """E(Y) = average of 2^(L - rank) over all support matrices, exact."""
    matrices, total = _enumerate_support_rows(n, L, k)
    acc = 0
    for rows in matrices:
        acc += (1 << L) // _span_size(rows)
    return Fraction(acc, total)


def rank_distribution(n: int, L: int, k: int) -> dict[int, Fraction]:
    """P(rank = r) over all support matrices, via gf2 elimination."""
    from . import gf2  # local import keeps the brute-force core standalone

    _check_model(n, L, k)
    n_supports = math.comb(n, k)
    if n_supports**L > MATRIX_ENUM_BUDGET:
        raise BudgetExceededError(f"C(n,k)^L = {n_supports**L} exceeds {MATRIX_ENUM_BUDGET}")
    supports = list(itertools.combinations(range(n), k))
    counts: dict[int, int] = {}
    for chosen in itertools.product(supports, repeat=L):
        r = gf2.rank(BitMatrix.from_row_supports(n, list(chosen)))
        counts[r] = counts.get(r, 0) + 1
    total = n_supports**L
    return {r: Fraction(c, total) for r, c in sorted(counts.items())}


def sat_probability_via_rank(n: int, L: int, k: int) -> Fraction:
    """sum_r 2^(r - L) P(rank = r), the rank-side of the SAT identity."""
    dist = rank_distribution(n, L, k)
    return sum((Fraction(2**r, 2**L) * p for r, p in dist.items()), Fraction(0))


def expected_inverse_y(n: int, L: int, k: int) -> Fraction:
    """E(1/Y) with Y counted directly: vectors u in {0,1}^L with u^T A = 0."""
    matrices, total = _enumerate_support_rows(n, L, k)
    acc = Fraction(0)
    for rows in matrices:
        y = 0
        for u in range(1 << L):
            combo = 0
            for i in range(L):
                if (u >> i) & 1:
                    combo ^= rows[i]
            if combo == 0:
                y += 1
        acc += Fraction(1, y)
    return acc / total


def omega_bruteforce(n: int, m: int, k: int) -> int:
    """(# k-subsets meeting {1..m} evenly) - (# meeting it oddly).

    k > n is legal and gives 0 (no k-subsets to count).
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if math.comb(n, k) > SUBSET_ENUM_BUDGET:
        raise BudgetExceededError(f"C(n,k) = {math.comb(n, k)} exceeds {SUBSET_ENUM_BUDGET}")
    marked = set(range(m))
    balance = 0
    for subset in itertools.combinations(range(n), k):
        overlap = sum(1 for v in subset if v in marked)
        balance += 1 if overlap % 2 == 0 else -1
    return balance
