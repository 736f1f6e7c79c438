"""The random k-XOR-SAT model.

A clause constrains the XOR of k distinct variables to a parity bit; a
formula is an ordered list of L clauses over n variables, sampled
uniformly, independently and with replacement from the 2*C(n, k)
possible clauses.  Duplicates are kept.

Randomness contract: sampling takes a numpy ``Generator`` (PCG64 in all
shipped call sites).  Each clause consumes exactly k ``integers(i, n)``
draws (partial Fisher-Yates over [0, n), i = 0..k-1) followed by one
``integers(0, 2)`` draw for the parity, so any consumer that replays the
same stream reproduces the same formula bit for bit.

Variable indices are 1-based in Clause and in the text format, 0-based
in the packed matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np

from . import gf2
from .gf2 import BitMatrix


class ModelDomainError(ValueError):
    """Parameters outside the clause model's domain (k < 3, k > n, ...)."""


class FormulaParseError(ValueError):
    """Malformed formula text."""


@dataclass(frozen=True)
class Clause:
    """x_{v1} XOR ... XOR x_{vk} = parity, with strictly increasing 1-based vars."""

    vars: tuple[int, ...]
    parity: int

    def __post_init__(self):
        if len(self.vars) == 0:
            raise ValueError("clause needs at least one variable")
        if any(b <= a for a, b in zip(self.vars, self.vars[1:])):
            raise ValueError(f"clause variables must be strictly increasing: {self.vars}")
        if self.vars[0] < 1:
            raise ValueError("variable indices are 1-based")
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity}")

    @property
    def width(self) -> int:
        return len(self.vars)


@dataclass(frozen=True)
class Formula:
    """Ordered list of width-k clauses over variables x_1 .. x_n."""

    n: int
    k: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        for c in self.clauses:
            if c.width != self.k:
                raise ValueError(f"clause width {c.width} != k={self.k}")
            if c.vars[-1] > self.n:
                raise ValueError(f"variable {c.vars[-1]} out of range [1, {self.n}]")

    @property
    def L(self) -> int:
        return len(self.clauses)


def sample_formula(n: int, L: int, k: int, rng: np.random.Generator) -> Formula:
    """Draw L i.i.d. uniform clauses: a uniform k-subset plus a fair parity bit.

    Raises ModelDomainError unless 3 <= k <= n and L >= 0.
    """
    if k < 3 or k > n:
        raise ModelDomainError(f"clause width must satisfy 3 <= k <= n, got k={k}, n={n}")
    if L < 0:
        raise ModelDomainError(f"clause count must be >= 0, got {L}")
    perm = list(range(n))
    clauses = []
    for _ in range(L):
        # partial Fisher-Yates: after k swaps, perm[:k] is a uniform
        # k-subset; undoing the swaps restores the identity in O(k)
        js = []
        for i in range(k):
            j = int(rng.integers(i, n))
            js.append(j)
            perm[i], perm[j] = perm[j], perm[i]
        support = sorted(perm[:k])
        parity = int(rng.integers(0, 2))
        for i in range(k - 1, -1, -1):
            j = js[i]
            perm[i], perm[j] = perm[j], perm[i]
        clauses.append(Clause(tuple(v + 1 for v in support), parity))
    return Formula(n=n, k=k, clauses=tuple(clauses))


def to_system(f: Formula) -> tuple[BitMatrix, np.ndarray]:
    """Coefficient matrix and right-hand side of the formula's linear system.

    Row i has 1-bits exactly at the (0-based) variables of clause i and
    rhs[i] is its parity.  Lossless inverse: ``formula_from_system``.
    """
    supports = [[v - 1 for v in c.vars] for c in f.clauses]
    matrix = BitMatrix.from_row_supports(f.n, supports)
    rhs = np.fromiter((c.parity for c in f.clauses), dtype=np.uint8, count=f.L)
    return matrix, rhs


def formula_from_system(matrix: BitMatrix, rhs) -> Formula:
    """Inverse of ``to_system``; every row must have the same popcount k."""
    widths = set(matrix.row_popcounts().tolist())
    if len(widths) > 1:
        raise ModelDomainError(f"rows have mixed widths {sorted(widths)}")
    k = widths.pop() if widths else 3
    b = np.asarray(rhs, dtype=np.uint8)
    if b.shape != (matrix.rows,):
        raise ValueError(f"rhs has shape {b.shape}, expected ({matrix.rows},)")
    clauses = tuple(
        Clause(tuple(int(v) + 1 for v in matrix.row_support(i)), int(b[i]))
        for i in range(matrix.rows)
    )
    return Formula(n=matrix.cols, k=k, clauses=clauses)


def evaluate(f: Formula, assignment) -> bool:
    """True iff every clause's parity check holds under the assignment."""
    a = np.asarray(assignment, dtype=np.uint8)
    if a.shape != (f.n,):
        raise ValueError(f"assignment has shape {a.shape}, expected ({f.n},)")
    for c in f.clauses:
        acc = 0
        for v in c.vars:
            acc ^= int(a[v - 1]) & 1
        if acc != c.parity:
            return False
    return True


def is_satisfiable(f: Formula) -> bool:
    """True iff the formula's linear system is consistent."""
    matrix, rhs = to_system(f)
    return gf2.solve(matrix, rhs).consistent


# -- text format ------------------------------------------------------
#
#   p xor <n> <L> <k>
#   <v1> <v2> ... <vk> = <0|1>     (one line per clause, 1-based indices)
#
# Lines starting with `c` are comments.


def format_formula(f: Formula) -> str:
    lines = [f"p xor {f.n} {f.L} {f.k}"]
    for c in f.clauses:
        lines.append(" ".join(str(v) for v in c.vars) + f" = {c.parity}")
    return "\n".join(lines) + "\n"


def write_formula(f: Formula, fp: TextIO) -> None:
    fp.write(format_formula(f))


def parse_formula(text: str) -> Formula:
    """Parse the text format; raises FormulaParseError on any malformed input."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("c")]
    if not lines:
        raise FormulaParseError("empty input: missing 'p xor' header")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "p" or header[1] != "xor":
        raise FormulaParseError(f"bad header {lines[0]!r}, expected 'p xor <n> <L> <k>'")
    try:
        n, L, k = (int(tok) for tok in header[2:])
    except ValueError:
        raise FormulaParseError(f"non-integer field in header {lines[0]!r}") from None
    if k < 3 or k > n:
        raise ModelDomainError(f"header requires 3 <= k <= n, got k={k}, n={n}")
    body = lines[1:]
    if len(body) != L:
        raise FormulaParseError(f"header declares {L} clauses, found {len(body)}")
    clauses = []
    for ln in body:
        tokens = ln.split()
        if len(tokens) != k + 2 or tokens[-2] != "=":
            raise FormulaParseError(f"bad clause line {ln!r}: expected {k} indices, '=', parity")
        try:
            idx = [int(tok) for tok in tokens[:k]]
            parity = int(tokens[-1])
        except ValueError:
            raise FormulaParseError(f"non-integer token in clause line {ln!r}") from None
        if parity not in (0, 1):
            raise FormulaParseError(f"parity must be 0 or 1 in line {ln!r}")
        if len(set(idx)) != k:
            raise FormulaParseError(f"repeated variable in clause line {ln!r}")
        for v in idx:
            if not 1 <= v <= n:
                raise FormulaParseError(f"variable {v} out of range [1, {n}] in line {ln!r}")
        clauses.append(Clause(tuple(sorted(idx)), parity))
    return Formula(n=n, k=k, clauses=tuple(clauses))


def read_formula(fp: TextIO) -> Formula:
    return parse_formula(fp.read())
