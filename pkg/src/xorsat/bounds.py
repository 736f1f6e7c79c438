"""Analytic threshold machinery for random k-XOR-SAT.

Everything here is a pure function of its arguments:

* ``entropy``       negative-signed entropy H(x) = x ln x + (1-x) ln(1-x)
* ``omega``         exact signed subset count sum_s (-1)^s C(m,s) C(n-m,k-s)
* ``expected_y``    E(Y) = 2^-n sum_m C(n,m) (1 + omega/C(n,k))^L, log-space
* ``f`` / ``theta`` the lower-bound objective (ln 2 + H(x)) / ln(1+(1-2x)^k)
                    and its minimum over (0, 1/2)
* ``beta_upper``    the upper-bound root in [0.5, 1] of the rank-deficiency
                    balance equation (k = 3 closed form, general k >= 4 form)

The general-k equation's u-term coefficient is printed ambiguously in
its source with mismatched parentheses, so both algebraic readings are
implemented behind the ``reading`` switch.  The shipped default is
``quadratic``: coefficient (k-j+1) - (k-j-2)(k-j).  It is the reading
whose roots reproduce the known reference bounds for k = 4, 5, 6
(0.9721, 0.9914, 0.9971) and whose left-hand side has a single sign
change on the root bracket [0.5, 1].  The ``linear`` reading, with the
difference grouped before the product, ((k-j+1) - (k-j-2)) (k-j) =
3(k-j), also lands within 1e-3 of the reference values but introduces a
spurious second root near 0.503 for k = 4, which breaks bisection on
the standard bracket.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

LN2 = math.log(2.0)

#: readings of the u-term coefficient in the general-k root equation
U_READING_QUADRATIC = "quadratic"
U_READING_LINEAR = "linear"
DEFAULT_U_READING = U_READING_QUADRATIC

_THETA_GRID = 1024
_THETA_EDGE = 1e-6
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class BracketingError(ValueError):
    """A minimization bracket or root bracket could not be established."""


def entropy(x: float) -> float:
    """x ln x + (1-x) ln(1-x), extended continuously to 0 at the endpoints."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy defined on [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return x * math.log(x) + (1.0 - x) * math.log(1.0 - x)


def omega(n: int, m: int, k: int) -> int:
    """Exact integer sum_{s=0}^{k} (-1)^s C(m, s) C(n-m, k-s).

    Equals the number of k-subsets of an n-set meeting a fixed m-set in
    an even number of points minus the number meeting it oddly.  Exact
    big-integer binomials: the alternating sum cancels catastrophically
    in floating point near m = n/2.
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if k < 3:
        raise ValueError(f"clause width must be >= 3, got {k}")
    return sum(
        (-1 if s & 1 else 1) * math.comb(m, s) * math.comb(n - m, k - s)
        for s in range(k + 1)
    )


@dataclass(frozen=True)
class ExpectationTerm:
    """One weight class of the E(Y) sum.

    ``log_term`` is ln[C(n, m) (1 + omega/C(n, k))^L], or -inf when the
    base is zero and L >= 1 (the term contributes nothing).
    """

    m: int
    omega: int
    log_term: float


def expectation_terms(n: int, L: int, k: int) -> list[ExpectationTerm]:
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    if L < 0:
        raise ValueError(f"need L >= 0, got {L}")
    cnk = math.comb(n, k)
    terms = []
    for m in range(n + 1):
        w = omega(n, m, k)
        base_num = cnk + w  # base = base_num / cnk, in [0, 2]
        log_binom = math.log(math.comb(n, m))
        if L == 0:
            lt = log_binom
        elif base_num == 0:
            lt = float("-inf")
        elif 2 * base_num >= cnk:
            # base >= 1/2: log1p on the exactly-rounded ratio
            lt = log_binom + L * math.log1p(w / cnk)
        else:
            # tiny base: difference of big-integer logs avoids the
            # cancellation log1p would hit near -1
            lt = log_binom + L * (math.log(base_num) - math.log(cnk))
        terms.append(ExpectationTerm(m=m, omega=w, log_term=lt))
    return terms


def expected_y(n: int, L: int, k: int) -> float:
    """E(Y) over uniform L x n matrices with k ones per row.

    Y is the size of the transpose kernel, so E(Y) >= 1 always.  The sum
    is accumulated with a max-shift so that n in the hundreds does not
    overflow.  L = 0 returns exactly 1.0.
    """
    if L == 0:
        if k > n:
            raise ValueError(f"need k <= n, got k={k}, n={n}")
        return 1.0
    logs = [t.log_term for t in expectation_terms(n, L, k) if t.log_term != float("-inf")]
    top = max(logs)
    total = sum(math.exp(lt - top) for lt in logs)
    return math.exp(top + math.log(total) - n * LN2)


def f(x: float, k: int) -> float:
    """Lower-bound objective (ln 2 + H(x)) / ln(1 + (1-2x)^k) on (0, 1/2)."""
    if not 0.0 < x < 0.5:
        raise ValueError(f"f defined on the open interval (0, 1/2), got {x}")
    if k < 3:
        raise ValueError(f"clause width must be >= 3, got {k}")
    return (LN2 + entropy(x)) / math.log1p((1.0 - 2.0 * x) ** k)


def theta(k: int, tol: float = 1e-9) -> tuple[float, float]:
    """Minimum of ``f`` over (0, 1/2) and its argmin, to within ``tol``.

    A 1024-point grid brackets the minimum (guarding against a bad
    bracket for a non-unimodal surprise), then golden-section search
    narrows the argmin to ``tol``.  Raises BracketingError if the grid
    minimum sits on the boundary, rather than silently returning an
    endpoint.
    """
    if k < 3:
        raise ValueError(f"clause width must be >= 3, got {k}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = _THETA_EDGE, 0.5 - _THETA_EDGE
    step = (hi - lo) / (_THETA_GRID - 1)
    xs = [lo + i * step for i in range(_THETA_GRID)]
    vals = [f(x, k) for x in xs]
    i = min(range(_THETA_GRID), key=vals.__getitem__)
    if i == 0 or i == _THETA_GRID - 1:
        raise BracketingError(f"grid minimum of f_{k} on the boundary at x={xs[i]}")
    a, b = xs[i - 1], xs[i + 1]
    # golden-section: keep the bracket (a, b) shrinking by the golden ratio
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1, k), f(x2, k)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1, k)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2, k)
    x_star = 0.5 * (a + b)
    return f(x_star, k), x_star


def beta3_lhs(c: float) -> float:
    """Left-hand side of the k=3 upper-bound equation.

    exp(-3c) + 3c exp(-6c) - c exp(-9c) - 1 + c; zero at c = 0 and at
    the meaningful root near 0.9278.
    """
    if c < 0:
        raise ValueError(f"need c >= 0, got {c}")
    return math.exp(-3 * c) + 3 * c * math.exp(-6 * c) - c * math.exp(-9 * c) - 1 + c


def _u_term(c: float, k: int, reading: str) -> float:
    total = 0.0
    for j in range(1, k - 2):  # j = 1 .. k-3; empty for k = 3
        a = k - j
        if reading == U_READING_QUADRATIC:
            coeff = (a + 1) - (a - 2) * a
        elif reading == U_READING_LINEAR:
            coeff = ((a + 1) - (a - 2)) * a
        else:
            raise ValueError(f"unknown u-term reading {reading!r}")
        total += math.comb(k, j) * math.exp(-c * k * a) * coeff
    return total


def _v_term(c: float, k: int) -> float:
    return 3 * math.comb(k, 2) * math.exp(-2 * c * k) + (-k * k + 3 * k - 1) * math.exp(-c * k * k)


def beta_lhs(c: float, k: int, reading: str = DEFAULT_U_READING) -> float:
    """Left-hand side of the general-k upper-bound equation, k >= 4."""
    if k < 4:
        raise ValueError(f"general form applies for k >= 4, got {k}")
    return math.exp(-c * k) + c * _u_term(c, k, reading) + _v_term(c, k) - 1 + c


def _bisect(fun, a: float, b: float, tol: float) -> float:
    fa, fb = fun(a), fun(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa < 0) == (fb < 0):
        raise BracketingError(f"no sign change on [{a}, {b}] (f(a)={fa:.3g}, f(b)={fb:.3g})")
    while b - a > tol:
        mid = 0.5 * (a + b)
        fm = fun(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def beta_upper(k: int, tol: float = 1e-9, reading: str = DEFAULT_U_READING) -> float:
    """Root in [0.5, 1] of the upper-bound equation for width k.

    k = 3 uses the closed k=3 left-hand side; k >= 4 the general form
    under the given u-term ``reading``.  The bracket excludes the
    trivial root at c = 0; bisection failure (no sign change) raises
    BracketingError instead of returning an endpoint.
    """
    if k < 3:
        raise ValueError(f"clause width must be >= 3, got {k}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if k == 3:
        return _bisect(beta3_lhs, 0.5, 1.0, tol)
    return _bisect(lambda c: beta_lhs(c, k, reading), 0.5, 1.0, tol)


@dataclass(frozen=True)
class BoundsReport:
    """theta_k and the upper-bound root for one clause width.

    Invariant (checked by the test suite, not enforced here): theta <=
    beta_root <= 1 for every supported k, and theta_argmin lies strictly
    inside (0, 1/2).
    """

    k: int
    theta: float
    theta_argmin: float
    beta_root: float
    tol: float
    formula_reading: str

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(asdict(self), indent=indent)


def bounds_report(k: int, tol: float = 1e-9, reading: str = DEFAULT_U_READING) -> BoundsReport:
    """theta(k) and beta_upper(k) bundled for reporting."""
    theta_val, argmin = theta(k, tol)
    root = beta_upper(k, tol, reading)
    return BoundsReport(
        k=k,
        theta=theta_val,
        theta_argmin=argmin,
        beta_root=root,
        tol=tol,
        formula_reading=reading if k >= 4 else "closed-form-k3",
    )
