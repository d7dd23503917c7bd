"""Exact binomial-coefficient bounds on total Betti numbers.

For a pure diagram of a length-n degree sequence d with d_0 = 0 and
d_n <= n + r, every total Betti number satisfies

    C(n, i) * n**-r  <=  beta_i  <=  C(n, i) * n**r,

and more generally, for a module with invariants (codim, pdim, reg, beta_0),

    beta_0 * C(codim, i) * codim**-reg  <=  beta_i
                                        <=  beta_0 * C(pdim, i) * pdim**reg.

Specializations cover Veronese embeddings of projective space (codim = pdim
= C(n+d, n) - n - 1, reg <= n) and an arbitrary embedded variety in terms of
dim |L|, dim X and the regularity.  Everything here is exact rational
arithmetic; binomials whose decimal size would exceed a configurable budget
are refused with ``TooLarge`` so callers can switch to the log-space
estimators in :mod:`bettibounds.estimation`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .errors import DomainError, TooLarge

#: Default budget for exact binomials, in decimal digits.
DEFAULT_DIGIT_BUDGET = 10**6


@dataclass(frozen=True)
class BoundPair:
    """An exact lower/upper bound pair, lower <= upper."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise DomainError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    def __iter__(self):
        return iter((self.lower, self.upper))

    def contains(self, value) -> bool:
        return self.lower <= Fraction(value) <= self.upper


@dataclass(frozen=True)
class VeroneseParams:
    """Parameters of the degree-d Veronese embedding of n-space.

    codim = C(n+d, n) - n - 1 is the codimension of the image.
    """

    n: int
    d: int
    codim: int


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); 0 when k < 0 or k > n.  Requires n >= 0."""
    if n < 0:
        raise DomainError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def ndigits(x: int) -> int:
    """Number of decimal digits of a nonnegative integer (1 for 0)."""
    if x < 0:
        raise DomainError("ndigits expects a nonnegative integer")
    if x == 0:
        return 1
    # Decimal conversion is exact and immune to int->str length limits.
    return Decimal(x).adjusted() + 1


def ensure_binomial_budget(n: int, k: int, digit_budget: int) -> None:
    """Raise TooLarge when C(n, k) has more than digit_budget decimal digits.

    Fast float estimates decide clear-cut cases; anything within their
    uncertainty band is settled by exact computation, so the decision is
    always exact.
    """
    if n < 0 or k < 0 or k > n:
        return
    k = min(k, n - k)
    if k == 0:
        return
    if k > 4 * digit_budget + 4:
        raise TooLarge(n, k, digit_budget)  # C(n, k) >= 2**k already too big
    ln10 = math.log(10)
    if n <= 10**14:
        # log-gamma difference is accurate to well under a digit here
        estimate = (
            math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
        ) / ln10
        lower_est = upper_est = estimate
        margin = 16.0
    else:
        # beyond float range for lgamma differences: sound coarse bounds
        # (n/k)**k <= C(n, k) <= n**k / k!   (math.log10 accepts big ints)
        lower_est = k * (math.log10(n) - math.log10(k))
        upper_est = k * math.log10(n) - math.lgamma(k + 1) / ln10 + 1
        margin = 2.0
    if lower_est > digit_budget + margin:
        raise TooLarge(n, k, digit_budget)
    if upper_est <= digit_budget - margin:
        return
    if ndigits(math.comb(n, k)) > digit_budget:
        raise TooLarge(n, k, digit_budget)


def _guarded_binomial(n: int, k: int, digit_budget: int) -> int:
    """Exact C(n, k), refused with TooLarge above the digit budget."""
    if k < 0 or k > n:
        return 0
    ensure_binomial_budget(n, k, digit_budget)
    return math.comb(n, k)


def pure_bounds(n: int, r: int, i: int) -> BoundPair:
    """Bounds C(n,i)*n**-r <= beta_i <= C(n,i)*n**r for pure diagrams.

    Valid for every length-n degree sequence starting at 0 with last entry
    at most n + r.  Exact rationals; i above n yields (0, 0).
    """
    if n < 1:
        raise DomainError(f"sequence length must be at least 1, got {n}")
    if r < 0:
        raise DomainError(f"row slack must be nonnegative, got {r}")
    if i < 0:
        raise DomainError(f"column index must be nonnegative, got {i}")
    if i > n:
        return BoundPair(Fraction(0), Fraction(0))
    c = Fraction(binomial(n, i))
    spread = Fraction(n) ** r
    return BoundPair(c / spread, c * spread)


def extremal_sequences(
    n: int, r: int, i: int, a: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The minimizing and maximizing degree sequences for column i.

    Among length-n sequences with d_0 = 0, d_n <= n + r and d_i = i + a,
    beta_i is minimized by

        d_min = (0, 1, ..., i-1, i+a, i+r+1, i+r+2, ..., n+r)

    and maximized by

        d_max = (0, a+1, a+2, ..., n+a).

    Returns (d_min, d_max).
    """
    if n < 1:
        raise DomainError(f"sequence length must be at least 1, got {n}")
    if not 0 <= a <= r:
        raise DomainError(f"offset a must lie in [0, {r}], got {a}")
    if not 1 <= i <= n:
        raise DomainError(f"column index must lie in [1, {n}], got {i}")
    d_max = tuple([0] + [a + k for k in range(1, n + 1)])
    d_min = tuple(list(range(i)) + [i + a] + list(range(i + r + 1, n + r + 1)))
    return d_min, d_max


def algebraic_bounds(codim: int, pdim: int, reg: int, beta0, i: int) -> BoundPair:
    """Bounds on beta_i for a module generated in a single degree.

    lower = beta0 * C(codim, i) * codim**-reg
    upper = beta0 * C(pdim, i) * pdim**reg

    Degenerate conventions: codim = 0 gives lower beta0 for i = 0 (a free
    module is its own resolution) and 0 for i > 0; pdim = 0 reads
    pdim**reg as 1.  Indices above pdim yield (0, 0).
    """
    if codim < 0:
        raise DomainError(f"codim must be nonnegative, got {codim}")
    if pdim < codim:
        raise DomainError(f"pdim ({pdim}) must be at least codim ({codim})")
    if reg < 0:
        raise DomainError(f"regularity must be nonnegative, got {reg}")
    beta0 = Fraction(beta0)
    if beta0 <= 0:
        raise DomainError(f"beta0 must be positive, got {beta0}")
    if i < 0:
        raise DomainError(f"column index must be nonnegative, got {i}")

    if codim == 0:
        lower = beta0 if i == 0 else Fraction(0)
    else:
        lower = beta0 * binomial(codim, i) / Fraction(codim) ** reg

    if i > pdim:
        upper = Fraction(0)
    elif pdim == 0:
        upper = beta0  # C(0, 0) with 0**reg read as 1
    else:
        upper = beta0 * binomial(pdim, i) * Fraction(pdim) ** reg
    return BoundPair(lower, upper)


def veronese_codim(n: int, d: int) -> VeroneseParams:
    """Codimension C(n+d, n) - n - 1 of the degree-d Veronese of n-space."""
    if n < 1 or d < 1:
        raise DomainError(f"veronese_codim requires n, d >= 1, got ({n}, {d})")
    return VeroneseParams(n=n, d=d, codim=math.comb(n + d, n) - n - 1)


def veronese_bounds(
    n: int, d: int, i: int, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> BoundPair:
    """Exact bounds C(N,i)*N**-n <= beta_i <= C(N,i)*N**n for the Veronese.

    N is the codimension from :func:`veronese_codim`; the regularity of the
    coordinate ring is at most n, which fixes the error factor N**(+-n).
    Raises TooLarge when C(N, i) would exceed the digit budget and
    DomainError when i lies outside [0, N].
    """
    params = veronese_codim(n, d)
    big_n = params.codim
    if not 0 <= i <= big_n:
        raise DomainError(f"column index must lie in [0, {big_n}], got {i}")
    if big_n == 0:
        # Degenerate embedding (n = d = 1): the free-module conventions apply.
        return algebraic_bounds(0, 0, n, 1, i)
    c = Fraction(_guarded_binomial(big_n, i, digit_budget))
    spread = Fraction(big_n) ** n
    return BoundPair(c / spread, c * spread)


def variety_bounds(
    dim_l: int, dim_x: int, reg: int, i: int, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> BoundPair:
    """Bounds for a variety X embedded by a complete linear system L.

    lower = C(dim_l - dim_x, i) * dim_l**-reg
    upper = C(dim_l, i) * dim_l**reg

    dim_l is the projective dimension of the system, dim_x the dimension of
    the variety and reg the regularity of its coordinate ring.  Raises
    TooLarge when either binomial would exceed the digit budget.
    """
    if dim_l < 1:
        raise DomainError(f"dim_l must be positive, got {dim_l}")
    if not 0 <= dim_x <= dim_l:
        raise DomainError(f"dim_x must lie in [0, {dim_l}], got {dim_x}")
    if reg < 0:
        raise DomainError(f"regularity must be nonnegative, got {reg}")
    if i < 0:
        raise DomainError(f"column index must be nonnegative, got {i}")
    spread = Fraction(dim_l) ** reg
    lower = Fraction(_guarded_binomial(dim_l - dim_x, i, digit_budget)) / spread
    upper = Fraction(_guarded_binomial(dim_l, i, digit_budget)) * spread
    return BoundPair(lower, upper)


def hypersurface_dim_l(m: int, delta: int, e: int) -> int:
    """dim |O_X(e)| for a degree-delta hypersurface X inside m-space.

    Equals C(e+m, m) - C(e-delta+m, m) - 1, the second term read as 0 when
    e < delta.  Counts a basis of degree-e forms modulo the hypersurface
    equation, minus one for projectivization.
    """
    if m < 1 or delta < 1 or e < 1:
        raise DomainError(f"hypersurface_dim_l requires m, delta, e >= 1, got ({m}, {delta}, {e})")
    total = math.comb(e + m, m)
    removed = math.comb(e - delta + m, m) if e >= delta else 0
    result = total - removed - 1
    if result < 0:
        raise DomainError(
            f"dim |L| would be negative ({result}); the system is not very ample"
        )
    return result


def check_rising_factorial_bound(n: int, i: int, a: int) -> bool:
    """Exact check of ((n+a)...(n+1)/a!) * i/(i+a) <= n**a.

    Holds for all n >= 1, 1 <= i <= n, a >= 0; it is the inequality behind
    the upper bound of :func:`pure_bounds`.
    """
    if n < 1 or not 1 <= i <= n or a < 0:
        raise DomainError(f"need n >= 1, 1 <= i <= n, a >= 0; got ({n}, {i}, {a})")
    lhs = Fraction(1)
    for k in range(1, a + 1):
        lhs *= Fraction(n + k, k)
    lhs *= Fraction(i, i + a)
    return lhs <= Fraction(n) ** a


def check_descending_factorial_bound(a: int, b: int) -> bool:
    """Exact check of (a+b)...(a+1)/b! <= (a+1)**b for a, b >= 0.

    The companion inequality behind the lower bound of :func:`pure_bounds`.
    """
    if a < 0 or b < 0:
        raise DomainError(f"need a, b >= 0; got ({a}, {b})")
    lhs = Fraction(1)
    for k in range(1, b + 1):
        lhs *= Fraction(a + k, k)
    return lhs <= Fraction(a + 1) ** b
