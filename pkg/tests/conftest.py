"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own code paths: binomials
come from the Pascal recurrence, logarithms from mpmath, factorials from
exact big-integer products, and bound checks from brute-force enumeration of
degree sequences.
"""

from __future__ import annotations

import itertools
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest

from bettibounds import BettiTable

# Betti table of k[x,y,z] / (x^2, xyz, yz^2, y^2*z, z^3): the standard worked
# example with a five-term chain decomposition.
MONOMIAL_QUOTIENT_ENTRIES = {
    (0, 0): 1,
    (1, 2): 1,
    (1, 3): 4,
    (2, 4): 5,
    (2, 5): 1,
    (3, 5): 1,
    (3, 6): 1,
}

MONOMIAL_QUOTIENT_TERMS = (
    (Fraction(3, 10), (0, 2, 4, 5)),
    (Fraction(1, 30), (0, 3, 4, 5)),
    (Fraction(1, 3), (0, 3, 4, 6)),
    (Fraction(1, 15), (0, 3, 5, 6)),
    (Fraction(4, 15), (0, 3, 5)),
)


@pytest.fixture
def quotient_table() -> BettiTable:
    return BettiTable(MONOMIAL_QUOTIENT_ENTRIES)


def pascal_binomial(n: int, k: int) -> int:
    """C(n, k) by the Pascal recurrence; 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row[k]


def enumerate_pure_sequences(n: int, r: int):
    """All degree sequences (0, d_1, ..., d_n) with d_n <= n + r."""
    for tail in itertools.combinations(range(1, n + r + 1), n):
        yield (0,) + tail


def mp_ln(value, dps: int = 60) -> Decimal:
    """High-precision ln via mpmath, as a Decimal (reference evaluator)."""
    with mpmath.workdps(dps):
        return Decimal(mpmath.nstr(mpmath.ln(mpmath.mpf(value)), dps - 5))


def mp_log_comb(n: int, k: int, dps: int = 60) -> Decimal:
    """ln C(n, k) via mpmath loggamma (reference for huge binomials)."""
    with mpmath.workdps(dps):
        v = (
            mpmath.loggamma(n + 1)
            - mpmath.loggamma(k + 1)
            - mpmath.loggamma(n - k + 1)
        )
        return Decimal(mpmath.nstr(v, dps - 5))


def random_chain(rng, max_terms: int = 4, max_entry: int = 12) -> list[tuple[int, ...]]:
    """A random strict chain of degree sequences with entries in [0, max_entry]."""
    length = rng.randint(1, 5)
    bottom = tuple(sorted(rng.sample(range(0, max_entry + 1), length)))
    chain = [bottom]
    while len(chain) < rng.randint(1, max_terms):
        bumped = _bump(rng, chain[-1], max_entry)
        if bumped is None:
            break
        chain.append(bumped)
    return chain


def _bump(rng, d: tuple[int, ...], max_entry: int):
    """A random successor of d in the chain order (shorter and/or larger)."""
    for _ in range(20):
        new_len = rng.randint(max(1, len(d) - 2), len(d))
        e = list(d[:new_len])
        changed = new_len < len(d)
        for idx in reversed(range(new_len)):
            cap = e[idx + 1] - 1 if idx + 1 < new_len else max_entry
            if cap > e[idx] and rng.random() < 0.6:
                e[idx] = rng.randint(e[idx] + 1, cap)
                changed = True
        if changed:
            return tuple(e)
    return None


def random_decomposition_terms(rng, max_terms: int = 4, max_entry: int = 12):
    """Random (coefficient, type) terms over a random strict chain."""
    return [
        (Fraction(rng.randint(1, 30), rng.randint(1, 30)), d)
        for d in random_chain(rng, max_terms, max_entry)
    ]
