"""Greedy decomposition of a Betti table into a chain of pure diagrams.

Every table in the cone spanned by pure diagrams is a unique positive
rational combination sum_k c_k * pure_diagram(d^k) whose degree sequences
form a strict chain d^0 < d^1 < ... < d^s.  The greedy algorithm recovers it:

  1. read off the leading degree sequence d (the minimal degree per column),
  2. peel off the largest multiple of pure_diagram(d) that keeps all entries
     nonnegative (this zeroes at least one entry at a position (i, d_i)),
  3. repeat until the table is empty.

Each peel either shrinks the support or pushes some column minimum strictly
up, so the number of terms never exceeds the initial support size.  Failures
(an empty column below pdim, non-increasing column minima, a negative entry,
or a broken chain) mean the input lies outside the cone and are reported as
``NotInBSCone``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import BettiTable, deg_seq_lt, pure_diagram
from .errors import (
    ChainViolation,
    DomainError,
    GapColumn,
    NegativeEntry,
    NotInBSCone,
    NotIncreasing,
)


@dataclass(frozen=True)
class Decomposition:
    """An ordered list of (coefficient, degree sequence) terms.

    Invariants: all coefficients are positive, the degree sequences form a
    strict chain, and ``reconstruct()`` reproduces the source table exactly.
    """

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(c for c, _ in self.terms)

    @property
    def types(self) -> tuple[tuple[int, ...], ...]:
        return tuple(d for _, d in self.terms)

    def coefficient_sum(self) -> Fraction:
        return sum(self.coefficients, Fraction(0))

    def reconstruct(self) -> BettiTable:
        """Exact sum of the scaled pure diagrams."""
        out = BettiTable()
        for c, d in self.terms:
            out = out.add(pure_diagram(d).scale(c))
        return out


def leading_degree_sequence(table: BettiTable) -> tuple[int, ...]:
    """Minimal degree of each column 0..pdim, as a degree sequence.

    Raises GapColumn if some column below pdim is empty, NotIncreasing if the
    minima are not strictly increasing.  Either failure certifies that the
    table is not a positive chain combination of pure diagrams.
    """
    if not table:
        raise DomainError("cannot take the leading degree sequence of an empty table")
    minima = []
    for i in range(table.pdim + 1):
        col = table.column(i)
        if not col:
            raise GapColumn(i)
        minima.append(min(col))
    for a, b in zip(minima, minima[1:]):
        if b <= a:
            raise NotIncreasing(f"column minima {tuple(minima)} are not strictly increasing")
    return tuple(minima)


def peel(table: BettiTable, d: tuple[int, ...]) -> tuple[Fraction, BettiTable]:
    """One greedy step: the largest c with table - c * pure_diagram(d) >= 0.

    Requires table[i, d_i] to be present for every i (guaranteed when d is
    the leading degree sequence).  Returns (c, remainder); at least one
    position (i, d_i) vanishes in the remainder.
    """
    diagram = pure_diagram(d)
    ratios = []
    for i, di in enumerate(d):
        if (i, di) not in table:
            raise DomainError(f"table has no entry at ({i}, {di}); cannot peel type {d}")
        ratios.append(table[i, di] / diagram[i, di])
    c = min(ratios)
    return c, table.subtract(diagram.scale(c))


def decompose(table: BettiTable) -> Decomposition:
    """Decompose a table into its unique chain of pure diagrams.

    Raises NotInBSCone (with the underlying failure as ``__cause__``) when no
    such decomposition exists.  The sum of the coefficients equals the total
    Betti number of column 0, since each pure diagram is normalized to
    beta_0 = 1.
    """
    if not table:
        raise DomainError("cannot decompose an empty table")
    budget = len(table)  # peel count never exceeds the support size
    terms = []
    remainder = table
    try:
        while remainder:
            if len(terms) > budget:
                raise ChainViolation(
                    f"peeling did not terminate within {budget} steps"
                )
            d = leading_degree_sequence(remainder)
            c, remainder = peel(remainder, d)
            terms.append((c, d))
        for (_, a), (_, b) in zip(terms, terms[1:]):
            if not deg_seq_lt(a, b):
                raise ChainViolation(f"types {a} and {b} do not increase strictly")
    except (GapColumn, NotIncreasing, NegativeEntry, ChainViolation) as exc:
        raise NotInBSCone(f"table is not in the cone of pure diagrams: {exc}") from exc
    return Decomposition(tuple(terms))


def verify_decomposition(
    table: BettiTable, decomposition: Decomposition, codim: int | None = None
) -> None:
    """Re-check a decomposition against its source table.

    Confirms positive coefficients, a strict chain, exact reconstruction,
    and (when codim is given) that every degree sequence has length between
    codim and the projective dimension of the table.  Raises on any failure.
    """
    for c, _ in decomposition:
        if c <= 0:
            raise ChainViolation(f"coefficient {c} is not positive")
    for (_, a), (_, b) in zip(decomposition.terms, decomposition.terms[1:]):
        if not deg_seq_lt(a, b):
            raise ChainViolation(f"types {a} and {b} do not increase strictly")
    if decomposition.reconstruct() != table:
        raise ChainViolation("reconstruction does not reproduce the table")
    if codim is not None:
        pdim = table.pdim
        for _, d in decomposition:
            length = len(d) - 1
            if not codim <= length <= pdim:
                raise ChainViolation(
                    f"type {d} has length {length}, outside [{codim}, {pdim}]"
                )
