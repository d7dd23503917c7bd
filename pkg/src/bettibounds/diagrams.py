"""Exact rational Betti tables and pure diagrams.

A Betti table is a finite association (i, j) -> positive rational, where i is
the homological index (column) and j the internal degree.  Zero entries are
never stored: absence encodes zero, so equality is structural and support
queries are linear in the number of entries.  All values are
``fractions.Fraction``, kept reduced with positive denominator, so every
comparison in this package is exact.

A degree sequence d = (d_0, ..., d_t) is a strictly increasing tuple of
integers.  It determines the pure diagram ``pure_diagram(d)``: the table with
a single entry per column i, at degree d_i, with value

    beta_{i, d_i} = prod_{j != 0} |d_j - d_0|  /  prod_{j != i} |d_j - d_i|.

This is the Herzog-Kuhl normalization with beta_0 = 1; the classical formula
for d_0 = 0 is the special case where the numerator is prod_{j != 0} d_j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, NegativeEntry

#: Exact rational type used throughout (reduced, positive denominator).
Rational = Fraction

#: A degree sequence: strictly increasing tuple of integers.
DegreeSequence = tuple


def degree_sequence(degrees: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalize a degree sequence to a tuple of ints.

    Raises DomainError if empty or not strictly increasing.
    """
    d = tuple(int(x) for x in degrees)
    if not d:
        raise DomainError("a degree sequence must have at least one entry")
    for a, b in zip(d, d[1:]):
        if b <= a:
            raise DomainError(f"degree sequence {d} is not strictly increasing")
    return d


def deg_seq_leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Partial order on degree sequences: a <= b.

    Holds iff len(a) >= len(b) and a_k <= b_k for every shared index k.
    Longer sequences sit below shorter ones; e.g. (0,3,5,6) <= (0,3,5).
    """
    if len(a) < len(b):
        return False
    return all(x <= y for x, y in zip(a, b))


def deg_seq_lt(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Strict version of :func:`deg_seq_leq`."""
    return a != b and deg_seq_leq(a, b)


class BettiTable:
    """Immutable finite table of positive rationals indexed by (i, j).

    ``table[i, j]`` returns the entry, or 0 if absent.  Arithmetic
    (``scale``, ``subtract``) returns new tables; instances are safe to share
    across threads.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], object] | None = None):
        data: dict[tuple[int, int], Fraction] = {}
        if entries:
            for key, raw in entries.items():
                i, j = key
                i, j = int(i), int(j)
                if i < 0:
                    raise DomainError(f"homological index must be nonnegative, got {i}")
                value = Fraction(raw)
                if value < 0:
                    raise DomainError(f"entry at ({i}, {j}) must be positive, got {value}")
                if value == 0:
                    continue  # absence encodes zero
                data[i, j] = value
        self._entries = data

    # -- basic queries -----------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Entries as a list of ((i, j), value), sorted by (i, j)."""
        return sorted(self._entries.items())

    def support(self) -> set[tuple[int, int]]:
        return set(self._entries)

    def column(self, i: int) -> dict[int, Fraction]:
        """The nonzero entries {j: value} of column i."""
        return {j: v for (ii, j), v in self._entries.items() if ii == i}

    @property
    def pdim(self) -> int:
        """Projective dimension: the largest column index with an entry."""
        if not self._entries:
            raise DomainError("pdim is undefined for the empty table")
        return max(i for i, _ in self._entries)

    @property
    def reg(self) -> int:
        """Regularity: max of j - i over the support."""
        if not self._entries:
            raise DomainError("reg is undefined for the empty table")
        return max(j - i for i, j in self._entries)

    # -- arithmetic --------------------------------------------------------

    def total(self, i: int) -> Fraction:
        """Total Betti number of column i: sum_j table[i, j] (0 if empty)."""
        return sum((v for (ii, _), v in self._entries.items() if ii == i), Fraction(0))

    def scale(self, c) -> "BettiTable":
        """Multiply every entry by the positive rational c."""
        c = Fraction(c)
        if c <= 0:
            raise DomainError(f"scale factor must be positive, got {c}")
        return BettiTable({k: v * c for k, v in self._entries.items()})

    def subtract(self, other: "BettiTable") -> "BettiTable":
        """Entrywise difference self - other, with exact zeros dropped.

        Raises NegativeEntry if any resulting entry would be negative.
        """
        result = dict(self._entries)
        for key, value in other._entries.items():
            diff = result.get(key, Fraction(0)) - value
            if diff < 0:
                raise NegativeEntry(key, diff)
            if diff == 0:
                result.pop(key, None)
            else:
                result[key] = diff
        return BettiTable(result)

    def add(self, other: "BettiTable") -> "BettiTable":
        """Entrywise sum."""
        result = dict(self._entries)
        for key, value in other._entries.items():
            result[key] = result.get(key, Fraction(0)) + value
        return BettiTable(result)

    # -- comparison & display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"BettiTable({{{body}}})"

    def __str__(self) -> str:
        return format_diagram(self)


def pure_diagram(degrees: Iterable[int]) -> BettiTable:
    """The pure diagram of a degree sequence, normalized so beta_0 = 1.

    Column i carries the single entry at degree d_i with value
    prod_{j != 0} |d_j - d_0| / prod_{j != i} |d_j - d_i|.  The strict
    increase of d makes every divisor nonzero.
    """
    d = degree_sequence(degrees)
    numerator = 1
    for dj in d[1:]:
        numerator *= abs(dj - d[0])
    entries = {}
    for i, di in enumerate(d):
        denominator = 1
        for j, dj in enumerate(d):
            if j != i:
                denominator *= abs(dj - di)
        entries[i, di] = Fraction(numerator, denominator)
    return BettiTable(entries)


def total_betti(table: BettiTable, i: int) -> Fraction:
    """Functional alias for ``table.total(i)``."""
    return table.total(i)


def format_diagram(table: BettiTable, absent: str = ".") -> str:
    """Render a table in Betti-diagram layout.

    Rows are indexed by j - i, columns by i; absent entries print as ``.``.
    """
    if not table:
        return "(empty table)"
    cols = range(table.pdim + 1)
    row_lo = min(j - i for i, j in table)
    row_hi = table.reg
    header = [""] + [str(i) for i in cols]
    rows = [header]
    for r in range(row_lo, row_hi + 1):
        cells = [f"{r}:"]
        for i in cols:
            v = table[i, i + r]
            cells.append(str(v) if v else absent)
        rows.append(cells)
    widths = [max(len(row[c]) for row in rows) for c in range(len(cols) + 1)]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )
