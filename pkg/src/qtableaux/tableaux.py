"""Tableaux over barred alphabets: representation, admissibility, enumeration.

The alphabet for rank n is the chain 1 < 1~ < 2 < 2~ < ... < n < n~, with an
extra top symbol inf in the odd orthogonal family (inf compares equal to its
own bar, so it may repeat along a row but not down a column).  Symbols are
stored as integer ranks:

    unbarred k -> 2k - 1,    barred k -> 2k,    inf -> 2n + 1.

Entries are read row-major; enumeration emits tableaux in lexicographic
order of that symbol sequence.  Tableaux are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .shapes import Partition, TooFewRows


class ShapeNotFull(ValueError):
    """An operation that needs exactly n rows got a shorter shape."""


class Family(Enum):
    """Tableau/character families; values double as the CLI spellings."""

    GL = "gl"
    SP = "sp"
    ODD_O = "odd-o"
    EVEN_O = "even-o"
    SO_EVEN = "so-even"

    def __str__(self) -> str:
        return self.value


POSITIVE = "positive"
NEGATIVE = "negative"
BOTH = "both"
NEITHER = "neither"


def unbarred(k: int) -> int:
    return 2 * k - 1


def barred(k: int) -> int:
    return 2 * k


def infinity_rank(n: int) -> int:
    return 2 * n + 1


def rank_value(rank: int, n: int) -> int:
    """Entry value for the |T| statistic: +k for k, -k for k~, 0 for inf."""
    if rank == 2 * n + 1:
        return 0
    return -(rank // 2) if rank % 2 == 0 else (rank + 1) // 2


def rank_str(rank: int, n: int) -> str:
    if rank == 2 * n + 1:
        return "inf"
    k = (rank + 1) // 2
    return f"{k}~" if rank % 2 == 0 else str(k)


def parse_symbol(text: str, n: int) -> int:
    text = text.strip()
    if text == "inf":
        return 2 * n + 1
    if text.endswith("~"):
        return 2 * int(text[:-1])
    return 2 * int(text) - 1


@dataclass(frozen=True)
class Stats:
    """Weight data of a tableau.

    ``entry_sum`` counts barred symbols negatively and inf as zero;
    ``weight`` holds the net multiplicity of each letter, unbarred minus
    barred, and is the exponent vector of the tableau's weight monomial.
    """

    entry_sum: int
    r_plus: int
    r_minus: int
    weight: tuple[int, ...]

    @property
    def r(self) -> int:
        return self.r_plus - self.r_minus


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    family: Family
    n: int

    def __post_init__(self) -> None:
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            raise ValueError("rows do not fill the shape")

    @classmethod
    def from_rows(cls, rows, family: Family, n: int) -> "Tableau":
        rows = tuple(tuple(r) for r in rows)
        return cls(Partition(tuple(len(r) for r in rows)), rows, family, n)

    def entry(self, i: int, j: int) -> int:
        """Symbol rank at 1-based (row, column)."""
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    def render(self) -> str:
        """Text form: rows joined by "/", symbols by ",", e.g. "1,2~/3"."""
        if not self.rows:
            return "-"
        return "/".join(",".join(rank_str(x, self.n) for x in row) for row in self.rows)

    def stats(self) -> Stats:
        total = 0
        r_plus = 0
        r_minus = 0
        weight = [0] * self.n
        for row in self.rows:
            for rank in row:
                v = rank_value(rank, self.n)
                total += v
                if v > 0:
                    r_plus += 1
                    weight[v - 1] += 1
                elif v < 0:
                    r_minus += 1
                    weight[-v - 1] -= 1
        return Stats(total, r_plus, r_minus, tuple(weight))

    def __str__(self) -> str:
        return self.render()


def parse_tableau(text: str, family: Family, n: int) -> Tableau:
    """Inverse of ``Tableau.render`` ("-" or "" gives the empty tableau)."""
    text = text.strip()
    if text in ("", "-"):
        return Tableau.from_rows((), family, n)
    rows = tuple(tuple(parse_symbol(tok, n) for tok in row.split(",")) for row in text.split("/"))
    return Tableau.from_rows(rows, family, n)


def alphabet(family: Family, n: int) -> list[int]:
    if family is Family.GL:
        return [unbarred(k) for k in range(1, n + 1)]
    top = 2 * n + 1 if family is Family.ODD_O else 2 * n
    return list(range(1, top + 1))


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase, in symbol order."""
    for row in t.rows:
        for a, b in zip(row, row[1:]):
            if b < a:
                return False
    for upper, lower in zip(t.rows, t.rows[1:]):
        for a, b in zip(upper, lower):
            if b <= a:
                return False
    return True


def is_symplectic(t: Tableau) -> bool:
    """Every entry of row i is at least the symbol i (rank 2i - 1).

    Assumes the filling is semistandard with symbols in 1 .. n~.
    """
    for i, row in enumerate(t.rows, start=1):
        bound = 2 * i - 1
        for rank in row:
            if rank < bound:
                return False
    return True


def is_orthogonal(t: Tableau) -> bool:
    """The first-two-column admissibility conditions, odd or even family.

    With a_i (b_i) the number of entries at most i~ in column 1 (column 2),
    the conditions for each 1 <= i <= n are:

    (i)   a_i + b_i <= 2i;
    (ii)  if a_i + b_i = 2i with a_i > b_i, the a_i-th entry of column 1 is
          i~ and the b_i-th entry of column 2 is i, then the entry above the
          i~ must be i;
    (iii) if a_i = b_i = i, the i-th entry of column 1 is i and row i holds
          an i~ in some column j, then the entry above that i~ must be i.

    A referenced box that does not exist makes (ii) vacuous (that only
    happens for b_i = 0) but makes (iii) fail: the bound pattern in (iii)
    cannot be supported from above in row 0, so such fillings are rejected.
    Assumes the filling is semistandard over the family's alphabet; inf
    entries never count towards a_i or b_i.
    """
    n = t.n
    col1 = t.column(1)
    col2 = t.column(2)
    for i in range(1, n + 1):
        bar = 2 * i
        a = sum(1 for x in col1 if x <= bar)
        b = sum(1 for x in col2 if x <= bar)
        if a + b > 2 * i:
            return False
        if a + b != 2 * i:
            continue
        if a > b and col1[a - 1] == bar and b >= 1 and col2[b - 1] == bar - 1:
            # a >= i + 1 >= 2 here, so the box above exists.
            if col1[a - 2] != bar - 1:
                return False
        if a == b == i and col1[i - 1] == bar - 1:
            row = t.rows[i - 1]
            for j in range(2, len(row) + 1):
                if row[j - 1] == bar:
                    if i == 1 or t.entry(i - 1, j) != bar - 1:
                        return False
    return True


def is_admissible(t: Tableau) -> bool:
    """Full membership test for the tableau family of ``t``."""
    ranks = alphabet(t.family, t.n)
    allowed = set(ranks)
    for row in t.rows:
        for x in row:
            if x not in allowed:
                return False
    if not is_semistandard(t):
        return False
    if t.family is Family.SP:
        return is_symplectic(t)
    if t.family in (Family.ODD_O, Family.EVEN_O):
        return is_orthogonal(t)
    return True


def enumerate_tableaux(family: Family, shape: Partition, n: int) -> Iterator[Tableau]:
    """Yield every admissible tableau exactly once, in lexicographic order
    of the row-major symbol sequence.

    The search fills boxes row-major and prunes on semistandardness, the
    symplectic row bound, and the orthogonal count condition (i); the
    remaining orthogonal pattern conditions are checked on completion.
    """
    if family not in (Family.GL, Family.SP, Family.ODD_O, Family.EVEN_O):
        raise ValueError(f"cannot enumerate family {family}")
    if family is not Family.GL and n < shape.length:
        raise TooFewRows(f"family {family} needs n >= {shape.length}, got {n}")
    cells = list(shape.cells())
    if not cells:
        yield Tableau.from_rows((), family, n)
        return
    ranks = alphabet(family, n)
    grid = [[0] * w for w in shape.parts]
    col1: list[int] = []
    col2: list[int] = []
    orthogonal = family in (Family.ODD_O, Family.EVEN_O)
    symplectic = family is Family.SP

    def count_ok() -> bool:
        # Orthogonal condition (i) on the filled prefix; monotone, so safe
        # to prune with.
        for m in range(1, n + 1):
            bar = 2 * m
            a = sum(1 for x in col1 if x <= bar)
            b = sum(1 for x in col2 if x <= bar)
            if a + b > 2 * m:
                return False
        return True

    def walk(ci: int) -> Iterator[Tableau]:
        if ci == len(cells):
            t = Tableau(shape, tuple(tuple(r) for r in grid), family, n)
            if not orthogonal or is_orthogonal(t):
                yield t
            return
        i, j = cells[ci]
        for rank in ranks:
            if j > 1 and rank < grid[i - 1][j - 2]:
                continue
            if i > 1 and rank <= grid[i - 2][j - 1]:
                continue
            if symplectic and rank < 2 * i - 1:
                continue
            grid[i - 1][j - 1] = rank
            if orthogonal and j <= 2:
                col = col1 if j == 1 else col2
                col.append(rank)
                if count_ok():
                    yield from walk(ci + 1)
                col.pop()
            else:
                yield from walk(ci + 1)
        grid[i - 1][j - 1] = 0

    yield from walk(0)


def classify_even(t: Tableau) -> str:
    """Sort an even orthogonal tableau on a full shape (exactly n parts)
    into the positive/negative split.

    Reading the first entry of each row: if row i starts with i or i~ for
    every i, the tableau is positive when the number of rows starting with
    an unbarred symbol is even and negative when odd.  If instead the first
    rows start with their own letter only up to some j < n and row j starts
    with a symbol above j~, the tableau is both.  Anything else is neither.
    """
    n = t.n
    if t.shape.length != n:
        raise ShapeNotFull(f"classification needs exactly n={n} parts, got {t.shape.length}")
    unbarred_starts = 0
    for i in range(1, n + 1):
        first = t.entry(i, 1)
        if first == 2 * i - 1:
            unbarred_starts += 1
        elif first != 2 * i:
            if i < n and first > 2 * i:
                return BOTH
            return NEITHER
    return POSITIVE if unbarred_starts % 2 == 0 else NEGATIVE
