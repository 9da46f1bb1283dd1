"""Partitions, Young diagrams, hooks, and per-box content statistics.

Coordinates are 1-based pairs ``(i, j)``: row ``i`` counted from the top,
column ``j`` from the left.  Everything here is an immutable value and every
function is pure, so the whole module is safe to use from concurrent sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Cell = tuple[int, int]


class NotAnInteger(ValueError):
    """A partition token that is not a non-negative decimal integer."""


class NotWeaklyDecreasing(ValueError):
    """Partition parts increased from left to right."""


class CellOutsideDiagram(ValueError):
    """A (row, column) pair lying outside the Young diagram."""


class TooFewRows(ValueError):
    """The alphabet parameter n is smaller than the number of parts."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction and the empty partition is a
    legal shape everywhere (its characters are the constant 1).
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int):
                raise NotAnInteger(f"part {p!r} is not an integer")
            if p < 0:
                raise NotAnInteger(f"part {p!r} is negative")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"parts {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def row(self, i: int) -> int:
        """Length of row i, with rows below the diagram counting as 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def cells(self) -> Iterator[Cell]:
        """All boxes of the diagram in row-major order."""
        for i, width in enumerate(self.parts, start=1):
            for j in range(1, width + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, cols + 1)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated shape such as ``"7,5,4,1"``.

    Whitespace around tokens is tolerated; the empty string gives the empty
    partition.  Zeros are allowed only in trailing position (enforced by the
    weak-decrease check) and are dropped.
    """
    stripped = text.strip()
    if not stripped:
        return Partition()
    parts = []
    for token in stripped.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise NotAnInteger(f"token {token!r} is not an integer") from None
        parts.append(value)
    return Partition(tuple(parts))


def hook_length(lam: Partition, cell: Cell) -> int:
    """Number of boxes in the hook of ``cell``: itself, those to its right,
    and those below it."""
    if not lam.contains(cell):
        raise CellOutsideDiagram(f"cell {cell} outside diagram of {lam.parts}")
    i, j = cell
    t = lam.conjugate()
    return lam.parts[i - 1] + t.parts[j - 1] - i - j + 1


def content_gl(cell: Cell) -> int:
    """Ordinary content j - i; independent of the shape."""
    i, j = cell
    return j - i


def content_sp(lam: Partition, cell: Cell) -> int:
    """Symplectic content of a box.

    Below the diagonal it reads off the row lengths, on and above it the
    column lengths; the two branches meet differently on the diagonal than
    the orthogonal variant does, so the branch split matters.
    """
    if not lam.contains(cell):
        raise CellOutsideDiagram(f"cell {cell} outside diagram of {lam.parts}")
    i, j = cell
    if i > j:
        return lam.row(i) + lam.row(j) - i - j + 2
    t = lam.conjugate()
    return i + j - t.row(i) - t.row(j)


def content_o(lam: Partition, cell: Cell) -> int:
    """Orthogonal content of a box (shared by the odd and even families).

    The diagonal uses the row-length branch here, unlike ``content_sp``.
    """
    if not lam.contains(cell):
        raise CellOutsideDiagram(f"cell {cell} outside diagram of {lam.parts}")
    i, j = cell
    if i >= j:
        return lam.row(i) + lam.row(j) - i - j
    t = lam.conjugate()
    return i + j - t.row(i) - t.row(j) - 2


def b_stat(lam: Partition) -> int:
    """The row-weighted size sum((i-1) * lam_i); exponent of the monomial
    prefactor in the principal specialisation of a Schur polynomial."""
    return sum((i - 1) * p for i, p in enumerate(lam.parts, start=1))


def mu_vector(lam: Partition, n: int) -> tuple[int, ...]:
    """The strictly decreasing vector mu_i = lam_i + n - i of length n.

    Requires n >= length(lam); rows beyond the last part count as 0, so the
    tail of the vector is the staircase n-i down to 0.
    """
    if n < lam.length:
        raise TooFewRows(f"n={n} is smaller than the {lam.length} parts of {lam.parts}")
    return tuple(lam.row(i) + n - i for i in range(1, n + 1))


def partitions_of(r: int) -> list[Partition]:
    """All partitions of r, first part descending (lexicographic)."""

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return [Partition(p) for p in gen(r, r)]


def partitions_up_to(max_size: int) -> list[Partition]:
    """All partitions with at most ``max_size`` boxes, smallest sizes first."""
    out: list[Partition] = []
    for r in range(max_size + 1):
        out.extend(partitions_of(r))
    return out
