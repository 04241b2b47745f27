"""Fillings of hook diagrams and the (m, n)-semistandard condition."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import LengthMismatch, SignatureMismatch
from .hookshapes import HookShape

Cell = tuple[int, int]


@dataclass(frozen=True)
class HookTableau:
    """A filling ``T = T+ (+) T-`` of a hook diagram.

    ``plus[i-1]`` is row ``i`` of the upper part; ``minus[j-1]`` is the
    below-line part of column ``j``, top to bottom. Entries are letters in
    ``1..m+n``; the filling need not be semistandard.
    """

    shape: HookShape
    plus: tuple[tuple[int, ...], ...]
    minus: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        plus = tuple(tuple(int(x) for x in row) for row in self.plus)
        minus = tuple(tuple(int(x) for x in col) for col in self.minus)
        # trailing empty rows/columns may be omitted by callers
        plus = plus + ((),) * (self.shape.m - len(plus))
        minus = minus + ((),) * (max(self.shape.n - 1, 0) - len(minus))
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        if tuple(len(r) for r in plus) != self.shape.rows or tuple(
            len(c) for c in minus
        ) != self.shape.below:
            raise LengthMismatch(f"filling does not match shape {self.shape}")
        top = self.shape.sig.size
        if any(not 1 <= x <= top for x in self.reading_word()):
            raise ValueError(f"entries must lie in 1..{top}")

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.n

    @cached_property
    def cells(self) -> dict[Cell, int]:
        out = {}
        for i, row in enumerate(self.plus, start=1):
            for j, x in enumerate(row, start=1):
                out[(i, j)] = x
        for j, col in enumerate(self.minus, start=1):
            for d, x in enumerate(col, start=1):
                out[(self.m + d, j)] = x
        return out

    def t(self, i: int, j: int) -> int:
        """Entry at box ``(i, j)``; raises ``KeyError`` outside the diagram."""
        return self.cells[(i, j)]

    def get(self, i: int, j: int):
        return self.cells.get((i, j))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.plus for x in row) + tuple(
            x for col in self.minus for x in col
        )

    def column_word(self) -> tuple[int, ...]:
        """Column-by-column reading, each column top to bottom through the line."""
        cells = self.cells
        word = []
        for j, h in enumerate(self.shape.column_heights, start=1):
            for i in range(1, h + 1):
                word.append(cells[(i, j)])
        return tuple(word)

    def sort_key(self):
        return self.reading_word()

    def __str__(self) -> str:
        up = "/".join("".join(map(str, r)) for r in self.plus if r)
        down = "|".join("".join(map(str, c)) for c in self.minus if c)
        return up + (" ; " + down if down else "") if (up or down) else "0"


def from_cells(shape: HookShape, cells: Mapping[Cell, int]) -> HookTableau:
    m = shape.m
    plus = tuple(tuple(cells[(i, j)] for j in range(1, r + 1)) for i, r in enumerate(shape.rows, start=1))
    minus = tuple(
        tuple(cells[(m + d, j)] for d in range(1, h + 1)) for j, h in enumerate(shape.below, start=1)
    )
    return HookTableau(shape, plus, minus)


def from_reading_word(shape: HookShape, word: Iterable[int]) -> HookTableau:
    return from_cells(shape, dict(zip(shape.boxes(), word)))


def from_column_word(shape: HookShape, word: Iterable[int]) -> HookTableau:
    word = list(word)
    cells = {}
    pos = 0
    for j, h in enumerate(shape.column_heights, start=1):
        for i in range(1, h + 1):
            cells[(i, j)] = word[pos]
            pos += 1
    return from_cells(shape, cells)


def _row_ok(m: int, left: int, right: int) -> bool:
    return left < right if left > m else left <= right


def _col_ok(m: int, upper: int, lower: int) -> bool:
    return upper < lower if upper <= m else upper <= lower


def cells_semistandard(m: int, cells: Mapping[Cell, int]) -> bool:
    """Row/column conditions on every adjacent pair of existing boxes.

    Works for straight and skew fillings alike: a missing neighbour imposes
    nothing.
    """
    for (i, j), x in cells.items():
        right = cells.get((i, j + 1))
        if right is not None and not _row_ok(m, x, right):
            return False
        below = cells.get((i + 1, j))
        if below is not None and not _col_ok(m, x, below):
            return False
    return True


def is_semistandard(T: HookTableau) -> bool:
    return cells_semistandard(T.m, T.cells)


def enumerate_semistandard(lam: HookShape) -> list[HookTableau]:
    """All semistandard fillings of ``lam``, sorted by reading word."""
    m, top = lam.m, lam.sig.size
    boxes = list(lam.boxes())
    cells: dict[Cell, int] = {}
    out = []

    def rec(k: int):
        if k == len(boxes):
            out.append(from_cells(lam, cells))
            return
        i, j = boxes[k]
        lo = 1
        left = cells.get((i, j - 1))
        if left is not None:
            lo = max(lo, left + 1 if left > m else left)
        up = cells.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1 if up <= m else up)
        for v in range(lo, top + 1):
            cells[(i, j)] = v
            rec(k + 1)
        cells.pop((i, j), None)

    rec(0)
    return out


def all_fillings(lam: HookShape) -> Iterator[HookTableau]:
    """Every filling of ``lam`` by letters ``1..m+n`` (brute force)."""
    boxes = list(lam.boxes())
    for word in product(range(1, lam.sig.size + 1), repeat=len(boxes)):
        yield from_cells(lam, dict(zip(boxes, word)))


def trivial_tableau(lam: HookShape) -> HookTableau:
    """``S0``: row ``i`` filled with ``i``, below-line column ``j`` with ``m + j``."""
    m = lam.m
    plus = tuple((i,) * r for i, r in enumerate(lam.rows, start=1))
    minus = tuple((m + j,) * h for j, h in enumerate(lam.below, start=1))
    return HookTableau(lam, plus, minus)


def standard_filling(lam: HookShape) -> dict[Cell, int]:
    """Box numbering column by column, top to bottom then left to right."""
    out = {}
    offset = 0
    for j, h in enumerate(lam.column_heights, start=1):
        for i in range(1, h + 1):
            out[(i, j)] = offset + i
        offset += h
    return out


def concat(S: HookTableau, T: HookTableau) -> HookTableau:
    """Rows of ``T+`` appended to rows of ``S+``; columns of ``T-`` stacked under ``S-``."""
    if S.shape.sig != T.shape.sig:
        raise SignatureMismatch("tableaux over different signatures")
    plus = tuple(r + s for r, s in zip(S.plus, T.plus))
    minus = tuple(c + d for c, d in zip(S.minus, T.minus))
    return HookTableau(S.shape + T.shape, plus, minus)


def empty_tableau(lam: HookShape) -> HookTableau:
    return HookTableau(lam, (), ())


@dataclass(frozen=True)
class FormalCombination:
    """A finite rational combination of tableaux sharing one shape."""

    terms: Mapping[HookTableau, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {T: Fraction(c) for T, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def single(cls, T: HookTableau, coeff=1) -> FormalCombination:
        return cls({T: Fraction(coeff)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCombination):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list[tuple[HookTableau, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{T}]" for T, c in self.items())


def render_grid(tokens: Mapping[Cell, str]) -> list[str]:
    """One line per row, tokens separated by spaces; rows are assumed left-justified."""
    lines = []
    for i in sorted({i for i, _ in tokens}):
        row = sorted((j, t) for (r, j), t in tokens.items() if r == i)
        lines.append(" ".join(t for _, t in row))
    return lines


def render_tableau(T: HookTableau) -> list[str]:
    return render_grid({c: str(x) for c, x in T.cells.items()})
