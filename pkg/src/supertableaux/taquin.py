"""Super jeu de taquin on skew hook tableaux.

A skew tableau is kept as the set of empty inner boxes plus a map from the
remaining boxes to entries. Coordinates are absolute: rows ``1..m`` are the
upper part, rows ``m+1, ...`` hang below the line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import NotOuterCorner
from .extraction import TrivialPair
from .hookshapes import HookShape, Signature
from .tableaux import Cell, HookTableau, cells_semistandard, from_cells, render_grid


def shape_of_cells(sig: Signature, cells: Iterable[Cell]) -> HookShape:
    """Multiplicity data of a set of boxes forming a (possibly non-covariant) hook diagram."""
    cells = set(cells)
    m, k = sig.m, max(sig.n - 1, 0)
    rows = [sum(1 for (i, _) in cells if i == r) for r in range(1, m + 1)]
    below = [sum(1 for (i, j) in cells if i > m and j == c) for c in range(1, k + 1)]
    a = [rows[i] - (rows[i + 1] if i + 1 < m else 0) for i in range(m)]
    a_prime = [below[j] - (below[j + 1] if j + 1 < k else 0) for j in range(k)]
    shape = HookShape(sig, a, a_prime)
    if set(shape.boxes()) != cells:
        raise ValueError("boxes do not form a hook diagram")
    return shape


@dataclass(frozen=True)
class SkewTableau:
    sig: Signature
    inner: frozenset
    entries: dict = field(hash=False)

    @property
    def m(self) -> int:
        return self.sig.m

    @property
    def outer_shape(self) -> HookShape:
        return shape_of_cells(self.sig, set(self.inner) | set(self.entries))

    @property
    def inner_shape(self) -> HookShape:
        return shape_of_cells(self.sig, self.inner)

    def size(self) -> int:
        return len(self.entries)

    def is_semistandard(self) -> bool:
        return cells_semistandard(self.m, self.entries)

    def is_straight(self) -> bool:
        return not self.inner

    def to_tableau(self) -> HookTableau:
        if self.inner:
            raise ValueError("skew tableau still has inner boxes")
        return from_cells(shape_of_cells(self.sig, self.entries), self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return (self.sig, self.inner, self.entries) == (other.sig, other.inner, other.entries)

    def __hash__(self):
        return hash((self.sig, self.inner, frozenset(self.entries.items())))


def skew_from_pair(T: HookTableau, p: TrivialPair) -> SkewTableau:
    """``T`` with the boxes of the trivial pair ``p`` emptied."""
    m = T.m
    inner = {(i, j) for i, b in enumerate(p.B, start=1) for j in range(1, b + 1)}
    inner |= {(m + d, j) for j, h in enumerate(p.B_prime, start=1) for d in range(1, h + 1)}
    entries = {c: x for c, x in T.cells.items() if c not in inner}
    return SkewTableau(T.shape.sig, frozenset(inner), entries)


def skew_from_shapes(lam: HookShape, mu: HookShape, entries: dict) -> SkewTableau:
    inner = frozenset(mu.boxes())
    outer = set(lam.boxes())
    if not inner <= outer or set(entries) != outer - inner:
        raise ValueError("entries must fill exactly the boxes of lam outside mu")
    return SkewTableau(lam.sig, inner, dict(entries))


def outer_corners(S: SkewTableau) -> list[Cell]:
    """Upper corners by increasing column, then lower corners by increasing row."""
    m, inner = S.m, S.inner
    upper = [
        (i, j)
        for (i, j) in inner
        if i <= m and ((i + 1, j) not in inner or i + 1 > m) and (i, j + 1) not in inner
    ]
    lower = [
        (i, j) for (i, j) in inner if i > m and (i + 1, j) not in inner and (i, j + 1) not in inner
    ]
    return sorted(upper, key=lambda c: c[1]) + sorted(lower, key=lambda c: c[0])


def greatest_outer_corner(S: SkewTableau) -> Optional[Cell]:
    corners = outer_corners(S)
    return corners[-1] if corners else None


def _next_step(m: int, entries: dict, star: Cell) -> Optional[Cell]:
    i, j = star
    right = entries.get((i, j + 1))
    down = entries.get((i + 1, j))
    if i > m:
        if down is not None and (right is None or down < right):
            return (i + 1, j)
        if right is not None and (down is None or not down < right):
            return (i, j + 1)
        return None
    if right is not None and (down is None or right < down or (right == down and right > m)):
        return (i, j + 1)
    if down is not None and (right is None or right > down or (right == down and right <= m)):
        return (i + 1, j)
    return None


def sjdt_trace(S: SkewTableau, c: Cell) -> list[tuple[dict, Optional[Cell]]]:
    """Every frame of one slide as ``(entries, star)``; the last frame has no star."""
    if c not in outer_corners(S):
        raise NotOuterCorner(f"{c} is not an outer corner")
    entries = dict(S.entries)
    star = c
    frames = [(dict(entries), star)]
    while True:
        nxt = _next_step(S.m, entries, star)
        if nxt is None:
            break
        entries[star] = entries.pop(nxt)
        star = nxt
        frames.append((dict(entries), star))
    frames.append((dict(entries), None))
    return frames


def sjdt_slide(S: SkewTableau, c: Cell) -> SkewTableau:
    entries, _ = sjdt_trace(S, c)[-1]
    return SkewTableau(S.sig, S.inner - {c}, entries)


def star_path(S: SkewTableau, c: Cell) -> list[Cell]:
    return [star for _, star in sjdt_trace(S, c) if star is not None]


def maxjdt(S: SkewTableau) -> HookTableau:
    """Slide from the greatest outer corner until no inner box is left."""
    while True:
        c = greatest_outer_corner(S)
        if c is None:
            return S.to_tableau()
        S = sjdt_slide(S, c)


def corner_successor_check(S: SkewTableau, c: Cell) -> Optional[Cell]:
    """Predicted greatest outer corner after sliding from the greatest corner ``c``.

    Only the inner shape matters, so the prediction is made without
    performing the slide.
    """
    corners = outer_corners(S)
    if not corners or corners[-1] != c:
        raise NotOuterCorner(f"{c} is not the greatest outer corner")
    m = S.m
    upper = [x for x in corners if x[0] <= m]
    lower = [x for x in corners if x[0] > m]
    if lower:
        i, j = lower[-1]
        prev_row = lower[-2][0] if len(lower) > 1 else None
        if j > 1:
            return (i, j - 1)
        if max(prev_row if prev_row is not None else 0, m) < i - 1:
            return (i - 1, 1)
        if prev_row is not None and m < prev_row == i - 1:
            return lower[-2]
        return upper[-1] if upper else None
    i, j = upper[-1]
    if (i, j) == (1, 1):
        return None
    if i > 1:
        return (i - 1, j)
    if len(upper) == 1 or upper[-2][1] < j - 1:
        return (1, j - 1)
    return upper[-2]


def render_frame(inner: Iterable[Cell], entries: dict, star: Optional[Cell] = None) -> list[str]:
    """Rows of a skew filling: ``.`` for inner boxes, ``*`` for the star."""
    tokens = {c: "." for c in inner}
    tokens.update({c: str(x) for c, x in entries.items()})
    if star is not None:
        tokens[star] = "*"
    return render_grid(tokens)


def render_trace(S: SkewTableau, c: Cell) -> list[list[str]]:
    inner = S.inner - {c}
    return [render_frame(inner, entries, star) for entries, star in sjdt_trace(S, c)]
