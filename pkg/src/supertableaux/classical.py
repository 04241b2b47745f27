"""Classical sl(m) tableaux, written independently of the super code.

Tableaux are plain tuples of rows. Everything here is the textbook n = 0
theory: trivial extractable subtableaux (conditions 1 and 2), push, ordinary
jeu de taquin, and the column exchange relation on Young vectors with
ordinary signs. It exists only to cross-check the super implementation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

Rows = tuple[tuple[int, ...], ...]


def partitions_of(total: int, parts: int, cap: int | None = None):
    """Partitions of ``total`` into at most ``parts`` parts, as length-``parts`` tuples."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    cap = total if cap is None else cap
    for first in range(min(total, cap), -1, -1):
        for rest in partitions_of(total - first, parts - 1, first):
            yield (first,) + rest


def is_ssyt(rows: Rows) -> bool:
    for r in rows:
        if any(x > y for x, y in zip(r, r[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(x >= y for x, y in zip(upper, lower)):
            return False
    return True


def ssyt(shape: tuple[int, ...], m: int) -> list[Rows]:
    """All semistandard tableaux of a partition shape over ``1..m`` (brute force)."""
    boxes = sum(shape)
    out = []
    for flat in product(range(1, m + 1), repeat=boxes):
        rows, k = [], 0
        for r in shape:
            rows.append(tuple(flat[k:k + r]))
            k += r
        rows = tuple(rows)
        if is_ssyt(rows):
            out.append(rows)
    return out


def _lengths(c: tuple[int, ...]) -> tuple[int, ...]:
    """Row lengths ``l_i = c_i + ... + c_m`` of the trivial tableau with column counts ``c``."""
    return tuple(sum(c[i:]) for i in range(len(c)))


def extractable(T: Rows, c: tuple[int, ...]) -> bool:
    """Conditions 1 and 2 for the trivial tableau with ``c_i`` columns of height ``i``."""
    ell = _lengths(c)
    for i, row in enumerate(T, start=1):
        if ell[i - 1] > len(row) or any(x != i for x in row[: ell[i - 1]]):
            return False
    for i in range(len(T) - 1):
        upper = T[i][ell[i]:]
        lower = T[i + 1][ell[i + 1]:]
        if any(x >= y for x, y in zip(upper, lower)):
            return False
    return True


def column_counts(shape: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(shape[i] - (shape[i + 1] if i + 1 < len(shape) else 0) for i in range(len(shape)))


def largest_trivial(T: Rows) -> tuple[int, ...]:
    shape = tuple(len(r) for r in T)
    best = (0,) * len(T)
    for c in product(*(range(x + 1) for x in column_counts(shape))):
        if extractable(T, c):
            best = tuple(map(max, best, c))
    return best


def push(T: Rows) -> Rows:
    ell = _lengths(largest_trivial(T))
    return tuple(row[ell[i]:] for i, row in enumerate(T))


def _corners(inner: set) -> list[tuple[int, int]]:
    found = [(i, j) for (i, j) in inner if (i + 1, j) not in inner and (i, j + 1) not in inner]
    return sorted(found, key=lambda c: c[1])


def slide(inner: set, entries: dict, corner: tuple[int, int]) -> tuple[set, dict]:
    """One ordinary jeu de taquin slide into ``corner``; ties move the lower entry up."""
    entries = dict(entries)
    i, j = corner
    while True:
        right = entries.get((i, j + 1))
        below = entries.get((i + 1, j))
        if right is None and below is None:
            break
        if below is not None and (right is None or below <= right):
            entries[(i, j)] = entries.pop((i + 1, j))
            i += 1
        else:
            entries[(i, j)] = entries.pop((i, j + 1))
            j += 1
    return inner - {corner}, entries


def rectify_largest_first(T: Rows, c: tuple[int, ...]) -> Rows:
    """Empty the trivial tableau ``c`` out of ``T`` and slide from the rightmost corner each time."""
    ell = _lengths(c)
    inner = {(i, j) for i in range(1, len(T) + 1) for j in range(1, ell[i - 1] + 1)}
    entries = {
        (i, j): x for i, row in enumerate(T, start=1) for j, x in enumerate(row, start=1) if (i, j) not in inner
    }
    while inner:
        inner, entries = slide(inner, entries, _corners(inner)[-1])
    rows = []
    for i in range(1, len(T) + 1):
        rows.append(tuple(entries[(i, j)] for j in range(1, 1 + sum(1 for (a, _) in entries if a == i))))
    return tuple(rows)


# Young vectors with ordinary signs -------------------------------------------


def _sign(perm) -> int:
    inv = sum(1 for a, b in combinations(perm, 2) if a > b)
    return -1 if inv % 2 else 1


def _columns(T: Rows) -> list[tuple[int, ...]]:
    width = len(T[0]) if T else 0
    return [tuple(row[j] for row in T if len(row) > j) for j in range(width)]


def young_vector(T: Rows) -> dict[tuple[int, ...], Fraction]:
    """``e^T . a . b`` over the column-major word, every permutation spelled out."""
    cols = _columns(T)
    word, pos, k = [], {}, 0
    for j, col in enumerate(cols):
        for i, x in enumerate(col):
            word.append(x)
            pos[(i, j)] = k
            k += 1
    rows = [[pos[(i, j)] for j in range(len(T[i]))] for i in range(len(T))]
    colpos = [[pos[(i, j)] for i in range(len(col))] for j, col in enumerate(cols)]

    def group_sum(vec, groups, signed):
        for g in groups:
            nxt: dict = {}
            for w, c in vec.items():
                for perm in permutations(g):
                    v = list(w)
                    for src, dst in zip(g, perm):
                        v[src] = w[dst]
                    s = _sign(perm) if signed else 1
                    nxt[tuple(v)] = nxt.get(tuple(v), 0) + s * c
            vec = {w: c for w, c in nxt.items() if c}
        return vec

    vec = {tuple(word): Fraction(1)}
    vec = group_sum(vec, rows, signed=False)
    return group_sum(vec, colpos, signed=True)


def plucker_holds(T: Rows, j: int, q: int) -> bool:
    """``sum_X e_T . (X <-> Y) == e_T`` for the top ``q`` boxes ``Y`` of column ``j + 1``."""
    cols = _columns(T)
    start = [sum(len(c) for c in cols[:k]) for k in range(len(cols))]
    left = list(range(start[j - 1], start[j - 1] + len(cols[j - 1])))
    Y = list(range(start[j], start[j] + q))
    eT = young_vector(T)
    total: dict = {}
    for X in combinations(left, q):
        swap = dict(zip(X, Y))
        swap.update(zip(Y, X))
        for w, c in eT.items():
            v = tuple(w[swap.get(k, k)] for k in range(len(w)))
            total[v] = total.get(v, 0) + c
    return {w: c for w, c in total.items() if c} == eT
