"""Trivial pairs, extractability, push and pull.

A trivial pair ``(S+, S-)`` sits in the top-left of ``T+`` (row ``i`` filled
with ``i``) and at the top of the below-line columns of ``T-`` (column ``j``
filled with ``m + j``). Removing an extractable pair and sliding the rest
left/up leaves a semistandard tableau; ``push`` removes the largest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotComparable, NotQuasistandard
from .hookshapes import HookShape, _suffix_sums, shape_leq, shapes_below
from .tableaux import HookTableau, enumerate_semistandard, from_cells, is_semistandard


@dataclass(frozen=True)
class TrivialPair:
    """Shape ``(b, b')`` of a trivial pair; need not be covariant."""

    b: tuple[int, ...]
    b_prime: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "b_prime", tuple(int(x) for x in self.b_prime))

    @property
    def B(self) -> tuple[int, ...]:
        return _suffix_sums(self.b)

    @property
    def B_prime(self) -> tuple[int, ...]:
        return _suffix_sums(self.b_prime)

    def is_empty(self) -> bool:
        return not any(self.b) and not any(self.b_prime)

    def join(self, other: TrivialPair) -> TrivialPair:
        return TrivialPair(
            tuple(map(max, self.b, other.b)), tuple(map(max, self.b_prime, other.b_prime))
        )

    def leq(self, other: TrivialPair) -> bool:
        return all(x <= y for x, y in zip(self.b, other.b)) and all(
            x <= y for x, y in zip(self.b_prime, other.b_prime)
        )

    def as_shape(self, like: HookShape) -> HookShape:
        return HookShape(like.sig, self.b, self.b_prime)

    @classmethod
    def of_shape(cls, shape: HookShape) -> TrivialPair:
        return cls(shape.a, shape.a_prime)

    @classmethod
    def empty(cls, shape: HookShape) -> TrivialPair:
        return cls((0,) * len(shape.a), (0,) * len(shape.a_prime))


def is_extractable(T: HookTableau, p: TrivialPair) -> bool:
    """Conditions E1-E4 for removing ``p`` from the semistandard ``T``.

    Pairs that do not fit inside the shape of ``T`` are reported as not
    extractable.
    """
    lam, m, cells = T.shape, T.m, T.cells
    a, a_prime = lam.a, lam.a_prime
    if len(p.b) != len(a) or len(p.b_prime) != len(a_prime):
        return False
    if any(x > y for x, y in zip(p.b, a)) or any(x > y for x, y in zip(p.b_prime, a_prime)):
        return False
    B, Bp = p.B, p.B_prime
    A, Ap = lam.rows, lam.below

    # E1: trivial prefix of each row; shifted rows still column-strict
    for i in range(1, m + 1):
        if any(cells[(i, j)] != i for j in range(1, B[i - 1] + 1)):
            return False
    for i in range(1, m):
        for j in range(1, A[i] - B[i] + 1):
            upper = cells[(i, j + B[i - 1])]
            lower = cells[(i + 1, j + B[i])]
            if upper > lower or (upper <= m and upper == lower):
                return False

    # E2: trivial top of each below-line column; shifted rows strictly increase
    for j in range(1, len(Ap) + 1):
        if any(cells[(m + d, j)] != m + j for d in range(1, Bp[j - 1] + 1)):
            return False
    for j in range(1, len(Ap)):
        for d in range(1, Ap[j] - Bp[j] + 1):
            if not cells[(m + d + Bp[j - 1], j)] < cells[(m + d + Bp[j], j + 1)]:
                return False

    # E3: what is left is still a covariant shape
    excess = max((j for j, (x, y) in enumerate(zip(a_prime, p.b_prime), start=1) if x > y), default=0)
    if (a[-1] - p.b[-1]) - excess < 0:
        return False

    # E4: across the line
    for j in range(1, len(Ap) + 1):
        if j + B[m - 1] > A[m - 1] or 1 + Bp[j - 1] > Ap[j - 1]:
            continue
        if not cells[(m, j + B[m - 1])] <= cells[(m + 1 + Bp[j - 1], j)]:
            return False
    return True


def all_pairs(shape: HookShape):
    """Every trivial pair shape ``(b, b') <= (a, a')``."""
    for combo in product(*(range(x + 1) for x in shape.a + shape.a_prime)):
        yield TrivialPair(combo[: shape.m], combo[shape.m:])


def extractable_pairs(T: HookTableau) -> list[TrivialPair]:
    return [p for p in all_pairs(T.shape) if is_extractable(T, p)]


def _join_all(pairs, start: TrivialPair) -> TrivialPair:
    out = start
    for p in pairs:
        out = out.join(p)
    return out


def largest_pair_by_join(T: HookTableau) -> TrivialPair:
    return _join_all(extractable_pairs(T), TrivialPair.empty(T.shape))


def largest_pair_by_growth(T: HookTableau) -> TrivialPair:
    """Grow one multiplicity at a time while the pair stays extractable."""
    current = TrivialPair.empty(T.shape)
    grown = True
    while grown:
        grown = False
        flat = list(current.b + current.b_prime)
        for k in range(len(flat)):
            flat[k] += 1
            cand = TrivialPair(flat[: T.m], flat[T.m:])
            if is_extractable(T, cand):
                current = cand
                grown = True
                break
            flat[k] -= 1
    return current


def largest_extractable_pair(T: HookTableau) -> TrivialPair:
    return largest_pair_by_join(T)


def is_quasistandard(T: HookTableau) -> bool:
    return largest_extractable_pair(T).is_empty()


def remove_pair(T: HookTableau, p: TrivialPair) -> HookTableau:
    """Slide rows left by ``B_i`` and below-line columns up by ``B'_j``."""
    m, cells = T.m, T.cells
    rest = T.shape - p.as_shape(T.shape)
    B, Bp = p.B, p.B_prime
    out = {}
    for i, r in enumerate(rest.rows, start=1):
        for j in range(1, r + 1):
            out[(i, j)] = cells[(i, j + B[i - 1])]
    for j, h in enumerate(rest.below, start=1):
        for d in range(1, h + 1):
            out[(m + d, j)] = cells[(m + d + Bp[j - 1], j)]
    return from_cells(rest, out)


def push(T: HookTableau) -> HookTableau:
    return remove_pair(T, largest_extractable_pair(T))


def prepend_pair(U: HookTableau, lam: HookShape) -> HookTableau:
    """Shift ``U`` right/down and fill the freed prefix trivially."""
    mu = U.shape
    if not shape_leq(mu, lam):
        raise NotComparable(f"{mu} is not below {lam}")
    m, cells = lam.m, U.cells
    out = {}
    for i, (full, part) in enumerate(zip(lam.rows, mu.rows), start=1):
        pad = full - part
        for j in range(1, pad + 1):
            out[(i, j)] = i
        for j in range(1, part + 1):
            out[(i, pad + j)] = cells[(i, j)]
    for j, (full, part) in enumerate(zip(lam.below, mu.below), start=1):
        pad = full - part
        for d in range(1, pad + 1):
            out[(m + d, j)] = m + j
        for d in range(1, part + 1):
            out[(m + pad + d, j)] = cells[(m + d, j)]
    return from_cells(lam, out)


def pull(U: HookTableau, lam: HookShape) -> HookTableau:
    if not shape_leq(U.shape, lam):
        raise NotComparable(f"{U.shape} is not below {lam}")
    if not is_quasistandard(U):
        raise NotQuasistandard(f"{U} has a non-empty extractable pair")
    return prepend_pair(U, lam)


def strip_trivial(T: HookTableau) -> tuple[HookShape, HookTableau]:
    """Largest covariant ``nu`` with ``T = concat(S0_nu, U)``; returns ``(nu, U)``."""
    covariant = [p for p in extractable_pairs(T) if p.as_shape(T.shape).covariant]
    best = _join_all(covariant, TrivialPair.empty(T.shape))
    return best.as_shape(T.shape), remove_pair(T, best)


def quasistandard(mu: HookShape) -> list[HookTableau]:
    return [U for U in enumerate_semistandard(mu) if is_quasistandard(U)]


def verify_bijection(lam: HookShape) -> dict:
    """Compare ``push`` on ``SS^lam`` with the union of ``QS^mu`` over ``mu <= lam``.

    ``pass`` is the full bijection claim. The remaining keys split it up:
    ``unreached`` lists quasistandard ``U`` whose pull is not semistandard,
    and ``image_exact`` says the image of push is exactly the set of ``U``
    whose pull is semistandard.
    """
    ss = enumerate_semistandard(lam)
    below = shapes_below(lam)
    qs = {mu: quasistandard(mu) for mu in below}
    images = [push(T) for T in ss]
    seen = set(images)
    targets = [U for mu in below for U in qs[mu]]
    pullable = {U for U in targets if is_semistandard(prepend_pair(U, lam))}
    injective = len(seen) == len(images)
    lands = seen <= set(targets)
    round_trip = all(prepend_pair(U, lam) == T for T, U in zip(ss, images)) and all(
        push(prepend_pair(U, lam)) == U for U in pullable
    )
    image_exact = seen == pullable
    total = sum(len(v) for v in qs.values())
    return {
        "shape": lam,
        "ss_count": len(ss),
        "qs_counts": [(mu, len(qs[mu])) for mu in below],
        "injective": injective,
        "lands": lands,
        "round_trip": round_trip,
        "image_exact": image_exact,
        "unreached": [U for U in targets if U not in pullable],
        "pass": injective and lands and round_trip and total == len(ss),
    }
