"""Hook shapes for sl(m, n).

A shape is stored as column multiplicities: ``a[i-1]`` is the number of
columns of height exactly ``i`` in the upper diagram (rows 1..m), and
``a_prime[j-1]`` is the number of rows of length ``j`` in the diagram whose
transpose hangs below row ``m``. Row lengths ``A`` and below-line column
heights ``A'`` are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import CovarianceViolation, LengthMismatch, NotComparable, SignatureMismatch


@dataclass(frozen=True, order=True)
class Signature:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 0:
            raise ValueError(f"invalid signature sl({self.m},{self.n}): need m >= 1, n >= 0")

    @property
    def size(self) -> int:
        """Number of basis letters ``m + n``."""
        return self.m + self.n

    def is_even(self, letter: int) -> bool:
        return letter <= self.m


def _sup(values) -> int:
    return max(values, default=0)


def _suffix_sums(xs: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    acc = 0
    for x in reversed(xs):
        acc += x
        out.append(acc)
    return tuple(reversed(out))


@dataclass(frozen=True)
class HookShape:
    """Column-multiplicity data ``(a, a')`` of a hook diagram.

    The constructor only checks lengths and signs so that the same type can
    describe trivial pairs and intermediate skew data; use
    :func:`validate_shape` to also enforce the covariance condition.
    """

    sig: Signature
    a: tuple[int, ...]
    a_prime: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "a_prime", tuple(int(x) for x in self.a_prime))
        if len(self.a) != self.sig.m or len(self.a_prime) != max(self.sig.n - 1, 0):
            raise LengthMismatch(
                f"sl({self.sig.m},{self.sig.n}) needs {self.sig.m} column counts and "
                f"{max(self.sig.n - 1, 0)} below-line counts, got {len(self.a)} and {len(self.a_prime)}"
            )
        if any(x < 0 for x in self.a + self.a_prime):
            raise ValueError("shape multiplicities must be non-negative")

    @property
    def m(self) -> int:
        return self.sig.m

    @property
    def n(self) -> int:
        return self.sig.n

    @property
    def rows(self) -> tuple[int, ...]:
        """Row lengths ``A_1 >= ... >= A_m`` of the upper part."""
        return _suffix_sums(self.a)

    @property
    def below(self) -> tuple[int, ...]:
        """Heights ``A'_1 >= ... >= A'_{n-1}`` of the below-line columns."""
        return _suffix_sums(self.a_prime)

    @property
    def j0(self) -> int:
        return _sup(j for j, x in enumerate(self.a_prime, start=1) if x > 0)

    @property
    def covariant(self) -> bool:
        return self.a[-1] >= self.j0

    @property
    def size(self) -> int:
        """Total number of boxes ``N``."""
        return sum(self.rows) + sum(self.below)

    @property
    def column_heights(self) -> tuple[int, ...]:
        rows, below = self.rows, self.below
        width = max(rows[0] if rows else 0, sum(1 for b in below if b > 0))
        heights = []
        for k in range(1, width + 1):
            h = sum(1 for r in rows if r >= k)
            if k <= len(below):
                h += below[k - 1]
            heights.append(h)
        return tuple(heights)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes ``(i, j)`` (1-based) in reading-word order."""
        for i, length in enumerate(self.rows, start=1):
            for j in range(1, length + 1):
                yield (i, j)
        for j, height in enumerate(self.below, start=1):
            for d in range(1, height + 1):
                yield (self.m + d, j)

    def is_zero(self) -> bool:
        return not any(self.a) and not any(self.a_prime)

    def sort_key(self) -> tuple[int, ...]:
        return self.a + self.a_prime

    def _check_sig(self, other: HookShape) -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(f"sl({self.m},{self.n}) vs sl({other.m},{other.n})")

    def __add__(self, other: HookShape) -> HookShape:
        self._check_sig(other)
        return HookShape(
            self.sig,
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.a_prime, other.a_prime)),
        )

    def __sub__(self, other: HookShape) -> HookShape:
        """Componentwise difference; the result need not be covariant."""
        self._check_sig(other)
        if not shape_leq(other, self):
            raise NotComparable(f"{other} is not below {self}")
        return HookShape(
            self.sig,
            tuple(x - y for x, y in zip(self.a, other.a)),
            tuple(x - y for x, y in zip(self.a_prime, other.a_prime)),
        )

    def __str__(self) -> str:
        return f"({list(self.a)},{list(self.a_prime)})"


def zero_shape(sig: Signature) -> HookShape:
    return HookShape(sig, (0,) * sig.m, (0,) * max(sig.n - 1, 0))


def eta(sig: Signature) -> HookShape:
    """The shape of one full column of height ``m``."""
    return HookShape(sig, (0,) * (sig.m - 1) + (1,), (0,) * max(sig.n - 1, 0))


def validate_shape(sig: Signature, a, a_prime) -> HookShape:
    shape = HookShape(sig, tuple(a), tuple(a_prime))
    if not shape.covariant:
        raise CovarianceViolation(f"a_m = {shape.a[-1]} < sup{{j : a'_j != 0}} = {shape.j0}")
    return shape


def shape_leq(mu: HookShape, lam: HookShape) -> bool:
    if mu.sig != lam.sig:
        raise SignatureMismatch(f"sl({mu.m},{mu.n}) vs sl({lam.m},{lam.n})")
    return all(x <= y for x, y in zip(mu.a, lam.a)) and all(
        x <= y for x, y in zip(mu.a_prime, lam.a_prime)
    )


def _excess_index(lam: HookShape, mu: HookShape) -> int:
    if not shape_leq(mu, lam):
        raise NotComparable(f"{mu} is not below {lam}")
    return _sup(j for j, (x, y) in enumerate(zip(lam.a_prime, mu.a_prime), start=1) if x > y)


def diff_is_shape(lam: HookShape, mu: HookShape) -> bool:
    return lam.a[-1] - mu.a[-1] >= _excess_index(lam, mu)


def min_eta_padding(lam: HookShape, mu: HookShape) -> int:
    return max(0, _excess_index(lam, mu) - lam.a[-1] + mu.a[-1])


def dual_shape(lam: HookShape) -> HookShape:
    """Dominant-weight data of the dual module, for ``sl(n, m)``.

    The result is not required to be covariant.
    """
    m, n = lam.m, lam.n
    if n < 1:
        raise ValueError("dual shape needs n >= 1")
    a_dual = tuple(lam.a_prime[n - j - 1] for j in range(1, n)) + (lam.a[-1] - lam.j0,)
    a_prime_dual = tuple(lam.a[m - i - 1] for i in range(1, m))
    return HookShape(Signature(n, m), a_dual, a_prime_dual)


@dataclass(frozen=True)
class SuperWeight:
    """Weight ``sum eps_i e_i + sum delta_j d_j``, compared modulo the supertrace."""

    eps: tuple
    delta: tuple

    def canonical(self) -> SuperWeight:
        if self.delta:
            c = self.delta[-1]
            return SuperWeight(tuple(x + c for x in self.eps), tuple(y - c for y in self.delta))
        # n = 0: the trace direction is sum eps_i; pin eps_m to zero
        c = self.eps[-1]
        return SuperWeight(tuple(x - c for x in self.eps), ())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperWeight):
            return NotImplemented
        if len(self.eps) != len(other.eps) or len(self.delta) != len(other.delta):
            return False
        a, b = self.canonical(), other.canonical()
        return a.eps == b.eps and a.delta == b.delta

    def __hash__(self):
        c = self.canonical()
        return hash((c.eps, c.delta))

    def __add__(self, other: SuperWeight) -> SuperWeight:
        return SuperWeight(
            tuple(x + y for x, y in zip(self.eps, other.eps)),
            tuple(x + y for x, y in zip(self.delta, other.delta)),
        )

    def pair(self, other: SuperWeight):
        """The invariant form: ``(e_i, e_j) = d_ij``, ``(d_i, d_j) = -d_ij``."""
        return sum(x * y for x, y in zip(self.eps, other.eps)) - sum(
            x * y for x, y in zip(self.delta, other.delta)
        )


def supertrace_direction(sig: Signature) -> SuperWeight:
    return SuperWeight((1,) * sig.m, (-1,) * sig.n)


def odd_root(sig: Signature, i: int, j: int) -> SuperWeight:
    """The positive odd root ``e_i - d_j``."""
    eps = tuple(1 if k == i else 0 for k in range(1, sig.m + 1))
    delta = tuple(-1 if k == j else 0 for k in range(1, sig.n + 1))
    return SuperWeight(eps, delta)


def rho(sig: Signature) -> SuperWeight:
    m, n = sig.m, sig.n
    return SuperWeight(
        tuple(Fraction(m - n - 2 * i + 1, 2) for i in range(1, m + 1)),
        tuple(Fraction(m + n - 2 * j + 1, 2) for j in range(1, n + 1)),
    )


def shape_to_weight(lam: HookShape) -> SuperWeight:
    delta = lam.below + (0,) if lam.n >= 1 else ()
    return SuperWeight(lam.rows, delta)


def weight_is_typical(sig: Signature, weight: SuperWeight) -> bool:
    shifted = weight + rho(sig)
    return all(
        shifted.pair(odd_root(sig, i, j)) != 0
        for i in range(1, sig.m + 1)
        for j in range(1, sig.n + 1)
    )


def is_typical(lam: HookShape) -> bool:
    return weight_is_typical(lam.sig, shape_to_weight(lam))


def enumerate_shapes(sig: Signature, max_boxes: int) -> list[HookShape]:
    """All covariant shapes with at most ``max_boxes`` boxes, sorted on ``a + a'``."""
    m, k = sig.m, max(sig.n - 1, 0)
    # a column of height i costs i boxes; a below-line row of length j costs j
    weights = list(range(1, m + 1)) + list(range(1, k + 1))
    found = []

    def rec(pos: int, budget: int, acc: list[int]):
        if pos == len(weights):
            shape = HookShape(sig, tuple(acc[:m]), tuple(acc[m:]))
            if shape.covariant:
                found.append(shape)
            return
        for x in range(budget // weights[pos] + 1):
            acc.append(x)
            rec(pos + 1, budget - x * weights[pos], acc)
            acc.pop()

    rec(0, max_boxes, [])
    found.sort(key=HookShape.sort_key)
    return found


def shapes_below(lam: HookShape) -> list[HookShape]:
    """All covariant ``mu <= lam`` in canonical order."""
    ranges = [range(x + 1) for x in lam.a + lam.a_prime]
    out = []
    for combo in product(*ranges):
        mu = HookShape(lam.sig, combo[: lam.m], combo[lam.m:])
        if mu.covariant:
            out.append(mu)
    out.sort(key=HookShape.sort_key)
    return out
