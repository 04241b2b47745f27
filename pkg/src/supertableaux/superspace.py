"""Exact tensor realization of tableau vectors.

A :class:`SuperTensor` is a sparse rational combination of words over the
graded letters ``1..m+n`` (letters ``<= m`` even, the rest odd). Symmetric
groups act on the right on word positions with the Koszul sign, and the
Young vector of a filling is ``(e^T . a_lam) . b_lam`` for the column-major
standard numbering of its diagram.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Mapping, Sequence

from more_itertools import distinct_permutations

from .errors import (
    BudgetExceeded,
    InconsistentSystem,
    IndexOutOfRange,
    LengthMismatch,
    PreconditionViolation,
)
from .extraction import push
from .hookshapes import HookShape, Signature, eta, min_eta_padding
from .tableaux import (
    FormalCombination,
    HookTableau,
    concat,
    enumerate_semistandard,
    from_cells,
    from_column_word,
    is_semistandard,
    standard_filling,
    trivial_tableau,
)

DEFAULT_BUDGET = 8

Word = tuple[int, ...]


@dataclass(frozen=True)
class SuperTensor:
    sig: Signature
    N: int
    terms: Mapping[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            if len(w) != self.N:
                raise LengthMismatch(f"word {w} does not have length {self.N}")
            if c != 0:
                clean[tuple(w)] = Fraction(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def word(cls, sig: Signature, w: Sequence[int], coeff=1) -> SuperTensor:
        return cls(sig, len(w), {tuple(w): Fraction(coeff)})

    @classmethod
    def zero(cls, sig: Signature, N: int) -> SuperTensor:
        return cls(sig, N, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def _check(self, other: SuperTensor) -> None:
        if self.N != other.N or self.sig != other.sig:
            raise LengthMismatch("tensors of different length or signature")

    def __add__(self, other: SuperTensor) -> SuperTensor:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return SuperTensor(self.sig, self.N, out)

    def __neg__(self) -> SuperTensor:
        return self.scale(-1)

    def __sub__(self, other: SuperTensor) -> SuperTensor:
        return self + (-other)

    def scale(self, c) -> SuperTensor:
        return SuperTensor(self.sig, self.N, {w: x * c for w, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperTensor):
            return NotImplemented
        return (self.sig, self.N, self.terms) == (other.sig, other.N, other.terms)

    def __hash__(self):
        return hash((self.sig, self.N, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{w}" for w, c in self.items())


def tensor_sum(tensors: Iterable[SuperTensor], sig: Signature, N: int) -> SuperTensor:
    out: dict[Word, Fraction] = {}
    for t in tensors:
        for w, c in t.terms.items():
            out[w] = out.get(w, 0) + c
    return SuperTensor(sig, N, out)


def koszul_sign(m: int, word: Word, sigma: Sequence[int]) -> int:
    """Sign of the permutation that ``sigma`` induces on the odd letters of ``word``."""
    moved = [s for s in sigma if word[s - 1] > m]
    inversions = sum(1 for a, b in combinations(moved, 2) if a > b)
    return -1 if inversions % 2 else 1


def permutation_sign(sigma: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(sigma, 2) if a > b)
    return -1 if inversions % 2 else 1


def act_word(m: int, word: Word, sigma: Sequence[int]) -> tuple[int, Word]:
    """``word . sigma`` as ``(sign, new_word)``; position ``k`` receives letter ``sigma(k)``."""
    return koszul_sign(m, word, sigma), tuple(word[s - 1] for s in sigma)


def act_permutation(t: SuperTensor, sigma: Sequence[int]) -> SuperTensor:
    sigma = tuple(sigma)
    if len(sigma) != t.N or sorted(sigma) != list(range(1, t.N + 1)):
        raise LengthMismatch(f"{sigma} is not a permutation of 1..{t.N}")
    out: dict[Word, Fraction] = {}
    for w, c in t.terms.items():
        sign, v = act_word(t.sig.m, w, sigma)
        out[v] = out.get(v, 0) + sign * c
    return SuperTensor(t.sig, t.N, out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``sigma o tau``, so that ``(t . sigma) . tau == t . (sigma o tau)``."""
    return tuple(sigma[k - 1] for k in tau)


def transpositions(N: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """The product of disjoint transpositions on ``1..N``."""
    sigma = list(range(1, N + 1))
    for x, y in pairs:
        sigma[x - 1], sigma[y - 1] = sigma[y - 1], sigma[x - 1]
    return tuple(sigma)


def word_tensor(T: HookTableau) -> SuperTensor:
    return SuperTensor.word(T.shape.sig, T.column_word())


def row_groups(lam: HookShape) -> list[list[int]]:
    """Word positions of each row of the diagram, via the standard numbering."""
    std = standard_filling(lam)
    rows: dict[int, list[int]] = {}
    for (i, j), k in sorted(std.items()):
        rows.setdefault(i, []).append(k)
    return [rows[i] for i in sorted(rows)]


def column_groups(lam: HookShape) -> list[list[int]]:
    out = []
    offset = 0
    for h in lam.column_heights:
        out.append(list(range(offset + 1, offset + h + 1)))
        offset += h
    return out


def _matching(word: Word, target: Word) -> tuple[int, ...]:
    """Some ``pi`` with ``target[k] == word[pi(k)]``, taking equal letters in order."""
    unused: dict[int, list[int]] = {}
    for k, x in enumerate(word, start=1):
        unused.setdefault(x, []).append(k)
    for stack in unused.values():
        stack.reverse()
    return tuple(unused[x].pop() for x in target)


@lru_cache(maxsize=None)
def _block_sum(m: int, block: Word, signed: bool) -> tuple[tuple[Word, int], ...]:
    """(Signed) sum over all permutations of a contiguous block, merged by arrangement.

    The stabilizer of ``block`` contributes a common factor: it kills the sum
    when an odd letter repeats (unsigned) or an even letter repeats (signed),
    and is a product of factorials otherwise.
    """
    stab = 1
    for x, k in Counter(block).items():
        if k > 1 and (x > m) != signed:
            return ()
        stab *= factorial(k)
    out = []
    for arr in distinct_permutations(block):
        pi = _matching(block, arr)
        sign = koszul_sign(m, block, pi) * (permutation_sign(pi) if signed else 1)
        out.append((tuple(arr), sign * stab))
    return tuple(out)


def _apply_blocks(t: SuperTensor, sizes: Sequence[int], signed: bool) -> SuperTensor:
    """Act by the product of block (anti)symmetrizers over consecutive blocks."""
    m = t.sig.m
    cuts = [0]
    for s in sizes:
        cuts.append(cuts[-1] + s)
    out: dict[Word, Fraction] = {}
    for w, c in t.terms.items():
        partial = [((), c)]
        for lo, hi in zip(cuts, cuts[1:]):
            pieces = _block_sum(m, w[lo:hi], signed)
            partial = [(u + arr, x * k) for u, x in partial for arr, k in pieces]
            if not partial:
                break
        for u, x in partial:
            out[u] = out.get(u, 0) + x
    return SuperTensor(t.sig, t.N, out)


def _inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for k, s in enumerate(sigma, start=1):
        inv[s - 1] = k
    return tuple(inv)


def row_symmetrize(t: SuperTensor, lam: HookShape) -> SuperTensor:
    """``t . a_lam``; rows are made contiguous by conjugating with the row-major order."""
    groups = row_groups(lam)
    rho = tuple(k for g in groups for k in g)
    t = act_permutation(t, rho)
    t = _apply_blocks(t, [len(g) for g in groups], signed=False)
    return act_permutation(t, _inverse(rho))


def column_antisymmetrize(t: SuperTensor, lam: HookShape) -> SuperTensor:
    """``t . b_lam``; columns are already contiguous in the column-major word."""
    return _apply_blocks(t, lam.column_heights, signed=True)


def symmetrize_positions(t: SuperTensor, positions: Sequence[int], signed: bool) -> SuperTensor:
    """Brute-force (signed) sum over all permutations of ``positions``."""
    if len(positions) < 2:
        return t
    m, N = t.sig.m, t.N
    base = list(range(1, N + 1))
    sigmas = []
    for perm in permutations(positions):
        sigma = list(base)
        for src, dst in zip(positions, perm):
            sigma[src - 1] = dst
        sigmas.append((permutation_sign(perm) if signed else 1, tuple(sigma)))
    out: dict[Word, Fraction] = {}
    for w, c in t.terms.items():
        for sgn, sigma in sigmas:
            sign, v = act_word(m, w, sigma)
            out[v] = out.get(v, 0) + sgn * sign * c
    return SuperTensor(t.sig, N, out)


def young_tensor(t: SuperTensor, lam: HookShape) -> SuperTensor:
    """``(t . a_lam) . b_lam``."""
    return column_antisymmetrize(row_symmetrize(t, lam), lam)


def young_tensor_naive(t: SuperTensor, lam: HookShape) -> SuperTensor:
    """Same as :func:`young_tensor`, one permutation at a time."""
    for group in row_groups(lam):
        t = symmetrize_positions(t, group, signed=False)
    for group in column_groups(lam):
        t = symmetrize_positions(t, group, signed=True)
    return t


@lru_cache(maxsize=None)
def young_vector(T: HookTableau) -> SuperTensor:
    return young_tensor(word_tensor(T), T.shape)


def highest_weight_vector(lam: HookShape) -> SuperTensor:
    return young_vector(trivial_tableau(lam))


def eij_action(i: int, j: int, t: SuperTensor) -> SuperTensor:
    """``E_ij`` acting as a superderivation on each word."""
    m = t.sig.m
    parity = (i > m) != (j > m)
    out: dict[Word, Fraction] = {}
    for w, c in t.terms.items():
        odd_left = 0
        for k, x in enumerate(w):
            if x == j:
                sign = -1 if parity and odd_left % 2 else 1
                v = w[:k] + (i,) + w[k + 1:]
                out[v] = out.get(v, 0) + sign * c
            if x > m:
                odd_left += 1
    return SuperTensor(t.sig, t.N, out)


def weight_of_word(sig: Signature, w: Word) -> tuple[tuple[int, ...], tuple[int, ...]]:
    eps = tuple(w.count(k) for k in range(1, sig.m + 1))
    delta = tuple(w.count(k) for k in range(sig.m + 1, sig.size + 1))
    return eps, delta


# exact linear algebra --------------------------------------------------------


def _check_budget(lam: HookShape, budget: int) -> None:
    if lam.size > budget:
        raise BudgetExceeded(f"{lam.size} boxes exceeds the tensor budget of {budget}")


def basis_matrix(lam: HookShape, budget: int = DEFAULT_BUDGET):
    """Rows ``young_vector(T)`` for ``T`` in ``SS^lam``; returns ``(tableaux, words, rows)``.

    ``rows[r]`` maps word index to coefficient.
    """
    _check_budget(lam, budget)
    tableaux = enumerate_semistandard(lam)
    vectors = [young_vector(T) for T in tableaux]
    words = sorted({w for v in vectors for w in v.terms})
    index = {w: k for k, w in enumerate(words)}
    rows = [{index[w]: c for w, c in v.terms.items()} for v in vectors]
    return tableaux, words, rows


class _Echelon:
    """Incremental row reduction that remembers each row as a combination of inputs."""

    def __init__(self):
        self.pivots: list = []
        self.rows: list[dict] = []
        self.combos: list[dict] = []

    def reduce(self, vec: Mapping, combo: Mapping) -> tuple[dict, dict]:
        vec, combo = dict(vec), dict(combo)
        for p, row, comb in zip(self.pivots, self.rows, self.combos):
            c = vec.get(p)
            if not c:
                continue
            f = c / row[p]
            for k, x in row.items():
                y = vec.get(k, 0) - f * x
                if y:
                    vec[k] = y
                else:
                    vec.pop(k, None)
            for k, x in comb.items():
                y = combo.get(k, 0) - f * x
                if y:
                    combo[k] = y
                else:
                    combo.pop(k, None)
        return vec, combo

    def add(self, vec: Mapping, label) -> bool:
        """Insert a row; returns False if it was dependent on earlier rows."""
        vec, combo = self.reduce(vec, {label: Fraction(1)})
        if not vec:
            return False
        self.pivots.append(min(vec))
        self.rows.append(vec)
        self.combos.append(combo)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def exact_rank(rows: Sequence[Mapping]) -> int:
    ech = _Echelon()
    for r, row in enumerate(rows):
        ech.add(row, r)
    return ech.rank


@lru_cache(maxsize=None)
def _solver(lam: HookShape):
    tableaux, words, rows = basis_matrix(lam, budget=lam.size)
    ech = _Echelon()
    for r, row in enumerate(rows):
        if not ech.add(row, r):
            raise InconsistentSystem(f"semistandard vectors of {lam} are dependent")
    return tableaux, {w: k for k, w in enumerate(words)}, ech


def basis_rank(lam: HookShape, budget: int = DEFAULT_BUDGET) -> int:
    _, _, rows = basis_matrix(lam, budget)
    return exact_rank(rows)


def decompose(t: SuperTensor, lam: HookShape, budget: int = DEFAULT_BUDGET) -> FormalCombination:
    """Coordinates of ``t`` in the basis ``{young_vector(T) : T in SS^lam}``."""
    _check_budget(lam, budget)
    tableaux, index, ech = _solver(lam)
    vec = {}
    for w, c in t.terms.items():
        if w not in index:
            raise InconsistentSystem(f"word {w} lies outside the span of SS^{lam}")
        vec[index[w]] = c
    residue, combo = ech.reduce(vec, {})
    if residue:
        raise InconsistentSystem(f"tensor is not in the span of SS^{lam}")
    # the reduction subtracted f * row, so the coordinates are the negatives
    return FormalCombination({tableaux[r]: -c for r, c in combo.items()})


def straighten(W: HookTableau, budget: int = DEFAULT_BUDGET, shortcut: bool = True) -> FormalCombination:
    _check_budget(W.shape, budget)
    if shortcut and is_semistandard(W):
        return FormalCombination.single(W)
    return decompose(young_vector(W), W.shape, budget)


def straighten_combination(
    terms: Iterable[tuple[HookTableau, Fraction]], budget: int = DEFAULT_BUDGET, shortcut: bool = True
) -> FormalCombination:
    out: dict[HookTableau, Fraction] = {}
    for W, c in terms:
        for U, x in straighten(W, budget, shortcut).terms.items():
            out[U] = out.get(U, 0) + c * x
    return FormalCombination(out)


def combination_tensor(comb: FormalCombination, lam: HookShape) -> SuperTensor:
    return tensor_sum(
        (young_vector(T).scale(c) for T, c in comb.terms.items()), lam.sig, lam.size
    )


def star_product(
    S: HookTableau, T: HookTableau, budget: int = DEFAULT_BUDGET, shortcut: bool = True
) -> FormalCombination:
    return straighten(concat(S, T), budget, shortcut)


def star_combinations(
    left: FormalCombination, right: FormalCombination, budget: int = DEFAULT_BUDGET
) -> FormalCombination:
    out: dict[HookTableau, Fraction] = {}
    for S, x in left.terms.items():
        for T, y in right.terms.items():
            for U, z in star_product(S, T, budget).terms.items():
                out[U] = out.get(U, 0) + x * y * z
    return FormalCombination(out)


def eij_on_tableau(i: int, j: int, T: HookTableau, budget: int = DEFAULT_BUDGET) -> FormalCombination:
    _check_budget(T.shape, budget)
    return decompose(eij_action(i, j, young_vector(T)), T.shape, budget)


def replace_entry(T: HookTableau, cell, value: int) -> HookTableau:
    cells = dict(T.cells)
    cells[cell] = value
    return from_cells(T.shape, cells)


def eij_by_replacement(
    i: int, j: int, T: HookTableau, budget: int = DEFAULT_BUDGET, signed: bool = True
) -> FormalCombination:
    """Entry-replacement formula for ``E_ij . e_T``, straightened; a cross-check only.

    With ``signed`` each replaced box carries the Koszul sign of the odd
    letters before it in the column word (only matters for odd ``E_ij``).
    """
    m = T.m
    odd = (i > m) != (j > m)
    std = standard_filling(T.shape)
    word = T.column_word()
    terms = []
    for cell, x in T.cells.items():
        if x != j:
            continue
        odd_left = sum(1 for y in word[: std[cell] - 1] if y > m)
        sign = -1 if signed and odd and odd_left % 2 else 1
        terms.append((replace_entry(T, cell, i), Fraction(sign)))
    return straighten_combination(terms, budget)


# relations ------------------------------------------------------------------


def _column_positions(T: HookTableau, j: int) -> list[int]:
    groups = column_groups(T.shape)
    if not 1 <= j <= len(groups):
        raise IndexOutOfRange(f"column {j} outside 1..{len(groups)}")
    return groups[j - 1]


def swap_word(T: HookTableau, sigma: Sequence[int]) -> HookTableau:
    """The filling whose column word is the (unsigned) permuted word of ``T``."""
    w = T.column_word()
    return from_column_word(T.shape, (w[s - 1] for s in sigma))


def plucker_terms(T: HookTableau, j: int, q: int) -> list[tuple[int, ...]]:
    """Permutations ``X <-> Y`` with ``X`` running over ``q``-subsets of column ``j``."""
    left = _column_positions(T, j)
    right = _column_positions(T, j + 1)
    if not 1 <= q <= len(right):
        raise IndexOutOfRange(f"q = {q} outside 1..{len(right)}")
    Y = right[:q]
    return [transpositions(T.shape.size, zip(X, Y)) for X in combinations(left, q)]


def plucker_check(T: HookTableau, j: int, q: int) -> bool:
    """``sum_X e_T . (X <-> Y) == e_T`` with ``Y`` the top ``q`` boxes of column ``j+1``."""
    eT = young_vector(T)
    total = tensor_sum((act_permutation(eT, s) for s in plucker_terms(T, j, q)), eT.sig, eT.N)
    return total == eT


def hplucker_terms(T: HookTableau, i: int) -> list[HookTableau]:
    m = T.m
    upper = sorted(c for c in T.cells if c[0] == i)
    lower = sorted(c for c in T.cells if c[0] == i + 1)
    if any(T.cells[c] <= m for c in upper + lower):
        raise PreconditionViolation(f"rows {i}, {i + 1} must only hold entries > {m}")
    if not lower:
        return [T]
    t1 = lower[0]
    out = []
    for s in upper:
        cells = dict(T.cells)
        cells[s], cells[t1] = cells[t1], cells[s]
        out.append(from_cells(T.shape, cells))
    return out


def hplucker_check(T: HookTableau, i: int) -> bool:
    """``sum_j e_{T.(s_j <-> t_1)} == e_T`` for two all-odd rows ``i, i+1``."""
    eT = young_vector(T)
    terms = hplucker_terms(T, i)
    total = tensor_sum((young_vector(U) for U in terms), eT.sig, eT.N)
    return total == eT


def garnir_terms(T: HookTableau, j: int, p: int, q: int) -> list[tuple[int, tuple[int, ...]]]:
    """Signed exchanges ``(-1)^r (X' <-> Y')`` of ``G_{X,Y}``, ``X``/``Y`` the tops of columns ``j``/``j+1``."""
    left = _column_positions(T, j)
    right = _column_positions(T, j + 1)
    if not (0 <= p <= len(left) and 0 <= q <= len(right)):
        raise IndexOutOfRange(f"p = {p}, q = {q} do not fit columns {j}, {j + 1}")
    if p + q <= len(left):
        raise PreconditionViolation(f"need p + q > {len(left)}, got {p} + {q}")
    X, Y = left[:p], right[:q]
    out = []
    for r in range(min(p, q) + 1):
        for Xr in combinations(X, r):
            for Yr in combinations(Y, r):
                out.append((-1 if r % 2 else 1, transpositions(T.shape.size, zip(Xr, Yr))))
    return out


def garnir_tensor(T: HookTableau, j: int, p: int, q: int) -> SuperTensor:
    eT = young_vector(T)
    return tensor_sum(
        (act_permutation(eT, s).scale(sign) for sign, s in garnir_terms(T, j, p, q)), eT.sig, eT.N
    )


def garnir_apply(T: HookTableau, j: int, p: int, q: int, budget: int = DEFAULT_BUDGET) -> FormalCombination:
    """``G_{X,Y}`` applied to ``e_T``, expressed in the semistandard basis."""
    _check_budget(T.shape, budget)
    return decompose(garnir_tensor(T, j, p, q), T.shape, budget)


def reduced_identity_check(T: HookTableau, budget: int = DEFAULT_BUDGET, shortcut: bool = True) -> bool:
    """``S0_{k eta} * T == S0_{k eta + lam - mu} * push(T)`` with ``mu`` the shape of ``push(T)``."""
    U = push(T)
    lam, mu = T.shape, U.shape
    pad = eta(lam.sig)
    k = min_eta_padding(lam, mu)
    k_eta = HookShape(lam.sig, tuple(k * x for x in pad.a), pad.a_prime)
    _check_budget(k_eta + lam, budget)
    left = straighten(concat(trivial_tableau(k_eta), T), budget, shortcut)
    right = straighten(concat(trivial_tableau(k_eta + (lam - mu)), U), budget, shortcut)
    return left == right
