"""Exhaustive checks, one suite per acceptance criterion.

Every suite takes ``max_boxes`` (the diagram size bound of its scope) and
returns a :class:`SuiteResult`. ``max_boxes=0`` makes the exhaustive suites
vacuous; the worked-example suite does not depend on it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from . import classical
from .errors import BudgetExceeded, InconsistentSystem
from .extraction import (
    extractable_pairs,
    largest_extractable_pair,
    largest_pair_by_growth,
    push,
    verify_bijection,
)
from .hookshapes import HookShape, Signature, enumerate_shapes, is_typical, validate_shape
from .superspace import (
    basis_rank,
    eij_action,
    garnir_apply,
    hplucker_check,
    plucker_check,
    reduced_identity_check,
    row_symmetrize,
    star_product,
    straighten,
    word_tensor,
    young_vector,
)
from .tableaux import (
    HookTableau,
    all_fillings,
    enumerate_semistandard,
    is_semistandard,
    trivial_tableau,
)
from .taquin import SkewTableau, maxjdt, outer_corners, render_trace, skew_from_pair, skew_from_shapes

BIJECTION_SIGS = [Signature(1, 2), Signature(2, 1), Signature(2, 2), Signature(1, 3)]
TENSOR_SIGS = [Signature(1, 2), Signature(2, 1), Signature(2, 2)]
REDUCED_SIGS = [Signature(1, 2), Signature(2, 1)]
KAC_SIGS = [Signature(1, 1), Signature(1, 2), Signature(2, 1), Signature(2, 2), Signature(1, 3)]


@dataclass
class SuiteResult:
    name: str
    criterion: int
    passed: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, detail) -> None:
        self.passed = False
        if len(self.failures) < 10:
            self.failures.append(str(detail))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "criterion": self.criterion,
            "pass": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def _tableaux(sigs, max_boxes):
    for sig in sigs:
        for lam in enumerate_shapes(sig, max_boxes):
            for T in enumerate_semistandard(lam):
                yield T


def suite_bijection(max_boxes: int = 6) -> SuiteResult:
    res = SuiteResult("bijection", 1)
    for sig in BIJECTION_SIGS:
        for lam in enumerate_shapes(sig, max_boxes):
            res.checked += 1
            r = verify_bijection(lam)
            if not r["pass"]:
                total = sum(k for _, k in r["qs_counts"])
                res.fail(f"{lam}: |SS|={r['ss_count']} vs sum |QS|={total}, {len(r['unreached'])} unreached")
    return res


def suite_push_image(max_boxes: int = 6) -> SuiteResult:
    """The part of the bijection claim that survives: push is injective onto pullable ``U``."""
    res = SuiteResult("push-image", 1)
    for sig in BIJECTION_SIGS:
        for lam in enumerate_shapes(sig, max_boxes):
            res.checked += 1
            r = verify_bijection(lam)
            if not (r["injective"] and r["lands"] and r["round_trip"] and r["image_exact"]):
                res.fail(lam)
    return res


def suite_push_maxjdt(max_boxes: int = 6) -> SuiteResult:
    res = SuiteResult("push-maxjdt", 2)
    for T in _tableaux(BIJECTION_SIGS, max_boxes):
        res.checked += 1
        if maxjdt(skew_from_pair(T, largest_extractable_pair(T))) != push(T):
            res.fail(T)
    return res


def suite_pair_join(max_boxes: int = 6) -> SuiteResult:
    res = SuiteResult("pair-join", 3)
    for T in _tableaux(BIJECTION_SIGS, max_boxes):
        pairs = extractable_pairs(T)
        extractable = set(pairs)
        for p, q in combinations(pairs, 2):
            res.checked += 1
            if p.join(q) not in extractable:
                res.fail((T, p, q))
        if largest_pair_by_growth(T) != largest_extractable_pair(T):
            res.fail((T, "greedy growth disagrees with join"))
    return res


# frozen worked examples ------------------------------------------------------

_SL23 = Signature(2, 3)

# sl(2,3), star at (2,1); "." marks inner boxes, "*" the star
TRACE_ONE = (
    {(1, 2): 1, (1, 3): 2, (2, 2): 2, (3, 1): 3, (4, 1): 3, (5, 1): 4, (3, 2): 4, (4, 2): 5},
    [
        [". 1 2", "* 2", "3 4", "3 5", "4"],
        [". 1 2", "2 *", "3 4", "3 5", "4"],
        [". 1 2", "2 4", "3 *", "3 5", "4"],
        [". 1 2", "2 4", "3 5", "3 *", "4"],
        [". 1 2", "2 4", "3 5", "3", "4"],
    ],
)
TRACE_TWO = (
    {(1, 2): 1, (1, 3): 2, (2, 2): 4, (3, 1): 3, (4, 1): 4, (5, 1): 5, (3, 2): 5, (4, 2): 5},
    [
        [". 1 2", "* 4", "3 5", "4 5", "5"],
        [". 1 2", "3 4", "* 5", "4 5", "5"],
        [". 1 2", "3 4", "4 5", "* 5", "5"],
        [". 1 2", "3 4", "4 5", "5 *", "5"],
        [". 1 2", "3 4", "4 5", "5", "5"],
    ],
)


def worked_examples() -> list[tuple[str, Callable[[], bool]]]:
    def push_m4():
        lam = validate_shape(Signature(4, 0), (2, 2, 1, 0), ())
        T = HookTableau(lam, ((1, 1, 2, 2, 3), (2, 3, 4), (4,)), ())
        U = push(T)
        return is_semistandard(T) and U.plus == ((2, 2, 3), (3, 4), (4,), ())

    def row_symmetrizer():
        sig = Signature(2, 2)
        lam = validate_shape(sig, (0, 2), (1,))
        T = HookTableau(lam, ((2, 2), (3, 4)), ((3,),))
        T2 = HookTableau(lam, ((2, 2), (4, 3)), ((3,),))
        expected = (word_tensor(T) - word_tensor(T2)).scale(2)
        return T.column_word() == (2, 3, 3, 2, 4) and row_symmetrize(word_tensor(T), lam) == expected

    def trace(data):
        entries, frames = data
        S = SkewTableau(_SL23, frozenset({(1, 1), (2, 1)}), entries)
        return S.is_semistandard() and render_trace(S, (2, 1)) == frames

    def out_order():
        lam = validate_shape(_SL23, (1, 3), (2, 3))
        mu = HookShape(_SL23, (1, 1), (1, 1))  # not covariant; built unchecked
        inner = set(mu.boxes())
        entries = {c: 5 for c in lam.boxes() if c not in inner}
        S = skew_from_shapes(lam, mu, entries)
        return outer_corners(S) == [(2, 1), (1, 2), (3, 2), (4, 1)]

    return [
        ("push example, m=4", push_m4),
        ("row symmetrizer e^T.a = 2(e^T - e^T')", row_symmetrizer),
        ("sjdt trace one", lambda: trace(TRACE_ONE)),
        ("sjdt trace two", lambda: trace(TRACE_TWO)),
        ("outer corner order", out_order),
    ]


def suite_worked_examples(max_boxes: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("worked-examples", 4)
    for name, check in worked_examples():
        res.checked += 1
        if not check():
            res.fail(name)
    return res


def suite_basis(max_boxes: int = 6, filling_boxes: int = 5) -> SuiteResult:
    res = SuiteResult("basis", 5)
    for sig in TENSOR_SIGS:
        for lam in enumerate_shapes(sig, max_boxes):
            res.checked += 1
            rank, count = basis_rank(lam), len(enumerate_semistandard(lam))
            if rank != count:
                res.fail(f"{lam}: rank {rank} != {count}")
        for lam in enumerate_shapes(sig, min(max_boxes, filling_boxes)):
            for W in all_fillings(lam):
                if is_semistandard(W):
                    continue
                res.checked += 1
                try:
                    straighten(W)
                except InconsistentSystem as exc:
                    res.fail(f"{W}: {exc}")
    return res


def relation_instances(T: HookTableau):
    """Admissible ``(kind, args)`` for the column and row exchange relations of ``T``."""
    heights = T.shape.column_heights
    for j in range(1, len(heights)):
        for q in range(1, heights[j] + 1):
            yield "plucker", (j, q)
    m, cells = T.m, T.cells
    rows = sorted({i for i, _ in cells})
    for i in rows:
        upper = [c for c in cells if c[0] == i]
        lower = [c for c in cells if c[0] == i + 1]
        if all(cells[c] > m for c in upper + lower):
            yield "hplucker", (i,)


def garnir_instances(T: HookTableau):
    heights = T.shape.column_heights
    for j in range(1, len(heights)):
        for p in range(heights[j - 1] + 1):
            for q in range(heights[j] + 1):
                if p + q > heights[j - 1]:
                    yield j, p, q


def suite_relations(max_boxes: int = 6, garnir_boxes: int = 5) -> SuiteResult:
    res = SuiteResult("relations", 6)
    for T in _tableaux(TENSOR_SIGS, max_boxes):
        for kind, args in relation_instances(T):
            res.checked += 1
            ok = plucker_check(T, *args) if kind == "plucker" else hplucker_check(T, *args)
            if not ok:
                res.fail((kind, T, args))
    for T in _tableaux(TENSOR_SIGS, min(max_boxes, garnir_boxes)):
        for args in garnir_instances(T):
            res.checked += 1
            if not garnir_apply(T, *args).is_zero():
                res.fail(("garnir", T, args))
    return res


def suite_highest_weight(max_boxes: int = 6, product_boxes: int = 8) -> SuiteResult:
    res = SuiteResult("highest-weight-product", 7)
    for sig in BIJECTION_SIGS:
        shapes = enumerate_shapes(sig, max(max_boxes, 0))
        for lam in shapes:
            v = young_vector(trivial_tableau(lam))
            if v.is_zero():
                res.fail(f"v_{lam} vanishes")
            for i in range(1, sig.size):
                res.checked += 1
                if not eij_action(i, i + 1, v).is_zero():
                    res.fail(f"E_{i},{i + 1} v_{lam} != 0")
        pair_bound = min(product_boxes, max_boxes + 2) if max_boxes else 0
        shapes = enumerate_shapes(sig, pair_bound)
        for lam in shapes:
            for mu in shapes:
                if lam.size + mu.size > pair_bound:
                    continue
                res.checked += 1
                got = star_product(trivial_tableau(lam), trivial_tableau(mu), shortcut=False)
                if got.terms != {trivial_tableau(lam + mu): Fraction(1)}:
                    res.fail(f"S0_{lam} * S0_{mu} = {got}")
    return res


def classical_count(rows: tuple[int, ...], letters: int) -> int:
    """Number of semistandard tableaux with the given row lengths over ``letters`` letters."""
    if letters == 0:
        return 1 if not any(rows) else 0
    rows = tuple(rows) + (0,) * max(0, letters - len(rows))
    if any(rows[letters:]):
        return 0
    rows = rows[:letters]
    a = [rows[i] - (rows[i + 1] if i + 1 < letters else 0) for i in range(letters)]
    return len(enumerate_semistandard(validate_shape(Signature(letters, 0), a, ())))


def kac_dimension(lam: HookShape) -> int:
    m, n = lam.m, lam.n
    return 2 ** (m * n) * classical_count(lam.rows, m) * classical_count(lam.below + (0,), n)


def suite_kac(max_boxes: int = 6) -> SuiteResult:
    res = SuiteResult("kac-dimension", 8)
    for sig in KAC_SIGS:
        for lam in enumerate_shapes(sig, max_boxes):
            if not is_typical(lam):
                continue
            res.checked += 1
            count, expected = len(enumerate_semistandard(lam)), kac_dimension(lam)
            if count != expected:
                res.fail(f"{lam}: {count} != {expected}")
    sl11 = Signature(1, 1)
    for k in range(1, max_boxes + 1):
        res.checked += 1
        if len(enumerate_semistandard(validate_shape(sl11, (k,), ()))) != 2:
            res.fail(f"sl(1,1) row of length {k}")
    return res


def suite_reduced_identity(max_boxes: int = 6) -> SuiteResult:
    res = SuiteResult("reduced-identity", 9)
    for T in _tableaux(REDUCED_SIGS, max_boxes):
        try:
            ok = reduced_identity_check(T, budget=max_boxes, shortcut=False)
        except BudgetExceeded:
            continue
        res.checked += 1
        if not ok:
            res.fail(T)
    return res


def suite_classical(max_boxes: int = 6, max_m: int = 4) -> SuiteResult:
    res = SuiteResult("classical", 10)
    for m in range(1, max_m + 1):
        for lam in enumerate_shapes(Signature(m, 0), max_boxes):
            ours = enumerate_semistandard(lam)
            theirs = classical.ssyt(lam.rows, m)
            if sorted(T.plus for T in ours) != sorted(theirs):
                res.fail(f"{lam}: semistandard sets differ")
            for T in ours:
                rows = T.plus
                res.checked += 1
                if push(T).plus != classical.push(rows):
                    res.fail(("push", T))
                pair = largest_extractable_pair(T)
                if maxjdt(skew_from_pair(T, pair)).plus != classical.rectify_largest_first(rows, pair.b):
                    res.fail(("jeu de taquin", T))
                heights = lam.column_heights
                for j in range(1, len(heights)):
                    for q in range(1, heights[j] + 1):
                        if plucker_check(T, j, q) != classical.plucker_holds(rows, j, q):
                            res.fail(("plucker", T, j, q))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "bijection": suite_bijection,
    "push-maxjdt": suite_push_maxjdt,
    "pair-join": suite_pair_join,
    "worked-examples": suite_worked_examples,
    "basis": suite_basis,
    "relations": suite_relations,
    "highest-weight-product": suite_highest_weight,
    "kac-dimension": suite_kac,
    "reduced-identity": suite_reduced_identity,
    "classical": suite_classical,
}


def run_suite(name: str, max_boxes: Optional[int] = None) -> SuiteResult:
    fn = SUITES[name]
    start = time.perf_counter()
    res = fn() if max_boxes is None else fn(max_boxes)
    res.seconds = time.perf_counter() - start
    return res


def run_all(max_boxes: Optional[int] = None) -> list[SuiteResult]:
    return [run_suite(name, max_boxes) for name in SUITES]
