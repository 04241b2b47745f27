from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from supertableaux.errors import BudgetExceeded, IndexOutOfRange, LengthMismatch, PreconditionViolation
from supertableaux.extraction import push
from supertableaux.hookshapes import Signature, enumerate_shapes, zero_shape
from supertableaux.superspace import (
    SuperTensor,
    act_permutation,
    act_word,
    basis_matrix,
    basis_rank,
    combination_tensor,
    compose,
    eij_action,
    eij_by_replacement,
    eij_on_tableau,
    garnir_apply,
    garnir_tensor,
    hplucker_check,
    hplucker_terms,
    plucker_check,
    reduced_identity_check,
    row_symmetrize,
    star_combinations,
    star_product,
    straighten,
    word_tensor,
    young_tensor,
    young_tensor_naive,
    young_vector,
)
from supertableaux.tableaux import (
    FormalCombination,
    all_fillings,
    concat,
    empty_tableau,
    enumerate_semistandard,
    is_semistandard,
    trivial_tableau,
)

from conftest import SL12, SL22, shape, tableau

SIGS = [Signature(1, 1), Signature(1, 2), Signature(2, 1), Signature(2, 2)]


def words(sig, n):
    return st.lists(st.integers(1, sig.size), min_size=n, max_size=n).map(tuple)


@st.composite
def signed_words(draw, max_len=5):
    sig = draw(st.sampled_from(SIGS))
    n = draw(st.integers(1, max_len))
    return sig, draw(words(sig, n))


@st.composite
def fillings(draw, max_boxes=4):
    sig = draw(st.sampled_from(SIGS))
    lam = draw(st.sampled_from([s for s in enumerate_shapes(sig, max_boxes) if s.size]))
    return draw(st.sampled_from(list(all_fillings(lam))))


@st.composite
def semistandard(draw, max_boxes=4, sigs=SIGS):
    sig = draw(st.sampled_from(sigs))
    lam = draw(st.sampled_from(enumerate_shapes(sig, max_boxes)))
    return draw(st.sampled_from(enumerate_semistandard(lam)))


def test_word_tensor_of_sl22_example():
    T = tableau(2, 2, (0, 2), (1,), ((2, 2), (3, 4)), ((3,),))
    assert word_tensor(T) == SuperTensor.word(SL22, (2, 3, 3, 2, 4))
    assert word_tensor(empty_tableau(zero_shape(SL22))).terms == {(): 1}


def test_row_symmetrizer_example():
    T = tableau(2, 2, (0, 2), (1,), ((2, 2), (3, 4)), ((3,),))
    T2 = tableau(2, 2, (0, 2), (1,), ((2, 2), (4, 3)), ((3,),))
    got = row_symmetrize(word_tensor(T), T.shape)
    assert got == (word_tensor(T) - word_tensor(T2)).scale(2)


def test_signs_of_the_action():
    assert act_word(2, (1, 2), (2, 1)) == (1, (2, 1))
    assert act_word(1, (2, 2), (2, 1)) == (-1, (2, 2))
    with pytest.raises(LengthMismatch):
        act_permutation(SuperTensor.word(SL12, (1, 2)), (1,))


def test_repeated_even_letter_in_a_column_vanishes():
    assert young_vector(tableau(2, 1, (0, 1), (), ((1,), (1,)))).is_zero()
    # a repeated odd letter in a column survives
    assert not young_vector(tableau(1, 2, (1,), (1,), ((2,),), ((2,),))).is_zero()


def test_defining_representation():
    assert eij_action(1, 2, SuperTensor.word(SL12, (1,))).is_zero()
    assert eij_action(1, 2, SuperTensor.word(SL12, (2,))) == SuperTensor.word(SL12, (1,))


@given(signed_words(), st.data())
def test_action_is_a_right_action(sw, data):
    sig, w = sw
    n = len(w)
    s = data.draw(st.permutations(range(1, n + 1)))
    u = data.draw(st.permutations(range(1, n + 1)))
    t = SuperTensor.word(sig, w)
    assert act_permutation(act_permutation(t, s), u) == act_permutation(t, compose(s, u))


def _degree(sig, i, j):
    return int((i > sig.m) != (j > sig.m))


@given(signed_words(max_len=4), st.data())
def test_eij_supercommutator(sw, data):
    sig, w = sw
    idx = st.integers(1, sig.size)
    i, j, k, l = (data.draw(idx) for _ in range(4))
    t = SuperTensor.word(sig, w)
    sign = -1 if _degree(sig, i, j) * _degree(sig, k, l) else 1
    lhs = eij_action(i, j, eij_action(k, l, t)) - eij_action(k, l, eij_action(i, j, t)).scale(sign)
    rhs = SuperTensor.zero(sig, len(w))
    if j == k:
        rhs = rhs + eij_action(i, l, t)
    if l == i:
        rhs = rhs - eij_action(k, j, t).scale(sign)
    assert lhs == rhs


@given(signed_words(), st.data())
def test_eij_commutes_with_permutations(sw, data):
    sig, w = sw
    i, j = data.draw(st.integers(1, sig.size)), data.draw(st.integers(1, sig.size))
    s = data.draw(st.permutations(range(1, len(w) + 1)))
    t = SuperTensor.word(sig, w)
    assert eij_action(i, j, act_permutation(t, s)) == act_permutation(eij_action(i, j, t), s)


@settings(max_examples=150)
@given(fillings(4))
def test_fast_young_symmetrizer_matches_naive(W):
    t = word_tensor(W)
    assert young_tensor(t, W.shape) == young_tensor_naive(t, W.shape)


@pytest.mark.parametrize("sig", [Signature(1, 2), Signature(2, 1), Signature(2, 2)])
def test_rank_against_sympy(sig):
    for lam in enumerate_shapes(sig, 4):
        tableaux, wordlist, rows = basis_matrix(lam)
        dense = sympy.Matrix([[r.get(k, 0) for k in range(len(wordlist))] for r in rows]) if rows else sympy.zeros(0, 0)
        assert basis_rank(lam) == dense.rank() == len(tableaux)


def test_budget():
    lam = shape(1, 2, (3,), (1,))
    with pytest.raises(BudgetExceeded):
        basis_rank(lam, budget=3)
    with pytest.raises(BudgetExceeded):
        straighten(trivial_tableau(lam), budget=3)


def test_straighten_simple_cases():
    T = tableau(1, 2, (2,), (1,), ((1, 2),), ((2,),))
    assert straighten(T) == FormalCombination.single(T)
    assert straighten(tableau(2, 1, (0, 1), (), ((2,), (2,)))).is_zero()


def test_straighten_sl11_row():
    W = tableau(1, 1, (2,), (), ((2, 1),))
    got = straighten(W)
    assert combination_tensor(got, W.shape) == young_tensor_naive(word_tensor(W), W.shape)
    assert all(is_semistandard(U) for U, _ in got)


@settings(max_examples=150)
@given(fillings(4))
def test_straightening_reproduces_the_vector(W):
    got = straighten(W, shortcut=False)
    assert all(is_semistandard(U) for U, _ in got)
    assert combination_tensor(got, W.shape) == young_vector(W)


def test_trivial_products():
    lam, mu = shape(2, 1, (1, 1)), shape(2, 1, (2, 0))
    assert star_product(trivial_tableau(lam), trivial_tableau(mu), shortcut=False) == FormalCombination.single(
        trivial_tableau(lam + mu)
    )
    T = tableau(1, 2, (1,), (1,), ((1,),), ((3,),))
    assert star_product(empty_tableau(zero_shape(SL12)), T) == FormalCombination.single(T)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_trivial_left_factor_concatenates(data):
    sig = data.draw(st.sampled_from([Signature(1, 2), Signature(2, 1)]))
    lam = data.draw(st.sampled_from(enumerate_shapes(sig, 3)))
    T = data.draw(st.sampled_from(enumerate_semistandard(data.draw(st.sampled_from(enumerate_shapes(sig, 3))))))
    U = concat(trivial_tableau(lam), T)
    assert is_semistandard(U)
    assert star_product(trivial_tableau(lam), T, shortcut=False) == FormalCombination.single(U)


def test_product_is_commutative_only_up_to_sign():
    S, T = tableau(1, 2, (1,), (0,), ((1,),)), tableau(1, 2, (1,), (1,), ((2,),), ((2,),))
    left, right = star_product(S, T), star_product(T, S)
    assert left.terms == {U: -c for U, c in right.terms.items()} and not left.is_zero()


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_product_is_commutative_up_to_sign(data):
    S = data.draw(semistandard(3, SIGS[1:]))
    T = data.draw(semistandard(3, [S.shape.sig]))
    assert _up_to_sign(star_product(S, T), star_product(T, S))


def _up_to_sign(left, right):
    return left == right or left.terms == {U: -c for U, c in right.terms.items()}


def _triple_products(R, S, T):
    one = FormalCombination.single
    left = star_combinations(star_combinations(one(R), one(S)), one(T))
    return left, star_combinations(one(R), star_combinations(one(S), one(T)))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_product_is_associative_up_to_sign(data):
    R = data.draw(semistandard(2, SIGS[1:]))
    S = data.draw(semistandard(2, [R.shape.sig]))
    T = data.draw(semistandard(2, [R.shape.sig]))
    assert _up_to_sign(*_triple_products(R, S, T))


def test_associativity_sign_example():
    R = tableau(1, 2, (1,), (0,), ((1,),))
    S = tableau(1, 2, (1,), (0,), ((2,),))
    T = tableau(1, 2, (1,), (1,), ((1,),), ((2,),))
    left, right = _triple_products(R, S, T)
    assert not left.is_zero() and left.terms == {U: -c for U, c in right.terms.items()}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_classical_product_is_commutative_and_associative(data):
    sig = Signature(3, 0)
    R, S, T = (data.draw(semistandard(2, [sig])) for _ in range(3))
    assert star_product(S, T) == star_product(T, S)
    left, right = _triple_products(R, S, T)
    assert left == right


@settings(max_examples=100, deadline=None)
@given(semistandard(4), st.data())
def test_signed_replacement_matches_tensor_action(T, data):
    i = data.draw(st.integers(1, T.shape.sig.size))
    j = data.draw(st.integers(1, T.shape.sig.size))
    assert eij_by_replacement(i, j, T) == eij_on_tableau(i, j, T)


def test_unsigned_replacement_can_disagree():
    T = tableau(1, 2, (1,), (1,), ((2,),), ((3,),))
    assert eij_by_replacement(1, 3, T) == eij_on_tableau(1, 3, T)
    assert eij_by_replacement(1, 3, T, signed=False) != eij_on_tableau(1, 3, T)


def test_highest_weight_vectors_are_killed_by_raising():
    for sig in [Signature(1, 2), Signature(2, 2), Signature(3, 0)]:
        for lam in enumerate_shapes(sig, 4):
            v = young_vector(trivial_tableau(lam))
            assert all(eij_action(i, i + 1, v).is_zero() for i in range(1, sig.size))


def test_plucker_instances():
    T = tableau(2, 1, (1, 1), (), ((1, 1), (2,)))
    assert plucker_check(T, 1, 1)
    with pytest.raises(IndexOutOfRange):
        plucker_check(T, 2, 1)
    with pytest.raises(IndexOutOfRange):
        plucker_check(T, 1, 2)


def test_plucker_with_identical_columns():
    T = trivial_tableau(shape(2, 1, (0, 2)))
    assert plucker_check(T, 1, 2)


def test_horizontal_plucker():
    T = tableau(1, 3, (2,), (1, 1), ((1, 1),), ((2, 3), (3,)))
    assert hplucker_check(T, 2)
    with pytest.raises(PreconditionViolation):
        hplucker_terms(T, 1)
    # a lone odd row: the exchange is empty
    single = tableau(1, 2, (1,), (1,), ((1,),), ((2,),))
    assert hplucker_terms(single, 2) == [single]


def test_two_row_all_odd_case():
    T = tableau(1, 3, (2,), (1, 1), ((1, 1),), ((2, 3), (2,)))
    assert len(hplucker_terms(T, 2)) == 2
    assert hplucker_check(T, 2)


def test_garnir():
    T = tableau(2, 1, (1, 1), (), ((1, 1), (2,)))
    assert garnir_apply(T, 1, 2, 1).is_zero()
    assert garnir_tensor(T, 1, 2, 1).is_zero()
    with pytest.raises(PreconditionViolation):
        garnir_apply(T, 1, 1, 1)


def test_reduced_identity_examples():
    lam = shape(1, 2, (2,), (1,))
    assert reduced_identity_check(trivial_tableau(lam), shortcut=False)
    T = tableau(1, 2, (1,), (0,), ((2,),))
    assert push(T) == T and reduced_identity_check(T, shortcut=False)
    assert reduced_identity_check(tableau(1, 2, (1,), (1,), ((1,),), ((3,),)), shortcut=False)
    with pytest.raises(BudgetExceeded):
        reduced_identity_check(trivial_tableau(shape(1, 2, (4,), (3,))), budget=6)
