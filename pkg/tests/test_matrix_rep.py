import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from belts.core import (
    GENERATORS,
    IDENTITY_PERM,
    IDENTITY_WORD,
    P12,
    P13,
    P23,
    S1,
    S1_INV,
    S2,
    S2_INV,
    ZERO_TWIST,
    FramedBraid,
    Perm3,
    TwistWord,
    apply_perm,
    perm_lift,
    word,
)
from belts.matrix_rep import (
    FP_IDENTITY,
    FramedPermutation,
    as_matrix,
    fp_multiply,
    monomial_matmul,
    perm_matrix,
    pure_twist_via_rho,
    pure_twist_via_rho_framed,
    pure_twist_via_rho_unframed,
    rho_accumulate,
    rho_of,
)
from belts.reduction import pure_twist, twist_of_generator

from conftest import framed, twists, words
from oracles import T, sympy_monomial

perms = st.sampled_from([Perm3(p) for p in itertools.permutations((1, 2, 3))])
framed_perms = st.builds(FramedPermutation, twists, perms)


def tw(*vals):
    return TwistWord.of(*vals)


def test_rho_table():
    assert rho_of(S1) == FramedPermutation(tw("-1/2", "-1/2", "1/2"), P12)
    assert rho_of(S2) == FramedPermutation(tw("1/2", "-1/2", "-1/2"), P23)
    assert rho_of(S1_INV) == FramedPermutation(tw("1/2", "1/2", "-1/2"), P12)
    assert rho_of(S2_INV) == FramedPermutation(tw("-1/2", "1/2", "1/2"), P23)


@pytest.mark.parametrize("g", GENERATORS)
def test_rho_twist_is_negated_generator_twist(g):
    assert rho_of(g).twist == -twist_of_generator(g)


def test_braid_relation_in_representation():
    a = rho_accumulate(word(S1, S2, S1))
    b = rho_accumulate(word(S2, S1, S2))
    assert a.twist == b.twist == tw("-1/2", "-1/2", "-1/2")
    assert a.perm == b.perm == P13


def test_worked_example():
    f = fp_multiply(fp_multiply(rho_of(S1), rho_of(S2)), rho_of(S1_INV))
    assert f.twist == tw("-3/2", "1/2", "1/2")
    assert f == rho_accumulate(word(S1, S2, S1_INV))
    assert f.perm == P13
    # Plain negation gives the entry-permuted triple; the corrected read-off
    # matches top-down elimination.
    assert pure_twist_via_rho_unframed(word(S1, S2, S1_INV)) == tw("3/2", "-1/2", "-1/2")
    assert pure_twist_via_rho(word(S1, S2, S1_INV)) == tw("-1/2", "-1/2", "3/2")


def test_sympy_oracle_for_worked_example():
    m = sympy_monomial((-1, -1, 1), (2, 1, 3)) * sympy_monomial((1, -1, -1), (1, 3, 2)) * sympy_monomial(
        (1, 1, -1), (2, 1, 3)
    )
    assert m == sympy.Matrix([[0, 0, T ** sympy.Rational(-3, 2)], [0, sympy.sqrt(T), 0], [sympy.sqrt(T), 0, 0]])


def test_identity_cases():
    assert rho_accumulate(IDENTITY_WORD) == FramedPermutation(ZERO_TWIST, IDENTITY_PERM)
    assert rho_accumulate(word(S1)) == rho_of(S1)
    assert pure_twist_via_rho(IDENTITY_WORD) == ZERO_TWIST
    assert pure_twist_via_rho(word(S1)) == tw("1/2", "1/2", "-1/2")
    f = FramedPermutation(tw(1, 2, 3), P12)
    assert fp_multiply(f, FP_IDENTITY) == f
    assert fp_multiply(FP_IDENTITY, f) == f


def test_perm_matrix():
    assert perm_matrix(P12) == ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    assert perm_matrix(P23) == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert perm_matrix(IDENTITY_PERM) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@given(perms)
def test_perm_matrix_acts_like_apply_perm(p):
    m = perm_matrix(p)
    for i in range(3):
        e = [int(k == i) for k in range(3)]
        image = [sum(m[r][c] * e[c] for c in range(3)) for r in range(3)]
        assert image == list(p.permute(e))


def test_as_matrix():
    assert as_matrix(FramedPermutation(TwistWord((1, 2, 3)), IDENTITY_PERM)) == (
        (1, None, None),
        (None, 2, None),
        (None, None, 3),
    )
    assert as_matrix(FramedPermutation(ZERO_TWIST, P12)) == ((None, 0, None), (0, None, None), (None, None, 0))


@given(framed_perms, framed_perms)
def test_pd_equals_dp_p(f1, f2):
    assert as_matrix(fp_multiply(f1, f2)) == monomial_matmul(as_matrix(f1), as_matrix(f2))


@given(framed_perms, framed_perms)
def test_product_against_sympy(f1, f2):
    got = fp_multiply(f1, f2)
    expected = sympy_monomial(f1.twist.halves, f1.perm.image) * sympy_monomial(f2.twist.halves, f2.perm.image)
    assert sympy_monomial(got.twist.halves, got.perm.image) == expected


@given(words, words)
def test_homomorphism(w1, w2):
    assert rho_accumulate(w1 + w2) == fp_multiply(rho_accumulate(w1), rho_accumulate(w2))


@given(words)
def test_perm_part_is_lift(w):
    assert rho_accumulate(w).perm == perm_lift(w)


@given(words)
def test_method_agreement(w):
    assert pure_twist_via_rho(w) == pure_twist(FramedBraid(ZERO_TWIST, w))


@given(framed)
def test_method_agreement_framed(fb):
    assert pure_twist_via_rho_framed(fb) == pure_twist(fb)


@given(words)
def test_unframed_differs_only_by_residual_permutation(w):
    plain = pure_twist_via_rho_unframed(w)
    assert apply_perm(perm_lift(w).inverse(), plain) == pure_twist(FramedBraid(ZERO_TWIST, w))
