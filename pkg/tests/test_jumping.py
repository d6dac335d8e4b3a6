from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from unibranch import (
    SemigroupGenerators,
    ValidationError,
    canonicalize_generators,
    extend_by_periodicity,
    jumping_numbers_from_semigroup,
    jumping_numbers_from_tree,
    lct,
    r_m_set,
    r_set,
    semigroup_from_characteristic,
)
from unibranch.invariants import characteristic_from_semigroup, characteristic_to_pairs
from unibranch.jumping import q_prime, qbar_sequence, rset_params
from unibranch.selftest import coprime_pairs, random_characteristic, random_pairs

SET_4_6_13 = [F(5, 12), F(15, 26), F(17, 26), F(19, 26), F(21, 26), F(23, 26), F(11, 12), F(25, 26)]
R57 = (12, 17, 19, 22, 24, 26, 27, 29, 31, 32, 33, 34)


def test_r_sets():
    assert r_set(2, 3) == (5,)
    assert r_set(5, 7) == R57
    assert r_set(2, 13) == (15, 17, 19, 21, 23, 25)
    assert r_m_set(2, 3, 5) == (5, 11, 17, 23, 29)
    assert r_m_set(2, 3, 2) == (5, 11)
    assert r_m_set(5, 7, 1) == r_set(5, 7)


def test_rset_params():
    assert q_prime(2, 3) == 1
    assert q_prime(5, 7) == 2  # 7 * 2 = 14 = -1 mod 5
    with pytest.raises(ValidationError, match="m >= 1"):
        rset_params(2, 3, 0)
    with pytest.raises(ValidationError):
        r_m_set(2, 3, 0)


def test_shift_closure():
    for p, q in coprime_pairs(20, 30):
        members = set(r_set(p, q))
        for k in members:
            if k + p < p * q:
                assert k + p in members


def test_qbar():
    assert qbar_sequence([(2, 3), (5, 11)]) == (3, 36)
    assert qbar_sequence([(2, 3), (2, 3)]) == (3, 13)
    assert qbar_sequence([(5, 7)]) == (7,)


def test_two_segment_example():
    report = jumping_numbers_from_tree([(2, 3), (5, 11)])
    assert report.annotated()[F(11, 30)] == {3, 9}
    assert report.lct == F(1, 6)


def test_cusp_sum():
    report = jumping_numbers_from_tree([(2, 3), (2, 3)])
    assert list(report.values) == SET_4_6_13
    assert [seg.denominator for seg in report.segments] == [12, 26]


def test_g1_report():
    report = jumping_numbers_from_tree([(5, 7)])
    assert list(report.values) == [F(k, 35) for k in R57]


def test_semigroup_route():
    report = jumping_numbers_from_semigroup(SemigroupGenerators((4, 6, 13)))
    assert list(report.values) == SET_4_6_13
    assert F(11, 30) in jumping_numbers_from_semigroup(SemigroupGenerators((10, 15, 36))).values


def test_howald_set_up_to_50():
    for p, q in coprime_pairs(50, 50):
        sums = {F(a, p) + F(b, q) for a in range(1, p) for b in range(1, q)}
        expected = sorted(x for x in sums if x < 1)
        assert list(jumping_numbers_from_tree([(p, q)]).values) == expected, (p, q)
        assert [F(k, p * q) for k in r_set(p, q)] == expected, (p, q)


def test_lct():
    assert lct(jumping_numbers_from_tree([(5, 7)])) == F(12, 35)
    assert lct(jumping_numbers_from_tree([(2, 3)])) == F(5, 6)
    assert lct(jumping_numbers_from_semigroup(SemigroupGenerators((4, 6, 13)))) == F(5, 12)
    assert lct(jumping_numbers_from_tree([])) is None


def test_smooth_report_is_empty():
    report = jumping_numbers_from_tree([])
    assert len(report) == 0
    assert jumping_numbers_from_semigroup(SemigroupGenerators((1,))).values == ()


def test_periodicity():
    assert extend_by_periodicity(jumping_numbers_from_tree([(2, 3)]), 2) == [F(5, 6), 1, F(11, 6), 2]
    assert extend_by_periodicity(jumping_numbers_from_tree([]), 2) == [1, 2]
    g1 = jumping_numbers_from_tree([(5, 7)])
    assert extend_by_periodicity(g1, 1) == [F(k, 35) for k in R57] + [1]
    with pytest.raises(ValidationError):
        extend_by_periodicity(g1, F(1, 2))


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False))
def test_report_shape(rng):
    report = jumping_numbers_from_tree(random_pairs(rng, 3, 7, 17))
    values = report.values
    assert all(0 < x < 1 for x in values)
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(n.contributors for n in report.numbers)


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False))
def test_encoding_agreement(rng):
    c = random_characteristic(rng, max_g=3, max_value=120)
    s = canonicalize_generators(semigroup_from_characteristic(c).beta_bar)
    pairs = characteristic_to_pairs(characteristic_from_semigroup(s))
    assert jumping_numbers_from_tree(pairs).annotated() == jumping_numbers_from_semigroup(s).annotated()
