import random

import pytest
from hypothesis import given, settings, strategies as st

from unibranch import (
    SMOOTH,
    CurveInvariants,
    PuiseuxCharacteristic,
    SemigroupGenerators,
    ValidationError,
    branch_divisor,
    canonicalize_generators,
    characteristic_from_semigroup,
    characteristic_to_pairs,
    from_pairs,
    multiplicity_sequence,
    pairs_to_characteristic,
    semigroup_from_characteristic,
)
from unibranch.invariants import blowup_characteristic, pairs_gcd_chain
from unibranch.selftest import random_characteristic, semigroup_elements

C = PuiseuxCharacteristic
G = SemigroupGenerators


@pytest.mark.parametrize(
    "char, gens",
    [(C(4, (6, 7)), (4, 6, 13)), (C(5, (7,)), (5, 7)), (C(10, (15, 21)), (10, 15, 36))],
)
def test_characteristic_semigroup(char, gens):
    assert semigroup_from_characteristic(char) == G(gens)
    assert characteristic_from_semigroup(G(gens)) == char


@pytest.mark.parametrize(
    "char, pairs",
    [
        (C(4, (6, 7)), ((2, 3), (2, 3))),
        (C(5, (7,)), ((5, 7),)),
        (C(10, (15, 21)), ((2, 3), (5, 11))),
    ],
)
def test_characteristic_pairs(char, pairs):
    assert characteristic_to_pairs(char) == pairs
    assert pairs_to_characteristic(pairs) == char


def test_smooth_encodings():
    assert semigroup_from_characteristic(SMOOTH) == G((1,))
    assert characteristic_from_semigroup(G((1,))) is SMOOTH
    assert characteristic_to_pairs(SMOOTH) == ()
    assert pairs_to_characteristic([]) is SMOOTH
    assert multiplicity_sequence(SMOOTH) == ()


@pytest.mark.parametrize(
    "gens, expected",
    [((36, 10, 15), (10, 15, 36)), ((4, 6, 13), (4, 6, 13)), ((7, 5, 12, 14), (5, 7))],
)
def test_canonicalize(gens, expected):
    assert canonicalize_generators(gens) == G(expected)


@pytest.mark.parametrize(
    "gens, fragment",
    [
        ((4, 6), "gcd of generators is 2"),
        ((4, 6, 13, 15), "not a plane-branch semigroup"),
        ((4, 10, 11), "not a plane-branch semigroup"),
    ],
)
def test_canonicalize_rejects(gens, fragment):
    with pytest.raises(ValidationError, match=fragment):
        canonicalize_generators(gens)


@pytest.mark.parametrize(
    "build, fragment",
    [
        (lambda: C(4, (6, 8)), "β_2 divisible by m_2"),
        (lambda: C(4, (6,)), "m_{g\\+1} = 1"),
        (lambda: C(4, (3,)), "β_1 > m"),
        (lambda: C(6, (9, 8)), "β_1 < β_2"),
        (lambda: G((4, 6, 12)), "β̄_2 divisible by m_2"),
        (lambda: G((4, 6, 11)), "strong increase"),
        (lambda: G((6, 4)), "β̄_0 < β̄_1"),
    ],
)
def test_validation_names_the_invariant(build, fragment):
    with pytest.raises(ValidationError, match=fragment):
        build()


@pytest.mark.parametrize(
    "char, after",
    [(C(4, (6, 7)), C(2, (5,))), (C(5, (7,)), C(2, (5,))), (C(2, (5,)), C(2, (3,))), (C(2, (3,)), SMOOTH)],
)
def test_blowup(char, after):
    assert blowup_characteristic(char) == after


def test_blowup_of_smooth_rejected():
    with pytest.raises(ValidationError):
        blowup_characteristic(SMOOTH)


@pytest.mark.parametrize(
    "char, seq",
    [(C(5, (7,)), (5, 2, 2, 1, 1)), (C(4, (6, 7)), (4, 2, 2, 1, 1)), (C(2, (3,)), (2, 1, 1))],
)
def test_multiplicity_sequence(char, seq):
    assert multiplicity_sequence(char) == seq


def test_round_trips_random():
    rng = random.Random(2024)
    for _ in range(300):
        c = random_characteristic(rng)
        s = semigroup_from_characteristic(c)
        pairs = characteristic_to_pairs(c)
        assert characteristic_from_semigroup(s) == c
        assert pairs_to_characteristic(pairs) == c
        assert semigroup_from_characteristic(pairs_to_characteristic(pairs)) == s
        mixed = list(s.beta_bar) + semigroup_elements(s.beta_bar, 4, rng)
        rng.shuffle(mixed)
        assert canonicalize_generators(mixed) == s
        assert multiplicity_sequence(c) == tuple(branch_divisor(from_pairs(pairs)).w)


def test_junction_weights_are_gcd_tail():
    rng = random.Random(5)
    for _ in range(200):
        c = random_characteristic(rng)
        pairs = characteristic_to_pairs(c)
        tree = from_pairs(pairs)
        w = branch_divisor(tree).w
        chain = pairs_gcd_chain(pairs)
        assert tuple(w[v - 1] for v in tree.junctions()) == chain[1:]


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_curve_invariants_agree(rng):
    c = random_characteristic(rng)
    a = CurveInvariants.from_characteristic(c)
    assert CurveInvariants.from_semigroup(a.semigroup) == a
    assert CurveInvariants.from_pairs(a.pairs) == a
    assert a.gcd_chain == c.gcd_chain
