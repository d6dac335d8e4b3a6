"""Acceptance criteria 1-10, each checked exactly and within its time budget.

Every test prints one ``criterion N: PASS|FAIL`` line (visible with ``-s`` or
in the ``-v`` log) before asserting.
"""
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F
from functools import lru_cache

from unibranch import (
    EdgeKind,
    build_tpq,
    canonicalize_generators,
    characteristic_from_semigroup,
    characteristic_to_pairs,
    coefficient_lemma_check,
    contribution_test,
    from_pairs,
    jumping_numbers_from_semigroup,
    jumping_numbers_from_tree,
    oracle_jumping_numbers,
    pairs_to_characteristic,
    r_m_set,
    r_set_bruteforce,
    semigroup_from_characteristic,
    term_ideal_initial_check,
    weights,
)
from unibranch.cli import main
from unibranch.enriques import branch_divisor, canonical_coeffs
from unibranch.selftest import coprime_pairs, pair_grid, random_characteristic, random_pairs, semigroup_elements


@contextmanager
def criterion(number, title, budget, capsys):
    """Time the body, print one verdict line, then enforce the time budget."""
    started = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - started
    over = elapsed >= budget
    verdict = "FAIL" if failure or over else "PASS"
    with capsys.disabled():
        print(f"\ncriterion {number}: {verdict}  {title}  ({elapsed:.2f}s, budget {budget}s)")
    if failure:
        raise failure
    assert not over, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"


@lru_cache(maxsize=None)
def equivalence_grid():
    """Exhaustive g <= 2, p <= 5, q <= 13 plus 100 random lists with g <= 3, p <= 7, q <= 17."""
    rng = random.Random(20261016)
    grid = list(pair_grid(2, 5, 13))
    sampled = [random_pairs(rng, 3, 7, 17) for _ in range(100)]
    return tuple(grid + sampled)


def test_criterion_1_two_segment_example(capsys):
    with criterion(1, "11/30 contributed by E_3 and E_9", 1, capsys):
        report = jumping_numbers_from_tree([(2, 3), (5, 11)])
        hits = [n for n in report.numbers if n.value == F(11, 30)]
        assert len(hits) == 1
        assert hits[0].contributors == {3, 9}
        tree = from_pairs([(2, 3), (5, 11)])
        assert contribution_test(tree, 3, F(11, 30)) is True
        assert contribution_test(tree, 9, F(11, 30)) is True


def test_criterion_2_double_cusp(capsys):
    with criterion(2, "(4;6,7) -> 2,3;2,3 with weights 4 2 2 1 1", 1, capsys):
        assert main(["convert", "--char", "4;6,7", "--to", "pairs"]) == 0
        assert capsys.readouterr().out.strip() == "2,3;2,3"
        tree = from_pairs([(2, 3), (2, 3)])
        assert tree.vertex_count == 5
        assert weights(tree) == (4, 2, 2, 1, 1)


def test_criterion_3_t57(capsys):
    with criterion(3, "T_{5,7} weights and edge kinds", 1, capsys):
        tree = build_tpq(5, 7)
        assert weights(tree) == (5, 2, 2, 1, 1)
        S, H, V = EdgeKind.SLANT, EdgeKind.HORIZONTAL, EdgeKind.VERTICAL
        assert tree.edge_kinds == (S, H, H, V)


def test_criterion_4_howald_agreement(capsys):
    with criterion(4, "g = 1 sets equal {a/p + b/q < 1} for q <= 30", 10, capsys):
        for p, q in coprime_pairs(30, 30):
            sums = {F(a, p) + F(b, q) for a in range(1, p) for b in range(1, q)}
            expected = sorted(x for x in sums if x < 1)
            report = jumping_numbers_from_tree([(p, q)])
            assert list(report.values) == expected, (p, q)
            assert report.lct == F(1, p) + F(1, q), (p, q)


def test_criterion_5_formula_oracle_equivalence(capsys):
    with criterion(5, "oracle = tree formula = semigroup formula, with contributors", 60, capsys):
        cases = equivalence_grid()
        assert len(cases) >= 100 + len(list(pair_grid(2, 5, 13)))
        for pairs in cases:
            tree_report = jumping_numbers_from_tree(pairs)
            oracle_report = oracle_jumping_numbers(from_pairs(pairs))
            semigroup = semigroup_from_characteristic(pairs_to_characteristic(pairs))
            semigroup_report = jumping_numbers_from_semigroup(semigroup)
            expected = [(n.value, n.contributors) for n in oracle_report.numbers]
            assert [(n.value, n.contributors) for n in tree_report.numbers] == expected, pairs
            assert [(n.value, n.contributors) for n in semigroup_report.numbers] == expected, pairs


def test_criterion_6_rset_dual_definitions(capsys):
    with criterion(6, "r_m_set = brute force for q <= 50, m <= 4", 30, capsys):
        for p, q in coprime_pairs(50, 50):
            brute = r_set_bruteforce(p, q, 4)
            for m in range(1, 5):
                assert r_m_set(p, q, m) == tuple(k for k in brute if k < m * p * q), (p, q, m)


def test_criterion_7_semigroup_4_6_13(capsys):
    expected = [F(5, 12), F(15, 26), F(17, 26), F(19, 26), F(21, 26), F(23, 26), F(11, 12), F(25, 26)]
    with criterion(7, "(4,6,13) gives the eight expected values", 1, capsys):
        semigroup = canonicalize_generators([4, 6, 13])
        pairs = characteristic_to_pairs(characteristic_from_semigroup(semigroup))
        # the oracle is consulted first and must agree on its own
        assert list(oracle_jumping_numbers(from_pairs(pairs)).values) == expected
        assert list(jumping_numbers_from_semigroup(semigroup).values) == expected
        assert list(jumping_numbers_from_tree(pairs).values) == expected


def test_criterion_8_coefficient_lemmas(capsys):
    with criterion(8, "closed-form coefficients match the lattice on the full grid", 60, capsys):
        tree = build_tpq(5, 7)
        assert tuple(branch_divisor(tree).e) == (5, 7, 14, 20, 35)
        assert tuple(canonical_coeffs(tree)) == (1, 2, 4, 6, 11)
        for pairs in equivalence_grid():
            check = coefficient_lemma_check(pairs)
            assert check.ok, (pairs, check.first_mismatch)


def test_criterion_9_round_trips(capsys):
    with criterion(9, "encodings are mutually inverse on 1000 random branches", 60, capsys):
        rng = random.Random(9)
        for _ in range(1000):
            c = random_characteristic(rng, max_g=4, max_value=200)
            assert c.g <= 4 and max(c.m, *c.beta) <= 200
            s = semigroup_from_characteristic(c)
            pairs = characteristic_to_pairs(c)
            assert characteristic_from_semigroup(s) == c
            assert pairs_to_characteristic(pairs) == c
            assert semigroup_from_characteristic(pairs_to_characteristic(pairs)) == s
            assert characteristic_to_pairs(characteristic_from_semigroup(s)) == pairs
            redundant = list(s.beta_bar) + semigroup_elements(s.beta_bar, 3, rng)
            rng.shuffle(redundant)
            assert canonicalize_generators(redundant) == s


def test_criterion_10_term_ideal(capsys):
    with criterion(10, "term-ideal prefix agrees on the full grid", 60, capsys):
        for pairs in equivalence_grid():
            check = term_ideal_initial_check(pairs)
            assert check.ok, (pairs, check.first_mismatch)
