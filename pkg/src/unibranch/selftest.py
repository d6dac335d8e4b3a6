"""Grids, random samplers and the invariant sweep behind ``unibranch selftest``."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

from . import invariants, jumping, oracle
from .enriques import branch_divisor, from_pairs, relevant_positions


def coprime_pairs(max_p: int, max_q: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(2, max_p + 1) for q in range(p + 1, max_q + 1) if gcd(p, q) == 1]


def pair_grid(max_g: int, max_p: int, max_q: int):
    """Every pair list with ``1 <= g <= max_g`` over the coprime pairs in range."""
    base = coprime_pairs(max_p, max_q)
    for g in range(1, max_g + 1):
        yield from itertools.product(base, repeat=g)


def random_pairs(rng: random.Random, max_g: int, max_p: int, max_q: int) -> tuple[tuple[int, int], ...]:
    base = coprime_pairs(max_p, max_q)
    return tuple(rng.choice(base) for _ in range(rng.randint(1, max_g)))


def random_characteristic(rng: random.Random, max_g: int = 4, max_value: int = 200):
    """A random valid characteristic with every entry at most ``max_value``."""
    while True:
        g = rng.randint(1, max_g)
        factors = [rng.choice((2, 2, 2, 3, 3, 4, 5, 6, 7)) for _ in range(g)]
        chain = [prod(factors[j:]) for j in range(g + 1)]
        if chain[0] >= max_value:
            continue
        beta, prev = [], chain[0]
        for j in range(1, g + 1):
            mj, mnext = chain[j - 1], chain[j]
            start = prev // mnext + 1
            options = [k * mnext for k in range(start, start + 4 * (mj // mnext)) if gcd(mj, k * mnext) == mnext]
            options = [b for b in options[:6] if b <= max_value]
            if not options:
                break
            prev = rng.choice(options)
            beta.append(prev)
        else:
            return invariants.PuiseuxCharacteristic(chain[0], tuple(beta))


def semigroup_elements(beta_bar, count: int, rng: random.Random) -> list[int]:
    """Random nonnegative combinations of the generators (redundant elements)."""
    return [sum(rng.randint(0, 3) * b for b in beta_bar) or beta_bar[-1] for _ in range(count)]


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_counterexample: str | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def add(self, passed: bool, case) -> None:
        self.cases += 1
        if not passed:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = str(case)

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass
class SelftestOptions:
    max_g: int = 3
    exhaustive_g: int = 2
    max_p: int = 5
    max_q: int = 13
    sample_max_p: int = 7
    samples: int = 100
    rset_max_q: int = 30
    rset_max_m: int = 4
    roundtrips: int = 300
    seed: int = 0


def _timed(result: CheckResult, started: float) -> CheckResult:
    result.seconds = time.perf_counter() - started
    return result


def check_formula_oracle(opts: SelftestOptions, cases) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("formula = semigroup = oracle")
    for pairs in cases:
        result.add(oracle.verify_formula(pairs).ok, list(pairs))
    return _timed(result, started)


def check_lemmas(cases) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("coefficient lemmas")
    for pairs in cases:
        result.add(oracle.coefficient_lemma_check(pairs).ok, list(pairs))
    return _timed(result, started)


def check_term_ideal(cases) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("term ideal prefix")
    for pairs in cases:
        result.add(oracle.term_ideal_initial_check(pairs).ok, list(pairs))
    return _timed(result, started)


def check_relevant(cases) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("relevant = junctions")
    for pairs in cases:
        tree = from_pairs(pairs)
        result.add(relevant_positions(tree) == tree.junctions(), list(pairs))
    return _timed(result, started)


def check_rsets(opts: SelftestOptions) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("R-set dual definitions")
    for p, q in coprime_pairs(opts.rset_max_q, opts.rset_max_q):
        full = oracle.r_set_bruteforce(p, q, opts.rset_max_m)
        for m in range(1, opts.rset_max_m + 1):
            expected = tuple(k for k in full if k < m * p * q)
            result.add(jumping.r_m_set(p, q, m) == expected, (p, q, m))
    return _timed(result, started)


def check_howald(opts: SelftestOptions) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("Howald set (g = 1)")
    for p, q in coprime_pairs(opts.rset_max_q, opts.rset_max_q):
        sums = (Fraction(a, p) + Fraction(b, q) for a in range(1, p) for b in range(1, q))
        howald = sorted({x for x in sums if x < 1})
        report = jumping.jumping_numbers_from_tree([(p, q)])
        result.add(list(report.values) == howald and report.lct == Fraction(1, p) + Fraction(1, q), (p, q))
    return _timed(result, started)


def check_roundtrips(opts: SelftestOptions, rng: random.Random) -> CheckResult:
    started = time.perf_counter()
    result = CheckResult("encoding round trips")
    for _ in range(opts.roundtrips):
        c = random_characteristic(rng)
        s = invariants.semigroup_from_characteristic(c)
        pairs = invariants.characteristic_to_pairs(c)
        extra = semigroup_elements(s.beta_bar, 3, rng)
        shuffled = list(s.beta_bar) + extra
        rng.shuffle(shuffled)
        ok = (
            invariants.characteristic_from_semigroup(s) == c
            and invariants.pairs_to_characteristic(pairs) == c
            and invariants.canonicalize_generators(shuffled) == s
            and invariants.multiplicity_sequence(c) == branch_divisor(from_pairs(pairs)).w
        )
        result.add(ok, c)
    return _timed(result, started)


def run_selftest(opts: SelftestOptions | None = None) -> list[CheckResult]:
    opts = opts or SelftestOptions()
    rng = random.Random(opts.seed)
    grid = list(pair_grid(min(opts.exhaustive_g, opts.max_g), opts.max_p, opts.max_q))
    sampled = [random_pairs(rng, opts.max_g, opts.sample_max_p, opts.max_q) for _ in range(opts.samples)]
    cases = grid + sampled
    return [
        check_formula_oracle(opts, cases),
        check_lemmas(cases),
        check_term_ideal(cases),
        check_relevant(cases),
        check_rsets(opts),
        check_howald(opts),
        check_roundtrips(opts, rng),
    ]


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check'.ljust(width)}  cases  fail  seconds  status"]
    for r in results:
        status = "ok" if r.ok else f"FAIL first counterexample {r.first_counterexample}"
        lines.append(f"{r.name.ljust(width)}  {r.cases:5d}  {r.failures:4d}  {r.seconds:7.2f}  {status}")
    return "\n".join(lines)
