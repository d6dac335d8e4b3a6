"""Brute-force rediscovery of the jumping numbers and cross-checks.

Nothing here uses the R-set formulas.  The oracle works directly on the
exceptional lattice: a relevant curve ``E_rho`` contributes ``xi`` exactly
when ``xi * e_rho`` is an integer and ``-floor(xi mu^* C) . E_rho >= 2``.
Scanning every ``x = xi * e_rho`` in ``[1, e_rho)`` for every relevant
``rho`` recovers all jumping numbers below one of a branch, because each of
them is contributed by some relevant curve.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .enriques import (
    EnriquesTree,
    branch_divisor,
    build_tpq,
    canonical_coeffs,
    divisor_from_w,
    from_pairs,
    intersection_matrix,
    proximity,
    relevant_positions,
)
from .errors import ContractError
from .euclid import euclid_expand
from .invariants import pairs_to_characteristic, semigroup_from_characteristic, validate_pairs
from .jumping import (
    JumpingReport,
    Segment,
    jumping_numbers_from_semigroup,
    jumping_numbers_from_tree,
    merge_segments,
    r_set,
)


@dataclass
class Verification:
    """Outcome of a batch of named checks; mismatches are data, never exceptions."""

    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and not self.mismatches

    def record(self, check: str, passed: bool, detail: str = "") -> bool:
        self.checks[check] = self.checks.get(check, True) and passed
        if not passed:
            self.mismatches.append(f"{check}: {detail}" if detail else check)
        return passed

    @property
    def first_mismatch(self) -> str | None:
        return self.mismatches[0] if self.mismatches else None


class _Lattice:
    """e-vector and intersection rows of a tree, computed once per scan."""

    def __init__(self, tree: EnriquesTree):
        self.tree = tree
        self.e = branch_divisor(tree).e if tree.vertex_count else ()
        self.matrix = intersection_matrix(tree)
        self.relevant = relevant_positions(tree) if tree.vertex_count else ()

    def neighbours(self, rho: int) -> list[tuple[int, int]]:
        """``(e_alpha, E_alpha . E_rho)`` for every alpha with nonzero intersection."""
        row = self.matrix[rho - 1]
        return [(self.e[a], row[a]) for a in range(len(row)) if row[a]]

    def test_value(self, rho: int, x: int) -> int:
        """``-floor(xi mu^* C) . E_rho`` for ``xi = x / e_rho``."""
        e_rho = self.e[rho - 1]
        return -sum((x * e_a) // e_rho * i for e_a, i in self.neighbours(rho))


def contribution_value(tree: EnriquesTree, rho: int, xi) -> int:
    xi = Fraction(xi)
    lattice = _Lattice(tree)
    _check_contract(lattice, rho, xi)
    return lattice.test_value(rho, xi * lattice.e[rho - 1])


def _check_contract(lattice: _Lattice, rho: int, xi: Fraction) -> None:
    if rho not in lattice.relevant:
        raise ContractError(f"vertex {rho} is not a relevant position {lattice.relevant}")
    if not 0 < xi < 1:
        raise ContractError(f"xi must lie in (0, 1), got {xi}")


def contribution_test(tree: EnriquesTree, rho: int, xi) -> bool:
    """Whether ``E_rho`` contributes the jumping number ``xi``."""
    xi = Fraction(xi)
    lattice = _Lattice(tree)
    _check_contract(lattice, rho, xi)
    x = xi * lattice.e[rho - 1]
    if x.denominator != 1:
        return False
    return lattice.test_value(rho, int(x)) >= 2


def contributed_numerators(lattice: _Lattice, rho: int) -> list[int]:
    e_rho = lattice.e[rho - 1]
    neighbours = lattice.neighbours(rho)
    accepted = []
    for x in range(1, e_rho):
        value = 0
        for e_a, i in neighbours:
            value -= (x * e_a) // e_rho * i
        if value >= 2:
            accepted.append(x)
    return accepted


def oracle_jumping_numbers(tree: EnriquesTree) -> JumpingReport:
    if tree.vertex_count == 0:
        return JumpingReport((), ())
    lattice = _Lattice(tree)
    segments = []
    for index, rho in enumerate(lattice.relevant, start=1):
        e_rho = lattice.e[rho - 1]
        values = tuple(Fraction(x, e_rho) for x in contributed_numerators(lattice, rho))
        segments.append(Segment(index, rho, e_rho, values))
    return JumpingReport(merge_segments(segments), tuple(segments))


def candidate_set(tree: EnriquesTree) -> frozenset[Fraction]:
    """All ``(k_alpha + n) / e_alpha < 1`` with ``n >= 0``; contains every jumping number below one."""
    if tree.vertex_count == 0:
        return frozenset()
    e = branch_divisor(tree).e
    k = canonical_coeffs(tree)
    return frozenset(Fraction(num, e_a) for k_a, e_a in zip(k, e) for num in range(k_a, e_a))


def r_set_bruteforce(p: int, q: int, m: int = 1) -> tuple[int, ...]:
    """Scan ``1 <= k < m p q`` for ``{k / pq} + {q' k / p} > 1``.

    Both fractional parts are compared after clearing the common denominator
    ``pq``, which keeps the test exact in integers.
    """
    rset_checked = validate_pairs([(p, q)])
    if not isinstance(m, int) or m < 1:
        raise ContractError(f"translate count must be >= 1, got {m!r}")
    p, q = rset_checked[0]
    qp = next(t for t in range(1, p) if (q * t + 1) % p == 0)
    pq = p * q
    return tuple(k for k in range(1, m * pq) if (k % pq) + q * ((qp * k) % p) > pq)


def _compare(v: Verification, label: str, left: JumpingReport, right: JumpingReport) -> None:
    if left.values != right.values:
        lv, rv = set(left.values), set(right.values)
        extra = sorted(lv - rv)[:3]
        missing = sorted(rv - lv)[:3]
        v.record(f"{label} values", False, f"only left {[str(x) for x in extra]}, only right {[str(x) for x in missing]}")
        return
    v.record(f"{label} values", True)
    for a, b in zip(left.numbers, right.numbers):
        if a.contributors != b.contributors:
            v.record(f"{label} contributors", False, f"{a}: {sorted(a.contributors)} vs {sorted(b.contributors)}")
            return
    v.record(f"{label} contributors", True)


def verify_formula(pairs) -> Verification:
    """Compare the tree formula, the semigroup formula and the oracle on one branch."""
    pairs = validate_pairs(pairs)
    v = Verification(f"verify {list(pairs)}")
    tree_report = jumping_numbers_from_tree(pairs)
    semigroup = semigroup_from_characteristic(pairs_to_characteristic(pairs))
    semigroup_report = jumping_numbers_from_semigroup(semigroup)
    oracle_report = oracle_jumping_numbers(from_pairs(pairs))
    _compare(v, "tree~semigroup", tree_report, semigroup_report)
    _compare(v, "tree~oracle", tree_report, oracle_report)
    return v


# closed forms of the coefficient lemmas


def tpq_branch_coefficients(p: int, q: int) -> list[int]:
    """e-coefficients of ``B_r`` in ``T_{p,q}`` from the auxiliary Euclid sequences."""
    ed = euclid_expand(p, q)
    out = []
    for j in range(ed.length):
        factor = p if j % 2 == 0 else q
        for k in range(1, ed.a(j + 1) + 1):
            out.append((ed.f_at(j - 1) + k * ed.delta_at(j + 1)) * factor)
    return out


def tpq_root_coefficients(p: int, q: int) -> list[int]:
    """e-coefficients of ``W_1`` in ``T_{p,q}``."""
    ed = euclid_expand(p, q)
    out = []
    for j in range(ed.length):
        for k in range(1, ed.a(j + 1) + 1):
            if j % 2 == 0:
                out.append(ed.delta_at(j) + k * ed.f_at(j))
            else:
                out.append(ed.f_at(j - 1) + k * ed.delta_at(j + 1))
    return out


def tpq_remainder_weights(p: int, q: int) -> list[int]:
    ed = euclid_expand(p, q)
    return [ed.r(j) for j in range(1, ed.length + 1) for _ in range(ed.a(j))]


def coefficient_lemma_check(pairs) -> Verification:
    pairs = validate_pairs(pairs)
    v = Verification(f"coefficient lemmas {list(pairs)}")
    if not pairs:
        return v
    tree = from_pairs(pairs)
    D = branch_divisor(tree)

    for j, (p, q) in enumerate(pairs, start=1):
        seg = build_tpq(p, q)
        e_branch = list(branch_divisor(seg).e)
        e_root = list(divisor_from_w(seg, [1] + [0] * (seg.vertex_count - 1)).e)
        v.record("T_pq branch coefficients", tpq_branch_coefficients(p, q) == e_branch, f"T_{p},{q}: {e_branch}")
        v.record("T_pq root coefficients", tpq_root_coefficients(p, q) == e_root, f"T_{p},{q}: {e_root}")
        # satellite sum with Euclidean remainders as weights
        remainders = tpq_remainder_weights(p, q)
        prox = proximity(seg)
        for beta in seg.vertices():
            if prox.is_satellite(beta):
                lo, hi = sorted(prox[beta])
                ok = e_branch[beta - 1] == e_branch[lo - 1] + e_branch[hi - 1] + remainders[beta - 1]
                v.record("T_pq satellite remainder", ok, f"T_{p},{q} vertex {beta}")

    prox = proximity(tree)
    for beta in tree.vertices():
        if prox.is_satellite(beta):
            lo, hi = sorted(prox[beta])
            v.record("satellite sum", D.e[beta - 1] == D.e[lo - 1] + D.e[hi - 1] + D.w[beta - 1], f"vertex {beta}")

    for i in range(1, len(pairs)):
        prefix = from_pairs(pairs[:i])
        r = prefix.vertex_count
        e_prefix = branch_divisor(prefix).e
        ok = all(D.e[a] == D.w[r - 1] * e_prefix[a] for a in range(r))
        v.record("prefix scaling", ok, f"split after segment {i}")

    ps = [p for p, _ in pairs]
    qbar = []
    for j, (p, q) in enumerate(pairs, start=1):
        qbar.append(q if j == 1 else ps[j - 2] * p * qbar[-1] - p + q)
    for j, vertex in enumerate(tree.junctions(), start=1):
        tail = prod(ps[j:])
        v.record("junction weight", D.w[vertex - 1] == tail, f"junction {j}: w = {D.w[vertex - 1]}, expected {tail}")
        expected = ps[j - 1] * tail * qbar[j - 1]
        v.record("junction coefficient", D.e[vertex - 1] == expected, f"junction {j}: e = {D.e[vertex - 1]}, expected {expected}")

    for i in range(2, len(pairs) + 1):
        p, q = pairs[i - 1]
        head = from_pairs(pairs[: i - 1])
        whole = from_pairs(pairs[:i]) if i < len(pairs) else tree
        e_whole = D.e if i == len(pairs) else branch_divisor(whole).e
        r_head = head.vertex_count
        e_head_top = branch_divisor(head).e[-1]
        seg_branch = tpq_branch_coefficients(p, q)
        seg_root = tpq_root_coefficients(p, q)
        ok = all(
            e_whole[r_head - 2 + alpha] == (e_head_top - 1) * seg_root[alpha - 1] * p + seg_branch[alpha - 1]
            for alpha in range(1, len(seg_branch) + 1)
        )
        v.record("suffix relation", ok, f"segment {i}")
    return v


def term_ideal_initial_check(pairs) -> Verification:
    """The first ``|R(p_1, q_1)|`` jumping numbers agree with those of the term ideal."""
    pairs = validate_pairs(pairs)
    v = Verification(f"term ideal {list(pairs)}")
    if not pairs:
        raise ContractError("term ideal check needs g >= 1")
    p1, q1 = pairs[0]
    pi = prod(p for p, _ in pairs[1:])
    denom = p1 * q1 * pi
    numerators = set()
    for b in range(1, denom // q1 + 1):
        numerators.update(range(b * q1 + p1, denom, p1))
    monomial = [Fraction(n, denom) for n in sorted(numerators)]
    count = len(r_set(p1, q1))
    head = monomial[:count]
    expected_head = sorted(Fraction(x, denom) for x in r_set(p1, q1))
    v.record("monomial prefix", head == expected_head, "first elements are not the a p_1 + b q_1 < p_1 q_1 ones")
    curve = list(jumping_numbers_from_tree(pairs).values[:count])
    v.record("curve prefix", head == curve, f"{[str(x) for x in head]} vs {[str(x) for x in curve]}")
    return v
