"""Closed formulas for the jumping numbers in ``(0, 1)`` of a plane branch.

For a branch with Enriques tree ``T_{p_1,q_1} # ... # T_{p_g,q_g}`` the
jumping numbers below one are the union over the segments ``j`` of::

    R^{m_{j+1}}(p_j, qbar_j) / (m_j * qbar_j)

where ``R(p, q) = {a p + b q < p q : a, b >= 1}`` and ``R^m`` is the union of
``m`` translates of ``R`` by multiples of ``p q``.  The same set can be read
off the canonical semigroup generators, see
:func:`jumping_numbers_from_semigroup`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .enriques import from_pairs
from .errors import ValidationError
from .euclid import validate_pair
from .invariants import (
    SemigroupGenerators,
    characteristic_from_semigroup,
    characteristic_to_pairs,
    pairs_gcd_chain,
    validate_pairs,
)


@dataclass(frozen=True)
class RSetParams:
    p: int
    q: int
    m: int
    q_prime: int


def q_prime(p: int, q: int) -> int:
    """The unique ``0 < q' < p`` with ``q q' = -1 (mod p)``."""
    validate_pair(p, q)
    return -pow(q, -1, p) % p


def rset_params(p: int, q: int, m: int = 1) -> RSetParams:
    if not isinstance(m, int) or m < 1:
        raise ValidationError(f"translate count m >= 1 violated: m = {m!r}")
    return RSetParams(p, q, m, q_prime(p, q))


def r_set(p: int, q: int) -> tuple[int, ...]:
    validate_pair(p, q)
    pq = p * q
    out = []
    b = 1
    while p + b * q < pq:
        a = 1
        while a * p + b * q < pq:
            out.append(a * p + b * q)
            a += 1
        b += 1
    return tuple(sorted(out))


def r_m_set(p: int, q: int, m: int) -> tuple[int, ...]:
    rset_params(p, q, m)
    base = r_set(p, q)
    pq = p * q
    return tuple(k * pq + x for k in range(m) for x in base)


def qbar_sequence(pairs) -> tuple[int, ...]:
    pairs = validate_pairs(pairs)
    chain = pairs_gcd_chain(pairs)
    qbar = []
    for j, (p, q) in enumerate(pairs, start=1):
        if j == 1:
            qbar.append(q)
        else:
            # chain[j - 2] / chain[j] is m_{j-1} / m_{j+1}
            qbar.append(chain[j - 2] // chain[j] * qbar[-1] - p + q)
    return tuple(qbar)


@dataclass(frozen=True, order=True)
class JumpingNumber:
    value: Fraction
    contributors: frozenset[int] = field(compare=False)

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class Segment:
    """Jumping numbers contributed by one relevant vertex.

    ``p``, ``qbar`` and ``translates`` are the parameters of the R-set when
    the segment comes from the closed formula; the oracle leaves them unset.
    """

    index: int
    vertex: int
    denominator: int
    values: tuple[Fraction, ...]
    p: int | None = None
    qbar: int | None = None
    translates: int | None = None


@dataclass(frozen=True)
class JumpingReport:
    numbers: tuple[JumpingNumber, ...]
    segments: tuple[Segment, ...]
    qbar: tuple[int, ...] = ()
    gcd_chain: tuple[int, ...] = ()

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(n.value for n in self.numbers)

    def annotated(self) -> dict[Fraction, frozenset[int]]:
        return {n.value: n.contributors for n in self.numbers}

    @property
    def lct(self) -> Fraction | None:
        return self.numbers[0].value if self.numbers else None

    def __len__(self) -> int:
        return len(self.numbers)


def merge_segments(segments) -> tuple[JumpingNumber, ...]:
    # integer keys over a common denominator; hashing Fractions is slow
    common = lcm(*(seg.denominator for seg in segments)) if segments else 1
    values: dict[int, Fraction] = {}
    contributors: dict[int, set[int]] = {}
    for seg in segments:
        for value in seg.values:
            key = value.numerator * (common // value.denominator)
            values[key] = value
            contributors.setdefault(key, set()).add(seg.vertex)
    return tuple(JumpingNumber(values[k], frozenset(contributors[k])) for k in sorted(values))


def _segment(index, vertex, p, qbar, translates, denominator) -> Segment:
    values = tuple(Fraction(k, denominator) for k in r_m_set(p, qbar, translates))
    return Segment(index, vertex, denominator, values, p, qbar, translates)


def jumping_numbers_from_tree(pairs) -> JumpingReport:
    pairs = validate_pairs(pairs)
    chain = pairs_gcd_chain(pairs)
    qbar = qbar_sequence(pairs)
    junctions = from_pairs(pairs).junctions()
    segments = tuple(
        _segment(j, junctions[j - 1], p, qbar[j - 1], chain[j], chain[j - 1] * qbar[j - 1])
        for j, (p, _) in enumerate(pairs, start=1)
    )
    return JumpingReport(merge_segments(segments), segments, qbar, chain)


def jumping_numbers_from_semigroup(s: SemigroupGenerators) -> JumpingReport:
    bb = s.beta_bar
    chain = s.gcd_chain
    # vertex labels only; the sets themselves come from the generators
    junctions = from_pairs(characteristic_to_pairs(characteristic_from_semigroup(s))).junctions()
    segments = []
    for j in range(1, s.g + 1):
        mj, mnext = chain[j - 1], chain[j]
        segments.append(_segment(j, junctions[j - 1], mj // mnext, bb[j] // mnext, mnext, lcm(mj, bb[j])))
    qbar = tuple(bb[j] // chain[j] for j in range(1, s.g + 1))
    return JumpingReport(merge_segments(segments), tuple(segments), qbar, chain)


def lct(report: JumpingReport) -> Fraction | None:
    """Log canonical threshold; ``None`` for a smooth germ."""
    return report.lct


def extend_by_periodicity(report: JumpingReport, bound) -> list[Fraction]:
    """All jumping numbers in ``(0, bound]`` using period one beyond one."""
    bound = Fraction(bound)
    if bound < 1:
        raise ValidationError(f"bound >= 1 violated: bound = {bound}")
    out = []
    for base in (*report.values, Fraction(1)):
        x = base
        while x <= bound:
            out.append(x)
            x += 1
    return sorted(out)
