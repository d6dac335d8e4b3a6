"""The three encodings of a plane branch and the conversions between them.

* Puiseux characteristic ``(m; beta_1, ..., beta_g)``;
* canonical semigroup generators ``(bbeta_0, ..., bbeta_g)``;
* Enriques pair list ``[(p_1, q_1), ..., (p_g, q_g)]``.

All share the gcd chain ``m_1 > m_2 > ... > m_{g+1} = 1``.  A smooth germ
has no characteristic exponents and is represented by :data:`SMOOTH`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import ValidationError
from .euclid import euclid_expand, validate_pair


class Smooth:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SMOOTH"

    multiplicity = 1
    g = 0


SMOOTH = Smooth()


def _gcd_chain(first: int, rest) -> tuple[int, ...]:
    chain = [first]
    for value in rest:
        chain.append(gcd(chain[-1], value))
    return tuple(chain)


@dataclass(frozen=True)
class PuiseuxCharacteristic:
    m: int
    beta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(self.beta))
        if not self.beta:
            raise ValidationError("a characteristic needs at least one exponent (use SMOOTH for smooth germs)")
        if any(not isinstance(x, int) for x in (self.m, *self.beta)):
            raise ValidationError("characteristic entries must be integers")
        if self.m < 2:
            raise ValidationError(f"m >= 2 violated: m = {self.m}")
        if self.beta[0] <= self.m:
            raise ValidationError(f"β_1 > m violated: β_1 = {self.beta[0]}, m = {self.m}")
        for j in range(1, len(self.beta)):
            if self.beta[j] <= self.beta[j - 1]:
                raise ValidationError(f"β_{j} < β_{j + 1} violated: {self.beta[j - 1]} >= {self.beta[j]}")
        chain = _gcd_chain(self.m, self.beta)
        for j, b in enumerate(self.beta, start=1):
            if b % chain[j - 1] == 0:
                raise ValidationError(f"β_{j} divisible by m_{j}: {b} divisible by {chain[j - 1]}")
        if chain[-1] != 1:
            raise ValidationError(f"m_{{g+1}} = 1 violated: gcd chain ends at {chain[-1]}")

    @property
    def g(self) -> int:
        return len(self.beta)

    @property
    def multiplicity(self) -> int:
        return self.m

    @property
    def gcd_chain(self) -> tuple[int, ...]:
        """``(m_1, ..., m_{g+1})``."""
        return _gcd_chain(self.m, self.beta)


@dataclass(frozen=True)
class SemigroupGenerators:
    """Canonical minimal generators; ``(1,)`` is the semigroup of a smooth germ."""

    beta_bar: tuple[int, ...]

    def __post_init__(self):
        bb = tuple(self.beta_bar)
        object.__setattr__(self, "beta_bar", bb)
        if not bb:
            raise ValidationError("semigroup generators must be nonempty")
        if any(not isinstance(x, int) or x < 1 for x in bb):
            raise ValidationError("semigroup generators must be positive integers")
        if len(bb) > 1 and bb[1] <= bb[0]:
            raise ValidationError(f"β̄_0 < β̄_1 violated: {bb[0]} >= {bb[1]}")
        chain = _gcd_chain(bb[0], bb[1:])
        for j in range(1, len(bb)):
            if bb[j] % chain[j - 1] == 0:
                raise ValidationError(f"β̄_{j} divisible by m_{j}: {bb[j]} divisible by {chain[j - 1]}")
        if chain[-1] != 1:
            raise ValidationError(f"m_{{g+1}} = 1 violated: gcd chain ends at {chain[-1]}")
        for j in range(1, len(bb) - 1):
            n = chain[j - 1] // chain[j]
            if bb[j + 1] <= n * bb[j]:
                raise ValidationError(
                    f"strong increase β̄_{j + 1} > (m_{j}/m_{j + 1})·β̄_{j} violated: {bb[j + 1]} <= {n}·{bb[j]}"
                )

    @property
    def g(self) -> int:
        return len(self.beta_bar) - 1

    @property
    def gcd_chain(self) -> tuple[int, ...]:
        return _gcd_chain(self.beta_bar[0], self.beta_bar[1:])


def validate_pairs(pairs) -> tuple[tuple[int, int], ...]:
    """Normalize a pair list to a tuple of tuples, raising on the first bad pair."""
    out = []
    for idx, pair in enumerate(pairs, start=1):
        try:
            p, q = pair
            validate_pair(p, q)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"pair #{idx}: {exc}") from None
        out.append((p, q))
    return tuple(out)


def pairs_gcd_chain(pairs) -> tuple[int, ...]:
    """``m_j = p_j ... p_g`` for ``j = 1..g+1``."""
    ps = [p for p, _ in pairs]
    return tuple(prod(ps[j:]) for j in range(len(ps) + 1))


def semigroup_from_characteristic(c) -> SemigroupGenerators:
    if c is SMOOTH:
        return SemigroupGenerators((1,))
    chain = c.gcd_chain
    bb = [c.m, c.beta[0]]
    for j in range(1, c.g):
        # bb[j] holds bbeta_j; chain[j - 1] is m_j
        bb.append(chain[j - 1] // chain[j] * bb[j] + c.beta[j] - c.beta[j - 1])
    return SemigroupGenerators(tuple(bb))


def characteristic_from_semigroup(s: SemigroupGenerators):
    if s.g == 0:
        return SMOOTH
    bb = s.beta_bar
    chain = s.gcd_chain
    beta = [bb[1]]
    for j in range(1, s.g):
        beta.append(bb[j + 1] - chain[j - 1] // chain[j] * bb[j] + beta[j - 1])
    return PuiseuxCharacteristic(bb[0], tuple(beta))


def semigroup_members(generators, bound: int) -> bytearray:
    """Membership table of the numerical semigroup on ``0..bound``."""
    member = bytearray(bound + 1)
    member[0] = 1
    gens = sorted(set(generators))
    for x in range(1, bound + 1):
        for gen in gens:
            if gen > x:
                break
            if member[x - gen]:
                member[x] = 1
                break
    return member


def canonicalize_generators(gens) -> SemigroupGenerators:
    """Canonical generators of the semigroup spanned by an arbitrary generating set."""
    gens = list(gens)
    if not gens:
        raise ValidationError("generating set must be nonempty")
    if any(not isinstance(x, int) or x < 1 for x in gens):
        raise ValidationError("generators must be positive integers")
    d = gcd(*gens)
    if d != 1:
        raise ValidationError(f"not a unibranch plane-branch semigroup: gcd of generators is {d} ≠ 1")

    # each bbeta_j is bounded by some input generator not divisible by m_j
    bound = max(gens)
    member = semigroup_members(gens, bound)
    mj = min(gens)
    beta_bar = [mj]
    while mj > 1:
        b = next(x for x in range(1, bound + 1) if member[x] and x % mj)
        beta_bar.append(b)
        mj = gcd(mj, b)
    try:
        canonical = SemigroupGenerators(tuple(beta_bar))
    except ValidationError as exc:
        raise ValidationError(f"not a plane-branch semigroup: {exc}") from None

    spanned = semigroup_members(beta_bar, bound)
    for x in gens:
        if not spanned[x]:
            raise ValidationError(
                f"not a plane-branch semigroup: {x} is not generated by the canonical generators {tuple(beta_bar)}"
            )
    return canonical


def characteristic_to_pairs(c) -> tuple[tuple[int, int], ...]:
    if c is SMOOTH:
        return ()
    chain = c.gcd_chain
    beta = (c.m,) + c.beta
    return tuple(
        (chain[j - 1] // chain[j], (beta[j] - beta[j - 1] + chain[j - 1]) // chain[j])
        for j in range(1, c.g + 1)
    )


def pairs_to_characteristic(pairs):
    pairs = validate_pairs(pairs)
    if not pairs:
        return SMOOTH
    chain = pairs_gcd_chain(pairs)
    beta = [chain[0]]
    for j, (_, q) in enumerate(pairs, start=1):
        beta.append(q * chain[j] + beta[j - 1] - chain[j - 1])
    return PuiseuxCharacteristic(chain[0], tuple(beta[1:]))


def blowup_characteristic(c):
    """Characteristic of the strict transform after blowing up the singular point."""
    if c is SMOOTH or not isinstance(c, PuiseuxCharacteristic):
        raise ValidationError("blow-up needs a singular branch (g >= 1)")
    m, b1, rest = c.m, c.beta[0], c.beta[1:]
    if b1 > 2 * m:
        return PuiseuxCharacteristic(m, tuple(b - m for b in c.beta))
    d = b1 - m
    shifted = tuple(b - b1 + m for b in rest)
    if m % d:
        return PuiseuxCharacteristic(d, (m,) + shifted)
    if not shifted:
        return SMOOTH
    return PuiseuxCharacteristic(d, shifted)


def multiplicity_sequence(c) -> tuple[int, ...]:
    """Multiplicities of the successive strict transforms along the minimal log resolution.

    Blow-ups of singular points are followed by the stretch of smooth points
    needed for normal crossings; its length is the last quotient of the
    Euclidean algorithm for ``(m_g, beta_g)``.
    """
    if c is SMOOTH:
        return ()
    tail = euclid_expand(c.gcd_chain[-2], c.beta[-1]).quotients[-1]
    mults = []
    current = c
    while current is not SMOOTH:
        mults.append(current.m)
        current = blowup_characteristic(current)
    return tuple(mults) + (1,) * tail


@dataclass(frozen=True)
class CurveInvariants:
    """All three encodings of one branch, built from any of them."""

    characteristic: object
    semigroup: SemigroupGenerators
    pairs: tuple[tuple[int, int], ...]

    @property
    def g(self) -> int:
        return len(self.pairs)

    @property
    def gcd_chain(self) -> tuple[int, ...]:
        return self.semigroup.gcd_chain

    @classmethod
    def from_characteristic(cls, c) -> "CurveInvariants":
        return cls(c, semigroup_from_characteristic(c), characteristic_to_pairs(c))

    @classmethod
    def from_semigroup(cls, s: SemigroupGenerators) -> "CurveInvariants":
        return cls.from_characteristic(characteristic_from_semigroup(s))

    @classmethod
    def from_pairs(cls, pairs) -> "CurveInvariants":
        return cls.from_characteristic(pairs_to_characteristic(pairs))
