"""Euclidean-algorithm data for a coprime pair ``p < q``.

Besides quotients and remainders we keep two auxiliary sequences ``f`` and
``delta`` that express every remainder as an integer combination of ``q``
and ``p``::

    f_j     = f_{j-2} + a_j * delta_j          (1 <= j <= m)
    delta_j = delta_{j-2} + a_{j-1} * f_{j-2}  (2 <= j <= m + 1)

with ``f_{-1} = f_0 = 0`` and ``delta_0 = delta_1 = 1``.

Index conventions: ``quotients[j - 1]`` is ``a_j``, ``remainders[j]`` is
``r_j``, ``f[j + 1]`` is ``f_j`` (so ``f[0]`` is ``f_{-1}``) and ``delta[j]``
is ``delta_j``.  Use the accessor methods to avoid off-by-one slips.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ValidationError


def validate_pair(p: int, q: int) -> None:
    if not isinstance(p, int) or not isinstance(q, int):
        raise ValidationError(f"pair ({p!r},{q!r}) must consist of integers")
    if p < 2:
        raise ValidationError(f"p >= 2 violated: p = {p}")
    if p >= q:
        raise ValidationError(f"p < q violated: ({p},{q})")
    if gcd(p, q) != 1:
        raise ValidationError(f"gcd(p,q) = 1 violated: gcd({p},{q}) = {gcd(p, q)}")


@dataclass(frozen=True)
class EuclidData:
    p: int
    q: int
    quotients: tuple[int, ...]
    remainders: tuple[int, ...]
    f: tuple[int, ...]
    delta: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of division steps ``m``."""
        return len(self.quotients)

    def a(self, j: int) -> int:
        return self.quotients[j - 1]

    def r(self, j: int) -> int:
        return self.remainders[j]

    def f_at(self, j: int) -> int:
        return self.f[j + 1]

    def delta_at(self, j: int) -> int:
        return self.delta[j]

    def vertex_count(self) -> int:
        return sum(self.quotients)


def euclid_expand(p: int, q: int) -> EuclidData:
    validate_pair(p, q)
    quotients = []
    remainders = [q, p]
    a, b = q, p
    while b:
        quotients.append(a // b)
        a, b = b, a % b
        if b:
            remainders.append(b)
    m = len(quotients)

    f = {-1: 0, 0: 0}
    delta = {0: 1, 1: 1}
    for j in range(1, m + 2):
        # delta_j must exist before f_j
        if j >= 2:
            delta[j] = delta[j - 2] + quotients[j - 2] * f[j - 2]
        if j <= m:
            f[j] = f[j - 2] + quotients[j - 1] * delta[j]

    return EuclidData(
        p,
        q,
        tuple(quotients),
        tuple(remainders),
        tuple(f[j] for j in range(-1, m + 1)),
        tuple(delta[j] for j in range(0, m + 2)),
    )
