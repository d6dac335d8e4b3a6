"""Unibranch Enriques trees and the exceptional lattice of their resolution.

Vertices are numbered ``1..s`` in blow-up order.  Every edge joins
``P_{alpha}`` to ``P_{alpha+1}`` (out-valence one), so a tree is fully
described by the list of edge kinds together with the Puiseux-pair
decomposition ``T_{p_1,q_1} # ... # T_{p_g,q_g}`` it came from.

Three coordinate systems on the lattice spanned by the exceptional curves
are used throughout:

* ``e`` -- coefficients on the strict transforms ``E_alpha``;
* ``w`` -- coefficients on the total transforms ``W_alpha``;
* ``b`` -- coefficients on the branch basis ``B_alpha`` (dual to ``-E``).

They are related by ``E_alpha = W_alpha - sum(W_beta, beta proximate to
alpha)`` and ``W_alpha . W_beta = -delta_{alpha beta}``.  All conversions are
triangular solves over the integers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate

from .errors import ValidationError
from .euclid import euclid_expand, validate_pair


class EdgeKind(enum.Enum):
    SLANT = "slant"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"

    def __str__(self) -> str:
        return self.value


def _tpq_edge_kinds(p: int, q: int) -> list[EdgeKind]:
    # group sizes a_1, ..., a_{m-1}, a_m - 1; the last vertex has no outgoing edge
    quotients = euclid_expand(p, q).quotients
    sizes = list(quotients[:-1]) + [quotients[-1] - 1]
    kinds = [EdgeKind.SLANT] * sizes[0]
    satellite = (EdgeKind.HORIZONTAL, EdgeKind.VERTICAL)
    for i, size in enumerate(sizes[1:]):
        kinds.extend([satellite[i % 2]] * size)
    return kinds


@dataclass(frozen=True)
class EnriquesTree:
    """A unibranch Enriques tree.

    ``segment_of[alpha - 1]`` is the (1-based) segment containing ``P_alpha``;
    a junction vertex is attributed to the earlier segment.  The empty tree
    stands for a smooth germ and the one-vertex tree is the neutral element
    of the connected sum.
    """

    vertex_count: int
    edge_kinds: tuple[EdgeKind, ...]
    pairs: tuple[tuple[int, int], ...]
    segment_of: tuple[int, ...]

    def __post_init__(self):
        s = self.vertex_count
        if s < 0:
            raise ValidationError(f"vertex count must be nonnegative, got {s}")
        if len(self.segment_of) != s:
            raise ValidationError("segmentOf must have one entry per vertex")
        if s == 0:
            if self.edge_kinds or self.pairs:
                raise ValidationError("the trivial tree has no edges and no pairs")
            return
        if len(self.edge_kinds) != s - 1:
            raise ValidationError(f"a tree with {s} vertices needs {s - 1} edges, got {len(self.edge_kinds)}")
        if not self.pairs:
            if s != 1:
                raise ValidationError("a tree without pairs must be the one-vertex tree")
            return
        expected = []
        for idx, (p, q) in enumerate(self.pairs, start=1):
            try:
                expected.extend(_tpq_edge_kinds(p, q))
            except ValidationError as exc:
                raise ValidationError(f"pair #{idx}: {exc}") from None
        if tuple(expected) != self.edge_kinds:
            raise ValidationError("edge kinds do not follow the T_{p,q} pattern of the pair list")

    @property
    def g(self) -> int:
        return len(self.pairs)

    @property
    def top(self) -> int:
        return self.vertex_count

    def segment_sizes(self) -> tuple[int, ...]:
        """Vertex counts ``r_j`` of the individual ``T_{p_j,q_j}``."""
        return tuple(euclid_expand(p, q).vertex_count() for p, q in self.pairs)

    def junctions(self) -> tuple[int, ...]:
        """Vertices ``r_1 + ... + r_j - (j - 1)`` for ``j = 1..g``; the last is the top."""
        return tuple(total - j for j, total in enumerate(accumulate(self.segment_sizes())))

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)


TRIVIAL = EnriquesTree(0, (), (), ())
SINGLE_VERTEX = EnriquesTree(1, (), (), (0,))


def build_tpq(p: int, q: int) -> EnriquesTree:
    validate_pair(p, q)
    kinds = tuple(_tpq_edge_kinds(p, q))
    s = len(kinds) + 1
    return EnriquesTree(s, kinds, ((p, q),), (1,) * s)


def connected_sum(first: EnriquesTree, second: EnriquesTree) -> EnriquesTree:
    """Glue the top vertex of ``first`` to the root of ``second``."""
    for tree in (first, second):
        if tree.vertex_count <= 1 and not tree.pairs:
            return second if tree is first else first
    shift = first.g
    return EnriquesTree(
        first.vertex_count + second.vertex_count - 1,
        first.edge_kinds + second.edge_kinds,
        first.pairs + second.pairs,
        first.segment_of + tuple(j + shift for j in second.segment_of[1:]),
    )


def from_pairs(pairs) -> EnriquesTree:
    tree = TRIVIAL
    for idx, pair in enumerate(pairs, start=1):
        try:
            p, q = pair
            segment = build_tpq(p, q)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"pair #{idx}: {exc}") from None
        tree = connected_sum(tree, segment)
    return tree


@dataclass(frozen=True)
class ProximityTable:
    """``sets[beta - 1]`` holds the vertices ``P_beta`` is proximate to."""

    sets: tuple[frozenset[int], ...]

    def __getitem__(self, beta: int) -> frozenset[int]:
        return self.sets[beta - 1]

    def __len__(self) -> int:
        return len(self.sets)

    def is_satellite(self, beta: int) -> bool:
        return len(self[beta]) == 2

    def inverse(self, alpha: int) -> list[int]:
        """Vertices proximate to ``P_alpha``."""
        return [beta for beta in range(alpha + 1, len(self) + 1) if alpha in self[beta]]

    def matrix(self) -> list[list[int]]:
        """Proximity matrix: 1 on the diagonal, -1 at (alpha, beta) when beta is proximate to alpha."""
        s = len(self)
        pi = [[int(a == b) for b in range(s)] for a in range(s)]
        for beta in range(1, s + 1):
            for alpha in self[beta]:
                pi[alpha - 1][beta - 1] = -1
        return pi


def proper_l_shape_start(tree: EnriquesTree, beta: int) -> int | None:
    """Start of the proper L-shape branch ending at ``P_beta``, if any.

    Such a branch has at least two edges and its first edge differs in kind
    from the common kind of all the others.
    """
    if beta < 3:
        return None
    kind = tree.edge_kinds[beta - 2]   # edge [P_{beta-1} P_beta]
    if kind is EdgeKind.SLANT:
        return None
    start = beta - 1
    while start >= 2 and tree.edge_kinds[start - 2] is kind:
        start -= 1
    # edge [P_{start-1} P_start] is the first one of a different kind
    return start - 1 if start >= 2 else None


def proximity(tree: EnriquesTree) -> ProximityTable:
    sets = []
    for beta in tree.vertices():
        prox = set()
        if beta >= 2:
            prox.add(beta - 1)
            other = proper_l_shape_start(tree, beta)
            if other is not None:
                prox.add(other)
        sets.append(frozenset(prox))
    return ProximityTable(tuple(sets))


def intersection_matrix(tree: EnriquesTree) -> list[list[int]]:
    """Intersection numbers ``E_alpha . E_beta`` as the matrix ``-Pi Pi^T``."""
    pi = proximity(tree).matrix()
    s = tree.vertex_count
    return [[-sum(x * y for x, y in zip(pi[a], pi[b])) for b in range(s)] for a in range(s)]


@dataclass(frozen=True)
class LatticeDivisor:
    e: tuple[int, ...]
    w: tuple[int, ...]
    b: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.e)


def e_from_w(prox: ProximityTable, w) -> list[int]:
    """Forward substitution ``e_beta = w_beta + sum(e_alpha, alpha in prox(beta))``."""
    e = []
    for beta in range(1, len(prox) + 1):
        e.append(w[beta - 1] + sum(e[alpha - 1] for alpha in prox[beta]))
    return e


def w_from_e(prox: ProximityTable, e) -> list[int]:
    return [e[beta - 1] - sum(e[alpha - 1] for alpha in prox[beta]) for beta in range(1, len(prox) + 1)]


def w_from_b(prox: ProximityTable, b) -> list[int]:
    """Back substitution of ``D . E_alpha = -b_alpha`` in total-transform coordinates.

    ``D . E_alpha = -w_alpha + sum(w_beta, beta proximate to alpha)``, so ``w``
    is recovered from the top vertex downwards.
    """
    s = len(prox)
    w = [0] * s
    for alpha in range(s, 0, -1):
        w[alpha - 1] = b[alpha - 1] + sum(w[beta - 1] for beta in prox.inverse(alpha))
    return w


def b_from_e(matrix, e) -> list[int]:
    return [-sum(row[i] * e[i] for i in range(len(e))) for row in matrix]


def divisor_from_e(tree: EnriquesTree, e) -> LatticeDivisor:
    prox = proximity(tree)
    return LatticeDivisor(tuple(e), tuple(w_from_e(prox, e)), tuple(b_from_e(intersection_matrix(tree), e)))


def divisor_from_w(tree: EnriquesTree, w) -> LatticeDivisor:
    return divisor_from_e(tree, e_from_w(proximity(tree), w))


def divisor_from_b(tree: EnriquesTree, b) -> LatticeDivisor:
    prox = proximity(tree)
    w = w_from_b(prox, b)
    return LatticeDivisor(tuple(e_from_w(prox, w)), tuple(w), tuple(b))


def branch_divisor(tree: EnriquesTree) -> LatticeDivisor:
    """The divisor ``B_s`` of the top vertex, i.e. ``mu^* C - C~`` for the branch."""
    s = tree.vertex_count
    return divisor_from_b(tree, [int(alpha == s) for alpha in tree.vertices()])


def weights(tree: EnriquesTree) -> tuple[int, ...]:
    return branch_divisor(tree).w


def canonical_coeffs(tree: EnriquesTree) -> tuple[int, ...]:
    """Coefficients ``k_alpha`` of the relative canonical divisor ``sum W_alpha``."""
    return tuple(e_from_w(proximity(tree), [1] * tree.vertex_count))


def relevant_positions(tree: EnriquesTree) -> tuple[int, ...]:
    """Vertices whose curve meets at least three other components of the reduced total transform."""
    matrix = intersection_matrix(tree)
    s = tree.vertex_count
    relevant = []
    for rho in tree.vertices():
        valence = sum(matrix[rho - 1][alpha - 1] for alpha in tree.vertices() if alpha != rho)
        valence += int(rho == s)    # the strict transform meets E_s only
        if valence >= 3:
            relevant.append(rho)
    return tuple(relevant)
