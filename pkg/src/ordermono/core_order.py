"""Finite preordered spaces.

A preorder on elements ``0..n-1`` is a reflexive and transitive boolean
relation, stored here as a dense matrix.  Equivalence, strictness and
incomparability are derived from the two directions of the relation:
``x`` and ``y`` are equivalent when both ``x <= y`` and ``y <= x`` hold,
``x`` is strictly below ``y`` when only the first does, and the two are
incomparable when neither does.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

ElementSet = frozenset[int]


class OrderRelation(Enum):
    """How two elements of a preordered space stand to each other."""

    EQUIVALENT = "equivalent"
    STRICTLY_LESS = "strictly-less"
    STRICTLY_GREATER = "strictly-greater"
    INCOMPARABLE = "incomparable"


def reverse_relation(rel: OrderRelation) -> OrderRelation:
    if rel is OrderRelation.STRICTLY_LESS:
        return OrderRelation.STRICTLY_GREATER
    if rel is OrderRelation.STRICTLY_GREATER:
        return OrderRelation.STRICTLY_LESS
    return rel


@dataclass(frozen=True)
class FinitePreorder:
    """A preorder on ``0..n-1`` as a dense boolean matrix.

    ``leq[x][y]`` is True when x is below or equivalent to y.  The matrix
    is validated for shape, reflexivity and transitivity on construction,
    so every instance in circulation is a genuine preorder.
    """

    n: int
    leq: tuple[tuple[bool, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ground set size must be non-negative")
        if len(self.leq) != self.n or any(len(row) != self.n for row in self.leq):
            raise ValueError("relation matrix must be n x n")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must match the ground set size")
        leq = self.leq
        for x in range(self.n):
            if not leq[x][x]:
                raise ValueError(f"relation is not reflexive at {x}")
        for x in range(self.n):
            row_x = leq[x]
            for y in range(self.n):
                if row_x[y]:
                    row_y = leq[y]
                    for z in range(self.n):
                        if row_y[z] and not row_x[z]:
                            raise ValueError(
                                f"relation is not transitive at ({x}, {y}, {z})"
                            )

    def le(self, x: int, y: int) -> bool:
        """True when x is below or equivalent to y."""
        return self.leq[x][y]

    def equivalent(self, x: int, y: int) -> bool:
        return self.leq[x][y] and self.leq[y][x]

    def strictly_less(self, x: int, y: int) -> bool:
        return self.leq[x][y] and not self.leq[y][x]

    def incomparable(self, x: int, y: int) -> bool:
        return not self.leq[x][y] and not self.leq[y][x]

    def elements(self) -> range:
        return range(self.n)


def from_relation_pairs(
    n: int,
    pairs: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> FinitePreorder:
    """Build the smallest preorder on ``0..n-1`` containing the given pairs.

    Each pair (x, y) asserts that x is below y; the reflexive-transitive
    closure is taken, so the input may be any relation.
    """
    mat = [[i == j for j in range(n)] for i in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"pair ({x}, {y}) is out of range for n={n}")
        mat[x][y] = True
    for k in range(n):
        row_k = mat[k]
        for i in range(n):
            if mat[i][k]:
                row_i = mat[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return FinitePreorder(
        n=n,
        leq=tuple(tuple(row) for row in mat),
        labels=tuple(labels) if labels is not None else None,
    )


def relate(preorder: FinitePreorder, x: int, y: int) -> OrderRelation:
    """Classify the ordered pair (x, y)."""
    _check_index(preorder, x)
    _check_index(preorder, y)
    forward = preorder.le(x, y)
    backward = preorder.le(y, x)
    if forward and backward:
        return OrderRelation.EQUIVALENT
    if forward:
        return OrderRelation.STRICTLY_LESS
    if backward:
        return OrderRelation.STRICTLY_GREATER
    return OrderRelation.INCOMPARABLE


def up_set(preorder: FinitePreorder, x: int, strict: bool = False) -> ElementSet:
    """Elements above x: weakly (x below-or-equivalent) or strictly."""
    _check_index(preorder, x)
    if strict:
        return frozenset(
            y for y in preorder.elements() if preorder.strictly_less(x, y)
        )
    return frozenset(y for y in preorder.elements() if preorder.le(x, y))


def equivalence_class(preorder: FinitePreorder, x: int) -> ElementSet:
    _check_index(preorder, x)
    return frozenset(y for y in preorder.elements() if preorder.equivalent(x, y))


def maximal_elements_in(preorder: FinitePreorder, domain: Iterable[int]) -> ElementSet:
    """Elements of ``domain`` with nothing strictly above them in ``domain``."""
    members = frozenset(domain)
    if not members:
        raise ValueError("empty domain has no maximal elements")
    for x in members:
        _check_index(preorder, x)
    return frozenset(
        x
        for x in members
        if not any(preorder.strictly_less(x, y) for y in members)
    )


def quotient(
    preorder: FinitePreorder,
) -> tuple[tuple[ElementSet, ...], FinitePreorder]:
    """Equivalence classes and the induced partial order between them.

    Classes are listed by their smallest member.  The induced relation is
    antisymmetric: distinct classes are never mutually below each other.
    """
    seen: set[int] = set()
    classes: list[ElementSet] = []
    for x in preorder.elements():
        if x not in seen:
            cls = equivalence_class(preorder, x)
            seen.update(cls)
            classes.append(cls)
    reps = [min(cls) for cls in classes]
    k = len(classes)
    mat = tuple(
        tuple(preorder.le(reps[i], reps[j]) for j in range(k)) for i in range(k)
    )
    induced = FinitePreorder(n=k, leq=mat)
    return tuple(classes), induced


_UNIT = (Fraction(0), Fraction(1))
_UPPER = (Fraction(2), Fraction(3))


def _in_interval(x: Fraction, lo_hi: tuple[Fraction, Fraction]) -> bool:
    lo, hi = lo_hi
    return lo <= x <= hi


def interval_preorder_relate(x: Fraction, y: Fraction) -> OrderRelation:
    """Relation between two points of [0,1] u [2,3] under the shifted-copy order.

    A point x of the lower interval sits below a point y of the upper
    interval exactly when y differs from x + 2; the excluded diagonal makes
    the order non-trivially incomparable at a single knife-edge point per x,
    which is why exact rational inputs are required.
    """
    for value in (x, y):
        if not isinstance(value, Fraction):
            raise TypeError("interval preorder points must be Fraction instances")
        if not (_in_interval(value, _UNIT) or _in_interval(value, _UPPER)):
            raise ValueError(f"{value} is outside [0,1] u [2,3]")

    def below(a: Fraction, b: Fraction) -> bool:
        return a == b or (
            _in_interval(a, _UNIT) and _in_interval(b, _UPPER) and b != a + 2
        )

    forward = below(x, y)
    backward = below(y, x)
    if forward and backward:
        return OrderRelation.EQUIVALENT
    if forward:
        return OrderRelation.STRICTLY_LESS
    if backward:
        return OrderRelation.STRICTLY_GREATER
    return OrderRelation.INCOMPARABLE


def sample_interval_preorder(points: Sequence[Fraction]) -> FinitePreorder:
    """Restrict the interval preorder to finitely many distinct points."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("sample points must be distinct")
    n = len(pts)
    mat = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rel = interval_preorder_relate(pts[i], pts[j])
            mat[i][j] = rel in (OrderRelation.EQUIVALENT, OrderRelation.STRICTLY_LESS)
    return FinitePreorder(
        n=n,
        leq=tuple(tuple(row) for row in mat),
        labels=tuple(str(p) for p in pts),
    )


def _check_index(preorder: FinitePreorder, x: int) -> None:
    if not (0 <= x < preorder.n):
        raise ValueError(f"element {x} is out of range for n={preorder.n}")
