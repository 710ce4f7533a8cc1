"""Dense subsets of a preordered space and the multi-utilities they induce.

Four density notions are tracked for a subset Z: order density (a strict
chain through Z between any strict pair), Debreu density (a weak chain),
upper density (every incomparable pair is flanked, in both orientations,
by a Z-element incomparable to one side and strictly below the other) and
its Debreu variant with weak instead of strict domination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .core_order import FinitePreorder, up_set
from .monotones import MonotoneClass, MultiUtility, ValueTable, classify

DensityKind = Literal[
    "order_dense", "debreu_dense", "upper_dense", "debreu_upper_dense"
]

DENSITY_KINDS: tuple[DensityKind, ...] = (
    "order_dense",
    "debreu_dense",
    "upper_dense",
    "debreu_upper_dense",
)


@dataclass(frozen=True)
class DensityReport:
    order_dense: bool
    debreu_dense: bool
    upper_dense: bool
    debreu_upper_dense: bool
    first_violation: tuple[int, int] | None


def _violation(
    preorder: FinitePreorder, subset: frozenset[int], kind: DensityKind
) -> tuple[int, int] | None:
    for x in preorder.elements():
        for y in preorder.elements():
            if kind == "order_dense":
                if preorder.strictly_less(x, y) and not any(
                    preorder.strictly_less(x, z) and preorder.strictly_less(z, y)
                    for z in subset
                ):
                    return x, y
            elif kind == "debreu_dense":
                if preorder.strictly_less(x, y) and not any(
                    preorder.le(x, z) and preorder.le(z, y) for z in subset
                ):
                    return x, y
            elif kind == "upper_dense":
                # incomparability is symmetric, so scanning ordered pairs
                # covers both orientations required of Z
                if preorder.incomparable(x, y) and not any(
                    preorder.incomparable(x, z) and preorder.strictly_less(z, y)
                    for z in subset
                ):
                    return x, y
            else:
                if preorder.incomparable(x, y) and not any(
                    preorder.incomparable(x, z) and preorder.le(z, y)
                    for z in subset
                ):
                    return x, y
    return None


def density_report(
    preorder: FinitePreorder, subset: Iterable[int]
) -> DensityReport:
    """Evaluate all four density notions of ``subset`` inside the space."""
    members = frozenset(subset)
    for x in members:
        if not (0 <= x < preorder.n):
            raise ValueError(f"subset member {x} is out of range")
    violations = {
        kind: _violation(preorder, members, kind) for kind in DENSITY_KINDS
    }
    first = next(
        (violations[kind] for kind in DENSITY_KINDS if violations[kind]), None
    )
    return DensityReport(
        order_dense=violations["order_dense"] is None,
        debreu_dense=violations["debreu_dense"] is None,
        upper_dense=violations["upper_dense"] is None,
        debreu_upper_dense=violations["debreu_upper_dense"] is None,
        first_violation=first,
    )


def _indicator(preorder: FinitePreorder, members: frozenset[int]) -> ValueTable:
    return ValueTable(
        tuple(Fraction(1 if x in members else 0) for x in preorder.elements())
    )


def multi_utility_from_dense(
    preorder: FinitePreorder, dense: Iterable[int]
) -> MultiUtility:
    """Indicators of weak and strict upper sets of a doubly dense subset.

    Requires the subset to be Debreu dense and Debreu upper dense; per
    subset element d the family gets the indicators of both upper sets
    of d, which jointly witness every failed comparison.
    """
    members = sorted(frozenset(dense))
    report = density_report(preorder, members)
    if not (report.debreu_dense and report.debreu_upper_dense):
        raise ValueError(
            "subset must be Debreu dense and Debreu upper dense, "
            f"first violation at {report.first_violation}"
        )
    tables = []
    for d in members:
        tables.append(_indicator(preorder, up_set(preorder, d)))
        tables.append(_indicator(preorder, up_set(preorder, d, strict=True)))
    return MultiUtility(tuple(tables))


def multi_utility_from_strict_and_upper_dense(
    preorder: FinitePreorder, strict_table: ValueTable, dense: Iterable[int]
) -> MultiUtility:
    """A strict monotone plus upper-set indicators of a Debreu upper dense set."""
    members = sorted(frozenset(dense))
    if classify(preorder, strict_table) < MonotoneClass.STRICT_MONOTONE:
        raise ValueError("first function must be a strict monotone")
    report = density_report(preorder, members)
    if not report.debreu_upper_dense:
        raise ValueError(
            "subset must be Debreu upper dense, "
            f"first violation at {report.first_violation}"
        )
    tables = [strict_table]
    tables.extend(_indicator(preorder, up_set(preorder, d)) for d in members)
    return MultiUtility(tuple(tables))


def greedy_minimal_dense(
    preorder: FinitePreorder, kind: DensityKind
) -> frozenset[int]:
    """Inclusion-minimal subset passing the chosen density predicate.

    Starts from the full ground set and drops elements in descending index
    order whenever the predicate survives the removal.  Density predicates
    are monotone in the subset, so one pass suffices for minimality.
    """
    if kind not in DENSITY_KINDS:
        raise ValueError(f"unknown density kind {kind!r}")
    current = set(preorder.elements())
    if _violation(preorder, frozenset(current), kind) is not None:
        raise ValueError(f"no subset of this space is {kind.replace('_', ' ')}")
    for x in sorted(current, reverse=True):
        candidate = frozenset(current - {x})
        if _violation(preorder, candidate, kind) is None:
            current.discard(x)
    return frozenset(current)
