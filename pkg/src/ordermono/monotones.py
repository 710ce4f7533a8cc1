"""Real-valued monotones on finite preordered spaces.

A value table assigns an exact rational to every element.  Tables are
classified into a nested hierarchy: monotone (order-preserving), strict
monotone (strict pairs map to strict inequalities), injective monotone
(equal values force equivalence) and utility (the table's order recovers
the preorder exactly).  The constructive half of the module turns
multi-utility presentations into injective monotones and back, via
families of increasing sets aggregated by a geometric series.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

from .core_order import (
    ElementSet,
    FinitePreorder,
    equivalence_class,
    maximal_elements_in,
    up_set,
)
from .errors import DimensionMismatchError, NotMultiUtilityError


def _as_fraction(value) -> Fraction:
    # floats are rejected: binary rounding would silently break exactness
    if isinstance(value, float):
        raise TypeError("value tables are exact; pass Fraction, int or string")
    return Fraction(value)


@dataclass(frozen=True)
class ValueTable:
    """One exact rational value per element of the ground set."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", tuple(_as_fraction(v) for v in self.values)
        )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]


@dataclass(frozen=True)
class MultiUtility:
    """A non-empty family of value tables over a common ground set."""

    functions: tuple[ValueTable, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "functions",
            tuple(
                f if isinstance(f, ValueTable) else ValueTable(tuple(f))
                for f in self.functions
            ),
        )
        if not self.functions:
            raise ValueError("a multi-utility needs at least one function")
        sizes = {len(f) for f in self.functions}
        if len(sizes) != 1:
            raise DimensionMismatchError("all member tables must have equal length")

    def __len__(self) -> int:
        return len(self.functions)

    def ground_size(self) -> int:
        return len(self.functions[0])


@dataclass(frozen=True)
class IncreasingFamily:
    """An ordered family of subsets of ``0..n-1``.

    Whether each set is actually increasing depends on a preorder and is
    checked by :func:`check_separating`, not here.
    """

    n: int
    sets: tuple[ElementSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for members in self.sets:
            if any(not (0 <= x < self.n) for x in members):
                raise ValueError("set member out of range")

    def __len__(self) -> int:
        return len(self.sets)


class MonotoneClass(IntEnum):
    """Classification of a value table; larger values are strictly stronger."""

    NOT_MONOTONE = 0
    MONOTONE = 1
    STRICT_MONOTONE = 2
    INJECTIVE_MONOTONE = 3
    UTILITY = 4

    @property
    def label(self) -> str:
        return {
            MonotoneClass.NOT_MONOTONE: "NotMonotone",
            MonotoneClass.MONOTONE: "Monotone",
            MonotoneClass.STRICT_MONOTONE: "StrictMonotone",
            MonotoneClass.INJECTIVE_MONOTONE: "InjectiveMonotone",
            MonotoneClass.UTILITY: "Utility",
        }[self]


class DivergenceSide(Enum):
    """Which argument is missing from the first set where memberships differ."""

    X_ABSENT = "x-absent"
    Y_ABSENT = "y-absent"


class RepresentationReport(NamedTuple):
    represents: bool
    injectively_represents: bool


def _check_table(preorder: FinitePreorder, table: ValueTable) -> None:
    if len(table) != preorder.n:
        raise DimensionMismatchError(
            f"table has {len(table)} values but the space has {preorder.n} elements"
        )


def classify(preorder: FinitePreorder, table: ValueTable) -> MonotoneClass:
    """Strongest class in the hierarchy that the table satisfies."""
    _check_table(preorder, table)
    n = preorder.n
    f = table.values
    for x in range(n):
        for y in range(n):
            if preorder.le(x, y) and f[x] > f[y]:
                return MonotoneClass.NOT_MONOTONE
    for x in range(n):
        for y in range(n):
            if preorder.strictly_less(x, y) and f[x] >= f[y]:
                return MonotoneClass.MONOTONE
    for x in range(n):
        for y in range(n):
            if preorder.incomparable(x, y) and f[x] == f[y]:
                return MonotoneClass.STRICT_MONOTONE
    for x in range(n):
        for y in range(n):
            if f[x] <= f[y] and not preorder.le(x, y):
                return MonotoneClass.INJECTIVE_MONOTONE
    return MonotoneClass.UTILITY


def is_multi_utility(
    preorder: FinitePreorder, family: MultiUtility
) -> tuple[bool, tuple[int, int] | None]:
    """Does the family's pointwise order coincide with the preorder?

    Returns (True, None) on success, else (False, (x, y)) where (x, y) is
    the first ordered pair at which the biconditional fails: either some
    member decreases along x below y, or nothing in the family witnesses
    that y is not below x.
    """
    if family.ground_size() != preorder.n:
        raise DimensionMismatchError(
            f"family is over {family.ground_size()} elements, space has {preorder.n}"
        )
    tables = [f.values for f in family.functions]
    for x in range(preorder.n):
        for y in range(preorder.n):
            if preorder.le(x, y) and any(f[x] > f[y] for f in tables):
                return False, (x, y)
            if not preorder.le(y, x) and not any(f[x] < f[y] for f in tables):
                return False, (x, y)
    return True, None


def geometric_aggregate(
    family: IncreasingFamily, ratio: Fraction
) -> ValueTable:
    """Sum ratio**k over the sets containing each element.

    The empty family aggregates to the zero table.
    """
    r = _as_fraction(ratio)
    if not (0 < r < 1):
        raise ValueError("ratio must lie strictly between 0 and 1")
    values = []
    for x in range(family.n):
        total = Fraction(0)
        power = Fraction(1)
        for members in family.sets:
            if x in members:
                total += power
            power *= r
        values.append(total)
    return ValueTable(tuple(values))


def first_divergence(
    family: IncreasingFamily, x: int, y: int
) -> tuple[int, DivergenceSide] | None:
    """Index and side of the first set containing exactly one of x, y."""
    for k, members in enumerate(family.sets):
        x_in = x in members
        if x_in != (y in members):
            return k, (DivergenceSide.Y_ABSENT if x_in else DivergenceSide.X_ABSENT)
    return None


def check_separating(
    preorder: FinitePreorder, family: IncreasingFamily
) -> tuple[bool, bool]:
    """(strict pairs all separated, incomparable pairs also all separated).

    Separation of (x, y) means some set excludes x and contains y.  Every
    set must be increasing for the preorder; a non-increasing set is an
    error, not a False result.
    """
    if family.n != preorder.n:
        raise DimensionMismatchError(
            f"family is over {family.n} elements, space has {preorder.n}"
        )
    for k, members in enumerate(family.sets):
        for x in members:
            for y in preorder.elements():
                if preorder.le(x, y) and y not in members:
                    raise ValueError(f"set {k} is not increasing: {x} <= {y}")

    def separated(x: int, y: int) -> bool:
        return any(x not in members and y in members for members in family.sets)

    strict_ok = True
    injective_ok = True
    for x in preorder.elements():
        for y in preorder.elements():
            if preorder.strictly_less(x, y) and not separated(x, y):
                strict_ok = False
            if x < y and preorder.incomparable(x, y):
                if not (separated(x, y) or separated(y, x)):
                    injective_ok = False
    return strict_ok, injective_ok and strict_ok


def _midpoint_thresholds(values: Iterable[Fraction]) -> list[Fraction]:
    distinct = sorted(set(values))
    return [
        (lo + hi) / 2 for lo, hi in zip(distinct, distinct[1:])
    ]


def thresholds_family(
    preorder: FinitePreorder, family: MultiUtility
) -> IncreasingFamily:
    """Superlevel sets of each member at midpoints between its distinct values.

    Sets are enumerated function by function, thresholds ascending.  The
    result separates every strict pair and every incomparable pair in at
    least one direction, which is re-verified before returning.
    """
    ok, pair = is_multi_utility(preorder, family)
    if not ok:
        raise NotMultiUtilityError(
            f"family is not a multi-utility, first violation at pair {pair}", pair
        )
    sets = []
    for table in family.functions:
        for q in _midpoint_thresholds(table.values):
            sets.append(
                frozenset(x for x in preorder.elements() if table[x] >= q)
            )
    result = IncreasingFamily(n=preorder.n, sets=tuple(sets))
    strict_ok, injective_ok = check_separating(preorder, result)
    if not (strict_ok and injective_ok):
        raise AssertionError("threshold family failed its separation guarantee")
    return result


def _check_injective_ratio(ratio) -> Fraction:
    r = _as_fraction(ratio)
    # strictly below 1/2 so each set's term dominates the whole tail
    if not (0 < r < Fraction(1, 2)):
        raise ValueError("ratio must lie strictly between 0 and 1/2")
    return r


def injective_from_multi_utility(
    preorder: FinitePreorder, family: MultiUtility, ratio: Fraction
) -> ValueTable:
    """Collapse a multi-utility into a single injective monotone."""
    r = _check_injective_ratio(ratio)
    return geometric_aggregate(thresholds_family(preorder, family), r)


def injective_multi_utility_swap(
    preorder: FinitePreorder, family: MultiUtility, ratio: Fraction
) -> MultiUtility:
    """Multi-utility consisting entirely of injective monotones.

    Aggregates the threshold family once in its given order and once per
    transposition of two positions; the swapped copies flip the first
    divergence of any incomparable pair, so together they pin down the
    original preorder.
    """
    r = _check_injective_ratio(ratio)
    base = thresholds_family(preorder, family)
    tables = [geometric_aggregate(base, r)]
    for m, p in combinations(range(len(base)), 2):
        swapped = list(base.sets)
        swapped[m], swapped[p] = swapped[p], swapped[m]
        tables.append(
            geometric_aggregate(IncreasingFamily(n=base.n, sets=tuple(swapped)), r)
        )
    return MultiUtility(tuple(tables))


def _require_strict(preorder: FinitePreorder, table: ValueTable) -> MonotoneClass:
    cls = classify(preorder, table)
    if cls < MonotoneClass.STRICT_MONOTONE:
        raise ValueError(f"table classifies as {cls.label}, need a strict monotone")
    return cls


def non_injective_set(preorder: FinitePreorder, table: ValueTable) -> ElementSet:
    """Elements sharing their value with some incomparable element."""
    _require_strict(preorder, table)
    f = table.values
    return frozenset(
        x
        for x in preorder.elements()
        if any(
            f[x] == f[y] and preorder.incomparable(x, y)
            for y in preorder.elements()
        )
    )


def eliminate_noninjective(
    preorder: FinitePreorder, table: ValueTable
) -> ValueTable:
    """Perturb a strict monotone into an injective one.

    Walks the non-injective elements in ascending index order; step k adds
    1 (then 1/2, 1/4, ...) to every element at or above the current pivot's
    value that is not equivalent to the pivot.  Shrinking increments never
    re-merge values separated earlier, and the weak order of values is
    preserved throughout.
    """
    _require_strict(preorder, table)
    values = list(table.values)
    pivots = sorted(non_injective_set(preorder, table))
    for step, pivot in enumerate(pivots):
        increment = Fraction(1) if step == 0 else Fraction(1, 2**step)
        reference = values[pivot]
        values = [
            v + increment
            if v >= reference and not preorder.equivalent(x, pivot)
            else v
            for x, v in enumerate(values)
        ]
    return ValueTable(tuple(values))


def rescale_to_unit(table: ValueTable) -> ValueTable:
    """Order-preserving rescale of the k-th smallest distinct value to k/(K+1)."""
    distinct = sorted(set(table.values))
    rank = {v: Fraction(k + 1, len(distinct) + 1) for k, v in enumerate(distinct)}
    return ValueTable(tuple(rank[v] for v in table.values))


def injective_multi_utility_from_injective(
    preorder: FinitePreorder, table: ValueTable
) -> MultiUtility:
    """Expand one injective monotone into a multi-utility of injective monotones.

    The table is first rescaled into (0,1).  Every element that loses some
    comparison against an incomparable element gets a corrected copy, one
    per equivalence class, adding the indicator of the class's weak upper
    set; the bump of size 1 outweighs any rescaled difference.
    """
    cls = classify(preorder, table)
    if cls < MonotoneClass.INJECTIVE_MONOTONE:
        raise ValueError(f"table classifies as {cls.label}, need an injective monotone")
    base = rescale_to_unit(table)
    f = base.values
    needs_fix = frozenset(
        x
        for x in preorder.elements()
        if any(
            preorder.incomparable(x, y) and f[x] < f[y]
            for y in preorder.elements()
        )
    )
    tables = [base]
    seen: set[int] = set()
    for x in sorted(needs_fix):
        if x in seen:
            continue
        seen.update(equivalence_class(preorder, x))
        upper = up_set(preorder, x)
        tables.append(
            ValueTable(
                tuple(f[y] + (1 if y in upper else 0) for y in preorder.elements())
            )
        )
    return MultiUtility(tuple(tables))


def separating_family_from_monotone(
    preorder: FinitePreorder, table: ValueTable
) -> IncreasingFamily:
    """Superlevel sets of a strict monotone at its midpoint thresholds."""
    _require_strict(preorder, table)
    sets = tuple(
        frozenset(x for x in preorder.elements() if table[x] >= q)
        for q in _midpoint_thresholds(table.values)
    )
    return IncreasingFamily(n=preorder.n, sets=sets)


def verify_representation(
    preorder: FinitePreorder, table: ValueTable
) -> RepresentationReport:
    """Exhaustively test how the table's maxima sit inside maximal elements.

    ``represents``: over every non-empty subset, the table's argmax set is
    contained in the subset's maximal elements.  ``injectively_represents``:
    the argmax set moreover equals the trace of a single equivalence class
    whose members are maximal in the subset.  Exhaustive over all 2**n - 1
    subsets, so the ground set is capped at 6 elements.
    """
    _check_table(preorder, table)
    if preorder.n > 6:
        raise ValueError("exhaustive subset check is limited to n <= 6")
    f = table.values
    represents = True
    injective = True
    for mask in range(1, 2**preorder.n):
        subset = [x for x in preorder.elements() if mask >> x & 1]
        best = max(f[x] for x in subset)
        argmax = frozenset(x for x in subset if f[x] == best)
        maximal = maximal_elements_in(preorder, subset)
        if not argmax <= maximal:
            represents = False
        witness = min(argmax)
        if not (
            witness in maximal
            and argmax == equivalence_class(preorder, witness) & frozenset(subset)
        ):
            injective = False
        if not represents and not injective:
            break
    return RepresentationReport(represents, injective)
