"""The uncertainty preorder on finite probability distributions.

Distributions are compared through their Lorenz utilities, the negated
partial sums of the decreasing rearrangement: p sits below q when every
Lorenz utility of p is at most that of q, i.e. when p is the more biased
distribution.  This is classical majorization read in reverse, with the
Dirac measures at the bottom and the uniform distribution at the top.
Shannon entropy is a strict monotone for it but, the space not being
total, no single real function can represent it; the maxent audit makes
the gap concrete on an exactly parametrized constraint line.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core_order import OrderRelation, reverse_relation
from .errors import (
    DimensionMismatchError,
    InfeasibleConstraintError,
    VerificationError,
)

# two entropies within this float distance count as tied in the audit
ENTROPY_TOLERANCE = 1e-12

_ROUND_DENOMINATOR = 10**12


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("distributions are exact; pass Fraction, int or string")
    return Fraction(value)


@dataclass(frozen=True)
class Dist:
    """An exact rational probability distribution on finitely many outcomes."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = tuple(_as_fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise ValueError("a distribution needs at least one outcome")
        if any(p < 0 or p > 1 for p in probs):
            raise ValueError("probabilities must lie in [0, 1]")
        if sum(probs) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, i: int) -> Fraction:
        return self.probs[i]


def dirac(n: int, outcome: int = 0) -> Dist:
    if not (0 <= outcome < n):
        raise ValueError("outcome out of range")
    return Dist(tuple(Fraction(1 if i == outcome else 0) for i in range(n)))


def uniform(n: int) -> Dist:
    if n < 1:
        raise ValueError("need at least one outcome")
    return Dist(tuple(Fraction(1, n) for _ in range(n)))


@dataclass(frozen=True)
class EnergyFunction:
    """An exact rational observable, one value per outcome."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", tuple(_as_fraction(v) for v in self.values)
        )
        if not self.values:
            raise ValueError("an energy function needs at least one outcome")

    def __len__(self) -> int:
        return len(self.values)

    def expectation(self, dist: Dist) -> Fraction:
        if len(dist) != len(self.values):
            raise DimensionMismatchError(
                "distribution and energy function differ in length"
            )
        return sum(
            (p * e for p, e in zip(dist.probs, self.values)), Fraction(0)
        )


@dataclass(frozen=True)
class MaxentReport:
    """Outcome of auditing entropy maximization against order maximality."""

    constraint_level: Fraction
    grid_step: Fraction
    grid_size: int
    maximal_set: tuple[Dist, ...]
    entropy_argmax: tuple[Dist, ...]
    missed: tuple[Dist, ...]


class GridRow(NamedTuple):
    t: Fraction
    dist: Dist
    entropy: float
    is_maximal: bool
    is_entropy_argmax: bool


def decreasing_rearrangement(dist: Dist) -> Dist:
    return Dist(tuple(sorted(dist.probs, reverse=True)))


def lorenz_utilities(dist: Dist) -> tuple[Fraction, ...]:
    """Negated partial sums of the decreasing rearrangement, lengths 1..n-1."""
    ordered = sorted(dist.probs, reverse=True)
    out = []
    acc = Fraction(0)
    for p in ordered[:-1]:
        acc += p
        out.append(-acc)
    return tuple(out)


def uncertainty_compare(p: Dist, q: Dist) -> OrderRelation:
    """Componentwise comparison of Lorenz utilities; requires equal lengths."""
    if len(p) != len(q):
        raise DimensionMismatchError(
            f"distributions have lengths {len(p)} and {len(q)}"
        )
    up = lorenz_utilities(p)
    uq = lorenz_utilities(q)
    forward = all(a <= b for a, b in zip(up, uq))
    backward = all(b <= a for a, b in zip(up, uq))
    if forward and backward:
        return OrderRelation.EQUIVALENT
    if forward:
        return OrderRelation.STRICTLY_LESS
    if backward:
        return OrderRelation.STRICTLY_GREATER
    return OrderRelation.INCOMPARABLE


def majorization_compare(p: Dist, q: Dist) -> OrderRelation:
    """Classical majorization; zero-pads to a common length.

    Always the exact reverse of :func:`uncertainty_compare` on the padded
    distributions.
    """
    width = max(len(p), len(q))
    return reverse_relation(uncertainty_compare(_pad(p, width), _pad(q, width)))


def _pad(dist: Dist, width: int) -> Dist:
    if len(dist) == width:
        return dist
    return Dist(dist.probs + (Fraction(0),) * (width - len(dist)))


def shannon_entropy(dist: Dist, bits: bool = False) -> float:
    """Entropy in nats by default, base 2 when ``bits``; 0 log 0 reads as 0."""
    total = -sum(
        float(p) * math.log(float(p)) for p in dist.probs if p > 0
    )
    return total / math.log(2) if bits else total


def tensor(p: Dist, r: Dist) -> Dist:
    """Product distribution, outcomes of ``p`` varying slowest."""
    return Dist(tuple(a * b for a in p.probs for b in r.probs))


def trumping_check(p: Dist, q: Dist, r: Dist) -> tuple[OrderRelation, bool]:
    """Base majorization relation of (p, q) and whether r catalyzes p below q."""
    base = majorization_compare(p, q)
    catalyzed = majorization_compare(tensor(p, r), tensor(q, r)) in (
        OrderRelation.STRICTLY_LESS,
        OrderRelation.EQUIVALENT,
    )
    return base, catalyzed


def random_comparable_pair(
    seed: int, n: int, transfers: int = 3
) -> tuple[Dist, Dist]:
    """A strictly comparable pair: q is p made more uniform by rational transfers.

    Each transfer moves at most half the gap from a strictly larger entry
    to a smaller one, so every step strictly raises uncertainty.  The
    strict relation is re-verified exactly before returning.
    """
    if n < 2:
        raise ValueError("need at least two outcomes")
    if transfers < 1:
        raise ValueError("need at least one transfer")
    rng = random.Random(seed)
    for _ in range(200):
        weights = [rng.randint(1, 12) for _ in range(n)]
        total = sum(weights)
        probs = [Fraction(w, total) for w in weights]
        moved = list(probs)
        feasible = True
        for _ in range(transfers):
            unequal = [
                (i, j)
                for i in range(n)
                for j in range(n)
                if moved[i] > moved[j]
            ]
            if not unequal:
                feasible = False
                break
            i, j = rng.choice(unequal)
            share = Fraction(1, rng.randint(2, 6))
            delta = (moved[i] - moved[j]) * share / 2
            moved[i] -= delta
            moved[j] += delta
        if not feasible:
            continue
        p = Dist(tuple(probs))
        q = Dist(tuple(moved))
        if uncertainty_compare(p, q) is OrderRelation.STRICTLY_LESS:
            return p, q
    raise RuntimeError("could not generate a strictly comparable pair")


def _integer_direction(energy: EnergyFunction) -> tuple[int, int, int]:
    e1, e2, e3 = energy.values
    raw = (e3 - e2, e1 - e3, e2 - e1)
    scale = math.lcm(*(f.denominator for f in raw))
    ints = [int(f * scale) for f in raw]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _constraint_segment(
    energy: EnergyFunction, level: Fraction
) -> tuple[tuple[Fraction, Fraction, Fraction], tuple[int, int, int], Fraction]:
    """Base point, integer direction and parameter length of the feasible line."""
    if len(energy) != 3:
        raise DimensionMismatchError("the exact line parametrization needs 3 outcomes")
    c = _as_fraction(level)
    values = energy.values
    if not (min(values) <= c <= max(values)):
        raise InfeasibleConstraintError(
            f"level {c} is outside [{min(values)}, {max(values)}]"
        )
    if len(set(values)) == 1:
        raise ValueError(
            "constant energy constrains nothing; the feasible set is not a line"
        )
    hi = values.index(max(values))
    lo = values.index(min(values))
    a = (c - values[lo]) / (values[hi] - values[lo])
    base = [Fraction(0)] * 3
    base[hi] = a
    base[lo] = 1 - a
    d = _integer_direction(energy)
    t_lo = max(-base[k] / d[k] for k in range(3) if d[k] > 0)
    t_hi = min(base[k] / -d[k] for k in range(3) if d[k] < 0)
    start = tuple(base[k] + t_lo * d[k] for k in range(3))
    return start, d, t_hi - t_lo


def _grid(
    energy: EnergyFunction, level: Fraction, step: Fraction
) -> list[tuple[Fraction, Dist]]:
    h = _as_fraction(step)
    if h <= 0:
        raise ValueError("step must be positive")
    start, d, length = _constraint_segment(energy, level)
    points = []
    t = Fraction(0)
    while t < length:
        points.append(t)
        t += h
    points.append(length)
    return [
        (t, Dist(tuple(start[k] + t * d[k] for k in range(3)))) for t in points
    ]


def constraint_grid(
    energy: EnergyFunction, level: Fraction, step: Fraction
) -> tuple[Dist, ...]:
    """Exact sample of the 3-outcome constraint line, endpoints included."""
    return tuple(dist for _, dist in _grid(energy, level, step))


def constraint_sample(
    energy: EnergyFunction, level: Fraction, count: int, seed: int
) -> tuple[Dist, ...]:
    """Experimental: random exact points of the constraint set, any dimension.

    Samples all but two coordinates and solves the remaining 2x2 system,
    rejecting draws that leave the simplex.  Unlike :func:`constraint_grid`
    this gives no coverage guarantee.
    """
    n = len(energy)
    if n < 3:
        raise DimensionMismatchError("need at least three outcomes")
    c = _as_fraction(level)
    values = energy.values
    if not (min(values) <= c <= max(values)):
        raise InfeasibleConstraintError(
            f"level {c} is outside [{min(values)}, {max(values)}]"
        )
    hi = values.index(max(values))
    lo = values.index(min(values))
    if hi == lo:
        raise ValueError("constant energy constrains nothing")
    free = [k for k in range(n) if k not in (hi, lo)]
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < 1000 * count:
        attempts += 1
        rest = [Fraction(rng.randint(0, 8), 24) for _ in free]
        mass = 1 - sum(rest)
        moment = c - sum(r * values[k] for r, k in zip(rest, free))
        if mass < 0:
            continue
        # p_hi + p_lo = mass, E_hi p_hi + E_lo p_lo = moment
        p_hi = (moment - values[lo] * mass) / (values[hi] - values[lo])
        p_lo = mass - p_hi
        if p_hi < 0 or p_lo < 0:
            continue
        probs = [Fraction(0)] * n
        probs[hi] = p_hi
        probs[lo] = p_lo
        for r, k in zip(rest, free):
            probs[k] = r
        out.append(Dist(tuple(probs)))
    if len(out) < count:
        raise RuntimeError("rejection sampling exhausted its attempt budget")
    return tuple(out)


def maxent_audit_rows(
    energy: EnergyFunction, level: Fraction, step: Fraction
) -> tuple[MaxentReport, tuple[GridRow, ...]]:
    """Audit report plus one row per grid point, in grid order."""
    grid = _grid(energy, level, step)
    dists = [dist for _, dist in grid]
    lorenz = [lorenz_utilities(d) for d in dists]
    scale = math.lcm(*(u.denominator for vec in lorenz for u in vec))
    # rescaling to a shared denominator turns every pairwise Lorenz
    # comparison into plain integer comparisons
    ivecs = [(int(u1 * scale), int(u2 * scale)) for u1, u2 in lorenz]
    maximal_flags = []
    for a1, a2 in ivecs:
        dominated = False
        for b1, b2 in ivecs:
            if a1 <= b1 and a2 <= b2 and (a1 != b1 or a2 != b2):
                dominated = True
                break
        maximal_flags.append(not dominated)
    entropies = [shannon_entropy(d) for d in dists]
    peak = max(entropies)
    argmax_flags = [h >= peak - ENTROPY_TOLERANCE for h in entropies]
    argmax_sorted = {
        decreasing_rearrangement(d).probs
        for d, flag in zip(dists, argmax_flags)
        if flag
    }
    rows = tuple(
        GridRow(t, d, h, m, a)
        for (t, d), h, m, a in zip(grid, entropies, maximal_flags, argmax_flags)
    )
    report = MaxentReport(
        constraint_level=_as_fraction(level),
        grid_step=_as_fraction(step),
        grid_size=len(grid),
        maximal_set=tuple(d for d, m in zip(dists, maximal_flags) if m),
        entropy_argmax=tuple(d for d, a in zip(dists, argmax_flags) if a),
        missed=tuple(
            d
            for d, m in zip(dists, maximal_flags)
            if m and decreasing_rearrangement(d).probs not in argmax_sorted
        ),
    )
    return report, rows


def maxent_audit(
    energy: EnergyFunction, level: Fraction, step: Fraction
) -> MaxentReport:
    """Which order-maximal grid points does entropy maximization miss?"""
    return maxent_audit_rows(energy, level, step)[0]


def upper_dense_witness(x: Dist, y: Dist) -> Dist:
    """For incomparable x, y: a rational z with z incomparable to x, strictly below y.

    Inflates the leading entries of y's decreasing rearrangement by a
    geometrically decaying budget small enough to keep the crossing with
    x's partial sums, taking the lost mass out of y's last positive entry.
    The required relations are re-verified exactly before returning.
    """
    if uncertainty_compare(x, y) is not OrderRelation.INCOMPARABLE:
        raise ValueError("witness construction needs an incomparable pair")
    xs = sorted(x.probs, reverse=True)
    ys = sorted(y.probs, reverse=True)
    n = len(ys)
    sum_x = Fraction(0)
    sum_y = Fraction(0)
    gap = None
    for i in range(n - 1):
        sum_x += xs[i]
        sum_y += ys[i]
        if sum_x > sum_y:
            gap = sum_x - sum_y
            break
    if gap is None:
        raise VerificationError("incomparable pair has no crossing partial sum")
    k = max(i for i in range(n) if ys[i] > 0)
    # total inflation stays below both the crossing gap and the mass
    # available at position k, with strict room to spare
    delta = min(ys[k], gap) / 4
    inflated = [ys[i] + delta / 2 ** (i + 1) for i in range(k)]
    last = 1 - sum(inflated)
    z = Dist(tuple(inflated) + (last,) + (Fraction(0),) * (n - k - 1))
    if uncertainty_compare(z, y) is not OrderRelation.STRICTLY_LESS:
        raise VerificationError("witness is not strictly below y")
    if uncertainty_compare(x, z) is not OrderRelation.INCOMPARABLE:
        raise VerificationError("witness is not incomparable to x")
    return z


def order_dense_witness_dim2(p: Dist, q: Dist) -> Dist:
    """Strictly-between witness on two outcomes, where the order is total."""
    if len(p) != 2 or len(q) != 2:
        raise DimensionMismatchError("the midpoint witness is for 2 outcomes")
    if uncertainty_compare(p, q) is not OrderRelation.STRICTLY_LESS:
        raise ValueError("need p strictly below q")
    top = (max(p.probs) + max(q.probs)) / 2
    r = Dist((top, 1 - top))
    if (
        uncertainty_compare(p, r) is not OrderRelation.STRICTLY_LESS
        or uncertainty_compare(r, q) is not OrderRelation.STRICTLY_LESS
    ):
        raise VerificationError("midpoint witness fails the strict chain")
    return r


def _float_entropy(vec: Sequence[float]) -> float:
    return -sum(v * math.log(v) for v in vec if v > 0)


def _entropy_level_point(
    lo: Sequence[float], hi: Sequence[float], target: float, tol: float
) -> list[float]:
    """Point of entropy ``target`` on the segment lo -> hi, entropy increasing."""
    a, b = 0.0, 1.0
    mid_vec = list(lo)
    for _ in range(200):
        mid = (a + b) / 2
        mid_vec = [(1 - mid) * u + mid * v for u, v in zip(lo, hi)]
        h = _float_entropy(mid_vec)
        if abs(h - target) <= tol / 4:
            break
        if h < target:
            a = mid
        else:
            b = mid
    return mid_vec


def _round_to_dist(vec: Sequence[float]) -> Dist:
    head = [
        Fraction(round(v * _ROUND_DENOMINATOR), _ROUND_DENOMINATOR)
        for v in vec[:-1]
    ]
    return Dist(tuple(head) + (1 - sum(head),))


def equal_entropy_incomparable_pair(
    entropy: float, n: int, tol: float = 1e-9
) -> tuple[Dist, Dist]:
    """Two incomparable rational distributions with entropy ``entropy`` up to tol.

    Entropy level sets off the extremes are uncountable while equivalence
    classes are finite, so such pairs always exist for three or more
    outcomes.  Candidates are found by bisection along segments from
    low-entropy points toward the uniform distribution, rounded to
    denominator 10**12, then checked exactly for incomparability.
    """
    if n < 3:
        raise ValueError("below three outcomes the space is totally preordered")
    if not (0 < entropy < math.log(n)):
        raise ValueError(f"entropy level must be inside (0, ln {n})")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    # a low-entropy anchor on the edge between the first two outcomes
    half = math.log(2)
    anchor_level = min(entropy, half) / 2
    a, b = 0.0, 0.5
    for _ in range(200):
        mid = (a + b) / 2
        if _float_entropy([1 - mid, mid]) < anchor_level:
            a = mid
        else:
            b = mid
    anchor = [1 - (a + b) / 2, (a + b) / 2] + [0.0] * (n - 2)
    flat = [1.0 / n] * n
    candidates: list[Dist] = []
    for t in (1.0, 0.5, 0.0, 0.75, 0.25, 0.125, 0.875):
        tilted = [(1 - t) + t * anchor[0]] + [t * v for v in anchor[1:]]
        point = _entropy_level_point(tilted, flat, entropy, tol)
        try:
            rounded = _round_to_dist(point)
        except ValueError:
            continue
        if abs(shannon_entropy(rounded) - entropy) > tol:
            continue
        for other in candidates:
            if uncertainty_compare(other, rounded) is OrderRelation.INCOMPARABLE:
                return other, rounded
        candidates.append(rounded)
    raise VerificationError(
        "no incomparable pair found; the tolerance may be too small"
    )
