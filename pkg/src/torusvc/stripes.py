"""Lower-bound construction for stripes.

n+1 points in dimension 2^n, shattered by stripes of any fixed length l.
Dimension i (0-indexed) is associated with the complementary subset pair
{C_i, C \\ C_i}, where the canonical representative C_i is the subset of
points {1..n} whose membership bits are the bits of i (point 0 is never in
a representative).  In dimension i the points of C_i sit at (1-l)/3 and
everybody else at (2+l)/3; the two values are further than l apart going
forward, so a stripe anchored there can pick out either side.
"""

from fractions import Fraction
from math import lcm

from .torus import ONE, Arc, PointSet, Rat, Stripe

Mask = int


def low_value(l: Rat) -> Rat:
    return (1 - l) / 3


def high_value(l: Rat) -> Rat:
    return (2 + l) / 3


def pair_rep(subset: Mask, n_points: int) -> Mask:
    """Canonical representative of {S, complement}: the side without point 0."""
    if subset & 1:
        return ~subset & ((1 << n_points) - 1)
    return subset


def dim_of_pair(subset: Mask, n_points: int) -> int:
    """Dimension index carrying the pair of this subset (binary encoding)."""
    return pair_rep(subset, n_points) >> 1


def members_of_dim(i: int) -> Mask:
    """The canonical subset C_i encoded back as a point mask."""
    return i << 1


def _check_length(l: Rat):
    l = Fraction(l)
    if not (0 < l < 1):
        raise ValueError(f"stripe length {l} outside (0,1)")
    return l


def build_stripe_shattered_set(n: int, l: Rat, ambient_dim: int = None) -> PointSet:
    """n+1 points in T^{2^n} shattered by stripes of length l.

    With ambient_dim >= 2^n the construction is embedded: the extra
    dimensions hold every point at (2+l)/3, so stripes anchored in the
    first 2^n dimensions still witness shattering.
    """
    if n < 1:
        raise ValueError("n must be positive")
    l = _check_length(l)
    d = 1 << n
    if ambient_dim is None:
        ambient_dim = d
    if ambient_dim < d:
        raise ValueError(f"ambient dimension {ambient_dim} < 2^{n}")
    lo, hi = low_value(l), high_value(l)
    denom = lcm(lo.denominator, hi.denominator)
    points = []
    for p in range(n + 1):
        coords = []
        for i in range(ambient_dim):
            if i < d and p > 0 and members_of_dim(i) >> p & 1:
                coords.append(lo)
            else:
                coords.append(hi)
        points.append(tuple(coords))
    return PointSet(ambient_dim, denom, tuple(points))


def witness_arc(target: Rat, other: Rat, l: Rat) -> Arc:
    """Canonical open arc of length l containing target but not the other value.

    target and other are the two construction values (1-l)/3 and (2+l)/3 in
    either order.  The arc is the one centered on target, clipped into
    [0, 1]: it never wraps past 1, which the lifting construction relies on
    when scaling arcs into group cells.
    """
    l = _check_length(l)
    if target < other:
        start = max(Fraction(0), target - l / 2)
    else:
        start = min(target - l / 2, 1 - l)
    return Arc(start, (start + l) % ONE, closed=False)


def _avoiding_arc(lo: Rat, hi: Rat, l: Rat) -> Arc:
    # (lo, lo + l) contains neither value: hi - lo > l and the arc is open
    return Arc(lo, (lo + l) % ONE, closed=False)


def stripe_witness(n: int, l: Rat, subset: Mask, ambient_dim: int = None) -> Stripe:
    """A stripe of length l realizing the subset on the constructed set."""
    l = _check_length(l)
    n_points = n + 1
    if subset < 0 or subset >> n_points:
        raise ValueError(f"mask {subset:#x} out of range for {n_points} points")
    if ambient_dim is None:
        ambient_dim = 1 << n
    rep = pair_rep(subset, n_points)
    i = rep >> 1
    lo, hi = low_value(l), high_value(l)
    if subset == rep:
        # realize the side sitting at the low value
        if subset == 0:
            arc = _avoiding_arc(lo, hi, l)
        else:
            arc = witness_arc(lo, hi, l)
    else:
        arc = witness_arc(hi, lo, l)
    return Stripe(i, arc, ambient_dim)
