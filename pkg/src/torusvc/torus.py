"""Exact rational geometry on the circle and its d-fold products.

All coordinates are `fractions.Fraction` values in [0, 1).  An arc is a
proper sub-interval of the circle; an arc whose start exceeds its end wraps
through 0.  Boxes are products of closed arcs, cubes are boxes whose arcs
share a common length, and stripes are products of full circles with a
single open arc in one anchor dimension.  Nothing in this module rounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _check_coord(x: Rat, what: str = "coordinate") -> None:
    if not (ZERO <= x < ONE):
        raise ValueError(f"{what} {x} outside [0,1)")


@dataclass(frozen=True)
class Arc:
    """A proper arc of the circle; wraps through 0 when start > end."""

    start: Rat
    end: Rat
    closed: bool = True

    def __post_init__(self):
        _check_coord(self.start, "arc start")
        _check_coord(self.end, "arc end")
        if self.start == self.end:
            raise ValueError("degenerate or full-circle arc is not allowed")


def arc_length(arc: Arc) -> Rat:
    """Length of the arc: end - start, or 1 - start + end when wrapping."""
    if arc.start < arc.end:
        return arc.end - arc.start
    return ONE - arc.start + arc.end


def arc_contains(arc: Arc, x: Rat) -> bool:
    """Exact containment respecting wrap-around and the closure flag."""
    a, b = arc.start, arc.end
    if arc.closed:
        if a < b:
            return a <= x <= b
        return x >= a or x <= b
    if a < b:
        return a < x < b
    return x > a or x < b


def arc_complement(arc: Arc) -> Arc:
    """The complementary arc, with flipped closure."""
    return Arc(arc.end, arc.start, closed=not arc.closed)


@dataclass(frozen=True)
class Box:
    """Product of d closed arcs on the torus."""

    arcs: tuple

    def __post_init__(self):
        if len(self.arcs) < 1:
            raise ValueError("box needs at least one dimension")
        if not all(a.closed for a in self.arcs):
            raise ValueError("box factors must be closed arcs")

    @property
    def dim(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class Cube(Box):
    """Box whose arcs all have the same length."""

    edge: Rat = None

    def __post_init__(self):
        super().__post_init__()
        if self.edge is None:
            object.__setattr__(self, "edge", arc_length(self.arcs[0]))
        for a in self.arcs:
            if arc_length(a) != self.edge:
                raise ValueError("cube arcs must all have the edge length")


@dataclass(frozen=True)
class Stripe:
    """Full circles in every dimension except one open arc in anchor_dim.

    anchor_dim is 0-indexed.
    """

    anchor_dim: int
    arc: Arc
    ambient_dim: int

    def __post_init__(self):
        if not 0 <= self.anchor_dim < self.ambient_dim:
            raise ValueError("anchor dimension out of range")
        if self.arc.closed:
            raise ValueError("stripe cross-section must be an open arc")


def box_contains(box: Box, p) -> bool:
    if len(p) != box.dim:
        raise ValueError(f"point dimension {len(p)} != box dimension {box.dim}")
    return all(arc_contains(a, x) for a, x in zip(box.arcs, p))


def stripe_contains(s: Stripe, p) -> bool:
    if len(p) != s.ambient_dim:
        raise ValueError(
            f"point dimension {len(p)} != stripe ambient dimension {s.ambient_dim}"
        )
    return arc_contains(s.arc, p[s.anchor_dim])


def shape_contains(shape, p) -> bool:
    """Containment for any of Box, Cube, Stripe."""
    if isinstance(shape, Stripe):
        return stripe_contains(shape, p)
    return box_contains(shape, p)


@dataclass(frozen=True)
class PointSet:
    """A finite configuration on the d-torus, all coordinates on a 1/D grid."""

    dim: int
    denom: int
    points: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.denom < 1:
            raise ValueError("denominator must be positive")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError("point dimension mismatch")
            for x in p:
                _check_coord(x)
                if (x * self.denom).denominator != 1:
                    raise ValueError(f"coordinate {x} not on the 1/{self.denom} grid")

    def __len__(self) -> int:
        return len(self.points)

    @staticmethod
    def from_coords(coords) -> "PointSet":
        """Build from an iterable of coordinate tuples, inferring the grid."""
        pts = tuple(tuple(Fraction(x) for x in p) for p in coords)
        if not pts:
            raise ValueError("cannot infer dimension of an empty point set")
        dim = len(pts[0])
        denom = lcm(1, *(x.denominator for p in pts for x in p))
        return PointSet(dim, denom, pts)


def maximal_gaps(coords):
    """Cyclic gaps between consecutive distinct values of a coordinate multiset.

    Returns (gap_start, gap_end, gap_length) triples sorted by descending
    length (ties by ascending start); the gap interval is open, so the
    complement of any gap is a minimal closed arc enclosing all coords.  A
    singleton value set yields the single gap (v, v) of length 1.
    """
    values = sorted(set(coords))
    if not values:
        raise ValueError("maximal_gaps needs at least one coordinate")
    if len(values) == 1:
        v = values[0]
        return [(v, v, ONE)]
    gaps = []
    for i, v in enumerate(values):
        nxt = values[(i + 1) % len(values)]
        length = nxt - v if nxt > v else ONE - v + nxt
        gaps.append((v, nxt, length))
    gaps.sort(key=lambda g: (-g[2], g[0]))
    return gaps
