"""Realizability oracles and shattering verdicts.

A subset of a point set is encoded as an integer bitmask (bit i set means
point i belongs to the subset).  Each oracle either returns a shape whose
intersection with the point set is exactly the requested subset, or None
when no such shape exists.  The oracles are complete at grid resolution:
because every coordinate is a multiple of 1/D, the containment pattern of
an arc only depends on which grid cell (point or open gap) each endpoint
lies in and on their order inside a shared cell, so arc endpoints on the
quarter-grid {t/(4D)} (three candidates inside every gap) realize every
pattern that any real arc does.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import GuardExceeded
from .torus import (
    ONE,
    Arc,
    Box,
    Cube,
    PointSet,
    Rat,
    Stripe,
    arc_contains,
    maximal_gaps,
    shape_contains,
)

Mask = int

SHATTER_GUARD_N = 30
GROWTH_GUARD_N = 20

BOXES = "boxes_per"
CUBES = "cubes_per"
STRIPES_FIXED = "stripes_fixed_length"
STRIPES_ANY = "stripes_any"


@dataclass(frozen=True)
class Family:
    """One of the four shape families; fixed-length stripes carry the length."""

    kind: str
    length: Rat = None

    def __post_init__(self):
        if self.kind not in (BOXES, CUBES, STRIPES_FIXED, STRIPES_ANY):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == STRIPES_FIXED:
            if self.length is None or not (0 < self.length < 1):
                raise ValueError("stripes_fixed_length needs a length in (0,1)")
        elif self.length is not None:
            raise ValueError(f"family {self.kind} takes no length")


@dataclass
class ShatterReport:
    shattered: bool
    missing: Mask = None
    witnesses: dict = field(default_factory=dict)


def covered_mask(ps: PointSet, shape) -> Mask:
    """Bitmask of the points of ps contained in the shape."""
    m = 0
    for i, p in enumerate(ps.points):
        if shape_contains(shape, p):
            m |= 1 << i
    return m


def _check_mask(ps: PointSet, subset: Mask) -> None:
    if subset < 0 or subset >> len(ps):
        raise ValueError(f"mask {subset:#x} refers to out-of-range point indices")


def _arc_inside_gap(gap_start: Rat, gap_len: Rat) -> Arc:
    """A closed arc strictly inside the open gap, containing no grid point."""
    s = (gap_start + gap_len / 4) % ONE
    e = (gap_start + 3 * gap_len / 4) % ONE
    return Arc(s, e)


def _point_arc(v: Rat, denom: int) -> Arc:
    """A short closed arc around v containing no other 1/denom grid value."""
    h = Fraction(1, 4 * denom)
    return Arc((v - h) % ONE, (v + h) % ONE)


def _in_open_gap(x: Rat, gap_start: Rat, gap_end: Rat) -> bool:
    if gap_start == gap_end:
        return x != gap_start
    if gap_start < gap_end:
        return gap_start < x < gap_end
    return x > gap_start or x < gap_end


def _choose_per_dim(per_dim_options, goal: Mask):
    """DP over dimensions: one option per dim, OR of masks must equal goal.

    Returns the chosen payloads (one per dimension) or None.
    """
    # levels[j] maps reachable mask after dims 0..j-1 to (prev mask, payload)
    levels = [{0: None}]
    for options in per_dim_options:
        if not options:
            return None
        cur = {}
        for r in levels[-1]:
            for mask, payload in options:
                m = r | mask
                if m not in cur:
                    cur[m] = (r, payload)
        levels.append(cur)
    if goal not in levels[-1]:
        return None
    chosen = []
    m = goal
    for level in reversed(levels[1:]):
        prev, payload = level[m]
        chosen.append(payload)
        m = prev
    chosen.reverse()
    return chosen


def realizable_by_box(ps: PointSet, subset: Mask):
    """A box whose intersection with ps is exactly the subset, or None.

    Per dimension only minimal enclosing arcs of the subset's coordinates
    matter (one per maximal gap): any realizing box contains one of them,
    and shrinking to it only removes outsiders.
    """
    _check_mask(ps, subset)
    n = len(ps)
    if subset == 0:
        if n == 0:
            return Box(tuple(Arc(Fraction(0), Fraction(1, 2)) for _ in range(ps.dim)))
        gs, _, gl = maximal_gaps([p[0] for p in ps.points])[0]
        arcs = [_arc_inside_gap(gs, gl)]
        arcs += [Arc(Fraction(0), Fraction(1, 2)) for _ in range(ps.dim - 1)]
        return Box(tuple(arcs))

    inside = [i for i in range(n) if subset >> i & 1]
    outsiders = [i for i in range(n) if not subset >> i & 1]
    out_bit = {i: 1 << t for t, i in enumerate(outsiders)}
    goal = (1 << len(outsiders)) - 1

    per_dim = []
    for j in range(ps.dim):
        options = []
        s_coords = [ps.points[i][j] for i in inside]
        for gs, ge, _ in maximal_gaps(s_coords):
            excl = 0
            for i in outsiders:
                if _in_open_gap(ps.points[i][j], gs, ge):
                    excl |= out_bit[i]
            options.append((excl, (gs, ge)))
        per_dim.append(options)

    chosen = _choose_per_dim(per_dim, goal)
    if chosen is None:
        return None
    arcs = []
    for gs, ge in chosen:
        if gs == ge:
            arcs.append(_point_arc(gs, ps.denom))
        else:
            arcs.append(Arc(ge, gs))
    box = Box(tuple(arcs))
    assert covered_mask(ps, box) == subset
    return box


def _quarter_grid(denom: int):
    g = 4 * denom
    return [Fraction(t, g) for t in range(g)]


def realizable_by_cube(ps: PointSet, subset: Mask):
    """A cube whose intersection with ps is exactly the subset, or None.

    Scans candidate edge lengths on the half-grid in ascending order (a
    realizable pattern is realizable either with the maximal per-dimension
    enclosing length, a multiple of 1/D, or with the minimal edge 1/(2D));
    arc starts run over the quarter-grid so that both endpoints can sit
    strictly inside the same gap.  For each length the per-dimension arcs
    containing all subset coordinates yield outsider-exclusion masks,
    combined by an OR-closure across dimensions.
    """
    _check_mask(ps, subset)
    n = len(ps)
    outsiders = [i for i in range(n) if not subset >> i & 1]
    out_bit = {i: 1 << t for t, i in enumerate(outsiders)}
    goal = (1 << len(outsiders)) - 1
    starts = _quarter_grid(ps.denom)

    for t in range(1, 2 * ps.denom):
        edge = Fraction(t, 2 * ps.denom)
        per_dim = []
        feasible = True
        for j in range(ps.dim):
            options = []
            seen = set()
            for s in starts:
                arc = Arc(s, (s + edge) % ONE)
                cov = 0
                for i, p in enumerate(ps.points):
                    if arc_contains(arc, p[j]):
                        cov |= 1 << i
                if cov & subset != subset:
                    continue
                excl = 0
                for i in outsiders:
                    if not cov >> i & 1:
                        excl |= out_bit[i]
                if excl not in seen:
                    seen.add(excl)
                    options.append((excl, arc))
            if not options:
                feasible = False
                break
            per_dim.append(options)
        if not feasible:
            continue
        chosen = _choose_per_dim(per_dim, goal)
        if chosen is not None:
            cube = Cube(tuple(chosen), edge)
            assert covered_mask(ps, cube) == subset
            return cube
    return None


def realizable_by_stripe(ps: PointSet, subset: Mask, length: Rat):
    """A stripe of exactly the given length realizing the subset, or None.

    Scans, per dimension, open arcs of the given length with start on the
    grid {t/(2 lcm(D, denom(length)))}; the containment pattern of such an
    arc only changes when an endpoint crosses a point coordinate, and all
    critical start values lie on that grid.
    """
    _check_mask(ps, subset)
    if not (0 < length < 1):
        raise ValueError("stripe length must lie in (0,1)")
    g = 2 * lcm(ps.denom, length.denominator)
    for j in range(ps.dim):
        for t in range(g):
            s = Fraction(t, g)
            arc = Arc(s, (s + length) % ONE, closed=False)
            cov = 0
            for i, p in enumerate(ps.points):
                if arc_contains(arc, p[j]):
                    cov |= 1 << i
            if cov == subset:
                stripe = Stripe(j, arc, ps.dim)
                assert covered_mask(ps, stripe) == subset
                return stripe
    return None


def realizable_by_any_stripe(ps: PointSet, subset: Mask):
    """A stripe of any length realizing the subset, or None.

    Both endpoints are free, so the search runs over the quarter-grid.
    """
    _check_mask(ps, subset)
    starts = _quarter_grid(ps.denom)
    for j in range(ps.dim):
        for s in starts:
            for e in starts:
                if s == e:
                    continue
                arc = Arc(s, e, closed=False)
                cov = 0
                for i, p in enumerate(ps.points):
                    if arc_contains(arc, p[j]):
                        cov |= 1 << i
                if cov == subset:
                    return Stripe(j, arc, ps.dim)
    return None


def family_oracle(family: Family):
    """The realizability oracle of a family, as a (ps, mask) callable."""
    if family.kind == BOXES:
        return realizable_by_box
    if family.kind == CUBES:
        return realizable_by_cube
    if family.kind == STRIPES_FIXED:
        return lambda ps, m: realizable_by_stripe(ps, m, family.length)
    return realizable_by_any_stripe


def shatter_report(ps: PointSet, family: Family) -> ShatterReport:
    """Decide whether the family shatters ps, with per-mask witnesses.

    Iterates the 2^n masks in ascending order, so the first missing mask
    named in a negative report is deterministic.
    """
    n = len(ps)
    if n > SHATTER_GUARD_N:
        raise GuardExceeded(f"shatter_report guard: n={n} > {SHATTER_GUARD_N}")
    oracle = family_oracle(family)
    witnesses = {}
    for mask in range(1 << n):
        shape = oracle(ps, mask)
        if shape is None:
            return ShatterReport(False, missing=mask, witnesses=witnesses)
        witnesses[mask] = shape
    return ShatterReport(True, witnesses=witnesses)


def growth_count(ps: PointSet, family: Family) -> int:
    """Number of distinct subsets of ps realizable by the family."""
    n = len(ps)
    if n > GROWTH_GUARD_N:
        raise GuardExceeded(f"growth_count guard: n={n} > {GROWTH_GUARD_N}")
    oracle = family_oracle(family)
    return sum(1 for mask in range(1 << n) if oracle(ps, mask) is not None)
