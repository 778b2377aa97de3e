"""Lifting a stripe-shattered set through an extraction matrix to cubes.

Given u points in T^k shattered by stripes of length l and a c x d matrix
with the k-extraction property, the c*u lifted points

    y(i;j)_n = (i + x(j)_s) / (c+1)   with s = M[i][n]   (all 0-indexed)

live in disjoint group cells ((i)/(c+1), (i+1)/(c+1))^d and are shattered
by cubes of edge 1 - l/(c+1): each requested subset is covered by one
scaled stripe per group, placed in pairwise distinct dimensions obtained
by matching the anchor-symbol word through the matrix, and the cube is the
complement of those d stripes.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import GuardExceeded
from .extraction import SymbolMatrix
from .matching import maximum_matching
from .shatter import covered_mask
from .stripes import build_stripe_shattered_set, stripe_witness
from .torus import ONE, Arc, Cube, PointSet, Rat, arc_contains

Mask = int

VERIFY_GUARD_POINTS = 24


@dataclass(frozen=True)
class LiftInstance:
    base: PointSet  # X, u points in T^k
    matrix: SymbolMatrix  # c x d over alphabet k
    length: Rat  # stripe length l used on the base set
    lifted: PointSet  # c*u points in T^d, group-major order
    canonical_n: int = None  # set when base is the stripe construction


@dataclass
class LiftReport:
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def lift_points(base: PointSet, matrix: SymbolMatrix, length: Rat) -> LiftInstance:
    """Build the lifted point set; exact, denominator (c+1) * D_base."""
    length = Fraction(length)
    if not (0 < length < 1):
        raise ValueError("stripe length must lie in (0,1)")
    if base.dim != matrix.k:
        raise ValueError(
            f"base dimension {base.dim} != matrix alphabet size {matrix.k}"
        )
    c = matrix.n_rows
    d = matrix.n_cols
    scale = Fraction(1, c + 1)
    points = []
    for i in range(c):
        for p in base.points:
            points.append(
                tuple((i + p[matrix.rows[i][n]]) * scale for n in range(d))
            )
    lifted = PointSet(d, (c + 1) * base.denom, tuple(points))
    canonical_n = _detect_construction(base, length)
    return LiftInstance(base, matrix, length, lifted, canonical_n)


def _detect_construction(base: PointSet, length: Rat):
    n = len(base) - 1
    if n < 1 or (1 << n) > base.dim:
        return None
    try:
        built = build_stripe_shattered_set(n, length, ambient_dim=base.dim)
    except ValueError:
        return None
    return n if built.points == base.points else None


def _base_stripe(inst: LiftInstance, subset: Mask):
    """A non-wrapping open arc (start, start+l) realizing subset on the base.

    Returns (anchor_dim, start).  The lifting scales arcs affinely into a
    group cell, so only witnesses with start + l <= 1 are usable; for the
    canonical construction these always exist, otherwise we scan for one.
    """
    if inst.canonical_n is not None:
        s = stripe_witness(inst.canonical_n, inst.length, subset, inst.base.dim)
        return s.anchor_dim, s.arc.start
    base, l = inst.base, inst.length
    g = 2 * lcm(base.denom, l.denominator)
    for j in range(base.dim):
        for t in range(g + 1):
            start = Fraction(t, g)
            if start + l > 1:
                break
            arc = Arc(start, (start + l) % ONE, closed=False)
            cov = 0
            for idx, p in enumerate(base.points):
                if arc_contains(arc, p[j]):
                    cov |= 1 << idx
            if cov == subset:
                return j, start
    raise ValueError(
        f"base set admits no interval stripe of length {l} realizing {subset:#x}"
    )


def cube_witness(inst: LiftInstance, subset: Mask) -> Cube:
    """The construction's cube realizing a subset of the lifted points.

    Builds one scaled stripe per group (dimension chosen by matching the
    anchor word through the matrix), fills the remaining dimensions with
    the point-free stripe ((c)/(c+1), (c+l)/(c+1)), and returns the cube
    whose factors are the closed complements; edge is exactly 1 - l/(c+1).
    """
    c = inst.matrix.n_rows
    d = inst.matrix.n_cols
    u = len(inst.base)
    if subset < 0 or subset >> (c * u):
        raise ValueError("mask out of range for the lifted point set")
    l = inst.length
    scale = Fraction(1, c + 1)

    # the cube is the complement of the stripe union, so the stripes must
    # cover exactly the points outside the requested subset
    anchors = []
    starts = []
    for i in range(c):
        group = ~(subset >> (i * u)) & ((1 << u) - 1)
        anchor, start = _base_stripe(inst, group)
        anchors.append(anchor)
        starts.append(start)

    adjacency = [inst.matrix.support(i, anchors[i]) for i in range(c)]
    size, match = maximum_matching(adjacency, d)
    if size < c:
        raise ValueError(
            "extraction matching failed: matrix lacks the extraction property "
            f"for anchor word {tuple(anchors)}"
        )

    # open stripe arcs per lifted dimension
    stripe_arcs = {}
    for i in range(c):
        n_i = match[i]
        stripe_arcs[n_i] = (
            (i + starts[i]) * scale,
            (i + starts[i] + l) * scale,
        )
    filler = (c * scale, (c + l) * scale)
    arcs = []
    for n in range(d):
        s, e = stripe_arcs.get(n, filler)
        arcs.append(Arc(e % ONE, s % ONE))  # closed complement of the open stripe
    return Cube(tuple(arcs), 1 - l * scale)


def sample_masks(total_points: int, count: int, seed: int):
    """Seeded mask sample used by the sampling verification mode."""
    rng = random.Random(seed)
    return [rng.randrange(1 << total_points) for _ in range(count)]


def verify_lift(inst: LiftInstance, mode: str = "exhaustive", sample: int = 0,
                seed: int = 0) -> LiftReport:
    """Check that cube witnesses realize every (or a sampled set of) masks."""
    total = len(inst.lifted)
    if mode == "exhaustive":
        if total > VERIFY_GUARD_POINTS:
            raise GuardExceeded(
                f"verify_lift guard: {total} points > {VERIFY_GUARD_POINTS}"
            )
        masks = range(1 << total)
    elif mode == "sample":
        masks = sample_masks(total, sample, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    failures = []
    checked = 0
    for mask in masks:
        checked += 1
        try:
            cube = cube_witness(inst, mask)
        except ValueError:
            failures.append(mask)
            continue
        if covered_mask(inst.lifted, cube) != mask:
            failures.append(mask)
    return LiftReport(checked, failures)
