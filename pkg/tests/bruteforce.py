"""Independent brute-force oracles used to cross-check the fast ones.

These deliberately share no code with torusvc.shatter: realizability is
decided by enumerating every arc with endpoints on the quarter-grid
{t/(4D)} and combining per-dimension coverage masks by intersection.
"""

import random
from fractions import Fraction

from torusvc.torus import Arc, PointSet, arc_contains


def closed_arc_masks(ps, j):
    """Coverage masks of every closed quarter-grid arc in dimension j."""
    g = 4 * ps.denom
    masks = set()
    for t1 in range(g):
        for t2 in range(g):
            if t1 == t2:
                continue
            arc = Arc(Fraction(t1, g), Fraction(t2, g))
            cov = 0
            for i, p in enumerate(ps.points):
                if arc_contains(arc, p[j]):
                    cov |= 1 << i
            masks.add(cov)
    return masks


def brute_box_masks(ps):
    """All subsets realizable by boxes, by exhaustive arc enumeration."""
    cur = closed_arc_masks(ps, 0)
    for j in range(1, ps.dim):
        fam = closed_arc_masks(ps, j)
        cur = {a & b for a in cur for b in fam}
    return cur


def fixed_length_arc_masks(ps, j, edge):
    g = 4 * ps.denom
    masks = set()
    for t in range(g):
        s = Fraction(t, g)
        arc = Arc(s, (s + edge) % 1)
        cov = 0
        for i, p in enumerate(ps.points):
            if arc_contains(arc, p[j]):
                cov |= 1 << i
        masks.add(cov)
    return masks


def brute_cube_masks(ps):
    """All subsets realizable by cubes, over half-grid edges and starts."""
    out = set()
    for t in range(1, 2 * ps.denom):
        edge = Fraction(t, 2 * ps.denom)
        cur = fixed_length_arc_masks(ps, 0, edge)
        for j in range(1, ps.dim):
            fam = fixed_length_arc_masks(ps, j, edge)
            cur = {a & b for a in cur for b in fam}
        out |= cur
    return out


def random_point_set(rng, n, d, denom):
    points = tuple(
        tuple(Fraction(rng.randrange(denom), denom) for _ in range(d))
        for _ in range(n)
    )
    return PointSet(d, denom, points)


def seeded_point_sets(seed, count, n_max, d_max, denom_max):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        d = rng.randint(1, d_max)
        denom = rng.randint(2, denom_max)
        out.append(random_point_set(rng, n, d, denom))
    return out
