from fractions import Fraction

import pytest

from torusvc.shatter import covered_mask
from torusvc.stripes import (
    build_stripe_shattered_set,
    dim_of_pair,
    high_value,
    low_value,
    members_of_dim,
    pair_rep,
    stripe_witness,
    witness_arc,
)
from torusvc.torus import arc_contains, arc_length

F = Fraction

LENGTHS = (F(1, 4), F(1, 2), F(3, 4))


def test_values_are_separated_by_more_than_l():
    for l in LENGTHS:
        lo, hi = low_value(l), high_value(l)
        assert 0 < lo < hi < 1
        # the forward distance between the values exceeds l, so an arc of
        # length l inside [0,1) never contains both (the wrap-around
        # distance can be smaller than l, which is why witness arcs are
        # clipped to never wrap)
        assert hi - lo > l


def test_pair_encoding_roundtrip():
    n_points = 4
    for subset in range(1 << n_points):
        rep = pair_rep(subset, n_points)
        assert not rep & 1  # point 0 never in the representative
        assert rep in (subset, ~subset & 0b1111)
        assert members_of_dim(dim_of_pair(subset, n_points)) == rep


def test_construction_shape():
    ps = build_stripe_shattered_set(3, F(1, 2))
    assert ps.dim == 8
    assert len(ps) == 4
    lo, hi = low_value(F(1, 2)), high_value(F(1, 2))
    for i in range(8):
        members = members_of_dim(i)
        for p in range(4):
            want = lo if members >> p & 1 else hi
            assert ps.points[p][i] == want


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        build_stripe_shattered_set(0, F(1, 2))
    with pytest.raises(ValueError):
        build_stripe_shattered_set(2, F(3, 2))
    with pytest.raises(ValueError):
        build_stripe_shattered_set(3, F(1, 2), ambient_dim=7)


def test_witness_arc_contains_target_only_and_never_wraps():
    for l in LENGTHS:
        lo, hi = low_value(l), high_value(l)
        for target, other in ((lo, hi), (hi, lo)):
            arc = witness_arc(target, other, l)
            assert arc_length(arc) == l
            assert arc_contains(arc, target)
            assert not arc_contains(arc, other)
            assert arc.start + l <= 1  # no wrap past 1


def test_single_point_witnesses():
    # n=1, l=1/2: S={p1} is picked out in the {p1}/{p0} pair dimension
    s = stripe_witness(1, F(1, 2), 0b10)
    assert s.anchor_dim == dim_of_pair(0b10, 2)
    assert arc_contains(s.arc, low_value(F(1, 2)))
    assert not arc_contains(s.arc, high_value(F(1, 2)))


def test_all_witnesses_verify_small():
    for n in (1, 2, 3):
        for l in LENGTHS:
            ps = build_stripe_shattered_set(n, l)
            for subset in range(1 << (n + 1)):
                s = stripe_witness(n, l, subset)
                assert arc_length(s.arc) == l
                assert covered_mask(ps, s) == subset


def test_embedded_witnesses_verify():
    n, l = 2, F(1, 2)
    ps = build_stripe_shattered_set(n, l, ambient_dim=6)
    assert ps.dim == 6
    for subset in range(1 << (n + 1)):
        s = stripe_witness(n, l, subset, ambient_dim=6)
        assert covered_mask(ps, s) == subset


def test_witness_mask_range():
    with pytest.raises(ValueError):
        stripe_witness(2, F(1, 2), 1 << 3)
