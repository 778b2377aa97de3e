from fractions import Fraction

import pytest

from torusvc.errors import GuardExceeded
from torusvc.extraction import SymbolMatrix, check_extraction
from torusvc.lifting import (
    cube_witness,
    lift_points,
    sample_masks,
    verify_lift,
)
from torusvc.shatter import covered_mask, realizable_by_cube
from torusvc.stripes import build_stripe_shattered_set
from torusvc.torus import arc_complement, arc_contains

F = Fraction


def worked_instance():
    base = build_stripe_shattered_set(2, F(1, 2))
    row = (0, 1, 2, 3, 0, 1, 2, 3)
    matrix = SymbolMatrix((row, row), 4)
    return lift_points(base, matrix, F(1, 2))


def test_matrix_of_worked_instance_has_property():
    inst = worked_instance()
    assert check_extraction(inst.matrix, "exhaustive").holds


def test_lifted_points_layout():
    inst = worked_instance()
    assert inst.lifted.dim == 8
    assert len(inst.lifted) == 6
    assert inst.lifted.denom == 18
    for idx, p in enumerate(inst.lifted.points):
        group = idx // 3
        for x in p:
            assert F(group, 3) < x < F(group + 1, 3)


def test_lift_input_validation():
    base = build_stripe_shattered_set(1, F(1, 2))
    row = (0, 1, 0, 1)
    with pytest.raises(ValueError):
        lift_points(base, SymbolMatrix((row, row), 2), F(3, 2))
    wrong = SymbolMatrix(((0, 1, 2),), 3)
    with pytest.raises(ValueError):
        lift_points(base, wrong, F(1, 2))


def test_exhaustive_verification_passes():
    inst = worked_instance()
    report = verify_lift(inst, "exhaustive")
    assert report.ok
    assert report.checked == 64


def test_edge_length_identity():
    inst = worked_instance()
    c = inst.matrix.n_rows
    want = 1 - inst.length / (c + 1)
    assert want == F(5, 6)
    for mask in range(64):
        assert cube_witness(inst, mask).edge == want


def test_cube_equals_stripe_complement_pointwise():
    inst = worked_instance()
    for mask in (0, 0b101010, 0b111111, 0b010011):
        cube = cube_witness(inst, mask)
        for idx, p in enumerate(inst.lifted.points):
            in_cube = all(
                arc_contains(a, x) for a, x in zip(cube.arcs, p)
            )
            in_some_stripe = any(
                arc_contains(arc_complement(a), x)
                for a, x in zip(cube.arcs, p)
            )
            assert in_cube != in_some_stripe
            assert in_cube == bool(mask >> idx & 1)


def test_group_separation():
    # the stripe placed for group i contains no point of any other group
    inst = worked_instance()
    u = len(inst.base)
    for mask in (0b000001, 0b110100, 0b011101):
        cube = cube_witness(inst, mask)
        for j, a in enumerate(cube.arcs):
            stripe_arc = arc_complement(a)
            groups_hit = {
                idx // u
                for idx, p in enumerate(inst.lifted.points)
                if arc_contains(stripe_arc, p[j])
            }
            assert len(groups_hit) <= 1


def test_cube_oracle_agrees():
    inst = worked_instance()
    for mask in (0, 1, 0b101010, 0b111111):
        cube = realizable_by_cube(inst.lifted, mask)
        assert cube is not None
        assert covered_mask(inst.lifted, cube) == mask


def test_sample_mode_and_vacuous_pass():
    inst = worked_instance()
    assert verify_lift(inst, "sample", sample=0).ok
    report = verify_lift(inst, "sample", sample=10, seed=3)
    assert report.ok and report.checked == 10
    assert sample_masks(6, 10, 3) == sample_masks(6, 10, 3)


def test_corrupted_matrix_reports_failures():
    base = build_stripe_shattered_set(2, F(1, 2))
    # both rows have their symbol-0 support squeezed into one column
    row = (0, 1, 2, 3, 1, 1, 2, 3)
    bad = SymbolMatrix((row, row), 4)
    assert not check_extraction(bad, "exhaustive").holds
    inst = lift_points(base, bad, F(1, 2))
    report = verify_lift(inst, "exhaustive")
    assert not report.ok


def test_exhaustive_guard():
    base = build_stripe_shattered_set(2, F(1, 2))
    rows = tuple((0, 1, 2, 3, 0, 1, 2, 3) for _ in range(9))
    inst = lift_points(base, SymbolMatrix(rows, 4), F(1, 2))
    with pytest.raises(GuardExceeded):
        verify_lift(inst, "exhaustive")
    with pytest.raises(ValueError):
        verify_lift(inst, "turbo")


def test_mask_out_of_range():
    inst = worked_instance()
    with pytest.raises(ValueError):
        cube_witness(inst, 1 << 6)
