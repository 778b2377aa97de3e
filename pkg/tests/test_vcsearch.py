import itertools
from fractions import Fraction

import pytest

from torusvc.errors import GuardExceeded
from torusvc.shatter import BOXES, STRIPES_ANY, Family, covered_mask, shatter_report
from torusvc.vcsearch import (
    ConfigCode,
    boxes_shatter,
    cyclic_compositions,
    enumerate_configs,
    realizable_mask_count,
    run_masks,
    search_shattered,
    vc_exact,
)

F = Fraction


def test_config_realize():
    cfg = ConfigCode(2, 3, ((0, 1, 2), (0, 0, 1)))
    ps = cfg.realize()
    assert ps.denom == 3
    assert ps.points[1] == (F(1, 3), F(0))


def test_run_masks_agrees_with_geometry():
    # the combinatorial run masks must equal the arc-coverage masks of the
    # realized configuration, computed geometrically
    from bruteforce import closed_arc_masks

    for levels in itertools.product(range(4), repeat=4):
        cfg = ConfigCode(1, 4, (levels,))
        geometric = closed_arc_masks(cfg.realize(), 0) | {0, 0b1111}
        assert run_masks(levels, 4) == geometric


def test_boxes_shatter_agrees_with_oracle():
    for levels1 in itertools.product(range(3), repeat=3):
        for levels2 in ((0, 1, 2), (0, 0, 1), (0, 0, 0)):
            cfg = ConfigCode(2, 3, (levels1, levels2))
            fast = boxes_shatter(cfg.levels, 3)
            slow = shatter_report(cfg.realize(), Family(BOXES)).shattered
            assert fast == slow


def test_cyclic_compositions_small():
    assert cyclic_compositions(1) == [(1,)]
    assert cyclic_compositions(2) == [(1, 1), (2,)]
    assert cyclic_compositions(3) == [(1, 1, 1), (1, 2), (3,)]
    for comp in cyclic_compositions(6):
        assert sum(comp) == 6


def test_enumeration_complete_dim1():
    # verdicts over the reduced enumeration match raw brute force
    for n in range(1, 5):
        raw = {
            boxes_shatter((lv,), n)
            for lv in itertools.product(range(n), repeat=n)
        }
        enum = {boxes_shatter(c.levels, n) for c in enumerate_configs(1, n)}
        assert raw == enum


def test_enumeration_complete_dim2():
    # growth-count spectra of the reduced enumeration match raw brute force
    for n in range(1, 4):
        raw = set()
        for lv1 in itertools.product(range(n), repeat=n):
            for lv2 in itertools.product(range(n), repeat=n):
                raw.add(realizable_mask_count((lv1, lv2), n))
        enum = {
            realizable_mask_count(c.levels, n) for c in enumerate_configs(2, n)
        }
        assert raw == enum


def test_enumeration_guards():
    with pytest.raises(GuardExceeded):
        list(enumerate_configs(3, 2))
    with pytest.raises(GuardExceeded):
        list(enumerate_configs(1, 9))
    with pytest.raises(ValueError):
        list(enumerate_configs(1, 0))


def test_vc_exact_dim1_boxes_is_three():
    value, ps, witnesses = vc_exact(1, Family(BOXES), 5)
    assert value == 3
    assert len(ps) == 3
    assert len(witnesses) == 8
    for mask, shape in witnesses.items():
        assert covered_mask(ps, shape) == mask


def test_vc_exact_dim1_any_stripes():
    value, _, _ = vc_exact(1, Family(STRIPES_ANY), 4)
    assert value == 3  # arcs shatter 3 cyclic points, never 4


def test_vc_exact_validation():
    with pytest.raises(ValueError):
        vc_exact(1, Family(BOXES), 0)


def test_search_finds_and_certifies():
    found = search_shattered(2, 4, budget=3000, seed=0)
    assert found is not None
    ps, witnesses = found
    assert len(witnesses) == 16
    for mask, shape in witnesses.items():
        assert covered_mask(ps, shape) == mask
    # deterministic for a fixed seed
    again = search_shattered(2, 4, budget=3000, seed=0)
    assert again is not None and again[0] == ps


def test_search_can_fail_gracefully():
    assert search_shattered(1, 4, budget=200, seed=1) is None
