import random
from fractions import Fraction

import pytest

from torusvc.errors import GuardExceeded
from torusvc.extraction import (
    SymbolMatrix,
    check_extraction,
    failure_probability_bound,
    random_balanced_matrix,
    sample_extraction_matrix,
    superdiagonal_matrix,
    validate_failure_witness,
    verify_ext_req,
    word_matchable,
)

F = Fraction


def test_symbol_matrix_validation():
    with pytest.raises(ValueError):
        SymbolMatrix(((0, 1), (0,)), 2)
    with pytest.raises(ValueError):
        SymbolMatrix(((0, 2),), 2)
    with pytest.raises(ValueError):
        SymbolMatrix((), 2)
    m = SymbolMatrix(((0, 1, 0, 1),), 2)
    assert m.is_balanced()
    assert m.support(0, 1) == [1, 3]
    assert not SymbolMatrix(((0, 0, 0, 1),), 2).is_balanced()


def test_superdiagonal_has_extraction_property():
    for c in (1, 2, 3, 4, 5):
        m = superdiagonal_matrix(c)
        assert m.n_rows == c and m.n_cols == c + 1
        assert check_extraction(m, "exhaustive").holds
        assert check_extraction(m, "witness").holds


def test_failing_matrix_reports_valid_evidence():
    # two rows whose only symbol-1 support is the same single column
    m = SymbolMatrix(((0, 1), (0, 1)), 2)
    ex = check_extraction(m, "exhaustive")
    assert not ex.holds
    assert not word_matchable(m, ex.counterexample_word)
    assert validate_failure_witness(m, ex.failure_witness)
    wit = check_extraction(m, "witness")
    assert not wit.holds
    assert validate_failure_witness(m, wit.failure_witness)


def test_mode_agreement_on_seeded_matrices():
    rng = random.Random(42)
    for _ in range(120):
        c = rng.randint(1, 6)
        d = rng.randint(c, 10)
        k = rng.randint(1, 3)
        rows = tuple(
            tuple(rng.randrange(k) for _ in range(d)) for _ in range(c)
        )
        m = SymbolMatrix(rows, k)
        ex = check_extraction(m, "exhaustive")
        wit = check_extraction(m, "witness")
        assert ex.holds == wit.holds
        if not ex.holds:
            assert not word_matchable(m, ex.counterexample_word)
            assert validate_failure_witness(m, ex.failure_witness)
            assert validate_failure_witness(m, wit.failure_witness)


def test_column_monotonicity():
    rng = random.Random(9)
    grown = 0
    for _ in range(60):
        c = rng.randint(1, 4)
        d = rng.randint(c, 8)
        k = rng.randint(1, 3)
        rows = tuple(
            tuple(rng.randrange(k) for _ in range(d)) for _ in range(c)
        )
        m = SymbolMatrix(rows, k)
        if not check_extraction(m, "witness").holds:
            continue
        extra = tuple(rng.randrange(k) for _ in range(c))
        wider = SymbolMatrix(
            tuple(row + (extra[i],) for i, row in enumerate(m.rows)), k
        )
        assert check_extraction(wider, "witness").holds
        grown += 1
    assert grown > 0


def test_random_balanced_matrix_properties():
    m = random_balanced_matrix(3, 2, 2, seed=1)
    assert m.n_rows == 6 and m.n_cols == 12 and m.k == 2
    assert m.is_balanced()
    assert random_balanced_matrix(3, 2, 2, seed=1) == m
    assert random_balanced_matrix(3, 2, 2, seed=2) != m


def test_random_balanced_matrix_requires_integral_qm():
    with pytest.raises(ValueError):
        random_balanced_matrix(3, 2, F(1, 2), seed=0)


def test_sampler_finds_matrix():
    result = sample_extraction_matrix(2, 2, 2, max_trials=50, seed=0)
    assert result is not None
    matrix, trials = result
    assert 1 <= trials <= 50
    assert matrix.is_balanced()
    assert check_extraction(matrix, "exhaustive").holds
    # same seed reproduces the same matrix and trial count
    assert sample_extraction_matrix(2, 2, 2, max_trials=50, seed=0) == result


def test_verify_ext_req_examples():
    assert verify_ext_req(2, 14, 4)
    assert not verify_ext_req(2, 8, 4)
    assert not verify_ext_req(2, 4, 1)  # k=1 makes the left side vanish


def test_failure_bound_degenerate_case_is_zero():
    ledger = failure_probability_bound(2, 1, 2)
    assert ledger.ratio_bound == 0
    assert ledger.B_bound == 0


def test_failure_bound_below_one_over_q_when_req_holds():
    for m in (14, 16, 18):
        q, k = F(2), 4
        assert verify_ext_req(q, m, k)
        ledger = failure_probability_bound(q, m, k)
        assert 0 <= ledger.ratio_bound < 1 / q
        assert ledger.T == ledger.A ** ledger.c


def test_check_extraction_guards():
    wide = SymbolMatrix(tuple((0,) * 30 for _ in range(30)), 3)
    with pytest.raises(GuardExceeded):
        check_extraction(wide, "exhaustive")
    with pytest.raises(ValueError):
        check_extraction(superdiagonal_matrix(2), "magic")
