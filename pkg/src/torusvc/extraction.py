"""k-extraction matrices: checkers, sampler, and exact counting bounds.

A c x d matrix over the alphabet {0..k-1} has the k-extraction property if
every target word of length c can be read off in pairwise distinct columns,
one per row.  The property fails exactly when some row set U and column set
V with |V| = |U| - 1 exist such that every row of U has a symbol occurring
only inside V (a Hall violator in disguise); both checkers below exploit
this duality.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial

from .errors import GuardExceeded
from .matching import deficient_set, maximum_matching

EXHAUSTIVE_GUARD = 10**7
WITNESS_GUARD = 10**8


@dataclass(frozen=True)
class SymbolMatrix:
    """A c x d matrix with entries in {0..k-1}."""

    rows: tuple
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("alphabet size must be positive")
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for v in row:
                if not 0 <= v < self.k:
                    raise ValueError(f"entry {v} outside alphabet of size {self.k}")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    def support(self, i: int, symbol: int):
        """Columns of row i holding the symbol, ascending."""
        return [j for j, v in enumerate(self.rows[i]) if v == symbol]

    def is_balanced(self) -> bool:
        """Every symbol appears equally often in every row."""
        if self.n_cols % self.k:
            return False
        per = self.n_cols // self.k
        return all(
            all(row.count(s) == per for s in range(self.k)) for row in self.rows
        )


@dataclass
class ExtractionVerdict:
    holds: bool
    counterexample_word: tuple = None
    failure_witness: tuple = None  # (rows U, columns V, {row: symbol})


def superdiagonal_matrix(c: int) -> SymbolMatrix:
    """The c x (c+1) two-symbol matrix with symbol 1 on the superdiagonal."""
    if c < 1:
        raise ValueError("c must be positive")
    rows = tuple(
        tuple(1 if j == i + 1 else 0 for j in range(c + 1)) for i in range(c)
    )
    return SymbolMatrix(rows, 2)


def _pad_columns(cols, want: int, n_cols: int):
    """Extend a column set to the wanted cardinality, smallest indices first."""
    out = list(cols)
    for j in range(n_cols):
        if len(out) >= want:
            break
        if j not in cols:
            out.append(j)
    out.sort()
    return tuple(out)


def validate_failure_witness(matrix: SymbolMatrix, witness) -> bool:
    """Independent re-check of a (U, V, symbols) failure witness."""
    rows, cols, symbols = witness
    if len(cols) != len(rows) - 1:
        return False
    colset = set(cols)
    for u in rows:
        if u not in symbols:
            return False
        if not set(matrix.support(u, symbols[u])) <= colset:
            return False
    return True


def word_matchable(matrix: SymbolMatrix, word) -> bool:
    """Can the word be extracted in pairwise distinct columns?"""
    adjacency = [matrix.support(i, word[i]) for i in range(matrix.n_rows)]
    size, _ = maximum_matching(adjacency, matrix.n_cols)
    return size == matrix.n_rows


def check_extraction(matrix: SymbolMatrix, mode: str = "witness") -> ExtractionVerdict:
    """Decide the k-extraction property.

    exhaustive mode tries every word (first counterexample in lexicographic
    word order); witness mode searches directly for a small failure witness,
    subsets by increasing size with union-size pruning.
    """
    c, k = matrix.n_rows, matrix.k
    if mode == "exhaustive":
        if k**c > EXHAUSTIVE_GUARD:
            raise GuardExceeded(
                f"exhaustive check guard: k^c = {k**c} > {EXHAUSTIVE_GUARD}"
            )
        return _check_exhaustive(matrix)
    if mode == "witness":
        if (k + 1) ** c > WITNESS_GUARD:
            raise GuardExceeded(
                f"witness check guard: (k+1)^c = {(k + 1) ** c} > {WITNESS_GUARD}"
            )
        return _check_witness(matrix)
    raise ValueError(f"unknown mode {mode!r}")


def _check_exhaustive(matrix: SymbolMatrix) -> ExtractionVerdict:
    c = matrix.n_rows
    for word in product(range(matrix.k), repeat=c):
        adjacency = [matrix.support(i, word[i]) for i in range(c)]
        if maximum_matching(adjacency, matrix.n_cols)[0] < c:
            rows, cols = deficient_set(adjacency, matrix.n_cols)
            cols = _pad_columns(cols, len(rows) - 1, matrix.n_cols)
            witness = (tuple(rows), cols, {u: word[u] for u in rows})
            return ExtractionVerdict(False, word, witness)
    return ExtractionVerdict(True)


def _check_witness(matrix: SymbolMatrix) -> ExtractionVerdict:
    c, k = matrix.n_rows, matrix.k
    supports = [
        {s: frozenset(matrix.support(i, s)) for s in range(k)} for i in range(c)
    ]
    for size in range(1, c + 1):
        limit = size - 1
        for rows in combinations(range(c), size):
            found = _witness_dfs(rows, 0, frozenset(), limit, supports, {})
            if found is not None:
                union, symbols = found
                cols = _pad_columns(union, limit, matrix.n_cols)
                return ExtractionVerdict(False, None, (rows, cols, symbols))
    return ExtractionVerdict(True)


def _witness_dfs(rows, idx, union, limit, supports, symbols):
    if idx == len(rows):
        return union, dict(symbols)
    u = rows[idx]
    for s in sorted(supports[u]):
        supp = supports[u][s]
        merged = union | supp
        if len(merged) > limit:
            continue
        symbols[u] = s
        found = _witness_dfs(rows, idx + 1, merged, limit, supports, symbols)
        if found is not None:
            return found
        del symbols[u]
    return None


def _require_integral_qm(q, m: int) -> int:
    q = Fraction(q)
    qm = q * m
    if qm.denominator != 1:
        raise ValueError(f"qm = {qm} is not an integer")
    return int(qm)


def random_balanced_matrix(m: int, k: int, q, seed: int) -> SymbolMatrix:
    """A c x d matrix whose rows are independent uniform balanced words.

    c = mk, d = qmk; each row is a seeded Fisher-Yates shuffle of the fixed
    multiset with qm copies of every symbol, so the output is deterministic
    for a given seed.
    """
    rng = random.Random(seed)
    return _balanced_matrix_from(rng, m, k, q)


def _balanced_matrix_from(rng, m: int, k: int, q) -> SymbolMatrix:
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    qm = _require_integral_qm(q, m)
    c = m * k
    rows = []
    for _ in range(c):
        row = [s for s in range(k) for _ in range(qm)]
        rng.shuffle(row)
        rows.append(tuple(row))
    return SymbolMatrix(tuple(rows), k)


def sample_extraction_matrix(m: int, k: int, q, max_trials: int, seed: int):
    """Rejection-sample balanced matrices until one has the property.

    Returns (matrix, trials_used), or None when max_trials were exhausted.
    All trials draw from a single seeded stream.
    """
    rng = random.Random(seed)
    for trial in range(1, max_trials + 1):
        matrix = _balanced_matrix_from(rng, m, k, q)
        if check_extraction(matrix, "witness").holds:
            return matrix, trial
    return None


def verify_ext_req(q, m: int, k: int) -> bool:
    """Exact check of (q - q/k)^(qm) > q m^2 k^3."""
    q = Fraction(q)
    qm = _require_integral_qm(q, m)
    return (q - q / k) ** qm > q * m * m * k**3


@dataclass
class CountingLedger:
    """Exact counting quantities behind the random-matrix failure bound."""

    q: Fraction
    m: int
    k: int
    c: int
    d: int
    A: int
    T: int
    F: list  # F[i-1] bounds the bad balanced words for |U| = i
    H_bound: list  # H_bound[i-1] bounds the matrices witnessed at size i
    B_bound: int
    ratio_bound: Fraction


def failure_probability_bound(q, m: int, k: int) -> CountingLedger:
    """Exact evaluation of the failure-count chain for balanced matrices.

    ratio_bound = B/T is a valid upper bound on the probability that a
    uniform balanced matrix lacks the k-extraction property.
    """
    q = Fraction(q)
    qm = _require_integral_qm(q, m)
    c = m * k
    d = qm * k
    A = factorial(d) // factorial(qm) ** k
    T = A**c
    F = []
    H = []
    for i in range(1, c + 1):
        f_i = k * comb(i - 1, qm) * (factorial(d - qm) // factorial(qm) ** (k - 1))
        F.append(f_i)
        H.append(comb(c, i) * comb(d, i - 1) * f_i**i * A ** (c - i))
    B = sum(H)
    return CountingLedger(q, m, k, c, d, A, T, F, H, B, Fraction(B, T))
