"""Flat-file formats: point sets, symbol matrices, and certificates.

All three formats are whitespace-separated base-10 integers with newline
line endings and round-trip exactly.  Certificates store one witness shape
per mask, with every coordinate as a numerator over a common denominator,
so they re-verify offline using only containment tests.
"""

from fractions import Fraction
from math import lcm

from .extraction import SymbolMatrix
from .torus import ONE, Arc, Box, Cube, PointSet, Stripe, arc_length


class ParseError(ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


def parse_rat(text: str) -> Fraction:
    """Rational flag syntax: 'p/q' or a plain integer."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def _read_ints(path, lineno, line, count, what):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(path, lineno, f"expected {count} {what}, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(path, lineno, f"non-integer {what}") from None


def write_points(ps: PointSet, path: str) -> None:
    lines = [f"{ps.dim} {len(ps)} {ps.denom}"]
    for p in ps.points:
        lines.append(" ".join(str(int(x * ps.denom)) for x in p))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_points(path: str) -> PointSet:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError(path, 1, "empty points file")
    d, n, denom = _read_ints(path, 1, lines[0], 3, "header fields (d n D)")
    if d < 1 or n < 0 or denom < 1:
        raise ParseError(path, 1, f"invalid header d={d} n={n} D={denom}")
    if len(lines) < n + 1:
        raise ParseError(path, len(lines), f"expected {n} point lines")
    points = []
    for r in range(n):
        ts = _read_ints(path, r + 2, lines[r + 1], d, "coordinates")
        for t in ts:
            if not 0 <= t < denom:
                raise ParseError(path, r + 2, f"coordinate {t} outside [0,{denom})")
        points.append(tuple(Fraction(t, denom) for t in ts))
    return PointSet(d, denom, tuple(points))


def write_matrix(matrix: SymbolMatrix, path: str) -> None:
    lines = [f"{matrix.n_rows} {matrix.n_cols} {matrix.k}"]
    for row in matrix.rows:
        lines.append(" ".join(str(v) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_matrix(path: str) -> SymbolMatrix:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError(path, 1, "empty matrix file")
    c, d, k = _read_ints(path, 1, lines[0], 3, "header fields (c d k)")
    if c < 1 or d < 1 or k < 1:
        raise ParseError(path, 1, f"invalid header c={c} d={d} k={k}")
    if len(lines) < c + 1:
        raise ParseError(path, len(lines), f"expected {c} matrix rows")
    rows = []
    for r in range(c):
        vals = _read_ints(path, r + 2, lines[r + 1], d, "entries")
        for v in vals:
            if not 0 <= v < k:
                raise ParseError(path, r + 2, f"entry {v} outside [0,{k})")
        rows.append(tuple(vals))
    return SymbolMatrix(tuple(rows), k)


def _shape_kind(shape) -> str:
    if isinstance(shape, Stripe):
        return "stripe"
    if isinstance(shape, Cube):
        return "cube"
    return "box"


def _shape_denominator(shape) -> int:
    if isinstance(shape, Stripe):
        return lcm(shape.arc.start.denominator, arc_length(shape.arc).denominator)
    dens = [a.start.denominator for a in shape.arcs]
    dens += [arc_length(a).denominator for a in shape.arcs]
    return lcm(*dens)


def write_certificate(witnesses: dict, dim: int, n_points: int, path: str) -> None:
    """Serialize a mask -> shape map; all shapes must share one kind."""
    if not witnesses:
        raise ValueError("refusing to write an empty certificate")
    kinds = {_shape_kind(s) for s in witnesses.values()}
    if len(kinds) != 1:
        raise ValueError(f"mixed shape kinds in certificate: {sorted(kinds)}")
    kind = kinds.pop()
    denom = lcm(*(_shape_denominator(s) for s in witnesses.values()))
    lines = [f"{dim} {n_points} {denom} {kind}"]
    for mask in sorted(witnesses):
        shape = witnesses[mask]
        if kind == "stripe":
            nums = [shape.anchor_dim, int(shape.arc.start * denom)]
            tail = [int(arc_length(shape.arc) * denom)]
        else:
            nums = [int(a.start * denom) for a in shape.arcs]
            if kind == "cube":
                tail = [int(shape.edge * denom)]
            else:
                tail = [int(arc_length(a) * denom) for a in shape.arcs]
        lines.append(
            f"mask={mask:x} shape="
            + " ".join(str(v) for v in nums)
            + " ; "
            + " ".join(str(v) for v in tail)
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_certificate(path: str):
    """Returns (dim, n_points, denom, kind, {mask: shape})."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError(path, 1, "empty certificate file")
    head = lines[0].split()
    if len(head) != 4:
        raise ParseError(path, 1, "expected header 'd n D kind'")
    try:
        dim, n_points, denom = int(head[0]), int(head[1]), int(head[2])
    except ValueError:
        raise ParseError(path, 1, "non-integer header field") from None
    kind = head[3]
    if kind not in ("box", "cube", "stripe"):
        raise ParseError(path, 1, f"unknown certificate kind {kind!r}")
    witnesses = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            mask_part, shape_part = line.split(" shape=")
            mask = int(mask_part.removeprefix("mask="), 16)
            left, right = shape_part.split(";")
            nums = [int(v) for v in left.split()]
            tail = [int(v) for v in right.split()]
        except ValueError:
            raise ParseError(path, lineno, "malformed certificate line") from None
        try:
            witnesses[mask] = _build_shape(kind, dim, denom, nums, tail)
        except ValueError as exc:
            raise ParseError(path, lineno, str(exc)) from None
    return dim, n_points, denom, kind, witnesses


def _arc_from(start_num: int, len_num: int, denom: int, closed: bool) -> Arc:
    start = Fraction(start_num, denom) % ONE
    length = Fraction(len_num, denom)
    if not 0 < length < 1:
        raise ValueError(f"arc length {length} outside (0,1)")
    return Arc(start, (start + length) % ONE, closed=closed)


def _build_shape(kind, dim, denom, nums, tail):
    if kind == "stripe":
        if len(nums) != 2 or len(tail) != 1:
            raise ValueError("stripe shape needs 'anchor start ; length'")
        return Stripe(nums[0], _arc_from(nums[1], tail[0], denom, False), dim)
    if len(nums) != dim:
        raise ValueError(f"expected {dim} arc starts, got {len(nums)}")
    if kind == "cube":
        if len(tail) != 1:
            raise ValueError("cube shape needs a single edge numerator")
        arcs = tuple(_arc_from(s, tail[0], denom, True) for s in nums)
        return Cube(arcs, Fraction(tail[0], denom))
    if len(tail) != dim:
        raise ValueError(f"expected {dim} arc lengths, got {len(tail)}")
    arcs = tuple(_arc_from(s, ln, denom, True) for s, ln in zip(nums, tail))
    return Box(arcs)
