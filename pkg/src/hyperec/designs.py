"""Latin squares, MOLS families, and t-(v,k,lambda) block designs.

Generators cover the standard families consumed by the hypergraph builders:
complete MOLS over GF(q), projective planes PG(2,q), Miquelian inversive
planes of prime-power order, and the seven-block plane of order two.  Every
generator validates its own output through :func:`validate_design` (or the
orthogonality check for MOLS) before returning, so a generation bug cannot
propagate silently.

Counting quantities (b, r, block counts over fixed/avoided point sets) are
exact rationals so that impossible parameter sets surface as non-integers
instead of silently rounding.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import IO, Iterable, Sequence

from .galois import GaloisError, GfField, field_of_order, prime_power


class DesignError(ValueError):
    pass


class DesignFormatError(DesignError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# ---------------------------------------------------------------------------
# Latin squares


@dataclass(frozen=True)
class LatinSquare:
    """Order-q square over symbols 0..q-1, each once per row and column."""

    order: int
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_latin(self.grid):
            raise DesignError("grid is not a Latin square")


def is_latin(grid: Sequence[Sequence[int]]) -> bool:
    """True iff every row and every column holds each symbol exactly once.

    Raises for structurally broken input (non-square grid, symbol out of
    range); returns False only for genuine Latin violations.
    """
    q = len(grid)
    if q == 0:
        raise DesignError("empty grid")
    full = set(range(q))
    for row in grid:
        if len(row) != q:
            raise DesignError("grid is not square")
        for s in row:
            if not 0 <= s < q:
                raise DesignError(f"symbol {s} outside [0, {q})")
    for row in grid:
        if set(row) != full:
            return False
    for c in range(q):
        if {row[c] for row in grid} != full:
            return False
    return True


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff superimposing the squares yields q*q distinct ordered pairs."""
    if a.order != b.order:
        raise DesignError(f"order mismatch: {a.order} vs {b.order}")
    q = a.order
    pairs = {(a.grid[r][c], b.grid[r][c]) for r in range(q) for c in range(q)}
    return len(pairs) == q * q


@dataclass(frozen=True)
class MolsSet:
    """Pairwise-orthogonal Latin squares of one order."""

    order: int
    squares: tuple[LatinSquare, ...]

    def __post_init__(self):
        if len(self.squares) > self.order - 1:
            raise DesignError(f"more than {self.order - 1} MOLS of order {self.order}")
        for sq in self.squares:
            if sq.order != self.order:
                raise DesignError("square order mismatch")
        for x, y in itertools.combinations(self.squares, 2):
            if not are_orthogonal(x, y):
                raise DesignError("squares are not pairwise orthogonal")

    @property
    def count(self) -> int:
        return len(self.squares)

    def is_complete(self) -> bool:
        return len(self.squares) == self.order - 1


def complete_mols(q: int) -> MolsSet:
    """The q-1 pairwise-orthogonal squares cell(x,y) = a*x + y over GF(q).

    Rows and columns are indexed by the field's canonical element order;
    square number i uses multiplier a = the (i+1)-th element.  Deterministic.
    """
    if q < 3:
        raise DesignError(f"order must be >= 3, got {q}")
    field = field_of_order(q)
    squares = []
    for a in range(1, q):
        grid = tuple(
            tuple(field.add(field.mul(a, x), y) for y in range(q)) for x in range(q)
        )
        squares.append(LatinSquare(q, grid))
    return MolsSet(q, tuple(squares))


# ---------------------------------------------------------------------------
# Block designs


@dataclass(frozen=True)
class Design:
    """A t-(v,k,lambda) candidate: points 0..v-1 and k-subsets as blocks.

    Construction enforces only structure (sizes, ranges, distinctness within
    a block); whether every t-subset really lies in exactly lambda blocks is
    the job of :func:`validate_design`.
    """

    t: int
    v: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 1 <= self.t <= self.k <= self.v:
            raise DesignError(f"need 1 <= t <= k <= v, got t={self.t} k={self.k} v={self.v}")
        if self.lam < 1:
            raise DesignError(f"lambda must be >= 1, got {self.lam}")
        canonical = []
        for block in self.blocks:
            members = tuple(sorted(block))
            if len(members) != self.k or len(set(members)) != self.k:
                raise DesignError(f"block {block} does not have exactly {self.k} distinct points")
            if members[0] < 0 or members[-1] >= self.v:
                raise DesignError(f"block {block} has a point outside [0, {self.v})")
            canonical.append(members)
        object.__setattr__(self, "blocks", tuple(sorted(canonical)))

    @property
    def b(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class DesignReport:
    valid: bool
    min_coverage: int
    max_coverage: int
    subsets_off: int


def validate_design(design: Design) -> DesignReport:
    """Count, for every t-subset of points, how many blocks contain it.

    Valid iff all counts equal lambda.  min/max coverage let a failing
    report show how far off the candidate is.
    """
    coverage = Counter()
    for block in design.blocks:
        for sub in itertools.combinations(block, design.t):
            coverage[sub] += 1
    total = comb(design.v, design.t)
    counts = list(coverage.values())
    if len(coverage) < total:
        counts.append(0)
    lo, hi = min(counts), max(counts)
    off = sum(1 for c in coverage.values() if c != design.lam)
    off += total - len(coverage)
    return DesignReport(lo == hi == design.lam, lo, hi, off)


@dataclass(frozen=True)
class DesignParams:
    b_formula: Fraction
    r_formula: Fraction
    b_observed: int
    replication_min: int
    replication_max: int

    @property
    def matches(self) -> bool:
        return (
            self.b_formula == self.b_observed
            and self.replication_min == self.replication_max == self.r_formula
        )


def design_params(design: Design) -> DesignParams:
    """Formulaic b and r of a 2-design next to the observed counts."""
    if design.t != 2:
        raise DesignError(f"b/r formulas apply to 2-designs only, got t={design.t}")
    v, k, lam = design.v, design.k, design.lam
    b_formula = Fraction(lam * v * (v - 1), k * (k - 1))
    r_formula = Fraction(lam * (v - 1), k - 1)
    replication = Counter()
    for block in design.blocks:
        for point in block:
            replication[point] += 1
    reps = [replication.get(p, 0) for p in range(v)]
    return DesignParams(b_formula, r_formula, design.b, min(reps), max(reps))


def lambda_ij(design: Design, i: int, j: int) -> Fraction:
    """Blocks containing a fixed i-set and avoiding a disjoint j-set, i+j <= t."""
    if i < 0 or j < 0:
        raise DesignError("i and j must be non-negative")
    if i + j > design.t:
        raise DesignError(f"need i+j <= t, got {i}+{j} > {design.t}")
    v, k, t, lam = design.v, design.k, design.t, design.lam
    return Fraction(lam * comb(v - i - j, k - i), comb(v - t, k - t))


def count_blocks_containing_avoiding(
    design: Design, inside: Iterable[int], avoid: Iterable[int]
) -> int:
    """Empirical counterpart of :func:`lambda_ij` for explicit point sets."""
    inside = frozenset(inside)
    avoid = frozenset(avoid)
    if inside & avoid:
        raise DesignError("point sets must be disjoint")
    n = 0
    for block in design.blocks:
        members = set(block)
        if inside <= members and not (avoid & members):
            n += 1
    return n


def _validated(design: Design, label: str) -> Design:
    report = validate_design(design)
    if not report.valid:
        raise DesignError(
            f"{label} failed validation: coverage range "
            f"[{report.min_coverage}, {report.max_coverage}], expected {design.lam}"
        )
    return design


def fano() -> Design:
    """The seven-point plane: blocks of the unique (7,3,1) 2-design."""
    one_based = [(1, 2, 3), (3, 4, 5), (1, 5, 6), (1, 4, 7), (2, 5, 7), (3, 6, 7), (2, 4, 6)]
    blocks = tuple(tuple(p - 1 for p in block) for block in one_based)
    return _validated(Design(2, 7, 3, 1, blocks), "fano plane")


def projective_plane(q: int) -> Design:
    """PG(2,q) as a 2-(q^2+q+1, q+1, 1) design.

    Points are the 1-dimensional subspaces of GF(q)^3, represented by the
    scaled vector whose first nonzero coordinate is 1 and sorted by the
    canonical element order; lines are the 2-dimensional subspaces.
    """
    if q < 2:
        raise DesignError(f"order must be >= 2, got {q}")
    field = field_of_order(q)
    reps = _projective_point_reps(field)
    point_id = {rep: i for i, rep in enumerate(reps)}
    mul, add = field.mul_table, field.add_table
    blocks = []
    for a, b, c in reps:  # lines carry the same canonical coordinates
        block = tuple(
            point_id[(x, y, z)]
            for (x, y, z) in reps
            if add[add[mul[a][x]][mul[b][y]]][mul[c][z]] == 0
        )
        blocks.append(block)
    v = q * q + q + 1
    return _validated(Design(2, v, q + 1, 1, tuple(blocks)), f"projective plane of order {q}")


def _projective_point_reps(field: GfField) -> list[tuple[int, int, int]]:
    q = field.order
    reps = [(0, 0, 1)]
    reps += [(0, 1, z) for z in range(q)]
    reps += [(1, y, z) for y in range(q) for z in range(q)]
    return sorted(reps)


def inversive_plane(q: int) -> Design:
    """The Miquelian 3-(q^2+1, q+1, 1) design on the projective line over GF(q^2).

    Finite points are labeled by their canonical element index in GF(q^2) and
    the point at infinity gets index q^2.  Blocks are every image of the
    subline {infinity} + GF(q) under the fractional-linear action of all
    invertible 2x2 matrices over GF(q^2), deduplicated as point sets.
    """
    if prime_power(q) is None:
        raise GaloisError(f"{q} is not a prime power")
    if q < 3:
        raise DesignError(f"order must be >= 3, got {q}")
    field = field_of_order(q * q)
    Q = q * q
    INF = Q
    mul, add, neg, invt = field.mul_table, field.add_table, field.neg_table, field.inv_table

    subfield = [x for x in range(Q) if field.pow(x, q) == x]
    if len(subfield) != q:
        raise DesignError(f"subfield extraction failed for q={q}")  # defensive
    base_block = tuple(subfield) + (INF,)

    blocks: set[frozenset[int]] = set()
    rng = range(Q)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    det = add[mul[a][d]][neg[mul[b][c]]]
                    if det == 0:
                        continue
                    image = []
                    for z in base_block:
                        if z == INF:
                            image.append(INF if c == 0 else mul[a][invt[c]])
                        else:
                            den = add[mul[c][z]][d]
                            if den == 0:
                                image.append(INF)
                            else:
                                image.append(mul[add[mul[a][z]][b]][invt[den]])
                    blocks.add(frozenset(image))

    expected = q * (Q + 1)
    if len(blocks) != expected:
        raise DesignError(f"inversive plane of order {q}: {len(blocks)} blocks, expected {expected}")
    block_tuples = tuple(sorted(tuple(sorted(bl)) for bl in blocks))
    return _validated(Design(3, Q + 1, q + 1, 1, block_tuples), f"inversive plane of order {q}")


# ---------------------------------------------------------------------------
# Design text format: line 1 "t v k lambda", then one block per line as k
# space-separated 0-based point indices; '#' comments and blank lines skipped.


def parse_design(lines: Iterable[str]) -> Design:
    header: tuple[int, int, int, int] | None = None
    blocks: list[list[int]] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(f) for f in line.split()]
        except ValueError:
            raise DesignFormatError(line_no, f"non-integer token in {line!r}") from None
        if header is None:
            if len(values) != 4:
                raise DesignFormatError(line_no, "header must be exactly 't v k lambda'")
            header = tuple(values)  # type: ignore[assignment]
            continue
        t, v, k, lam = header
        if len(values) != k:
            raise DesignFormatError(line_no, f"expected {k} points, got {len(values)}")
        if len(set(values)) != k or not all(0 <= x < v for x in values):
            raise DesignFormatError(line_no, f"block {values} invalid for k={k} v={v}")
        blocks.append(values)
    if header is None:
        raise DesignFormatError(1, "missing 't v k lambda' header")
    t, v, k, lam = header
    try:
        return Design(t, v, k, lam, tuple(tuple(b) for b in blocks))
    except DesignError as exc:
        raise DesignFormatError(1, str(exc)) from None


def read_design(path: str) -> Design:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_design(fh)


def format_design(design: Design, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{design.t} {design.v} {design.k} {design.lam}")
    out.extend(" ".join(str(p) for p in block) for block in design.blocks)
    return "\n".join(out) + "\n"


def write_design(path_or_file: str | IO[str], design: Design, comments: Sequence[str] = ()) -> None:
    text = format_design(design, comments)
    if isinstance(path_or_file, str):
        with open(path_or_file, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        path_or_file.write(text)


# ---------------------------------------------------------------------------
# MOLS text format: line 1 "q ell", then ell groups of q rows, each row q
# space-separated symbols in [0,q); '#' comments and blank lines skipped.


def parse_mols(lines: Iterable[str]) -> MolsSet:
    header: tuple[int, int] | None = None
    rows: list[list[int]] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(f) for f in line.split()]
        except ValueError:
            raise DesignFormatError(line_no, f"non-integer token in {line!r}") from None
        if header is None:
            if len(values) != 2:
                raise DesignFormatError(line_no, "header must be exactly 'q ell'")
            header = (values[0], values[1])
            continue
        q, _ = header
        if len(values) != q:
            raise DesignFormatError(line_no, f"expected {q} symbols, got {len(values)}")
        rows.append(values)
    if header is None:
        raise DesignFormatError(1, "missing 'q ell' header")
    q, ell = header
    if len(rows) != q * ell:
        raise DesignFormatError(1, f"expected {q * ell} rows for {ell} squares, got {len(rows)}")
    try:
        squares = tuple(
            LatinSquare(q, tuple(tuple(r) for r in rows[i * q : (i + 1) * q]))
            for i in range(ell)
        )
        return MolsSet(q, squares)
    except DesignError as exc:
        raise DesignFormatError(1, str(exc)) from None


def read_mols(path: str) -> MolsSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_mols(fh)


def format_mols(mols: MolsSet, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{mols.order} {mols.count}")
    for i, sq in enumerate(mols.squares):
        out.append(f"# square {i}")
        out.extend(" ".join(str(s) for s in row) for row in sq.grid)
    return "\n".join(out) + "\n"


def write_mols(path_or_file: str | IO[str], mols: MolsSet, comments: Sequence[str] = ()) -> None:
    text = format_mols(mols, comments)
    if isinstance(path_or_file, str):
        with open(path_or_file, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        path_or_file.write(text)
