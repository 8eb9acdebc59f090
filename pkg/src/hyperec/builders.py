"""Hypergraph constructions from MOLS families and block designs.

Both builders report raw versus deduplicated edge counts and attach the
closure level the construction is known to guarantee, if any.  The
guarantees are advisory metadata: the constructions are well defined outside
the guaranteed regimes and such instances make useful negative controls, so
the guarantee conditions are not enforced as preconditions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .designs import Design, DesignError, MolsSet, validate_design
from .hypergraph import Hypergraph, new_hypergraph


@dataclass(frozen=True)
class BuildResult:
    """A constructed hypergraph plus its provenance and edge accounting."""

    hypergraph: Hypergraph
    raw_edges: int
    unique_edges: int
    guaranteed_ec: Optional[int]
    provenance: str

    @property
    def had_collisions(self) -> bool:
        return self.raw_edges != self.unique_edges


def build_from_mols(mols: MolsSet) -> BuildResult:
    """Edges: all h-subsets of every row, column, and symbol class of the array.

    The vertex set is a q x q array stored row-major (vertex = row*q + col)
    with q = order and h = q - 1.  Each of the q rows, q columns, and q*ell
    symbol-position classes is a q-set contributing its q subsets of size h.
    A complete family of order h+1 >= 4 guarantees the result is 2-e.c.
    """
    q = mols.order
    if q < 4:
        raise DesignError(f"array order must be >= 4 (h >= 3), got {q}")
    h = q - 1
    groups: list[tuple[int, ...]] = []
    for r in range(q):
        groups.append(tuple(r * q + c for c in range(q)))
    for c in range(q):
        groups.append(tuple(r * q + c for r in range(q)))
    for sq in mols.squares:
        positions: dict[int, list[int]] = {s: [] for s in range(q)}
        for r in range(q):
            for c in range(q):
                positions[sq.grid[r][c]].append(r * q + c)
        for s in range(q):
            groups.append(tuple(positions[s]))

    edges = []
    for group in groups:
        edges.extend(itertools.combinations(group, h))
    hg = new_hypergraph(h, q * q, edges)
    guaranteed = 2 if mols.is_complete() else None
    provenance = f"built-from: mols q={q} squares={mols.count}"
    return BuildResult(hg, len(edges), hg.edge_count, guaranteed, provenance)


def build_from_design(design: Design, h: int) -> BuildResult:
    """Edges: all h-subsets of every block; vertices are the design's points.

    The design must pass validation first.  A t-(v,k,1) design yields a
    t-e.c. hypergraph when k >= 2t, v >= k+t and t+1 <= h <= k-t+1; at
    h = k the result is the design itself, 1-e.c. whenever v > k and the
    blocks are not all k-subsets.
    """
    if not 3 <= h <= design.k:
        raise DesignError(f"need 3 <= h <= k={design.k}, got h={h}")
    report = validate_design(design)
    if not report.valid:
        raise DesignError(
            f"design failed validation: coverage range "
            f"[{report.min_coverage}, {report.max_coverage}], expected {design.lam}"
        )
    edges = []
    for block in design.blocks:
        edges.extend(itertools.combinations(block, h))
    hg = new_hypergraph(h, design.v, edges)
    provenance = (
        f"built-from: design t={design.t} v={design.v} k={design.k} "
        f"lambda={design.lam} h={h}"
    )
    return BuildResult(hg, len(edges), hg.edge_count, _design_guarantee(design, h), provenance)


def _design_guarantee(design: Design, h: int) -> Optional[int]:
    t, v, k, lam = design.t, design.v, design.k, design.lam
    if lam == 1 and k >= 2 * t and v >= k + t and t + 1 <= h <= k - t + 1:
        return t
    if h == k and v > k and not _is_complete_design(design):
        return 1
    return None


def _is_complete_design(design: Design) -> bool:
    from math import comb

    return len(set(design.blocks)) == comb(design.v, design.k)
