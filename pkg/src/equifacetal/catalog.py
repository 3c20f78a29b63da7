"""Exhaustive enumeration of complementarity-satisfying colorings in low dimensions."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .coloring import (
    ColoredGraph,
    Partition,
    all_pairs,
    canonical_form,
    color_automorphisms,
    partitions_of,
    satisfies_complementarity,
    weak_type,
)
from .perms import GroupFingerprint, fingerprint, orbits


@dataclass(frozen=True)
class CatalogEntry:
    dimension: int
    canonical: ColoredGraph
    weak: Partition
    group_order: int
    group_fingerprint: GroupFingerprint
    edge_orbit_sizes: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ColorOrbits:
    """Automorphism-orbit decomposition of one color class."""

    color: int
    orbit_sizes: tuple[int, ...]

    @property
    def single_orbit(self) -> bool:
        return len(self.orbit_sizes) == 1


def admissible_partitions(n: int) -> list[Partition]:
    """Partitions of n that can be the degree vector of a vertex-uniform
    coloring of K_{n+1}: all of them for odd n, the all-even ones for even n
    (an odd degree on an odd number of vertices is impossible)."""
    parts = list(partitions_of(n))
    if n % 2 == 0:
        parts = [p for p in parts if all(e % 2 == 0 for e in p.entries)]
    return parts


def colorings_with_degrees(n: int, degrees: tuple[int, ...]):
    """All colorings of K_{n+1} whose per-vertex color degrees equal
    ``degrees`` exactly, one per relabelling of equal-degree colors.

    Backtracking over edges in lexicographic order with per-vertex capacity
    pruning; among colors of equal degree, indices must appear in first-use
    order, which removes their permutations.
    """
    m = n + 1
    pairs = all_pairs(m)
    r = len(degrees)
    remaining = [list(degrees) for _ in range(m)]
    assigned = [0] * len(pairs)
    # contiguous blocks of equal target degree
    block_first = list(range(r))
    for c in range(1, r):
        if degrees[c] == degrees[c - 1]:
            block_first[c] = block_first[c - 1]
    first_use = [-1] * r

    def extend(idx: int):
        if idx == len(pairs):
            yield ColoredGraph(n, tuple(assigned), r)
            return
        i, j = pairs[idx]
        cap_i, cap_j = remaining[i], remaining[j]
        for c in range(r):
            if not cap_i[c] or not cap_j[c]:
                continue
            if first_use[c] == -1:
                base = block_first[c]
                if any(first_use[b] == -1 for b in range(base, c)):
                    continue  # an earlier color of the same degree is still unused
                first_use[c] = idx
            assigned[idx] = c
            cap_i[c] -= 1
            cap_j[c] -= 1
            yield from extend(idx + 1)
            cap_i[c] += 1
            cap_j[c] += 1
            if first_use[c] == idx:
                first_use[c] = -1

    yield from extend(0)


def vertex_uniform_colorings(n: int, partition: Partition | None = None):
    """Stream every vertex-uniform coloring of K_{n+1}, grouped by partition.

    This is the raw search stream: equal-degree colors are normalised but
    vertex relabellings are not deduplicated, and no complementarity filter
    is applied.
    """
    parts = [partition] if partition is not None else admissible_partitions(n)
    for p in parts:
        yield from colorings_with_degrees(n, p.entries)


def _entry(canon: ColoredGraph) -> CatalogEntry:
    group = color_automorphisms(canon)
    orbit_sizes = tuple(
        tuple(sorted((len(orbit) for orbit in orbits(group, edges)), reverse=True))
        for edges in canon.classes()
    )
    return CatalogEntry(
        dimension=canon.n,
        canonical=canon,
        weak=weak_type(canon),
        group_order=group.order,
        group_fingerprint=fingerprint(group),
        edge_orbit_sizes=orbit_sizes,
    )


def enumerate_strong_types(n: int, max_dim: int = 6) -> list[CatalogEntry]:
    """All complementarity-satisfying colorings of K_{n+1} up to vertex
    permutation and color relabelling, sorted by (weak type, canonical form).

    Vertex-uniform candidates come from the degree vectors of admissible
    partitions; survivors of the complementarity filter are deduplicated by
    canonical form.
    """
    if n < 2:
        raise ValueError("enumeration starts at dimension 2")
    if n > max_dim:
        raise ValueError(f"dimension {n} above the bound {max_dim}; raise max_dim to override")
    if n > 6:
        warnings.warn(f"enumeration at dimension {n} may take very long", stacklevel=2)
    found: dict[tuple, ColoredGraph] = {}
    for g in vertex_uniform_colorings(n):
        if not satisfies_complementarity(g):
            continue
        canon = canonical_form(g, max_dim=max(8, n))
        found.setdefault((canon.num_colors, canon.colors), canon)
    entries = [_entry(canon) for canon in found.values()]
    entries.sort(
        key=lambda e: (tuple(-x for x in e.weak.entries), e.canonical.colors)
    )
    return entries


def edge_orbit_report(entry: CatalogEntry) -> tuple[ColorOrbits, ...]:
    """Per-color orbit decomposition; flags classes that are not one orbit."""
    return tuple(
        ColorOrbits(color, sizes) for color, sizes in enumerate(entry.edge_orbit_sizes)
    )


# weak type -> isometry group order, one row per equivalence class; the two
# dimension-5 rows with weak type (3,2) are distinct classes
_KNOWN_ROWS = {
    2: [((2,), 6)],
    3: [((3,), 24), ((2, 1), 8), ((1, 1, 1), 4)],
    4: [((4,), 120), ((2, 2), 10)],
    5: [
        ((5,), 720),
        ((4, 1), 48),
        ((3, 2), 72),
        ((3, 2), 12),
        ((3, 1, 1), 6),
        ((2, 2, 1), 12),
        ((2, 1, 1, 1), 6),
    ],
    6: [((6,), 5040), ((4, 2), 14), ((2, 2, 2), 14)],
}


def known_table(n: int) -> list[tuple[Partition, int]]:
    """Expected (weak type, group order) rows for dimensions 2 through 6."""
    if n not in _KNOWN_ROWS:
        raise ValueError("the reference table covers dimensions 2 through 6")
    return [(Partition(entries), order) for entries, order in _KNOWN_ROWS[n]]
