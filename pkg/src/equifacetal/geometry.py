"""Metric realization: edge lengths to coordinates, congruence, and centres."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

import numpy as np

from .coloring import ColoredGraph, all_pairs
from .perms import PermGroup, Permutation

DEFAULT_TOLERANCE = 1e-9


class NotRealizableError(ValueError):
    """The edge lengths do not embed as a nondegenerate simplex."""


class AmbiguousClusteringError(ValueError):
    """Edge lengths too close to the tolerance to cluster reliably."""


@dataclass(frozen=True)
class LengthAssignment:
    """One positive length per color index."""

    lengths: tuple[float, ...]

    def __post_init__(self) -> None:
        lengths = tuple(float(v) for v in self.lengths)
        if not lengths or any(not math.isfinite(v) or v <= 0 for v in lengths):
            raise ValueError("lengths must be positive finite reals")
        object.__setattr__(self, "lengths", lengths)

    def __getitem__(self, color: int) -> float:
        return self.lengths[color]

    def __len__(self) -> int:
        return len(self.lengths)


def edge_length_table(g: ColoredGraph, lengths) -> np.ndarray:
    """The full symmetric table of pairwise lengths induced by a coloring."""
    values = lengths.lengths if isinstance(lengths, LengthAssignment) else tuple(lengths)
    if len(values) != g.num_colors:
        raise ValueError(f"need one length per color ({g.num_colors}), got {len(values)}")
    m = g.n + 1
    table = np.zeros((m, m))
    for (i, j), c in zip(all_pairs(m), g.colors):
        table[i, j] = table[j, i] = values[c]
    return table


def _validated_table(table) -> np.ndarray:
    t = np.asarray(table, dtype=float)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 2:
        raise ValueError("length table must be square with at least two vertices")
    if np.diagonal(t).any():
        raise ValueError("length table must have a zero diagonal")
    if not np.array_equal(t, t.T):
        raise ValueError("length table must be symmetric")
    off = t[~np.eye(t.shape[0], dtype=bool)]
    if (off <= 0).any() or not np.isfinite(off).all():
        raise ValueError("off-diagonal lengths must be positive finite reals")
    return t


def gram_matrix(table) -> np.ndarray:
    """The n x n matrix with entries l_i0^2 + l_j0^2 - l_ij^2."""
    t = _validated_table(table)
    squared = t**2
    base = squared[0, 1:]
    return base[:, None] + base[None, :] - squared[1:, 1:]


def _pivoted_cholesky(matrix: np.ndarray, threshold: float):
    """Diagonally pivoted Cholesky; None unless every pivot exceeds threshold.

    Returns (lower, perm) with matrix[perm][:, perm] == lower @ lower.T.
    """
    work = np.array(matrix, dtype=float)
    size = work.shape[0]
    perm = list(range(size))
    lower = np.zeros_like(work)
    for k in range(size):
        lead = k + int(np.argmax(np.diagonal(work)[k:]))
        if lead != k:
            work[[k, lead]] = work[[lead, k]]
            work[:, [k, lead]] = work[:, [lead, k]]
            lower[[k, lead], :k] = lower[[lead, k], :k]
            perm[k], perm[lead] = perm[lead], perm[k]
        pivot = work[k, k]
        if pivot <= threshold:
            return None
        root = math.sqrt(pivot)
        lower[k, k] = root
        column = work[k + 1 :, k] / root
        lower[k + 1 :, k] = column
        work[k + 1 :, k + 1 :] -= np.outer(column, column)
    return lower, perm


def is_realizable(table, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """Whether the lengths are realized by a nondegenerate simplex, decided by
    positive definiteness of the associated matrix (pivots above
    tolerance times its largest entry)."""
    gm = gram_matrix(table)
    threshold = tolerance * float(np.abs(gm).max())
    return _pivoted_cholesky(gm, threshold) is not None


class EmbeddedSimplex:
    """Vertex coordinates of a nondegenerate simplex plus a metric tolerance.

    The tolerance is relative: metric comparisons use it scaled by the
    simplex diameter (or largest relevant entry).
    """

    def __init__(self, coords, tolerance: float = DEFAULT_TOLERANCE):
        coords = np.array(coords, dtype=float)
        if coords.ndim != 2 or coords.shape[0] < 2 or coords.shape[1] < 1:
            raise ValueError("coordinates must form a (n+1) x d array with n >= 1")
        if not np.isfinite(coords).all():
            raise ValueError("coordinates must be finite")
        self.coords = coords
        self.tolerance = float(tolerance)
        diffs = coords[1:] - coords[0]
        gm = diffs @ diffs.T
        threshold = self.tolerance * float(np.abs(gm).max())
        if _pivoted_cholesky(gm, threshold) is None:
            raise ValueError("degenerate: the vertices are affinely dependent")
        self.coords.setflags(write=False)
        self._distances: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.coords.shape[0] - 1

    @property
    def num_vertices(self) -> int:
        return self.coords.shape[0]

    def distance_matrix(self) -> np.ndarray:
        if self._distances is None:
            diff = self.coords[:, None, :] - self.coords[None, :, :]
            distances = np.sqrt((diff**2).sum(axis=-1))
            distances.setflags(write=False)
            self._distances = distances
        return self._distances

    def diameter(self) -> float:
        return float(self.distance_matrix().max())


def embed(table, tolerance: float = DEFAULT_TOLERANCE) -> EmbeddedSimplex:
    """Coordinates realizing a table of edge lengths, vertex 0 at the origin.

    Rows 1..n are the pivoted Cholesky factor of half the realizability
    matrix; the reconstruction is checked against the input within
    tolerance times the largest length.
    """
    t = _validated_table(table)
    half = gram_matrix(t) / 2.0
    threshold = tolerance * float(np.abs(half).max())
    factored = _pivoted_cholesky(half, threshold)
    if factored is None:
        raise NotRealizableError("lengths do not satisfy positive definiteness")
    lower, perm = factored
    dim = t.shape[0] - 1
    coords = np.zeros((dim + 1, dim))
    for row, vertex in enumerate(perm):
        coords[vertex + 1] = lower[row]
    simplex = EmbeddedSimplex(coords, tolerance)
    error = float(np.abs(simplex.distance_matrix() - t).max())
    if error > tolerance * float(t.max()):
        raise NotRealizableError(
            f"embedding reconstruction error {error:.3e} above tolerance"
        )
    return simplex


def realize_coloring(
    g: ColoredGraph, base: float = 1.0, seed: int | None = None
) -> tuple[LengthAssignment, EmbeddedSimplex]:
    """A faithful near-equilateral realization of a coloring.

    Color c gets length base * (1 + eps * (c+1) / r), halving eps from 1/4
    until the table is realizable; openness of the realizable region around
    the equilateral point guarantees termination.  A seed adds a small
    deterministic jitter that keeps the lengths ordered and distinct.
    """
    if base <= 0:
        raise ValueError("base length must be positive")
    r = g.num_colors
    rng = random.Random(seed) if seed is not None else None
    eps = 0.25
    while eps > 1e-12:
        values = [base * (1.0 + eps * (c + 1) / r) for c in range(r)]
        if rng is not None:
            gap = base * eps / r
            values = [v + 0.25 * gap * rng.random() for v in values]
        assignment = LengthAssignment(tuple(values))
        table = edge_length_table(g, assignment)
        if is_realizable(table):
            simplex = embed(table)
            if edge_length_partition(simplex) != g:
                raise RuntimeError("realization failed to recover its coloring")
            return assignment, simplex
        eps /= 2
    raise RuntimeError("no realizable perturbation found")  # unreachable


def facet_congruent(s: EmbeddedSimplex, i: int, j: int) -> dict[int, int] | None:
    """A distance-preserving bijection between the facets opposite i and j.

    Backtracking with per-vertex distance-multiset pruning; candidates are
    tried in increasing order so the lexicographically least bijection is
    found.  None when the facets are not congruent.
    """
    m = s.num_vertices
    if not (0 <= i < m and 0 <= j < m):
        raise ValueError("facet index out of range")
    dm = s.distance_matrix()
    tol = s.tolerance * s.diameter()
    left = [v for v in range(m) if v != i]
    right = [w for w in range(m) if w != j]

    def profile(verts, v):
        return sorted(dm[v][u] for u in verts if u != v)

    profiles_left = {v: profile(left, v) for v in left}
    profiles_right = {w: profile(right, w) for w in right}

    def close(xs, ys):
        return all(abs(x - y) <= tol for x, y in zip(xs, ys))

    candidates = {
        v: [w for w in right if close(profiles_left[v], profiles_right[w])]
        for v in left
    }
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == len(left):
            return True
        v = left[idx]
        for w in candidates[v]:
            if w in used:
                continue
            if all(abs(dm[v][u] - dm[w][x]) <= tol for u, x in mapping.items()):
                mapping[v] = w
                used.add(w)
                if extend(idx + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return dict(mapping) if extend(0) else None


def is_equifacetal(s: EmbeddedSimplex) -> bool:
    """Whether all facets are congruent (congruence to facet 0 suffices)."""
    return all(facet_congruent(s, 0, j) is not None for j in range(1, s.num_vertices))


def isometry_group(s: EmbeddedSimplex, max_dim: int = 8) -> PermGroup:
    """All vertex permutations preserving the distance matrix within tolerance."""
    if s.n > max_dim:
        raise ValueError(f"dimension {s.n} above the search bound {max_dim}")
    m = s.num_vertices
    dm = s.distance_matrix()
    tol = s.tolerance * s.diameter()
    profiles = [sorted(dm[v][u] for u in range(m) if u != v) for v in range(m)]

    def close(xs, ys):
        return all(abs(x - y) <= tol for x, y in zip(xs, ys))

    candidates = [[w for w in range(m) if close(profiles[v], profiles[w])] for v in range(m)]
    images = [-1] * m
    used = [False] * m
    found: list[Permutation] = []

    def extend(v: int) -> None:
        if v == m:
            found.append(Permutation(tuple(images)))
            return
        for w in candidates[v]:
            if used[w]:
                continue
            if all(abs(dm[u][v] - dm[images[u]][w]) <= tol for u in range(v)):
                images[v] = w
                used[w] = True
                extend(v + 1)
                images[v] = -1
                used[w] = False

    extend(0)
    return PermGroup.from_elements(found)


def edge_length_partition(s: EmbeddedSimplex) -> ColoredGraph:
    """Recover the coloring of edges by length, colors ordered by increasing
    length.

    Single-linkage clustering of the sorted lengths: a new color starts at
    every gap above tolerance times the largest length.  Gaps between one and
    ten times that threshold make the clustering unreliable and raise."""
    m = s.num_vertices
    dm = s.distance_matrix()
    pairs = all_pairs(m)
    ranked = sorted((dm[i][j], idx) for idx, (i, j) in enumerate(pairs))
    longest = ranked[-1][0]
    near, far = s.tolerance * longest, 10 * s.tolerance * longest
    colors = [0] * len(pairs)
    color = 0
    previous = ranked[0][0]
    for value, idx in ranked:
        gap = value - previous
        if near < gap <= far:
            raise AmbiguousClusteringError(
                f"length gap {gap:.3e} within the unreliable window ({near:.3e}, {far:.3e}]"
            )
        if gap > near:
            color += 1
        colors[idx] = color
        previous = value
    return ColoredGraph(m - 1, tuple(colors), color + 1)


def centroid(s: EmbeddedSimplex) -> np.ndarray:
    return s.coords.mean(axis=0)


def circumcenter(s: EmbeddedSimplex) -> np.ndarray:
    """The unique point of the affine span equidistant from all vertices."""
    base = s.coords[0]
    diffs = s.coords[1:] - base
    gm = diffs @ diffs.T
    rhs = 0.5 * np.einsum("ij,ij->i", diffs, diffs)
    weights = np.linalg.solve(gm, rhs)
    return base + weights @ diffs


def incenter(s: EmbeddedSimplex) -> np.ndarray:
    """The facet-volume weighted vertex average; weights are square roots of
    the facet Gram determinants (the constant factorials cancel)."""
    weights = []
    for j in range(s.num_vertices):
        facet = np.delete(s.coords, j, axis=0)
        diffs = facet[1:] - facet[0]
        gm = diffs @ diffs.T
        weights.append(math.sqrt(max(float(np.linalg.det(gm)), 0.0)))
    w = np.array(weights)
    return (w @ s.coords) / w.sum()


def centers_coincide(s: EmbeddedSimplex) -> bool:
    """Whether centroid, circumcenter, and incenter agree within ten times the
    tolerance, relative to the diameter."""
    points = [centroid(s), circumcenter(s), incenter(s)]
    limit = 10 * s.tolerance * s.diameter()
    return all(
        float(np.linalg.norm(a - b)) <= limit
        for a, b in itertools.combinations(points, 2)
    )
