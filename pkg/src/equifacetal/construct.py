"""Explicit colorings of K_{n+1} and the partition-realizability classifier."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    ColoredGraph,
    Partition,
    _degree_vector,
    all_pairs,
    is_vertex_uniform,
    satisfies_complementarity,
    weak_type,
)
from .perms import PermGroup, is_transitive, orbits


class NotSplittableError(ValueError):
    """The color class is not a spanning union of parity-alternating cycles."""


class NotTransitiveError(ValueError):
    """The generated group has more than one vertex orbit."""


class AmbiguousExtensionError(ValueError):
    """More than one uniform degree vector is consistent with the facet."""


REALIZABLE = "realizable"
NOT_REALIZABLE = "not-realizable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class RealizabilityVerdict:
    """Outcome of the partition classifier: a witness, an obstruction, or open.

    ``reason`` is one of ``parity``, ``sum-parity``, ``power-of-two``,
    ``too-many-colours`` when the status is not-realizable.
    """

    status: str
    witness: ColoredGraph | None = None
    reason: str | None = None


@dataclass(frozen=True)
class FacetExtension:
    """A vertex-uniform one-vertex extension of a facet coloring."""

    graph: ColoredGraph
    complementary: bool


def cyclic_coloring(n: int) -> ColoredGraph:
    """Color K_{n+1} by cyclic difference classes.

    Class k-1 holds the edges {i, j} with j - i congruent to k or -(k) mod
    n+1; the coloring is invariant under the rotation i -> i+1 and the
    reflection i -> -i.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    m = n + 1
    colors = tuple(min(j - i, m - (j - i)) - 1 for i, j in all_pairs(m))
    return ColoredGraph(n, colors, m // 2)


def merge_colors(g: ColoredGraph, grouping) -> ColoredGraph:
    """Coarsen a coloring by merging each group of color indices into one."""
    grouping = [list(group) for group in grouping]
    mapping: dict[int, int] = {}
    for new_color, group in enumerate(grouping):
        if not group:
            raise ValueError("empty group in color merge")
        for c in group:
            if c in mapping:
                raise ValueError(f"color {c} appears in two groups")
            mapping[c] = new_color
    if sorted(mapping) != list(range(g.num_colors)):
        raise ValueError("grouping must cover every color exactly once")
    return ColoredGraph(
        g.n, tuple(mapping[c] for c in g.colors), len(grouping)
    )


def _is_perfect_matching(edges, m: int) -> bool:
    touched: set[int] = set()
    for i, j in edges:
        if i in touched or j in touched:
            return False
        touched |= {i, j}
    return len(touched) == m


def _alternation_half(edges, adjacency, m: int) -> set[tuple[int, int]]:
    # per cycle: anchor at its least even vertex, walk towards the smaller
    # neighbor, and keep every other edge starting with the anchored one
    half: set[tuple[int, int]] = set()
    seen: set[int] = set()
    for start in range(0, m, 2):
        if start in seen:
            continue
        prev, cur = start, min(adjacency[start])
        keep = True
        while True:
            seen.add(prev)
            if keep:
                half.add((min(prev, cur), max(prev, cur)))
            keep = not keep
            if cur == start:
                break
            nxt = adjacency[cur][0] if adjacency[cur][1] == prev else adjacency[cur][1]
            prev, cur = cur, nxt
    return half


def split_color(g: ColoredGraph, color: int) -> ColoredGraph:
    """Split a 2-regular color class into two perfect matchings.

    The class must be a spanning union of cycles that alternate even- and
    odd-numbered vertices.  When the cyclic edge differences of the class take
    exactly two values the matchings are the two difference classes (this
    keeps a transitive dihedral symmetry on cyclic colorings); otherwise each
    cycle is split by alternation from a fixed anchor.  The first matching
    keeps the class index, the second is appended as a new last color.
    """
    if not 0 <= color < g.num_colors:
        raise ValueError(f"color {color} out of range")
    m = g.n + 1
    edges = g.classes()[color]
    adjacency: dict[int, list[int]] = {v: [] for v in range(m)}
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    if any(len(adjacency[v]) != 2 for v in range(m)):
        raise NotSplittableError("color class is not a spanning union of cycles")
    if any((i + j) % 2 == 0 for i, j in edges):
        raise NotSplittableError("cycles do not alternate even and odd vertices")

    def residue(edge):
        i, j = edge
        odd, even = (i, j) if i % 2 else (j, i)
        return (odd - even) % m

    residues = sorted({residue(e) for e in edges})
    half: set[tuple[int, int]] | None = None
    if len(residues) == 2:
        candidate = {e for e in edges if residue(e) == residues[0]}
        rest = [e for e in edges if e not in candidate]
        if _is_perfect_matching(candidate, m) and _is_perfect_matching(rest, m):
            half = candidate
    if half is None:
        half = _alternation_half(edges, adjacency, m)

    new_colors = list(g.colors)
    for idx, (pair, c) in enumerate(zip(all_pairs(m), g.colors)):
        if c == color and pair not in half:
            new_colors[idx] = g.num_colors
    return ColoredGraph(g.n, tuple(new_colors), g.num_colors + 1)


def orbit_coloring(generators, element_bound: int = 1_000_000) -> ColoredGraph:
    """Color each edge orbit of the generated group with a distinct color.

    The group must be transitive on vertices, which makes the result
    vertex-transitive and hence complementarity-satisfying.  Classes are
    ordered by their least edge.
    """
    group = PermGroup.generate(list(generators), element_bound)
    if not is_transitive(group):
        raise NotTransitiveError("generated group is not transitive on vertices")
    classes = orbits(group, "pairs")
    return ColoredGraph.from_classes(group.degree - 1, classes)


def elementary_abelian_coloring(r: int) -> ColoredGraph:
    """The orbit coloring of (Z/2)^r acting on itself: vertices are r-bit
    strings and each nonzero mask gives the perfect matching i <-> i xor mask."""
    if not 1 <= r <= 4:
        raise ValueError("exponent must be between 1 and 4")
    m = 2**r
    colors = tuple((i ^ j) - 1 for i, j in all_pairs(m))
    return ColoredGraph(m - 1, colors, m - 1)


def round_robin_one_factorization(n: int) -> ColoredGraph:
    """The circle-method one-factorization of K_{n+1} for odd n.

    Vertex-uniform with every class a perfect matching; it need not satisfy
    complementarity.
    """
    if n % 2 == 0:
        raise ValueError("one-factorization needs an odd dimension")
    classes = []
    for rnd in range(n):
        matching = [(n, rnd)]
        matching += [((rnd + i) % n, (rnd - i) % n) for i in range(1, n // 2 + 1)]
        classes.append(matching)
    return ColoredGraph.from_classes(n, classes)


def max_odd_entries(n: int) -> int:
    """How many odd entries the split construction can produce for odd n."""
    half = (n + 1) // 2
    return half if half % 2 == 1 else half + 1


def _merged_cyclic_witness(p: Partition, n: int) -> ColoredGraph:
    g = cyclic_coloring(n)
    grouping = []
    next_class = 0
    for entry in p.entries:
        grouping.append(list(range(next_class, next_class + entry // 2)))
        next_class += entry // 2
    return merge_colors(g, grouping)


def _split_merge_witness(p: Partition, n: int) -> ColoredGraph:
    g = cyclic_coloring(n)
    half = (n + 1) // 2
    odd_count = sum(e % 2 for e in p.entries)
    for k in [k for k in range(1, half) if k % 2 == 1][: (odd_count - 1) // 2]:
        g = split_color(g, k - 1)  # class of difference k; new halves append
    degrees = _degree_vector(g, 0)
    ones = [c for c in range(g.num_colors) if degrees[c] == 1]
    twos = [c for c in range(g.num_colors) if degrees[c] == 2]
    grouping = []
    for entry in p.entries:
        group = [ones.pop(0)] if entry % 2 else []
        group += [twos.pop(0) for _ in range(entry // 2)]
        grouping.append(group)
    return merge_colors(g, grouping)


def realize_partition(partition, n: int) -> RealizabilityVerdict:
    """Classify whether a partition of n is the weak type of a
    complementarity-satisfying coloring, producing a verified witness when it
    is.  For even n the answer is a complete dichotomy; for odd n the verdict
    may be Unknown, which is an open problem rather than a failure."""
    p = partition if isinstance(partition, Partition) else Partition(tuple(partition))
    if len(p.entries) > n:  # impossible once the sum matches; guard only
        return RealizabilityVerdict(NOT_REALIZABLE, reason="too-many-colours")
    if p.total != n:
        raise ValueError(f"partition entries sum to {p.total}, not {n}")

    if n % 2 == 0:
        if any(e % 2 for e in p.entries):
            return RealizabilityVerdict(NOT_REALIZABLE, reason="parity")
        witness = _merged_cyclic_witness(p, n)
    else:
        odd_count = sum(e % 2 for e in p.entries)
        if odd_count % 2 == 0:  # unreachable when the sum matches; guard only
            return RealizabilityVerdict(NOT_REALIZABLE, reason="sum-parity")
        if all(e == 1 for e in p.entries):
            if n + 1 & n:
                return RealizabilityVerdict(NOT_REALIZABLE, reason="power-of-two")
            witness = elementary_abelian_coloring((n + 1).bit_length() - 1)
        elif odd_count <= max_odd_entries(n):
            witness = _split_merge_witness(p, n)
        else:
            return RealizabilityVerdict(UNKNOWN)

    if weak_type(witness) != p or not satisfies_complementarity(witness):
        raise RuntimeError(f"witness construction failed for {p.entries} at n={n}")
    return RealizabilityVerdict(REALIZABLE, witness=witness)


def extend_facet(g: ColoredGraph) -> FacetExtension | None:
    """Extend a facet coloring of K_{n+1} to a vertex-uniform coloring of
    K_{n+2} by adding one apex vertex.

    Uniform target degrees must leave every facet vertex short exactly one
    edge of exactly one color; the apex edge to each vertex takes that color.
    Returns None when no consistent degree vector exists, and raises when
    more than one does.
    """
    m = g.n + 1
    r = g.num_colors
    degrees = [_degree_vector(g, v) for v in range(m)]
    maxima = [max(d[c] for d in degrees) for c in range(r)]
    minima = [min(d[c] for d in degrees) for c in range(r)]
    if any(maxima[c] - minima[c] > 1 for c in range(r)):
        return None
    uniform = [c for c in range(r) if maxima[c] == minima[c]]
    extra = m - sum(maxima)
    if extra < 0 or extra > len(uniform):
        return None
    if 0 < extra < len(uniform):
        raise AmbiguousExtensionError(
            f"{extra} of the {len(uniform)} uniform colors could take the extra degree"
        )
    target = list(maxima)
    if extra:
        for c in uniform:
            target[c] += 1

    apex_color = []
    for v in range(m):
        deficient = [c for c in range(r) if target[c] - degrees[v][c] == 1]
        if len(deficient) != 1:
            return None
        apex_color.append(deficient[0])
    for c in range(r):
        if apex_color.count(c) != target[c]:
            return None

    colors = []
    for i, j in all_pairs(m + 1):
        colors.append(apex_color[i] if j == m else g.color_of(i, j))
    extended = ColoredGraph(g.n + 1, tuple(colors), r)
    if not is_vertex_uniform(extended):  # guaranteed by the degree checks
        raise RuntimeError("extension lost vertex uniformity")
    return FacetExtension(extended, satisfies_complementarity(extended))
