"""Edge-colored complete graphs and the combinatorial structure of their colorings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import PermGroup, Permutation


class NotVertexUniformError(ValueError):
    """Raised when an operation needs equal color degrees at every vertex."""


@lru_cache(maxsize=None)
def all_pairs(num_vertices: int) -> tuple[tuple[int, int], ...]:
    """All unordered vertex pairs (i, j), i < j, in lexicographic order."""
    return tuple(
        (i, j) for i in range(num_vertices) for j in range(i + 1, num_vertices)
    )


def pair_index(num_vertices: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    if i == j or not 0 <= i or not j < num_vertices:
        raise ValueError(f"not an edge of K_{num_vertices}: ({i}, {j})")
    return i * (2 * num_vertices - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class ColoredGraph:
    """A complete graph on n+1 vertices with a color index on every edge.

    ``colors`` holds one entry per unordered pair, pairs ordered as in
    :func:`all_pairs`.  The constructor only checks index ranges; use
    :meth:`from_classes` to build a graph from explicit color classes with the
    guarantee that every color is used.  Vertex deletion intentionally keeps
    empty classes so that deletions of one graph share a color alphabet.
    """

    n: int
    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        if self.num_colors < 1:
            raise ValueError("need at least one color")
        expected = self.n * (self.n + 1) // 2
        if len(self.colors) != expected:
            raise ValueError(f"expected {expected} edge colors, got {len(self.colors)}")
        if any(not 0 <= c < self.num_colors for c in self.colors):
            raise ValueError("edge color out of range")

    @classmethod
    def from_classes(cls, n: int, classes) -> ColoredGraph:
        """Build a graph from an ordered list of color classes (lists of pairs)."""
        m = n + 1
        colors = [-1] * (m * (m - 1) // 2)
        classes = [list(cl) for cl in classes]
        for color, edges in enumerate(classes):
            if not edges:
                raise ValueError(f"color {color} has no edges")
            for i, j in edges:
                idx = pair_index(m, i, j)
                if colors[idx] != -1:
                    raise ValueError(f"edge ({i}, {j}) colored twice")
                colors[idx] = color
        if -1 in colors:
            missing = all_pairs(m)[colors.index(-1)]
            raise ValueError(f"edge {missing} has no color")
        return cls(n, tuple(colors), len(classes))

    @classmethod
    def monochromatic(cls, n: int) -> ColoredGraph:
        return cls(n, (0,) * (n * (n + 1) // 2), 1)

    @property
    def num_vertices(self) -> int:
        return self.n + 1

    def color_of(self, i: int, j: int) -> int:
        return self.colors[pair_index(self.n + 1, i, j)]

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.num_colors)]
        for pair, color in zip(all_pairs(self.n + 1), self.colors):
            out[color].append(pair)
        return out

    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.num_colors
        for color in self.colors:
            sizes[color] += 1
        return tuple(sizes)


@dataclass(frozen=True)
class Partition:
    """A multiset of positive integers, stored in non-increasing order."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(sorted(self.entries, reverse=True))
        if any(not isinstance(e, int) or e < 1 for e in entries):
            raise ValueError(f"partition entries must be positive integers: {self.entries!r}")
        object.__setattr__(self, "entries", entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def partitions_of(n: int):
    """Yield all partitions of n in descending lexicographic order."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for entries in rec(n, n):
        yield Partition(entries)


@dataclass(frozen=True)
class IsoWitness:
    """A vertex bijection carrying one colored graph onto another.

    ``color_relabel`` is None when colors were held fixed, otherwise the color
    bijection (as a tuple of images) applied alongside the vertex mapping.
    """

    mapping: Permutation
    color_relabel: tuple[int, ...] | None = None


def _degree_vector(g: ColoredGraph, v: int) -> tuple[int, ...]:
    counts = [0] * g.num_colors
    color_of = g.color_of
    for u in range(g.n + 1):
        if u != v:
            counts[color_of(u, v)] += 1
    return tuple(counts)


def vertex_color_degrees(g: ColoredGraph, v: int) -> dict[int, int]:
    """Number of edges of each color incident at v; zero-degree colors omitted."""
    if not 0 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range for K_{g.n + 1}")
    return {c: d for c, d in enumerate(_degree_vector(g, v)) if d > 0}


def is_vertex_uniform(g: ColoredGraph) -> bool:
    first = _degree_vector(g, 0)
    return all(_degree_vector(g, v) == first for v in range(1, g.n + 1))


def weak_type(g: ColoredGraph) -> Partition:
    """The multiset of per-color vertex degrees of a vertex-uniform coloring."""
    if not is_vertex_uniform(g):
        raise NotVertexUniformError("coloring is not vertex-uniform")
    return Partition(tuple(d for d in _degree_vector(g, 0) if d > 0))


def delete_vertex(g: ColoredGraph, v: int) -> ColoredGraph:
    """The colored graph on the remaining vertices, relabelled preserving order.

    Colors that become empty keep their index so that deletions of the same
    graph can be compared over a fixed color alphabet.
    """
    if g.n < 2:
        raise ValueError("cannot delete a vertex from a graph on 2 vertices")
    if not 0 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range for K_{g.n + 1}")
    keep = [u for u in range(g.n + 1) if u != v]
    color_of = g.color_of
    colors = tuple(
        color_of(keep[a], keep[b])
        for a in range(len(keep))
        for b in range(a + 1, len(keep))
    )
    return ColoredGraph(g.n - 1, colors, g.num_colors)


def relabel_vertices(g: ColoredGraph, perm: Permutation) -> ColoredGraph:
    """Apply a vertex permutation, keeping colors fixed."""
    if perm.degree != g.n + 1:
        raise ValueError("permutation degree does not match the vertex count")
    m = g.n + 1
    colors = [0] * len(g.colors)
    for pair, color in zip(all_pairs(m), g.colors):
        colors[pair_index(m, *perm.apply_pair(pair))] = color
    return ColoredGraph(g.n, tuple(colors), g.num_colors)


def relabel_colors(g: ColoredGraph, mapping) -> ColoredGraph:
    """Apply a bijection of color indices."""
    mapping = tuple(mapping)
    if sorted(mapping) != list(range(g.num_colors)):
        raise ValueError("color relabelling is not a bijection of the color set")
    return ColoredGraph(g.n, tuple(mapping[c] for c in g.colors), g.num_colors)


def colored_isomorphic(
    g1: ColoredGraph, g2: ColoredGraph, allow_color_permutation: bool = False
) -> IsoWitness | None:
    """Search for a vertex bijection carrying g1 onto g2 color class by class.

    With ``allow_color_permutation`` the witness may also relabel colors.  The
    lexicographically least vertex mapping is returned, found by assigning
    images of 0, 1, ... in increasing candidate order with color-degree
    pruning.
    """
    if g1.n != g2.n:
        raise ValueError("graphs have different vertex counts")
    if g1.num_colors != g2.num_colors:
        if allow_color_permutation:
            return None
        raise ValueError("fixed-color comparison needs a common color alphabet")
    m = g1.n + 1
    r = g1.num_colors
    if allow_color_permutation:
        if sorted(g1.class_sizes()) != sorted(g2.class_sizes()):
            return None
    elif g1.class_sizes() != g2.class_sizes():
        return None

    deg1 = [_degree_vector(g1, v) for v in range(m)]
    deg2 = [_degree_vector(g2, v) for v in range(m)]
    if allow_color_permutation:
        key1 = [tuple(sorted(d)) for d in deg1]
        key2 = [tuple(sorted(d)) for d in deg2]
    else:
        key1, key2 = deg1, deg2
    if sorted(key1) != sorted(key2):
        return None
    candidates = [[w for w in range(m) if key2[w] == key1[v]] for v in range(m)]

    images = [-1] * m
    used = [False] * m
    cmap = [-1] * r
    cmap_used = [False] * r
    color1 = g1.color_of
    color2 = g2.color_of

    def extend(v: int) -> bool:
        if v == m:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            patched: list[int] = []
            ok = True
            for u in range(v):
                c1 = color1(u, v)
                c2 = color2(images[u], w)
                if allow_color_permutation:
                    if cmap[c1] == -1:
                        if cmap_used[c2]:
                            ok = False
                            break
                        cmap[c1] = c2
                        cmap_used[c2] = True
                        patched.append(c1)
                    elif cmap[c1] != c2:
                        ok = False
                        break
                elif c1 != c2:
                    ok = False
                    break
            if ok:
                images[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                images[v] = -1
                used[w] = False
            for c in patched:
                cmap_used[cmap[c]] = False
                cmap[c] = -1
        return False

    if not extend(0):
        return None
    if not allow_color_permutation:
        return IsoWitness(Permutation(tuple(images)))
    # colors absent from g1's edges (possible after deletions) pair up in order
    spare = iter(c for c in range(r) if not cmap_used[c])
    relabel = tuple(c if c != -1 else next(spare) for c in cmap)
    return IsoWitness(Permutation(tuple(images)), relabel)


def satisfies_complementarity(g: ColoredGraph) -> bool:
    """Whether all vertex deletions are isomorphic as colored graphs.

    Colors are held fixed: in a simplex they stand for actual lengths shared
    by every facet.  Isomorphism is transitive, so comparing every deletion
    against the deletion of vertex 0 covers all pairs.
    """
    if g.n == 1:
        return True
    base = delete_vertex(g, 0)
    return all(
        colored_isomorphic(base, delete_vertex(g, v)) is not None
        for v in range(1, g.n + 1)
    )


def _connected_components(edges):
    adjacency: dict[int, set[int]] = {}
    for i, j in edges:
        adjacency.setdefault(i, set()).add(j)
        adjacency.setdefault(j, set()).add(i)
    seen: set[int] = set()
    components = []
    for start in sorted(adjacency):
        if start in seen:
            continue
        stack = [start]
        verts = set()
        while stack:
            v = stack.pop()
            if v in verts:
                continue
            verts.add(v)
            stack.extend(adjacency[v] - verts)
        seen |= verts
        components.append(
            (sorted(verts), {(i, j) for i, j in edges if i in verts})
        )
    return components, adjacency


def _uncolored_isomorphic(comp1, comp2, adjacency) -> bool:
    verts1, edges1 = comp1
    verts2, edges2 = comp2
    if len(verts1) != len(verts2) or len(edges1) != len(edges2):
        return False
    deg1 = {v: len(adjacency[v]) for v in verts1}
    deg2 = {w: len(adjacency[w]) for w in verts2}
    if sorted(deg1.values()) != sorted(deg2.values()):
        return False
    edgeset2 = edges2
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == len(verts1):
            return True
        v = verts1[idx]
        for w in verts2:
            if w in used or deg2[w] != deg1[v]:
                continue
            ok = True
            for u in mapping:
                have = (min(u, v), max(u, v)) in edges1
                want = (min(mapping[u], w), max(mapping[u], w)) in edgeset2
                if have != want:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(idx + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)


def components_congruent(g: ColoredGraph) -> bool:
    """Whether, for every color, the connected components of that color class
    are pairwise isomorphic as uncolored graphs.  A necessary combinatorial
    surrogate for the components being geometrically congruent."""
    for edges in g.classes():
        if not edges:
            continue
        components, adjacency = _connected_components(edges)
        first = components[0]
        for other in components[1:]:
            if not _uncolored_isomorphic(first, other, adjacency):
                return False
    return True


def color_automorphisms(g: ColoredGraph, max_dim: int = 8) -> PermGroup:
    """The group of vertex permutations mapping every color class to itself."""
    if g.n > max_dim:
        raise ValueError(f"dimension {g.n} above the search bound {max_dim}")
    m = g.n + 1
    deg = [_degree_vector(g, v) for v in range(m)]
    candidates = [[w for w in range(m) if deg[w] == deg[v]] for v in range(m)]
    color_of = g.color_of
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
            if all(color_of(u, v) == color_of(images[u], w) for u in range(v)):
                images[v] = w
                used[w] = True
                extend(v + 1)
                images[v] = -1
                used[w] = False

    extend(0)
    return PermGroup.from_elements(found)


def is_vertex_transitive(g: ColoredGraph, max_dim: int = 8) -> bool:
    from .perms import is_transitive

    return is_transitive(color_automorphisms(g, max_dim=max_dim))


def _relabeled_by_order(g: ColoredGraph, order: tuple[int, ...]) -> ColoredGraph:
    m = g.n + 1
    relabel: dict[int, int] = {}
    colors = [0] * len(g.colors)
    for k in range(m):
        for i in range(k):
            c = g.color_of(order[i], order[k])
            colors[pair_index(m, i, k)] = relabel.setdefault(c, len(relabel))
    return ColoredGraph(g.n, tuple(colors), len(relabel))


def canonical_form(g: ColoredGraph, max_dim: int = 8) -> ColoredGraph:
    """A canonical representative of g up to vertex permutation and color
    relabelling.

    Minimises, over all vertex orderings, the edge color vector read off in
    vertex-incremental order (edges to each newly placed vertex), with colors
    renamed in order of first appearance.  The search keeps the frontier of
    all orderings achieving the current minimal prefix, so equal inputs up to
    equivalence give bit-identical outputs.  Colors that g never uses are
    dropped.
    """
    if g.n > max_dim:
        raise ValueError(f"dimension {g.n} above the search bound {max_dim}")
    if g.num_colors == 1:
        return ColoredGraph(g.n, g.colors, 1)
    m = g.n + 1
    color_of = g.color_of
    frontier: list[tuple[tuple[int, ...], dict[int, int]]] = [
        ((v,), {}) for v in range(m)
    ]
    for _ in range(1, m):
        best_row: list[int] | None = None
        extensions: list[tuple[tuple[int, ...], dict[int, int]]] = []
        for order, relabel in frontier:
            placed = set(order)
            for v in range(m):
                if v in placed:
                    continue
                row = []
                tentative = dict(relabel)
                for u in order:
                    c = color_of(u, v)
                    mapped = tentative.get(c)
                    if mapped is None:
                        mapped = len(tentative)
                        tentative[c] = mapped
                    row.append(mapped)
                if best_row is None or row < best_row:
                    best_row = row
                    extensions = [(order + (v,), tentative)]
                elif row == best_row:
                    extensions.append((order + (v,), tentative))
        frontier = extensions
    return _relabeled_by_order(g, frontier[0][0])
