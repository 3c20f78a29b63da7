"""Permutations of {0..m-1} and small, fully materialised permutation groups."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import lcm


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., m-1}, stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection of 0..{len(self.images) - 1}: {self.images!r}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles) -> Permutation:
        images = list(range(degree))
        for cycle in cycles:
            cycle = tuple(cycle)
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                images[src] = dst
        return cls(tuple(images))

    @classmethod
    def rotation(cls, degree: int, shift: int = 1) -> Permutation:
        return cls(tuple((i + shift) % degree for i in range(degree)))

    @classmethod
    def reflection(cls, degree: int, offset: int = 0) -> Permutation:
        """The map i -> (offset - i) mod degree."""
        return cls(tuple((offset - i) % degree for i in range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def apply_pair(self, pair: tuple[int, int]) -> tuple[int, int]:
        a, b = self.images[pair[0]], self.images[pair[1]]
        return (a, b) if a < b else (b, a)

    def compose(self, other: Permutation) -> Permutation:
        """Composition acting right to left: (p * q)(x) == p(q(x))."""
        return Permutation(tuple(self.images[y] for y in other.images))

    __mul__ = compose

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for src, dst in enumerate(self.images):
            inv[dst] = src
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))


@dataclass(frozen=True)
class GroupFingerprint:
    """Coarse structure of a small group: order, element-order histogram, abelianness."""

    order: int
    element_orders: tuple[tuple[int, int], ...]
    abelian: bool

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "element_orders": {str(o): c for o, c in self.element_orders},
            "abelian": self.abelian,
        }


@dataclass(frozen=True)
class PermGroup:
    """A permutation group with its full element list materialised.

    Degrees stay in single digits here, so breadth-first closure of the
    generators is cheap and keeps everything deterministic.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]

    @classmethod
    def generate(cls, generators, element_bound: int = 1_000_000) -> PermGroup:
        generators = tuple(generators)
        if not generators:
            raise ValueError("need at least one generator (use the identity for the trivial group)")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators act on different numbers of points")
        identity = Permutation.identity(degree)
        elements = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for gen in generators:
                for known in frontier:
                    product = gen * known
                    if product not in elements:
                        elements.add(product)
                        new.append(product)
                        if len(elements) > element_bound:
                            raise ValueError(f"group closure exceeds the bound {element_bound}")
            frontier = new
        return cls(degree, generators, tuple(sorted(elements)))

    @classmethod
    def from_elements(cls, elements) -> PermGroup:
        elements = tuple(sorted(set(elements)))
        if not elements:
            raise ValueError("a group needs at least the identity")
        degree = elements[0].degree
        if any(g.degree != degree for g in elements):
            raise ValueError("elements act on different numbers of points")
        return cls(degree, elements, elements)

    @property
    def order(self) -> int:
        return len(self.elements)


def orbits(group: PermGroup, domain="vertices") -> list[list]:
    """Partition a domain into group orbits.

    ``domain`` is ``"vertices"``, ``"pairs"`` (all unordered vertex pairs), or
    an explicit iterable of pairs that must be invariant under the group.
    Each orbit is sorted and orbits are listed by least element.
    """
    if domain == "vertices":
        points = list(range(group.degree))
        images = {x: {g(x) for g in group.elements} for x in points}
    else:
        if domain == "pairs":
            points = [
                (i, j) for i in range(group.degree) for j in range(i + 1, group.degree)
            ]
        else:
            points = [tuple(sorted(p)) for p in domain]
        images = {x: {g.apply_pair(x) for g in group.elements} for x in points}
    pointset = set(points)
    remaining = set(points)
    out = []
    while remaining:
        seed = min(remaining)
        orbit = images[seed]
        if not orbit <= pointset:
            raise ValueError("domain is not invariant under the group")
        remaining -= orbit
        out.append(sorted(orbit))
    out.sort(key=lambda orbit: orbit[0])
    return out


def is_transitive(group: PermGroup) -> bool:
    return len(orbits(group, "vertices")) == 1


def fingerprint(group: PermGroup, element_bound: int = 10_000) -> GroupFingerprint:
    if group.order > element_bound:
        raise ValueError(f"group order {group.order} exceeds the fingerprint bound {element_bound}")
    histogram = Counter(g.order() for g in group.elements)
    abelian = all(a * b == b * a for a, b in itertools.combinations(group.generators, 2))
    return GroupFingerprint(group.order, tuple(sorted(histogram.items())), abelian)
