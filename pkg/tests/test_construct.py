import pytest

from equifacetal import (
    AmbiguousExtensionError,
    ColoredGraph,
    NOT_REALIZABLE,
    NotSplittableError,
    NotTransitiveError,
    PermGroup,
    Permutation,
    REALIZABLE,
    UNKNOWN,
    canonical_form,
    color_automorphisms,
    colored_isomorphic,
    cyclic_coloring,
    delete_vertex,
    elementary_abelian_coloring,
    extend_facet,
    is_transitive,
    is_vertex_uniform,
    max_odd_entries,
    merge_colors,
    orbit_coloring,
    partitions_of,
    realize_partition,
    relabel_vertices,
    round_robin_one_factorization,
    satisfies_complementarity,
    split_color,
    weak_type,
)

from graphs import example_one, pentagon, scalene_k4


def preserves_classes(g, perm):
    return relabel_vertices(g, perm) == g


def test_cyclic_coloring_small_cases():
    assert weak_type(cyclic_coloring(2)).entries == (2,)
    assert weak_type(cyclic_coloring(4)).entries == (2, 2)
    assert weak_type(cyclic_coloring(5)).entries == (2, 2, 1)
    assert cyclic_coloring(4) == pentagon()


def test_cyclic_coloring_dihedral_invariance():
    for n in (2, 3, 4, 5, 6, 7):
        g = cyclic_coloring(n)
        m = n + 1
        assert preserves_classes(g, Permutation.rotation(m))
        assert preserves_classes(g, Permutation.reflection(m))


def test_merge_colors():
    g6 = cyclic_coloring(6)
    assert weak_type(merge_colors(g6, [[0, 1], [2]])).entries == (4, 2)
    assert merge_colors(g6, [[0, 1, 2]]) == ColoredGraph.monochromatic(6)
    assert weak_type(merge_colors(cyclic_coloring(5), [[0, 1], [2]])).entries == (4, 1)
    with pytest.raises(ValueError):
        merge_colors(g6, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        merge_colors(g6, [[0, 2]])


def test_split_color_cyclic_five():
    split = split_color(cyclic_coloring(5), 0)
    assert weak_type(split).entries == (2, 1, 1, 1)
    assert satisfies_complementarity(split)
    assert colored_isomorphic(split, example_one(), allow_color_permutation=True)


def test_split_color_rejects_triangles():
    with pytest.raises(NotSplittableError):
        split_color(cyclic_coloring(5), 1)  # the two-triangles class
    with pytest.raises(NotSplittableError):
        split_color(cyclic_coloring(5), 2)  # already a matching


def test_split_color_cyclic_seven_twice():
    g = split_color(split_color(cyclic_coloring(7), 0), 2)
    assert weak_type(g).entries == (2, 1, 1, 1, 1, 1)
    assert satisfies_complementarity(g)


def test_split_keeps_transitive_dihedral_subgroup():
    for n in (5, 7):
        g = split_color(cyclic_coloring(n), 0)
        m = n + 1
        subgroup = PermGroup.generate(
            [Permutation.rotation(m, 2), Permutation.reflection(m, 1)]
        )
        assert subgroup.order == m and is_transitive(subgroup)
        for perm in subgroup.elements:
            assert preserves_classes(g, perm)


def test_split_color_non_cyclic_alternating_class():
    # a parity-alternating hexagon that is not a cyclic difference class
    cycle = [(0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3)]
    rest = [p for p in ColoredGraph.monochromatic(5).classes()[0] if p not in cycle]
    g = ColoredGraph.from_classes(5, [cycle, rest])
    split = split_color(g, 0)
    degrees = [
        sum(1 for u in range(6) if u != v and split.color_of(u, v) in (0, 2))
        for v in range(6)
    ]
    assert weak_type(split).entries == (3, 1, 1)
    assert degrees == [2] * 6


def test_merge_grows_and_split_shrinks_the_group():
    g = cyclic_coloring(5)
    base = set(color_automorphisms(g).elements)
    merged = merge_colors(g, [[0, 1], [2]])
    assert base <= set(color_automorphisms(merged).elements)
    split = split_color(g, 0)
    assert set(color_automorphisms(split).elements) <= base


def test_orbit_coloring_from_full_cycle():
    for n in (4, 5, 6):
        g = orbit_coloring([Permutation.rotation(n + 1)])
        assert colored_isomorphic(g, cyclic_coloring(n), allow_color_permutation=True)
    # for odd n the half-turn class is a perfect matching
    degrees = weak_type(orbit_coloring([Permutation.rotation(6)]))
    assert degrees.entries == (2, 2, 1)


def test_orbit_coloring_regular_klein_four():
    g = orbit_coloring([Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))])
    assert weak_type(g).entries == (1, 1, 1)
    assert satisfies_complementarity(g)


def test_orbit_coloring_elementary_abelian_eight():
    gens = [
        Permutation(tuple(i ^ mask for i in range(8))) for mask in (1, 2, 4)
    ]
    g = orbit_coloring(gens)
    assert g == elementary_abelian_coloring(3)


def test_orbit_coloring_requires_transitivity():
    with pytest.raises(NotTransitiveError):
        orbit_coloring([Permutation.from_cycles(5, (0, 1))])


def test_orbit_coloring_group_is_contained_in_automorphisms():
    gens = [Permutation.rotation(7, 2), Permutation.reflection(7)]
    g = orbit_coloring(gens)
    automorphisms = set(color_automorphisms(g).elements)
    assert set(PermGroup.generate(gens).elements) <= automorphisms


def test_elementary_abelian_coloring():
    assert elementary_abelian_coloring(1) == ColoredGraph.monochromatic(1)
    assert weak_type(elementary_abelian_coloring(2)).entries == (1, 1, 1)
    g = elementary_abelian_coloring(3)
    assert weak_type(g).entries == (1,) * 7
    assert satisfies_complementarity(g)
    with pytest.raises(ValueError):
        elementary_abelian_coloring(5)


def test_round_robin_one_factorization():
    g5 = round_robin_one_factorization(5)
    assert is_vertex_uniform(g5)
    assert weak_type(g5).entries == (1,) * 5
    assert not satisfies_complementarity(g5)  # 6 is not a power of two
    assert satisfies_complementarity(round_robin_one_factorization(3))
    g7 = round_robin_one_factorization(7)
    assert is_vertex_uniform(g7)
    satisfies_complementarity(g7)  # status reported by the checker, not pinned
    with pytest.raises(ValueError):
        round_robin_one_factorization(4)


def test_max_odd_entries():
    assert max_odd_entries(5) == 3
    assert max_odd_entries(7) == 5
    assert max_odd_entries(9) == 5


def test_realize_partition_examples():
    assert realize_partition((2, 2), 4).status == REALIZABLE
    verdict = realize_partition((1, 1, 1, 1, 1), 5)
    assert verdict.status == NOT_REALIZABLE and verdict.reason == "power-of-two"
    assert realize_partition((3, 2), 5).status == REALIZABLE
    assert realize_partition((3, 1, 1, 1, 1, 1, 1), 9).status == UNKNOWN
    assert realize_partition((3, 1), 4).reason == "parity"
    assert realize_partition((1,) * 7, 7).status == REALIZABLE


def test_realize_partition_witnesses_are_checked():
    for entries, n in [((2, 2), 4), ((3, 2), 5), ((2, 1, 1, 1), 5), ((5, 1, 1), 7),
                       ((3, 1, 1, 1, 1), 7), ((1,) * 7, 7), ((4, 2), 6)]:
        verdict = realize_partition(entries, n)
        assert verdict.status == REALIZABLE
        assert weak_type(verdict.witness).entries == tuple(sorted(entries, reverse=True))
        assert satisfies_complementarity(verdict.witness)


def test_realize_partition_malformed():
    with pytest.raises(ValueError):
        realize_partition((2, 2), 5)
    with pytest.raises(ValueError):
        realize_partition((0, 4), 4)


@pytest.mark.parametrize("n", [4, 6])
def test_realize_partition_even_dichotomy(n):
    for p in partitions_of(n):
        verdict = realize_partition(p, n)
        if all(e % 2 == 0 for e in p.entries):
            assert verdict.status == REALIZABLE
        else:
            assert verdict.status == NOT_REALIZABLE and verdict.reason == "parity"


def test_extend_facet_equilateral():
    extension = extend_facet(ColoredGraph.monochromatic(2))
    assert extension.graph == ColoredGraph.monochromatic(3)
    assert extension.complementary


def test_extend_facet_rejects_scalene():
    assert extend_facet(scalene_k4()) is None


def test_extend_facet_pentagon_round_trip():
    facet = delete_vertex(pentagon(), 4)
    extension = extend_facet(facet)
    assert extension is not None
    assert canonical_form(extension.graph) == canonical_form(pentagon())


def test_extend_facet_ambiguous():
    facet = ColoredGraph.from_classes(
        3, [[(0, 1), (2, 3)], [(0, 2), (0, 3), (1, 2), (1, 3)]]
    )
    with pytest.raises(AmbiguousExtensionError):
        extend_facet(facet)
