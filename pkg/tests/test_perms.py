import math
import random

import pytest

from equifacetal import (
    PermGroup,
    Permutation,
    color_automorphisms,
    fingerprint,
    is_transitive,
    orbits,
)

from graphs import example_four, heptagon_42


def dihedral(m):
    return PermGroup.generate([Permutation.rotation(m), Permutation.reflection(m)])


def test_permutation_basics():
    p = Permutation.from_cycles(5, (0, 1, 2))
    assert p(0) == 1 and p(2) == 0 and p(3) == 3
    assert (p * p.inverse()) == Permutation.identity(5)
    assert p.order() == 3
    assert p.apply_pair((3, 0)) == (1, 3)
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_compose_is_right_to_left():
    p = Permutation.from_cycles(3, (0, 1))
    q = Permutation.from_cycles(3, (1, 2))
    assert (p * q)(1) == p(q(1))


def test_generate_orders():
    assert PermGroup.generate([Permutation.identity(4)]).order == 1
    assert PermGroup.generate([Permutation.rotation(7)]).order == 7
    assert dihedral(7).order == 14


def test_generate_bound():
    gens = [Permutation.rotation(6), Permutation.from_cycles(6, (0, 1))]
    with pytest.raises(ValueError):
        PermGroup.generate(gens, element_bound=100)


def test_generate_mismatched_degrees():
    with pytest.raises(ValueError):
        PermGroup.generate([Permutation.identity(3), Permutation.identity(4)])


def test_vertex_orbits():
    d14 = dihedral(7)
    assert orbits(d14) == [list(range(7))]
    trivial = PermGroup.generate([Permutation.identity(5)])
    assert orbits(trivial) == [[0], [1], [2], [3], [4]]


def test_edge_orbits_of_heptagon_type():
    # the degree-4 color of the [4,2] type splits into two orbits of size 7
    d14 = dihedral(7)
    wide = heptagon_42().classes()[0]
    assert [len(o) for o in orbits(d14, wide)] == [7, 7]


def test_orbits_rejects_non_invariant_domain():
    d14 = dihedral(7)
    with pytest.raises(ValueError):
        orbits(d14, [(0, 1)])


def test_is_transitive():
    assert is_transitive(PermGroup.generate([Permutation.rotation(6)]))
    flip = PermGroup.generate([Permutation.from_cycles(4, (0, 1))])
    assert not is_transitive(flip)
    assert not is_transitive(color_automorphisms(example_four()))


def test_fingerprint_klein_four():
    group = PermGroup.generate(
        [Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))]
    )
    fp = fingerprint(group)
    assert fp.order == 4
    assert fp.element_orders == ((1, 1), (2, 3))
    assert fp.abelian


def test_fingerprint_dihedral_ten():
    fp = fingerprint(dihedral(5))
    assert fp.order == 10
    assert fp.element_orders == ((1, 1), (2, 5), (5, 4))
    assert not fp.abelian


def test_fingerprint_square_diagonal_group():
    from graphs import square_21

    fp = fingerprint(color_automorphisms(square_21()))
    assert fp.order == 8
    assert not fp.abelian


def test_fingerprint_bound():
    with pytest.raises(ValueError):
        fingerprint(dihedral(7), element_bound=10)


def test_order_divides_factorial_and_orbit_stabilizer():
    rng = random.Random(7)
    for _ in range(20):
        degree = rng.randint(2, 6)
        gens = []
        for _ in range(rng.randint(1, 2)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Permutation(tuple(images)))
        group = PermGroup.generate(gens)
        assert math.factorial(degree) % group.order == 0
        for orbit in orbits(group):
            assert group.order % len(orbit) == 0
        if is_transitive(group):
            assert group.order % degree == 0


def test_generate_is_order_independent():
    a = Permutation.rotation(6)
    b = Permutation.reflection(6)
    first = PermGroup.generate([a, b])
    second = PermGroup.generate([b, a])
    assert first.elements == second.elements
