"""Cartan matrices, Coxeter exponents, reflection matrices, spherical data."""

import random

import pytest

from borelorbits import CartanSpec, IntegerMatrix, SphericalDatum


def test_classical_cartan_matrices():
    assert CartanSpec.from_label("A1").matrix == ((2,),)
    assert CartanSpec.from_label("A2").matrix == ((2, -1), (-1, 2))
    assert CartanSpec.from_label("B2").matrix == ((2, -1), (-2, 2))
    assert CartanSpec.from_label("C3").matrix == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert CartanSpec.from_label("D2").matrix == ((2, 0), (0, 2))
    assert CartanSpec.from_label("G2").matrix == ((2, -3), (-1, 2))
    d4 = CartanSpec.from_label("D4").matrix
    assert d4[2][3] == 0 and d4[1][3] == -1 and d4[1][2] == -1


def test_cartan_validation():
    with pytest.raises(ValueError):
        CartanSpec.from_matrix([[2, -1]])  # not square
    with pytest.raises(ValueError):
        CartanSpec.from_matrix([[1]])  # diagonal must be 2
    with pytest.raises(ValueError):
        CartanSpec.from_matrix([[2, 1], [-1, 2]])  # positive off-diagonal
    with pytest.raises(ValueError):
        CartanSpec.from_matrix([[2, -1], [0, 2]])  # asymmetric zero
    with pytest.raises(ValueError):
        CartanSpec.from_matrix([[2, -2], [-2, 2]])  # product 4 (affine)
    with pytest.raises(ValueError):
        CartanSpec.from_label("B1")
    with pytest.raises(ValueError):
        CartanSpec.from_label("G3")
    with pytest.raises(ValueError):
        CartanSpec.from_label("X2")


def test_coxeter_exponents():
    a2 = CartanSpec.from_label("A2")
    assert a2.coxeter_exponent(1, 2) == 3
    a3 = CartanSpec.from_label("A3")
    assert a3.coxeter_exponent(1, 3) == 2
    assert CartanSpec.from_label("B2").coxeter_exponent(1, 2) == 4
    assert CartanSpec.from_label("G2").coxeter_exponent(1, 2) == 6
    with pytest.raises(ValueError):
        a2.coxeter_exponent(1, 1)
    with pytest.raises(ValueError):
        a2.coxeter_exponent(0, 1)


def test_reflection_matrix_rank_one():
    assert CartanSpec.from_label("A1").reflection_matrix(1).entries == ((-1,),)


def test_reflection_matrix_a2():
    # s_1 sends alpha_1 to -alpha_1 and alpha_2 to alpha_1 + alpha_2.
    s1 = CartanSpec.from_label("A2").reflection_matrix(1)
    assert s1.entries == ((-1, 1), (0, 1))


@pytest.mark.parametrize("label", ["A1", "A3", "B2", "B4", "C3", "D2", "D4", "G2"])
def test_reflections_are_involutions(label):
    cartan = CartanSpec.from_label(label)
    identity = IntegerMatrix.identity(cartan.rank)
    for i in range(1, cartan.rank + 1):
        s = cartan.reflection_matrix(i)
        assert (s @ s).entries == identity.entries


@pytest.mark.parametrize("label", ["A2", "A4", "B2", "B3", "C4", "D4", "G2"])
def test_product_order_matches_coxeter_exponent(label):
    cartan = CartanSpec.from_label(label)
    identity = IntegerMatrix.identity(cartan.rank).entries
    for i in range(1, cartan.rank + 1):
        for j in range(i + 1, cartan.rank + 1):
            m = cartan.coxeter_exponent(i, j)
            product = cartan.reflection_matrix(i) @ cartan.reflection_matrix(j)
            power = IntegerMatrix.identity(cartan.rank)
            order = None
            for k in range(1, 7):
                power = power @ product
                if power.entries == identity:
                    order = k
                    break
            assert order == m, (label, i, j)


def _unit(rank, i, scale=1):
    return tuple(scale if j == i - 1 else 0 for j in range(rank))


def test_very_little_generators_doubled_simple_roots():
    # quadratic-form style: doubled simple roots 2*alpha_1 .. 2*alpha_r
    rank = 4
    datum = SphericalDatum(
        cartan=CartanSpec.from_type("A", rank),
        spherical_roots=tuple(_unit(rank, i, 2) for i in (1, 2, 3)),
        weight_sublattice=IntegerMatrix.identity(rank),
    )
    assert datum.very_little_generators() == frozenset({1, 2, 3})
    assert datum.has_adjacent_equal_length_simple_spherical_roots()


def test_very_little_generators_short_root_only():
    n = 4
    cartan = CartanSpec.from_type("B", n)
    roots = tuple(
        tuple(1 if j in (i - 1, i) else 0 for j in range(n)) for i in range(1, n)
    ) + (_unit(n, n),)
    datum = SphericalDatum(
        cartan=cartan,
        spherical_roots=roots,
        weight_sublattice=IntegerMatrix.identity(n),
    )
    assert datum.very_little_generators() == frozenset({n})
    assert not datum.has_adjacent_equal_length_simple_spherical_roots()


def test_very_little_generators_empty():
    datum = SphericalDatum(
        cartan=CartanSpec.from_label("A2"),
        spherical_roots=((1, 1),),
        weight_sublattice=IntegerMatrix.identity(2),
    )
    assert datum.very_little_generators() == frozenset()
    assert not datum.has_adjacent_equal_length_simple_spherical_roots()


def test_adjacent_equal_length_cases():
    full_a2 = SphericalDatum(
        cartan=CartanSpec.from_label("A2"),
        spherical_roots=((1, 0), (0, 1)),
        weight_sublattice=IntegerMatrix.identity(2),
    )
    assert full_a2.has_adjacent_equal_length_simple_spherical_roots()

    full_g2 = SphericalDatum(
        cartan=CartanSpec.from_label("G2"),
        spherical_roots=((1, 0), (0, 1)),
        weight_sublattice=IntegerMatrix.identity(2),
    )
    assert not full_g2.has_adjacent_equal_length_simple_spherical_roots()

    full_b2 = SphericalDatum(
        cartan=CartanSpec.from_label("B2"),
        spherical_roots=((1, 0), (0, 1)),
        weight_sublattice=IntegerMatrix.identity(2),
    )
    assert not full_b2.has_adjacent_equal_length_simple_spherical_roots()

    orthogonal = SphericalDatum(
        cartan=CartanSpec.from_label("D2"),
        spherical_roots=((1, 0), (0, 1)),
        weight_sublattice=IntegerMatrix.identity(2),
    )
    assert not orthogonal.has_adjacent_equal_length_simple_spherical_roots()


def test_generators_monotone_under_adding_roots():
    # Adding a spherical root never removes a generator.
    rng = random.Random(2024)
    cartan = CartanSpec.from_type("A", 4)
    candidates = [_unit(4, i) for i in (1, 2, 3, 4)]
    candidates += [_unit(4, i, 2) for i in (1, 2, 3, 4)]
    candidates += [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 1, 0)]
    for _ in range(60):
        chosen = []
        for v in rng.sample(candidates, rng.randint(1, 4)):
            trial = chosen + [v]
            if IntegerMatrix.from_rows(trial).rank() == len(trial):
                chosen = trial
        if len(chosen) < 2:
            continue
        small = SphericalDatum(
            cartan=cartan,
            spherical_roots=tuple(chosen[:-1]),
            weight_sublattice=IntegerMatrix.identity(4),
        )
        large = SphericalDatum(
            cartan=cartan,
            spherical_roots=tuple(chosen),
            weight_sublattice=IntegerMatrix.identity(4),
        )
        assert small.very_little_generators() <= large.very_little_generators()


def test_spherical_datum_validation():
    cartan = CartanSpec.from_label("A2")
    with pytest.raises(ValueError, match="length"):
        SphericalDatum(cartan, ((1,),), IntegerMatrix.identity(2))
    with pytest.raises(ValueError, match="independent"):
        SphericalDatum(cartan, ((1, 0), (2, 0)), IntegerMatrix.identity(2))
    with pytest.raises(ValueError, match="row rank"):
        SphericalDatum(cartan, ((1, 0),), IntegerMatrix.from_rows([[1, 2], [2, 4]]))


def test_cartan_json_round_trip():
    labelled = CartanSpec.from_label("B4")
    assert labelled.to_json() == {"type": "B", "rank": 4}
    assert CartanSpec.from_json(labelled.to_json()) == labelled

    explicit = CartanSpec.from_matrix([[2, -1], [-1, 2]])
    assert explicit.to_json() == {"cartan": [[2, -1], [-1, 2]]}
    assert CartanSpec.from_json(explicit.to_json()) == explicit

    with pytest.raises(ValueError):
        CartanSpec.from_json({"rank": 2})


def test_spherical_datum_json_round_trip():
    datum = SphericalDatum(
        cartan=CartanSpec.from_label("B3"),
        spherical_roots=((1, 1, 0), (0, 0, 1)),
        weight_sublattice=IntegerMatrix.identity(3),
    )
    again = SphericalDatum.from_json(datum.to_json())
    assert again.spherical_roots == datum.spherical_roots
    assert again.cartan == datum.cartan
    assert again.weight_sublattice.entries == datum.weight_sublattice.entries
