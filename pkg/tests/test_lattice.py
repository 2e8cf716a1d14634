"""Lattice layer: Smith normal form, elementary divisors, orbit counting."""

import itertools
import math
import random

import pytest

from borelorbits import (
    DivisorList,
    IntegerMatrix,
    count_open_real_orbits,
    elementary_divisors,
    sign_coordinates,
    smith_normal_form,
)


def naive_det(rows):
    """Cofactor-expansion determinant, independent of the library."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * naive_det(minor)
    return total


def minor_gcds(matrix: IntegerMatrix):
    """gcd of all k x k minors, for each k up to min(rows, cols)."""
    rows, cols = matrix.rows, matrix.cols
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                sub = [[matrix[i, j] for j in ci] for i in ri]
                g = math.gcd(g, naive_det(sub))
        out.append(g)
    return out


def check_decomposition(matrix: IntegerMatrix):
    snf = smith_normal_form(matrix)
    assert (snf.u @ matrix @ snf.v).entries == snf.diagonal_matrix().entries
    assert snf.u.det() in (1, -1)
    assert snf.v.det() in (1, -1)
    d = list(snf.d)
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert b == 0 or (a != 0 and b % a == 0) or (a == 0 and b == 0)
    # d_1 ... d_k equals the gcd of all k x k minors
    gcds = minor_gcds(matrix)
    prod = 1
    for k, g in enumerate(gcds, start=1):
        prod = prod * d[k - 1] if k <= len(d) else 0
        assert prod == g, f"minor gcd mismatch at k={k}"
    return snf


def test_snf_identity():
    snf = smith_normal_form(IntegerMatrix.identity(2))
    assert list(snf.d) == [1, 1]
    assert snf.u.entries == IntegerMatrix.identity(2).entries
    assert snf.v.entries == IntegerMatrix.identity(2).entries


def test_snf_reorders_divisibility_chain():
    snf = smith_normal_form(IntegerMatrix.from_rows([[4, 0], [0, 2]]))
    assert list(snf.d) == [2, 4]


def test_snf_generic_2x2():
    # Oracle: gcd of 1x1 minors is 1, the single 2x2 minor is -2, so the
    # products d_1 = 1 and d_1*d_2 = 2 force d = (1, 2).
    m = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    assert minor_gcds(m) == [1, 2]
    snf = check_decomposition(m)
    assert list(snf.d) == [1, 2]


def test_snf_rejects_empty():
    with pytest.raises(ValueError):
        smith_normal_form(IntegerMatrix.from_rows([]))


def test_snf_rectangular_and_rank_deficient():
    wide = IntegerMatrix.from_rows([[2, 4, 6]])
    snf = check_decomposition(wide)
    assert list(snf.d) == [2]

    deficient = IntegerMatrix.from_rows([[1, 2], [2, 4], [3, 6]])
    snf = check_decomposition(deficient)
    assert list(snf.d) == [1, 0]


def test_snf_is_deterministic():
    m = IntegerMatrix.from_rows([[6, 4, 5], [3, 0, -2], [7, 1, 1]])
    first = smith_normal_form(m)
    second = smith_normal_form(m)
    assert first.u.entries == second.u.entries
    assert first.v.entries == second.v.entries
    assert list(first.d) == list(second.d)


def test_snf_random_property_suite():
    rng = random.Random(411)
    for _ in range(200):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = IntegerMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        check_decomposition(m)


def test_elementary_divisors_doubled_basis():
    # rows {2e_1, ..., 2e_r} inside rank n
    m = IntegerMatrix.from_rows([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0]])
    assert list(elementary_divisors(m)) == [2, 2, 2]


def test_elementary_divisors_full_lattice():
    assert list(elementary_divisors(IntegerMatrix.identity(4))) == [1, 1, 1, 1]


def test_elementary_divisors_mixed():
    # Oracle: gcd of 1x1 minors is gcd(2,3) = 1; the 2x2 minor is 6.
    m = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    assert minor_gcds(m) == [1, 6]
    assert list(elementary_divisors(m)) == [1, 6]


def test_elementary_divisors_rejects_rank_deficient():
    with pytest.raises(ValueError, match="rank"):
        elementary_divisors(IntegerMatrix.from_rows([[1, 2], [2, 4]]))


def test_divisor_product_is_index():
    # For square full-rank input the index of the sublattice is |det|.
    rng = random.Random(765)
    found = 0
    while found < 50:
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        det = naive_det(rows)
        if det == 0:
            continue
        found += 1
        divisors = elementary_divisors(IntegerMatrix.from_rows(rows))
        prod = 1
        for d in divisors:
            prod *= d
        assert prod == abs(det)


def test_count_open_real_orbits_examples():
    assert count_open_real_orbits([2, 2, 1, 1]) == 4
    assert count_open_real_orbits([1, 1, 1]) == 1
    assert count_open_real_orbits([4, 1, 1, 1, 1]) == 2


def test_sign_coordinates_examples():
    assert sign_coordinates([2, 2, 1, 1]) == (1, 2)
    assert sign_coordinates([1, 1]) == ()
    assert sign_coordinates([4, 1, 1]) == (1,)


def test_divisors_must_be_positive():
    with pytest.raises(ValueError):
        count_open_real_orbits([2, 0])
    with pytest.raises(ValueError):
        sign_coordinates([-1])


def brute_force_orbit_count(divisors):
    """Orbits of sign flips at odd-divisor coordinates acting on {-1,+1}^r."""
    r = len(divisors)
    odd = [i for i, m in enumerate(divisors) if m % 2 == 1]
    points = list(itertools.product((1, -1), repeat=r))
    seen = set()
    classes = 0
    for start in points:
        if start in seen:
            continue
        classes += 1
        block = {start}
        queue = [start]
        while queue:
            current = queue.pop()
            for i in odd:
                flipped = list(current)
                flipped[i] = -flipped[i]
                flipped = tuple(flipped)
                if flipped not in block:
                    block.add(flipped)
                    queue.append(flipped)
        seen |= block
    return classes


def test_count_matches_brute_force_orbits():
    rng = random.Random(90125)
    for _ in range(40):
        r = rng.randint(1, 7)
        divisors = [rng.choice([1, 2, 3, 4, 6]) for _ in range(r)]
        assert count_open_real_orbits(divisors) == brute_force_orbit_count(divisors)


def test_matrix_json_round_trip():
    m = IntegerMatrix.from_rows([[1, -2, 3], [0, 5, 10**30]])
    assert IntegerMatrix.from_json(m.to_json()).entries == m.entries


def test_matrix_json_rejects_bad_shapes():
    with pytest.raises(ValueError):
        IntegerMatrix.from_json({"rows": 1, "cols": 2, "entries": [[1, 2], [3, 4]]})
    with pytest.raises(ValueError):
        IntegerMatrix.from_json({"entries": [[1, 2], [3]]})
    with pytest.raises(ValueError):
        IntegerMatrix.from_rows([[1.5]])
    with pytest.raises(ValueError):
        IntegerMatrix.from_rows([[True]])


def test_divisor_list_chain_enforced():
    DivisorList((1, 2, 4, 0, 0))
    with pytest.raises(ValueError):
        DivisorList((2, 3))
    with pytest.raises(ValueError):
        DivisorList((0, 2))
    with pytest.raises(ValueError):
        DivisorList((-1,))


def test_snf_handles_large_integers():
    big = 10**40
    m = IntegerMatrix.from_rows([[big, 1], [0, big]])
    snf = smith_normal_form(m)
    assert (snf.u @ m @ snf.v).entries == snf.diagonal_matrix().entries
    prod = 1
    for d in snf.d:
        prod *= d
    assert prod == big * big
