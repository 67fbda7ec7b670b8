import math
from fractions import Fraction

import pytest

from schubtan import ClassicalType, DominanceError, Vec, build_root_datum
from schubtan.oracle import oracle_dominant_rep

from gridutil import GRID_TYPES


def test_rank_bounds():
    for series, lo in [("A", 1), ("B", 2), ("C", 2), ("D", 4)]:
        ClassicalType(series, lo)
        with pytest.raises(ValueError, match=f">= {lo}"):
            ClassicalType(series, lo - 1)
    with pytest.raises(ValueError):
        ClassicalType("E", 6)


def test_b3_tables():
    d = build_root_datum("B", 3)
    assert d.simple_roots[2].vector == Vec.make([0, 0, 1])
    assert d.fundamental_weights[2] == Vec.make(["1/2", "1/2", "1/2"])
    assert d.simple_roots[2].coroot == Vec.make([0, 0, 2])
    assert len(d.roots) == 18


def test_a2_is_gl3():
    d = build_root_datum("A", 2)
    assert d.dim == 3
    assert [a.vector for a in d.simple_roots] == [
        Vec.make([1, -1, 0]),
        Vec.make([0, 1, -1]),
    ]
    # all fundamental weights, including the determinant, are minuscule
    assert all(d.minuscule_mask)
    assert d.central_weight == Vec.make([1, 1, 1])


def test_d4_tables():
    d = build_root_datum("D", 4)
    assert len(d.roots) == 24
    assert d.two_rho == Vec.make([6, 4, 2, 0])
    assert d.fundamental_weights[2] == Vec.make(["1/2", "1/2", "1/2", "-1/2"])
    assert d.fundamental_weights[3] == Vec.make(["1/2", "1/2", "1/2", "1/2"])
    # triple node: a2 is adjacent to a1, a3, a4
    assert d.dynkin_adjacency[1] == (0, 2, 3)


def test_c_coroots():
    d = build_root_datum("C", 2)
    long_root = d.root_by_vector(Vec.make([2, 0]))
    assert long_root.coroot == Vec.make([1, 0])
    short_root = d.root_by_vector(Vec.make([1, -1]))
    assert short_root.coroot == Vec.make([1, -1])


def test_pairing_examples():
    d = build_root_datum("D", 4)
    assert d.pairing(Vec.make([3, 3, 3, 0]), Vec.make([1, 0, 0, 0])) == 3
    assert d.pairing(Vec.zero(4), Vec.make([5, 5, 5, 5])) == 0
    with pytest.raises(ValueError):
        Vec.make([1, 0]).dot(Vec.make([1, 0, 0]))


def test_two_rho_is_sum_of_positive_roots():
    for series, rank in GRID_TYPES:
        d = build_root_datum(series, rank)
        acc = Vec.zero(d.dim)
        for r in d.positive_roots():
            acc = acc + r.vector
        assert acc == d.two_rho


def test_dominant_rep_type_a():
    d = build_root_datum("A", 1)
    assert d.dominant_rep(Vec.make([0, 1])) == Vec.make([1, 0])
    assert d.dominant_rep(Vec.make([-1, 3])) == Vec.make([3, -1])


def test_dominant_rep_type_d_sign_rule():
    d = build_root_datum("D", 4)
    assert d.dominant_rep(Vec.make([1, 1, 1, -1])) == Vec.make([1, 1, 1, -1])
    assert d.dominant_rep(Vec.make([-1, 1, 1, 1])) == Vec.make([1, 1, 1, -1])
    assert d.dominant_rep(Vec.make([-1, 1, 0, 1])) == Vec.make([1, 1, 1, 0])
    assert d.dominant_rep(Vec.make([1, 1, 2, -2])) == Vec.make([2, 2, 1, -1])


def test_dominant_rep_matches_reflection_descent():
    # closed form vs the independent BFS-style descent, across types
    cases = [
        ("A", 2, [2, -1, 3]),
        ("B", 3, [-2, 0, 1]),
        ("C", 2, ["-1/2", "3/2"]),
        ("D", 4, [-1, -2, 3, "0"]),
        ("D", 4, ["1/2", "-3/2", "5/2", "-1/2"]),
    ]
    for series, rank, coords in cases:
        d = build_root_datum(series, rank)
        v = Vec.make(coords)
        assert d.dominant_rep(v) == oracle_dominant_rep(d, v)


def test_simple_reflection_examples():
    gl2 = build_root_datum("A", 1)
    assert gl2.simple_reflection(0, Vec.make([1, 0])) == Vec.make([0, 1])
    d4 = build_root_datum("D", 4)
    w3 = d4.fundamental_weights[2]
    # w3 pairs to 0 with a4 = e3 + e4, so s4 fixes it; s3 moves it
    assert d4.simple_reflection(3, w3) == w3
    assert d4.simple_reflection(2, w3) == Vec.make(["1/2", "1/2", "-1/2", "1/2"])
    for i in range(4):
        v = Vec.make([2, 1, 1, 0])
        assert d4.simple_reflection(i, d4.simple_reflection(i, v)) == v


def test_weyl_orbit_examples():
    gl2 = build_root_datum("A", 1)
    assert gl2.weyl_orbit(Vec.make([1, 0])) == {Vec.make([1, 0]), Vec.make([0, 1])}
    assert gl2.weyl_orbit(Vec.make([1, 1])) == {Vec.make([1, 1])}
    gl4 = build_root_datum("A", 3)
    assert len(gl4.weyl_orbit(Vec.make([1, 1, 0, 0]))) == 6


def test_weyl_orbit_size_divides_group_order():
    orders = {
        "A": lambda n, dim: math.factorial(dim),
        "B": lambda n, dim: 2**n * math.factorial(n),
        "C": lambda n, dim: 2**n * math.factorial(n),
        "D": lambda n, dim: 2 ** (n - 1) * math.factorial(n),
    }
    for series, rank in [("A", 2), ("B", 2), ("C", 3), ("D", 4)]:
        d = build_root_datum(series, rank)
        order = orders[series](rank, d.dim)
        for w in d.fundamental_weights:
            assert order % len(d.weyl_orbit(w)) == 0


def test_dominance_examples():
    gl2 = build_root_datum("A", 1)
    assert gl2.dominance_leq(Vec.make([1, 1]), Vec.make([2, 0]))
    d4 = build_root_datum("D", 4)
    assert d4.dominance_leq(Vec.make([1, 0, 0, 0]), Vec.make([3, 3, 3, 0]))
    assert not d4.dominance_leq(Vec.make([1, 1, 1, -1]), Vec.make([2, 0, 0, 0]))
    with pytest.raises(DominanceError):
        d4.dominance_leq(Vec.make([0, 1, 0, 0]), Vec.make([2, 0, 0, 0]))


def test_dominance_coefficient_values():
    d4 = build_root_datum("D", 4)
    diff = Vec.make([3, 3, 3, 0]) - Vec.make([1, 0, 0, 0])
    m = d4.coroot_coefficients(diff)
    assert m == [2, 5, 4, 4]


def test_dominance_is_a_partial_order():
    d = build_root_datum("B", 2)
    mus = [Vec.make([3, 0]), Vec.make([2, 1]), Vec.make([1, 0]), Vec.make([1, 1])]
    for a in mus:
        assert d.dominance_leq(a, a)
        for b in mus:
            if d.dominance_leq(a, b) and d.dominance_leq(b, a):
                assert a == b
            for c in mus:
                if d.dominance_leq(a, b) and d.dominance_leq(b, c):
                    assert d.dominance_leq(a, c)


def test_coroot_lattice_examples():
    b3 = build_root_datum("B", 3)
    assert b3.in_coroot_lattice(Vec.make([2, 0, 0]))
    assert not b3.in_coroot_lattice(Vec.make([1, 0, 0]))
    d4 = build_root_datum("D", 4)
    assert not d4.in_coroot_lattice(Vec.make([1, 0, 0, 0]))
    assert d4.in_coroot_lattice(Vec.zero(4))
    # GL model: integral pairings are not enough, the total must vanish
    gl2 = build_root_datum("A", 1)
    assert not gl2.in_coroot_lattice(Vec.make([1, 0]))
    assert gl2.in_coroot_lattice(Vec.make([1, -1]))


def test_delta_pairing_invariant():
    for series, rank in GRID_TYPES:
        d = build_root_datum(series, rank)
        for i, a in enumerate(d.simple_roots):
            for j, w in enumerate(d.fundamental_weights):
                assert d.pairing(a.coroot, w) == (1 if i == j else 0)


def test_minuscule_lists_match_the_classical_ones():
    assert all(build_root_datum("A", 3).minuscule_mask)
    assert build_root_datum("B", 3).minuscule_mask == (False, False, True)
    assert build_root_datum("C", 3).minuscule_mask == (True, False, False)
    assert build_root_datum("D", 4).minuscule_mask == (True, False, True, True)
