from fractions import Fraction

import pytest

from schubtan import (
    CartanElement,
    DominanceError,
    Vec,
    build_root_datum,
    is_module_weight,
    minuscule_weights,
    root_pair_in_module,
    weights_of,
)
from schubtan.weylmodules import (
    cartan_pair_in_module,
    dominant_weights_below,
    nonzero_in_characteristic,
)


def test_weights_of_standard_reps():
    gl3 = build_root_datum("A", 2)
    assert len(weights_of(gl3, Vec.make([1, 0, 0]))) == 3
    gl2 = build_root_datum("A", 1)
    assert weights_of(gl2, Vec.make([2, 0])) == {
        Vec.make([2, 0]),
        Vec.make([1, 1]),
        Vec.make([0, 2]),
    }
    assert weights_of(gl2, Vec.make([1, 1])) == {Vec.make([1, 1])}


def test_is_weight_examples():
    gl2 = build_root_datum("A", 1)
    assert is_module_weight(gl2, Vec.make([2, 0]), Vec.make([1, 1]))
    assert is_module_weight(gl2, Vec.make([1, 0]), Vec.make([0, 1]))
    assert not is_module_weight(gl2, Vec.make([2, 0]), Vec.make([3, -1]))
    with pytest.raises(DominanceError):
        is_module_weight(gl2, Vec.make([0, 1]), Vec.make([1, 0]))


def test_weights_of_non_minuscule_spin_adjoint():
    b2 = build_root_datum("B", 2)
    adjoint = weights_of(b2, Vec.make([1, 1]))  # highest root e1 + e2
    assert Vec.zero(2) in adjoint
    assert len(adjoint) == 9  # 8 roots... the 4 long roots + 4 short? no: orbit(1,1)=4, orbit(1,0)=4, zero
    c2 = build_root_datum("C", 2)
    # V(2e1) is the adjoint of type C2: orbit(2,0) + orbit(1,1) + 0
    adj = weights_of(c2, Vec.make([2, 0]))
    assert len(adj) == 9


def test_root_pair_membership():
    gl2 = build_root_datum("A", 1)
    a = gl2.root_by_vector(Vec.make([1, -1]))
    w1 = Vec.make([1, 0])
    assert root_pair_in_module(gl2, w1, Vec.make([0, 1]), a)
    assert not root_pair_in_module(gl2, w1, Vec.make([1, 0]), a)
    det = Vec.make([1, 1])
    assert not root_pair_in_module(gl2, det, det, a)
    assert not root_pair_in_module(gl2, det, det, gl2.negative(a))


def test_root_pair_duality():
    d4 = build_root_datum("D", 4)
    w = d4.fundamental_weights[1]
    ws = weights_of(d4, w)
    for r in d4.roots[:8]:
        for wt in list(ws)[:10]:
            lhs = root_pair_in_module(d4, w, wt, r)
            rhs = root_pair_in_module(d4, w, wt + r.vector, d4.negative(r))
            assert lhs == rhs


def test_minuscule_weight_sets_are_orbits_with_short_strings():
    for series, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4)]:
        d = build_root_datum(series, rank)
        for w in minuscule_weights(d):
            ws = weights_of(d, w)
            assert ws == d.weyl_orbit(w)
            for wt in ws:
                for r in d.roots:
                    assert not (
                        wt + r.vector in ws and wt + 2 * r.vector in ws
                    ), "string of length three in a minuscule module"


def test_weights_are_weyl_stable():
    b2 = build_root_datum("B", 2)
    ws = weights_of(b2, Vec.make([1, 1]))
    for wt in ws:
        assert b2.dominant_rep(wt) in ws
        for i in range(2):
            assert b2.simple_reflection(i, wt) in ws


def test_dominant_weights_below():
    gl2 = build_root_datum("A", 1)
    assert set(dominant_weights_below(gl2, Vec.make([2, 0]))) == {
        Vec.make([2, 0]),
        Vec.make([1, 1]),
    }


def test_minuscule_fundamental_lists():
    assert len(minuscule_weights(build_root_datum("A", 3))) == 4
    b = build_root_datum("B", 4)
    assert minuscule_weights(b) == (b.fundamental_weights[-1],)
    c = build_root_datum("C", 4)
    assert minuscule_weights(c) == (c.fundamental_weights[0],)
    d = build_root_datum("D", 4)
    assert minuscule_weights(d) == (
        d.fundamental_weights[0],
        d.fundamental_weights[2],
        d.fundamental_weights[3],
    )


def test_cartan_pair_examples():
    gl2 = build_root_datum("A", 1)
    central = CartanElement.from_coords([1, 1])
    assert cartan_pair_in_module(gl2, Vec.make([1, 0]), Vec.make([1, 0]), central)
    coroot = CartanElement.from_coords([1, -1])
    assert not cartan_pair_in_module(gl2, Vec.make([1, 1]), Vec.make([1, 1]), coroot)
    d4 = build_root_datum("D", 4)
    h = CartanElement.from_simple_coefficients(d4, {2: 1, 3: -1})
    assert h.coords == (0, 0, 0, -2)
    assert not cartan_pair_in_module(d4, Vec.make([1, 0, 0, 0]), Vec.make([1, 0, 0, 0]), h)
    assert cartan_pair_in_module(d4, Vec.make([1, 0, 0, 0]), Vec.make([0, 0, 0, 1]), h)


def test_cartan_element_coefficient_round_trip():
    d4 = build_root_datum("D", 4)
    h = CartanElement.from_simple_coefficients(d4, [1, Fraction(1, 2), 0, -2])
    assert h.simple_coefficients(d4) == (1, Fraction(1, 2), 0, -2)
    gl2 = build_root_datum("A", 1)
    assert CartanElement.from_coords([1, 1]).simple_coefficients(gl2) is None


def test_characteristic_handling():
    assert nonzero_in_characteristic(Fraction(3), 0)
    assert not nonzero_in_characteristic(Fraction(3), 3)
    assert nonzero_in_characteristic(Fraction(3, 2), 5)
    assert not nonzero_in_characteristic(Fraction(5, 2), 5)
    with pytest.raises(ValueError):
        nonzero_in_characteristic(Fraction(1, 3), 3)
    with pytest.raises(ValueError):
        nonzero_in_characteristic(Fraction(1), 2)
    with pytest.raises(ValueError):
        nonzero_in_characteristic(Fraction(1), 9)
