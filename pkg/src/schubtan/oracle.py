"""Brute-force reference implementations, used only by the test suite.

Every operation here re-derives its answer without the shortcuts of the
main modules: dominance is decided by exhaustively searching for a
non-negative integral coroot decomposition, dominant representatives are
found by reflection descent rather than closed-form sorting, curve bounds
scan their whole admissible range without early exit, weight sets are
grown by string closure instead of the dominance characterization, and
minima materialize their full candidate list first.  Agreement between
the two paths is therefore evidence, not tautology.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rootdata import DominanceError, Root, RootDatum
from .vectors import Vec, dot2
from .weylmodules import CartanElement, nonzero_in_characteristic

_reach_memo: dict[tuple[int, Vec], bool] = {}


def oracle_dominant_rep(datum: RootDatum, v: Vec) -> Vec:
    """Dominant representative by reflection descent (no sorting)."""
    guard = 0
    while True:
        for i, a in enumerate(datum.simple_roots):
            if dot2(v, a.vector) < 0:
                v = datum.simple_reflection(i, v)
                break
        else:
            return v
        guard += 1
        if guard > 10_000:
            raise AssertionError("reflection descent failed to terminate")


def _reachable(datum: RootDatum, v: Vec) -> bool:
    """Is v a non-negative integral sum of simple coroots?  Exhaustive search."""
    key = (id(datum), v)
    cached = _reach_memo.get(key)
    if cached is not None:
        return cached
    height4 = dot2(v, datum.two_rho)  # each coroot subtraction removes 8
    if all(a == 0 for a in v):
        result = True
    elif height4 <= 0:
        result = False
    else:
        result = any(
            _reachable(datum, v - a.coroot) for a in datum.simple_roots
        )
    _reach_memo[key] = result
    return result


def oracle_dominance(datum: RootDatum, nu: Vec, mu: Vec) -> bool:
    """Dominance by searching for a coroot decomposition of mu - nu."""
    if not (datum.is_dominant(nu) and datum.is_dominant(mu)):
        raise DominanceError("oracle_dominance requires dominant arguments")
    return _reachable(datum, mu - nu)


def oracle_k(datum: RootDatum, lam: Vec, mu: Vec, root: Root) -> int:
    """Curve bound by a full scan of [0, cap], asserting the set is an interval."""
    if not oracle_dominance(datum, lam, mu):
        raise DominanceError("oracle_k requires lam <= mu")
    cap4 = dot2(mu, datum.two_rho)
    cap = cap4 // 4 + 1
    admissible = [
        k
        for k in range(cap + 1)
        if oracle_dominance(
            datum, oracle_dominant_rep(datum, lam - k * root.coroot), mu
        )
    ]
    if admissible != list(range(len(admissible))):
        raise AssertionError(
            f"admissible set {admissible} is not an interval from 0; "
            "the saturation assumption is false"
        )
    return admissible[-1]


def oracle_weights(datum: RootDatum, high: Vec) -> frozenset[Vec]:
    """Weight set by string closure under root subtraction."""
    if datum.rank > 4 or any(abs(a) > 6 for a in high):
        raise ValueError("oracle_weights is guarded to rank <= 4, coordinates <= 3")
    if not datum.is_dominant(high) or not datum.in_weight_lattice(high):
        raise DominanceError(f"{high} is not a dominant weight")
    out = {high}
    stack = [high]
    while stack:
        v = stack.pop()
        for r in datum.roots:
            m4 = dot2(r.coroot, v)
            if m4 <= 0:
                continue
            if m4 % 4 != 0:
                raise AssertionError("<a^v, weight> must be integral")
            step = v
            for _ in range(m4 // 4):
                step = step - r.vector
                if step not in out:
                    out.add(step)
                    stack.append(step)
    return frozenset(out)


def oracle_l(
    datum: RootDatum,
    lam: Vec,
    mu: Vec,
    target: Root | CartanElement,
    search: Sequence[Vec],
    char: int = 0,
) -> int:
    """Pair/Cartan bound by materializing every candidate pair, then minimizing."""
    if not oracle_dominance(datum, lam, mu):
        raise DominanceError("oracle_l requires lam <= mu")
    values: list[Fraction] = []
    for w in search:
        ws = oracle_weights(datum, w)
        for wp in sorted(ws):
            if isinstance(target, Root):
                if (wp + target.vector) not in ws:
                    continue
            else:
                if not nonzero_in_characteristic(target.pair(wp), char):
                    continue
            values.append(mu.dot(w) - lam.dot(wp))
    if not values:
        raise ValueError("no pair in the search set pairs through the target")
    best = min(values)
    if best.denominator != 1:
        raise AssertionError("bound must be an integer")
    return int(best)
