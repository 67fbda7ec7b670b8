"""Tangent-space exponent bounds at torus-fixed points.

For dominant coweights lam <= mu (dominance order) and a root a, three
quantities bound the exponents of tangent directions of the Schubert
variety attached to mu at the fixed point of lam:

* the curve bound ``curve_bound``: the largest k such that the dominant
  representative of lam - k a^v stays below mu; it counts tangent
  directions swept out by root-group curves;
* the pair bound ``fm_bound``: the minimum of <mu, w> - <lam, w'> over
  pairs (w, w') where w' and w' + a are both weights of the Weyl module
  with highest weight w, restricted to a finite search set of dominant
  weights; an outer bound on the true exponent set;
* the Cartan bound ``cartan_bound``: the analogous minimum over pairs
  where the differential of w' does not kill a Cartan direction H.

The curve bound never exceeds the pair bound.  Exponent sets package the
per-root intervals; the Cartan profile collects the curve bounds of the
negative simple roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .rootdata import DominanceError, Root, RootDatum
from .vectors import Vec, dot2
from .weylmodules import (
    CartanElement,
    is_minuscule,
    weights_of,
)


class NoWeightPairError(ValueError):
    """No (w, w') pair in the search set pairs through the given direction."""


# -- search sets ---------------------------------------------------------------


def _central_normal(datum: RootDatum, v: Vec) -> Vec:
    # Bounds only depend on weights modulo the central character of the GL
    # model, so search-set identities are checked after centering.
    if datum.series != "A":
        return v
    m = min(v)
    return Vec(a - m for a in v)


def duality_closed(datum: RootDatum, weights: Sequence[Vec]) -> bool:
    """Closure under w -> -w0(w), modulo the center in the GL model."""
    pool = {_central_normal(datum, w) for w in weights}
    return all(
        _central_normal(datum, datum.dominant_rep(-w)) in pool for w in weights
    )


def default_search(datum: RootDatum) -> tuple[Vec, ...]:
    """All fundamental weights (GL model: including the determinant)."""
    return datum.fundamental_weights


def search_from_indices(
    datum: RootDatum, indices: Sequence[int] | None = None
) -> tuple[Vec, ...]:
    """Search set from 1-based fundamental-weight indices.

    The result is closed under duality: for the GL model the index
    complement i -> m - i (always adding the determinant weight m), for
    odd-rank D the swap of the two half-spin weights.
    """
    m = len(datum.fundamental_weights)
    if indices is None:
        idx = set(range(1, m + 1))
    else:
        idx = set(indices)
        for i in idx:
            if not 1 <= i <= m:
                raise ValueError(
                    f"fundamental-weight index {i} out of range 1..{m} for {datum.label}"
                )
    if datum.series == "A":
        idx |= {m - i for i in idx if 1 <= m - i}
        idx.add(m)
    elif datum.series == "D" and datum.rank % 2 == 1:
        if (datum.rank - 1) in idx or datum.rank in idx:
            idx |= {datum.rank - 1, datum.rank}
    return tuple(datum.fundamental_weights[i - 1] for i in sorted(idx))


def _validate_search(datum: RootDatum, search: Sequence[Vec]) -> tuple[Vec, ...]:
    search = tuple(search)
    if not search:
        raise ValueError("search set must be nonempty")
    for w in search:
        if not datum.in_weight_lattice(w) or not datum.is_dominant(w):
            raise DominanceError(f"search weight {w} is not a dominant weight")
    if not duality_closed(datum, search):
        raise ValueError("search set is not closed under the duality w -> -w0(w)")
    return search


# -- preconditions ---------------------------------------------------------------


def _require_dominant_pair(datum: RootDatum, lam: Vec, mu: Vec) -> None:
    for name, v in (("lambda", lam), ("mu", mu)):
        if not datum.in_coweight_lattice(v):
            raise DominanceError(f"{name} = {v} is not a coweight of {datum.label}")
    if not datum.dominance_leq(lam, mu):
        raise DominanceError(f"lambda = {lam} is not below mu = {mu}")


# -- curve bound ---------------------------------------------------------------


def curve_bound(datum: RootDatum, lam: Vec, mu: Vec, root: Root) -> int:
    """max{k : (lam - k a^v)_dom <= mu}.

    The admissible k >= 0 form an interval containing 0, so an upward scan
    stopping at the first failure is exact; a cap derived from <mu, 2rho>
    guards against a broken invariant.
    """
    _require_dominant_pair(datum, lam, mu)
    cap = mu.dot(datum.two_rho)
    if cap.denominator != 1:
        raise AssertionError("pairing with 2rho must be integral")
    cap = int(cap) + 1
    k = 0
    while k <= cap:
        candidate = datum.dominant_rep(lam - (k + 1) * root.coroot)
        if datum.dominance_leq(candidate, mu):
            k += 1
        else:
            return k
    raise AssertionError(
        f"curve bound scan exceeded the cap {cap}; interval invariant broken"
    )


# -- pair bounds ---------------------------------------------------------------


def fm_bound(
    datum: RootDatum,
    lam: Vec,
    mu: Vec,
    root: Root,
    search: Sequence[Vec] | None = None,
) -> int:
    """Restricted minimum of <mu, w> - <lam, w'> over root pairs.

    Pairs range over w in `search` and weights w' of the Weyl module of w
    with w' + a again a weight.  The restricted minimum is an upper bound
    for the fully general one; for the per-type selector sets the two agree
    and both equal the curve bound.
    """
    _require_dominant_pair(datum, lam, mu)
    search = _validate_search(datum, search if search is not None else default_search(datum))
    a = root.vector
    best4: int | None = None
    for w in search:
        ws = weights_of(datum, w)
        base4 = dot2(mu, w)
        for wp in ws:
            if wp + a in ws:
                val4 = base4 - dot2(lam, wp)
                if best4 is None or val4 < best4:
                    best4 = val4
    if best4 is None:
        raise NoWeightPairError(
            f"no pair in the search set pairs through the root {root.vector}"
        )
    if best4 % 4 != 0:
        raise AssertionError("pair bound must be an integer")
    return best4 // 4


def _valuation(n: int, p: int) -> int:
    if n == 0:
        return 1 << 30
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def cartan_bound(
    datum: RootDatum,
    lam: Vec,
    mu: Vec,
    h: CartanElement,
    search: Sequence[Vec] | None = None,
    char: int = 0,
) -> int:
    """Restricted minimum of <mu, w> - <lam, w'> over Cartan pairs for H.

    A weight w' pairs with H when d(w')(H) is nonzero (exactly in
    characteristic 0; after reduction mod p otherwise).  Zero is a legal
    value: central directions of the GL model pair with the determinant
    weight, which every search set of the GL model contains.
    """
    if h.is_zero():
        raise ValueError("the Cartan direction H must be nonzero")
    _require_dominant_pair(datum, lam, mu)
    search = tuple(search) if search is not None else default_search(datum)
    if datum.central_weight is not None and datum.central_weight not in search:
        search = search + (datum.central_weight,)
    search = _validate_search(datum, search)

    den = lcm(*(c.denominator for c in h.coords))
    if char:
        if char % 2 == 0 or char < 3:
            raise ValueError(f"characteristic must be 0 or an odd prime, got {char}")
        if den % char == 0:
            raise ValueError(
                f"coefficients of H have denominators divisible by p = {char}"
            )
    hint = tuple(int(c * den) for c in h.coords)
    den_val = _valuation(2 * den, char) if char else 0

    best4: int | None = None
    for w in search:
        ws = weights_of(datum, w)
        base4 = dot2(mu, w)
        for wp in ws:
            num = sum(hi * d for hi, d in zip(hint, wp))  # 2*den * d(wp)(H)
            if num == 0:
                continue
            if char:
                v = _valuation(num, char) - den_val
                if v < 0:
                    raise ValueError(
                        f"d(w')(H) has denominator divisible by p = {char}"
                    )
                if v > 0:
                    continue  # vanishes mod p
            val4 = base4 - dot2(lam, wp)
            if best4 is None or val4 < best4:
                best4 = val4
    if best4 is None:
        raise NoWeightPairError("no weight in the search set pairs with H")
    if best4 % 4 != 0:
        raise AssertionError("Cartan bound must be an integer")
    return best4 // 4


# -- geodesics and corrected weights --------------------------------------------


@dataclass(frozen=True)
class GeodesicWitness:
    """The unique repetition-free path between two simple roots.

    `path` lists simple-root indices from source to target inclusive;
    `corrected` is the target's fundamental weight moved back along the
    path (the reflections after the source applied right to left), and
    `correction` the weight difference, which for a minuscule fundamental
    weight equals the sum of the path roots beyond the source.
    """

    source: int
    target: int
    path: tuple[int, ...]
    corrected: Vec
    correction: Vec


def geodesic(datum: RootDatum, source: int, target: int) -> GeodesicWitness:
    """Geodesic between simple roots in the Dynkin diagram (a tree)."""
    nsimple = len(datum.simple_roots)
    for i in (source, target):
        if not 0 <= i < nsimple:
            raise IndexError(f"simple root index {i} out of range for {datum.label}")
    prev: dict[int, int] = {source: source}
    frontier = [source]
    while target not in prev and frontier:
        nxt = []
        for u in frontier:
            for v in datum.dynkin_adjacency[u]:
                if v not in prev:
                    prev[v] = u
                    nxt.append(v)
        frontier = nxt
    if target not in prev:
        raise AssertionError("Dynkin diagram of a classical type is connected")
    path = [target]
    while path[-1] != source:
        path.append(prev[path[-1]])
    path.reverse()

    w = datum.fundamental_weights[datum.fundamental_index_of_simple(target)]
    corrected = w
    for i in reversed(path[1:]):
        corrected = datum.simple_reflection(i, corrected)
    return GeodesicWitness(source, target, tuple(path), corrected, w - corrected)


def varpi_alpha(datum: RootDatum, fund_index: int, simple_index: int) -> Vec:
    """The corrected weight of a minuscule fundamental weight along a geodesic.

    Realizes the minimum of <mu, w> - <lam, w'> over the w' pairing through
    the negative of the given simple root, for every dominant lam <= mu.
    """
    if not 0 <= fund_index < len(datum.fundamental_weights):
        raise IndexError(f"fundamental weight index {fund_index} out of range")
    if not datum.minuscule_mask[fund_index]:
        raise ValueError(
            f"fundamental weight {fund_index} of {datum.label} is not minuscule"
        )
    if fund_index >= len(datum.simple_roots):
        raise ValueError(
            "the central weight of the GL model has no attached simple root"
        )
    wit = geodesic(datum, simple_index, fund_index)
    return wit.corrected


def geodesic_bound(
    datum: RootDatum,
    lam: Vec,
    mu: Vec,
    simple_index: int,
    search: Sequence[Vec],
) -> int:
    """min over minuscule fundamental w in `search` of <mu, w> - <lam, w_a>.

    The corrected weight w_a pairs through the *negative* of the simple
    root, so for selector sets this minimum is the curve bound of the
    negative simple root (and the pair bound of the negative root too).
    """
    _require_dominant_pair(datum, lam, mu)
    best: Fraction | None = None
    for fund_index, w in enumerate(datum.fundamental_weights):
        if w not in search:
            continue
        if fund_index >= len(datum.simple_roots) or not datum.minuscule_mask[fund_index]:
            continue
        corrected = varpi_alpha(datum, fund_index, simple_index)
        val = mu.dot(w) - lam.dot(corrected)
        if best is None or val < best:
            best = val
    if best is None:
        raise NoWeightPairError("search set contains no usable minuscule weight")
    if best.denominator != 1:
        raise AssertionError("geodesic bound must be an integer")
    return int(best)


# -- exponent sets and profiles ---------------------------------------------------


@dataclass(frozen=True)
class ExponentSet:
    """A set of (root index, exponent) pairs, tagged by its origin."""

    tag: str  # "curve" or "fm_bound"
    entries: frozenset[tuple[int, int]]

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def issubset(self, other: "ExponentSet") -> bool:
        return self.entries <= other.entries


def _exponent_entries(
    datum: RootDatum, lam: Vec, mu: Vec, bound_of: dict[int, int]
) -> frozenset[tuple[int, int]]:
    entries = set()
    for r in datum.roots:
        pair = lam.dot(r.vector)
        if pair.denominator != 1:
            raise AssertionError("<lam, a> must be integral")
        top = int(pair) - 1
        for k in range(top - bound_of[r.index] + 1, top + 1):
            entries.add((r.index, k))
    return frozenset(entries)


def curve_exponents(datum: RootDatum, lam: Vec, mu: Vec) -> ExponentSet:
    """Exponents <lam,a>-k for 1 <= k <= curve bound, over all roots."""
    bounds = {r.index: curve_bound(datum, lam, mu, r) for r in datum.roots}
    return ExponentSet("curve", _exponent_entries(datum, lam, mu, bounds))


def fm_exponent_bound(
    datum: RootDatum, lam: Vec, mu: Vec, search: Sequence[Vec] | None = None
) -> ExponentSet:
    """The outer exponent-bound set from the restricted pair bounds."""
    bounds = {r.index: fm_bound(datum, lam, mu, r, search) for r in datum.roots}
    return ExponentSet("fm_bound", _exponent_entries(datum, lam, mu, bounds))


@dataclass(frozen=True)
class CartanProfile:
    """Curve bounds of the negative simple roots; their sum is the Cartan
    dimension of the curve-spanned subspace."""

    exponents: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.exponents)


def curve_cartan_profile(datum: RootDatum, lam: Vec, mu: Vec) -> CartanProfile:
    return CartanProfile(
        tuple(
            curve_bound(datum, lam, mu, datum.negative(a)) for a in datum.simple_roots
        )
    )


def curve_tangent_dimension(datum: RootDatum, lam: Vec, mu: Vec) -> int:
    """Dimension of the curve-spanned subspace: root part plus Cartan part."""
    root_part = sum(curve_bound(datum, lam, mu, r) for r in datum.roots)
    return root_part + curve_cartan_profile(datum, lam, mu).total


# -- per-root tables ---------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    root: Root
    k: int
    l: int


@dataclass(frozen=True)
class BoundTable:
    """Curve and pair bounds for every root at a fixed (lam, mu)."""

    entries: tuple[BoundEntry, ...]
    search: tuple[Vec, ...]

    def entry(self, root: Root) -> BoundEntry:
        return self.entries[root.index]


def build_bound_table(
    datum: RootDatum, lam: Vec, mu: Vec, search: Sequence[Vec] | None = None
) -> BoundTable:
    search = _validate_search(
        datum, search if search is not None else default_search(datum)
    )
    entries = tuple(
        BoundEntry(r, curve_bound(datum, lam, mu, r), fm_bound(datum, lam, mu, r, search))
        for r in datum.roots
    )
    return BoundTable(entries, search)
