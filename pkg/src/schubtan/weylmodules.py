"""Weight-set combinatorics of Weyl modules.

The weight multiset of a Weyl module V(w) is characteristic-free.  For
minuscule highest weight it is a single Weyl orbit; in general a vector
is a weight exactly when its dominant representative lies below the
highest weight in the dominance order of the weight lattice (the weight
set is the saturated closure of the highest weight).

Two membership predicates drive the tangent-space bounds: a pair
(high, wt) "pairs through a root a" when wt and wt + a are both weights,
and it "pairs through a Cartan direction H" when the differential of wt
does not kill H (exactly in characteristic 0, after reduction mod p
otherwise).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .rootdata import DominanceError, Root, RootDatum
from .vectors import Vec, dot2


def dominant_vectors(
    datum: RootDatum,
    bound2: int,
    parity: int,
    total2: int | None = None,
) -> Iterator[Vec]:
    """Yield every dominant vector with doubled coordinates of one parity.

    `bound2` caps |doubled coordinate|; `parity` is 0 for integral vectors
    and 1 for vectors with every coordinate in 1/2 + Z; `total2` (GL model)
    fixes the doubled coordinate sum.  Deterministic descending order.
    """
    n = datum.dim
    hi = bound2 - ((bound2 - parity) % 2)
    if datum.series == "A":
        lo = -hi

        def rec_a(prefix: list[int], prev: int, remaining: int) -> Iterator[Vec]:
            slots = n - len(prefix)
            if slots == 0:
                if total2 is None or remaining == 0:
                    yield Vec(prefix)
                return
            top = min(prev, hi)
            for v in range(top, lo - 2, -2):
                if total2 is not None:
                    rest = remaining - v
                    if rest < (slots - 1) * lo or rest > (slots - 1) * v:
                        continue
                yield from rec_a(prefix + [v], v, remaining - v)

        yield from rec_a([], hi, total2 if total2 is not None else 0)
        return

    def rec(prefix: list[int], prev: int) -> Iterator[Vec]:
        slots = n - len(prefix)
        if slots == 0:
            yield Vec(prefix)
            if datum.series == "D" and prefix[-1] > 0:
                yield Vec(prefix[:-1] + [-prefix[-1]])
            return
        for v in range(min(prev, hi), parity - 2, -2):
            yield from rec(prefix + [v], v)

    yield from rec([], hi)


def _parity_of(v: Vec) -> int:
    if v.is_integral():
        return 0
    if v.is_half_odd():
        return 1
    raise ValueError(f"{v} is in neither lattice coset")


def is_minuscule(datum: RootDatum, wt: Vec) -> bool:
    """|<a^v, wt>| <= 1 against every root."""
    return all(abs(dot2(r.coroot, wt)) <= 4 for r in datum.roots)


def minuscule_weights(datum: RootDatum) -> tuple[Vec, ...]:
    """The minuscule fundamental weights, by the computed criterion."""
    return tuple(
        w for w, m in zip(datum.fundamental_weights, datum.minuscule_mask) if m
    )


def _require_dominant_weight(datum: RootDatum, wt: Vec) -> None:
    if not datum.in_weight_lattice(wt):
        raise DominanceError(f"{wt} is not in the weight lattice of {datum.label}")
    if not datum.is_dominant(wt):
        raise DominanceError(f"{wt} is not dominant")


def dominant_weights_below(datum: RootDatum, high: Vec) -> tuple[Vec, ...]:
    """All dominant weights w with w <= high (same root-lattice coset)."""
    _require_dominant_weight(datum, high)
    bound2 = max((abs(a) for a in high), default=0)
    total2 = sum(high) if datum.series == "A" else None
    out = [
        v
        for v in dominant_vectors(datum, bound2, _parity_of(high), total2)
        if datum.dominance_leq_weights(v, high)
    ]
    return tuple(out)


@functools.lru_cache(maxsize=None)
def weights_of(datum: RootDatum, high: Vec) -> frozenset[Vec]:
    """The weight set of the Weyl module with highest weight `high`.

    Minuscule highest weights give a single orbit; otherwise the union of
    the orbits of all dominant weights below `high`.
    """
    _require_dominant_weight(datum, high)
    if is_minuscule(datum, high):
        return datum.weyl_orbit(high)
    out: set[Vec] = set()
    for dom in dominant_weights_below(datum, high):
        out |= datum.weyl_orbit(dom)
    return frozenset(out)


def is_module_weight(datum: RootDatum, high: Vec, wt: Vec) -> bool:
    """True iff wt is a weight of the Weyl module with highest weight high."""
    _require_dominant_weight(datum, high)
    if not datum.in_weight_lattice(wt):
        return False
    return datum.dominance_leq_weights(datum.dominant_rep(wt), high)


def root_pair_in_module(datum: RootDatum, high: Vec, wt: Vec, root: Root) -> bool:
    """Membership in the root-pair set: wt and wt + a are both weights."""
    ws = weights_of(datum, high)
    return wt in ws and (wt + root.vector) in ws


@dataclass(frozen=True)
class CartanElement:
    """A Cartan direction, as an exact rational coordinate vector."""

    coords: tuple[Fraction, ...]

    @classmethod
    def from_coords(cls, values: Sequence[Fraction | int | str]) -> "CartanElement":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def from_simple_coefficients(
        cls, datum: RootDatum, coeffs: Mapping[int, Fraction | int] | Sequence[Fraction | int]
    ) -> "CartanElement":
        """H = sum m_i a_i^v from coefficients indexed by simple roots."""
        if isinstance(coeffs, Mapping):
            items: Iterable[tuple[int, Fraction]] = (
                (i, Fraction(c)) for i, c in coeffs.items()
            )
        else:
            items = enumerate(Fraction(c) for c in coeffs)
        out = [Fraction(0)] * datum.dim
        for i, c in items:
            for t, d in enumerate(datum.simple_roots[i].coroot):
                out[t] += c * Fraction(d, 2)
        return cls(tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def pair(self, wt: Vec) -> Fraction:
        """d(wt)(H): the coordinate pairing with a weight."""
        return sum(
            (h * Fraction(d, 2) for h, d in zip(self.coords, wt)), Fraction(0)
        )

    def simple_coefficients(self, datum: RootDatum) -> tuple[Fraction, ...] | None:
        """Coefficients along the simple coroots, or None outside their span."""
        m = [
            sum((h * Fraction(d, 2) for h, d in zip(self.coords, w)), Fraction(0))
            for w in datum.fundamental_weights[: len(datum.simple_roots)]
        ]
        recon = [Fraction(0)] * datum.dim
        for c, a in zip(m, datum.simple_roots):
            for t, d in enumerate(a.coroot):
                recon[t] += c * Fraction(d, 2)
        if any(r != h for r, h in zip(recon, self.coords)):
            return None
        return tuple(m)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _validate_characteristic(char: int) -> None:
    if char == 0:
        return
    if char < 3 or char % 2 == 0:
        raise ValueError(f"characteristic must be 0 or an odd prime, got {char}")
    d = 3
    while d * d <= char:
        if char % d == 0:
            raise ValueError(f"characteristic {char} is not prime")
        d += 2


def nonzero_in_characteristic(value: Fraction, char: int) -> bool:
    """Whether an exact rational is nonzero after reduction mod `char`."""
    _validate_characteristic(char)
    if char == 0:
        return value != 0
    if value.denominator % char == 0:
        raise ValueError(
            f"denominator of {value} is not prime to the characteristic {char}"
        )
    return value.numerator % char != 0


def cartan_pair_in_module(
    datum: RootDatum, high: Vec, wt: Vec, h: CartanElement, char: int = 0
) -> bool:
    """Membership in the Cartan-pair set: wt is a weight not killed by H."""
    if not is_module_weight(datum, high, wt):
        return False
    return nonzero_in_characteristic(h.pair(wt), char)
