"""Explicit exact models of the classical root systems A, B, C, D.

Coordinates follow the standard realizations inside Z^n (resp. the lattice
generated by Z^n and (1/2, ..., 1/2)):

* series A, rank n: the GL(n+1) model.  Cocharacters and characters are
  both Z^(n+1); simple roots are e_i - e_{i+1}; the fundamental weights
  are the partial sums e_1 + ... + e_i, the last one being the
  determinant character (1, ..., 1).
* series B, rank n: roots ±e_i±e_j and ±e_i; the last fundamental weight
  is the spin weight (1/2, ..., 1/2).
* series C, rank n: roots ±e_i±e_j and ±2e_i.
* series D, rank n (n >= 4): roots ±e_i±e_j; the last two fundamental
  weights are the half-spin weights (1/2, ..., 1/2, ∓1/2).

All data are exact; any operation whose contract yields an integer checks
integrality and fails loudly otherwise.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .vectors import Vec, dot2

SERIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


class DominanceError(ValueError):
    """An argument violated a dominance or lattice precondition."""


@dataclass(frozen=True)
class ClassicalType:
    """A classical series label plus its rank."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}; expected one of {SERIES}")
        lo = _MIN_RANK[self.series]
        if self.rank < lo:
            raise ValueError(
                f"series {self.series} requires rank >= {lo}, got {self.rank}"
            )

    @property
    def dim(self) -> int:
        """Ambient coordinate dimension (rank+1 for the GL model of A)."""
        return self.rank + 1 if self.series == "A" else self.rank

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root together with its coroot and position in the root list."""

    vector: Vec
    coroot: Vec
    index: int
    positive: bool

    def __repr__(self) -> str:
        sign = "+" if self.positive else "-"
        return f"Root[{self.index}{sign}]{self.vector}"


def _coroot(v: Vec) -> Vec:
    # coroot = 2v / <v, v>; in doubled coordinates: 2 * doubled(v) / <v,v>
    q4 = dot2(v, v)  # 4 * <v, v>
    doubled = []
    for a in v:
        num = 8 * a
        if num % q4 != 0:
            raise ValueError(f"root {v} has a non-half-integral coroot")
        doubled.append(num // q4)
    return Vec(doubled)


def _positive_root_vectors(series: str, dim: int) -> list[Vec]:
    out: list[Vec] = []

    def e(i: int, c: int = 2) -> list[int]:
        v = [0] * dim
        v[i] = c
        return v

    for i in range(dim):
        for j in range(i + 1, dim):
            d = e(i)
            d[j] = -2
            out.append(Vec(d))  # e_i - e_j
            if series in ("B", "C", "D"):
                s = e(i)
                s[j] = 2
                out.append(Vec(s))  # e_i + e_j
    if series == "B":
        out.extend(Vec(e(i)) for i in range(dim))  # e_i
    if series == "C":
        out.extend(Vec(e(i, 4)) for i in range(dim))  # 2e_i
    return sorted(out)


def _simple_root_vectors(series: str, dim: int) -> list[Vec]:
    out = []
    for i in range(dim - 1):
        v = [0] * dim
        v[i], v[i + 1] = 2, -2
        out.append(Vec(v))  # e_i - e_{i+1}
    if series == "B":
        out.append(Vec([0] * (dim - 1) + [2]))  # e_n
    elif series == "C":
        out.append(Vec([0] * (dim - 1) + [4]))  # 2e_n
    elif series == "D":
        v = [0] * dim
        v[dim - 2] = v[dim - 1] = 2
        out.append(Vec(v))  # e_{n-1} + e_n
    return out


def _fundamental_weights(series: str, dim: int) -> list[Vec]:
    partial = [Vec([2] * i + [0] * (dim - i)) for i in range(1, dim + 1)]
    if series == "A":
        return partial  # includes the determinant character (1, ..., 1)
    if series == "B":
        return partial[: dim - 1] + [Vec([1] * dim)]
    if series == "C":
        return partial[:dim]
    return partial[: dim - 2] + [Vec([1] * (dim - 1) + [-1]), Vec([1] * dim)]


def _fundamental_coweights(series: str, dim: int) -> list[Vec]:
    partial = [Vec([2] * i + [0] * (dim - i)) for i in range(1, dim + 1)]
    if series == "A":
        return partial
    if series == "B":
        return partial[:dim]
    if series == "C":
        return partial[: dim - 1] + [Vec([1] * dim)]
    return partial[: dim - 2] + [Vec([1] * (dim - 1) + [-1]), Vec([1] * dim)]


class RootDatum:
    """Immutable tables for one classical root system.

    Instances are canonical per (series, rank); build them through
    :func:`build_root_datum` so identity-based caching works.
    """

    def __init__(self, ctype: ClassicalType):
        self.ctype = ctype
        self.series = ctype.series
        self.rank = ctype.rank
        self.dim = ctype.dim

        pos = _positive_root_vectors(self.series, self.dim)
        self.npos = len(pos)
        roots: list[Root] = []
        for idx, v in enumerate(pos):
            roots.append(Root(v, _coroot(v), idx, True))
        for idx, v in enumerate(pos):
            roots.append(Root(-v, _coroot(-v), self.npos + idx, False))
        self.roots: tuple[Root, ...] = tuple(roots)
        self._by_vector: dict[Vec, Root] = {r.vector: r for r in roots}

        self.simple_roots: tuple[Root, ...] = tuple(
            self._by_vector[v] for v in _simple_root_vectors(self.series, self.dim)
        )
        self.fundamental_weights: tuple[Vec, ...] = tuple(
            _fundamental_weights(self.series, self.dim)
        )
        self.fundamental_coweights: tuple[Vec, ...] = tuple(
            _fundamental_coweights(self.series, self.dim)
        )
        self.two_rho: Vec = functools.reduce(
            Vec.__add__, (r.vector for r in roots if r.positive), Vec.zero(self.dim)
        )
        self.minuscule_mask: tuple[bool, ...] = tuple(
            all(abs(dot2(r.coroot, w)) <= 4 for r in self.roots)
            for w in self.fundamental_weights
        )
        # Central character of the GL model; None for the semisimple series.
        self.central_weight: Vec | None = (
            self.fundamental_weights[-1] if self.series == "A" else None
        )
        self._check_tables()

        adj = []
        for i, a in enumerate(self.simple_roots):
            nb = tuple(
                j
                for j, b in enumerate(self.simple_roots)
                if j != i and dot2(a.coroot, b.vector) != 0
            )
            adj.append(nb)
        self.dynkin_adjacency: tuple[tuple[int, ...], ...] = tuple(adj)

    # -- construction sanity -------------------------------------------------

    def _check_tables(self) -> None:
        for i, a in enumerate(self.simple_roots):
            for j, w in enumerate(self.fundamental_weights):
                want = 4 if i == j else 0
                if dot2(a.coroot, w) != want:
                    raise AssertionError(f"<a_{i}^v, w_{j}> != delta in {self.label}")
            for j, cw in enumerate(self.fundamental_coweights):
                want = 4 if i == j else 0
                if dot2(cw, a.vector) != want:
                    raise AssertionError(f"<w_{i}^v, a_{j}> != delta in {self.label}")

    @property
    def label(self) -> str:
        return self.ctype.label

    def __repr__(self) -> str:
        return f"RootDatum({self.label})"

    # -- basic lookups --------------------------------------------------------

    def root_by_vector(self, v: Vec) -> Root:
        try:
            return self._by_vector[v]
        except KeyError:
            raise ValueError(f"{v} is not a root of {self.label}") from None

    def negative(self, root: Root) -> Root:
        return self._by_vector[-root.vector]

    def positive_roots(self) -> Iterator[Root]:
        return (r for r in self.roots if r.positive)

    def fundamental_index_of_simple(self, simple_index: int) -> int:
        """Fundamental weights are aligned with the simple roots by position."""
        if not 0 <= simple_index < len(self.simple_roots):
            raise IndexError(f"simple root index {simple_index} out of range")
        return simple_index

    # -- pairing and reflections ----------------------------------------------

    def pairing(self, v: Vec, w: Vec) -> Fraction:
        """Coordinate pairing <v, w>, exact, denominator dividing 4."""
        return v.dot(w)

    def simple_reflection(self, i: int, v: Vec) -> Vec:
        """Orthogonal reflection in the i-th simple root.

        Computes v - <v, a_i> a_i^v; in these orthogonal coordinates this
        agrees with the weight-side formula v - <a_i^v, v> a_i.
        """
        if not 0 <= i < len(self.simple_roots):
            raise IndexError(f"simple root index {i} out of range for {self.label}")
        a = self.simple_roots[i]
        c4 = dot2(v, a.vector)  # 4 <v, a_i>
        out = []
        for vd, cd in zip(v, a.coroot):
            num = c4 * cd
            if num % 4 != 0:
                raise ValueError(f"{v} is not in a reflection-stable lattice")
            out.append(vd - num // 4)
        return Vec(out)

    # -- dominance ------------------------------------------------------------

    def is_dominant(self, v: Vec) -> bool:
        """Non-negative pairing against every simple root (both sides agree)."""
        return all(dot2(v, a.vector) >= 0 for a in self.simple_roots)

    def dominant_rep(self, v: Vec) -> Vec:
        """Unique dominant Weyl-orbit representative, by closed form.

        A: sort descending; B/C: absolute values, sorted; D: absolute values
        sorted, with the last coordinate negated when an odd number of sign
        flips was used and no coordinate vanishes.
        """
        if self.series == "A":
            return Vec(sorted(v, reverse=True))
        mags = sorted((abs(a) for a in v), reverse=True)
        if self.series in ("B", "C"):
            return Vec(mags)
        flips = sum(1 for a in v if a < 0)
        if flips % 2 == 1 and mags[-1] != 0:
            mags[-1] = -mags[-1]
        return Vec(mags)

    def weyl_orbit(self, v: Vec) -> frozenset[Vec]:
        """Full orbit under the simple reflections (breadth-first closure)."""
        seen = {v}
        frontier = [v]
        nref = len(self.simple_roots)
        while frontier:
            nxt = []
            for u in frontier:
                for i in range(nref):
                    w = self.simple_reflection(i, u)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return frozenset(seen)

    # -- lattices -------------------------------------------------------------

    def in_coweight_lattice(self, v: Vec) -> bool:
        if len(v) != self.dim:
            return False
        if self.series in ("A", "B"):
            return v.is_integral()
        return v.is_integral() or v.is_half_odd()

    def in_weight_lattice(self, v: Vec) -> bool:
        if len(v) != self.dim:
            return False
        if self.series in ("A", "C"):
            return v.is_integral()
        return v.is_integral() or v.is_half_odd()

    def _expand(self, v: Vec, duals: tuple[Vec, ...], basis: tuple[Vec, ...]) -> list[int] | None:
        """Coefficients (x4) of v in `basis`, read off against `duals`.

        Returns the doubled-doubled coefficients m4_i = 4 * m_i, or None when
        v does not lie in the span (reconstruction check fails; this is how
        the central direction of the GL model is excluded).
        """
        m4 = [dot2(v, d) for d in duals]
        recon = [0] * len(v)
        for c, b in zip(m4, basis):
            for t, bd in enumerate(b):
                recon[t] += c * bd
        if any(r != 4 * vd for r, vd in zip(recon, v)):
            return None
        return m4

    def coroot_coefficients(self, v: Vec) -> list[Fraction] | None:
        """v = sum m_i a_i^v, or None if v is outside the coroot span."""
        duals = tuple(self.fundamental_weights[i] for i in range(len(self.simple_roots)))
        basis = tuple(r.coroot for r in self.simple_roots)
        m4 = self._expand(v, duals, basis)
        if m4 is None:
            return None
        return [Fraction(c, 4) for c in m4]

    def root_coefficients(self, v: Vec) -> list[Fraction] | None:
        """v = sum c_i a_i, or None if v is outside the root span."""
        duals = tuple(self.fundamental_coweights[i] for i in range(len(self.simple_roots)))
        basis = tuple(r.vector for r in self.simple_roots)
        m4 = self._expand(v, duals, basis)
        if m4 is None:
            return None
        return [Fraction(c, 4) for c in m4]

    def in_coroot_lattice(self, v: Vec) -> bool:
        """True iff v is an integral combination of simple coroots."""
        m = self.coroot_coefficients(v)
        return m is not None and all(c.denominator == 1 for c in m)

    def in_root_lattice(self, v: Vec) -> bool:
        m = self.root_coefficients(v)
        return m is not None and all(c.denominator == 1 for c in m)

    def _leq(self, nu: Vec, mu: Vec, duals: tuple[Vec, ...], basis: tuple[Vec, ...]) -> bool:
        d = mu - nu
        m4 = self._expand(d, duals, basis)
        if m4 is None:
            return False
        return all(c >= 0 and c % 4 == 0 for c in m4)

    def dominance_leq(self, nu: Vec, mu: Vec) -> bool:
        """Dominance order on dominant coweights.

        nu <= mu iff mu - nu is a non-negative integral combination of
        simple coroots.  Raises on non-dominant input.
        """
        if not (self.is_dominant(nu) and self.is_dominant(mu)):
            raise DominanceError("dominance_leq requires dominant arguments")
        duals = tuple(self.fundamental_weights[i] for i in range(len(self.simple_roots)))
        basis = tuple(r.coroot for r in self.simple_roots)
        return self._leq(nu, mu, duals, basis)

    def dominance_leq_weights(self, nu: Vec, mu: Vec) -> bool:
        """Dominance order on dominant weights (simple roots as the cone)."""
        if not (self.is_dominant(nu) and self.is_dominant(mu)):
            raise DominanceError("dominance_leq_weights requires dominant arguments")
        duals = tuple(self.fundamental_coweights[i] for i in range(len(self.simple_roots)))
        basis = tuple(r.vector for r in self.simple_roots)
        return self._leq(nu, mu, duals, basis)


@functools.lru_cache(maxsize=None)
def build_root_datum(series: str, rank: int) -> RootDatum:
    """Canonical (cached) root datum for a classical type."""
    return RootDatum(ClassicalType(series, rank))
