"""Classification of abelian-type pairs and certification of the bound equalities.

A pair (series, mu) is of abelian type when mu is a sum of minuscule
fundamental coweights (series A, B, C; the GL model also allows a central
summand) or matches one of the two special D-patterns: r w_1^v ("real"
pattern) or s w_{n-1}^v + t w_n^v ("quaternionic" pattern).

For abelian-type mu there is a per-type selector set S of minuscule
fundamental weights with the property that a coweight nu (in the coset of
mu) is below mu exactly when <mu - nu, w> >= 0 for all w in S.  The
selector property makes the restricted pair bounds collapse onto the curve
bounds for every root; the Cartan bounds collapse onto the minimum curve
bound over the support, except possibly in the quaternionic D-pattern away
from the boundary condition <lam, a_{n-1}> = 0 or <lam, a_n> = 0, where a
genuine gap can appear (the smallest example lives in D4 with
mu = (3,3,3,0), lam = (1,1,1,0)).
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import (
    cartan_bound,
    curve_bound,
    curve_cartan_profile,
    fm_bound,
    search_from_indices,
)
from .rootdata import DominanceError, RootDatum
from .vectors import Vec, dot2, format_rational, format_vector
from .weylmodules import CartanElement, dominant_vectors

_PI1_ORDER = {"B": 2, "C": 2, "D": 4}


# -- classification -------------------------------------------------------------


@dataclass(frozen=True)
class AbelianClass:
    """Shape of mu as a sum of minuscule coweights, when it has one."""

    kind: str  # "abc", "d_real", "d_quaternionic" or "not_abelian"
    summands: tuple[tuple[int, int], ...] = ()  # (1-based coweight index, coeff)
    central: int = 0  # central multiple in the GL model
    r: int | None = None  # multiplicity of w_1^v in the real D-pattern
    s: int | None = None  # quaternionic D-pattern coefficients
    t: int | None = None

    @property
    def is_abelian(self) -> bool:
        return self.kind != "not_abelian"

    @property
    def q(self) -> int | None:
        if self.s is None or self.t is None:
            return None
        return self.s - self.t

    def describe(self) -> str:
        if self.kind == "not_abelian":
            return "not of abelian type"
        if self.kind == "d_real":
            return f"real D-pattern, r = {self.r}"
        if self.kind == "d_quaternionic":
            return f"quaternionic D-pattern, s = {self.s}, t = {self.t}"
        parts = [f"{c} * w{i}^v" for i, c in self.summands if c]
        if self.central:
            parts.append(f"{self.central} * (1,...,1)")
        return "sum of minuscule coweights: " + (" + ".join(parts) or "0")


def _require_dominant_coweight(datum: RootDatum, mu: Vec) -> None:
    if not datum.in_coweight_lattice(mu):
        raise DominanceError(f"{mu} is not a coweight of {datum.label}")
    if not datum.is_dominant(mu):
        raise DominanceError(f"{mu} is not dominant")


def classify_pair(datum: RootDatum, mu: Vec) -> AbelianClass:
    """Decide whether (datum, mu) is of abelian type, per the coordinate patterns."""
    _require_dominant_coweight(datum, mu)
    n = datum.dim
    if datum.series == "A":
        coeffs = tuple(
            (i + 1, (mu[i] - mu[i + 1]) // 2) for i in range(n - 1)
        )
        return AbelianClass("abc", summands=coeffs, central=mu[-1] // 2)
    if datum.series == "B":
        if mu.is_integral() and all(a == 0 for a in mu[1:]):
            return AbelianClass("abc", summands=((1, mu[0] // 2),))
        return AbelianClass("not_abelian")
    if datum.series == "C":
        if all(a == mu[0] for a in mu):
            return AbelianClass("abc", summands=((n, mu[0]),))
        return AbelianClass("not_abelian")
    # series D
    if mu.is_integral() and all(a == 0 for a in mu[1:]):
        return AbelianClass("d_real", r=mu[0] // 2)
    if all(a == mu[0] for a in mu[:-1]):
        c2, d2 = mu[0], mu[-1]
        s2, t2 = c2 - d2, c2 + d2  # doubled s and t
        if s2 >= 0 and t2 >= 0 and s2 % 2 == 0 and t2 % 2 == 0:
            return AbelianClass("d_quaternionic", s=s2 // 2, t=t2 // 2)
    return AbelianClass("not_abelian")


def selector_weights(datum: RootDatum, mu: Vec) -> tuple[Vec, ...]:
    """The per-type selector set S (a duality-closed set of minuscule weights)."""
    cls = classify_pair(datum, mu)
    if not cls.is_abelian:
        raise ValueError(
            f"({datum.label}, {mu}) is {cls.describe()}; no selector set applies"
        )
    n = datum.rank
    if datum.series == "A":
        return search_from_indices(datum, None)
    if datum.series == "B":
        return search_from_indices(datum, [n])
    if datum.series == "C":
        return search_from_indices(datum, [1])
    if cls.kind == "d_real":
        return search_from_indices(datum, [n - 1, n])
    return search_from_indices(datum, [1, n - 1, n])


def characteristic_assumptions(datum: RootDatum, char: int) -> list[str]:
    """Recorded (never enforced) assumption on the characteristic."""
    if char == 0:
        return []
    order = datum.dim if datum.series == "A" else _PI1_ORDER[datum.series]
    return [
        f"characteristic {char}: the equalities are asserted under "
        f"p not dividing {order} (fundamental-group order for {datum.label})"
    ]


# -- reports ----------------------------------------------------------------------


@dataclass
class Witness:
    """A replayable counterexample with all intermediate values."""

    kind: str
    data: dict[str, object]

    def to_jsonable(self) -> dict[str, object]:
        return {"kind": self.kind, **self.data}


@dataclass
class VerificationReport:
    instance: dict[str, object]
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return all(self.checks.values())

    def to_jsonable(self) -> dict[str, object]:
        return {
            "instance": self.instance,
            "checks": dict(sorted(self.checks.items())),
            "certified": self.certified,
            "witnesses": [w.to_jsonable() for w in self.witnesses],
            "assumptions": list(self.assumptions),
        }


def _instance_descriptor(
    datum: RootDatum, mu: Vec, lam: Vec | None = None, char: int = 0
) -> dict[str, object]:
    out: dict[str, object] = {
        "series": datum.series,
        "rank": datum.rank,
        "mu": format_vector(mu),
    }
    if lam is not None:
        out["lambda"] = format_vector(lam)
    out["characteristic"] = char
    return out


# -- the selector property --------------------------------------------------------


def check_selector_property(
    datum: RootDatum,
    mu: Vec,
    search: Sequence[Vec],
    box_margin: int | None = None,
) -> VerificationReport:
    """Verify that `search` detects dominance below mu on a truncated box.

    Enumerates dominant nu in the coset of mu with every |coordinate|
    bounded by max|mu| + margin and checks the biconditional
    (nu <= mu) <=> (<mu - nu, w> >= 0 for all w in `search`).
    The first violating nu is reported as a witness.
    """
    _require_dominant_coweight(datum, mu)
    for w in search:
        fw = datum.fundamental_weights
        if w not in fw or not datum.minuscule_mask[fw.index(w)]:
            raise ValueError(f"selector weight {w} is not a minuscule fundamental weight")
    if box_margin is None:
        box_margin = (max((abs(a) for a in mu), default=0) + 1) // 2 + datum.rank
    bound2 = max((abs(a) for a in mu), default=0) + 2 * box_margin
    parity = 0 if mu.is_integral() else 1
    total2 = sum(mu) if datum.series == "A" else None

    report = VerificationReport(_instance_descriptor(datum, mu))
    report.instance["search"] = [format_vector(w) for w in search]
    report.assumptions.append(
        f"selector check truncated to |coordinates| <= {Fraction(bound2, 2)} "
        f"(margin {box_margin})"
    )
    ok = True
    for nu in dominant_vectors(datum, bound2, parity, total2):
        diff = mu - nu
        if not datum.in_coroot_lattice(diff):
            continue
        passes_search = all(dot2(diff, w) >= 0 for w in search)
        below = datum.dominance_leq(nu, mu)
        if passes_search != below:
            ok = False
            report.witnesses.append(
                Witness(
                    "selector_violation",
                    {
                        "nu": format_vector(nu),
                        "passes_search": passes_search,
                        "dominance_below": below,
                        "pairings": [
                            format_rational(Fraction(dot2(diff, w), 4)) for w in search
                        ],
                    },
                )
            )
            break
    report.checks["selector_property"] = ok
    return report


# -- equality checks ----------------------------------------------------------------


def check_root_equality(
    datum: RootDatum,
    mu: Vec,
    lam: Vec,
    search: Sequence[Vec] | None = None,
) -> VerificationReport:
    """curve bound == restricted pair bound, for every root."""
    if search is None:
        search = selector_weights(datum, mu)
    report = VerificationReport(_instance_descriptor(datum, mu, lam))
    report.instance["search"] = [format_vector(w) for w in search]
    ok = True
    for r in datum.roots:
        k = curve_bound(datum, lam, mu, r)
        l = fm_bound(datum, lam, mu, r, search)
        if k != l:
            ok = False
            report.witnesses.append(
                Witness(
                    "root_bound_gap",
                    {"root": format_vector(r.vector), "curve_bound": k, "pair_bound": l},
                )
            )
    report.checks["root_equality"] = ok
    return report


def default_cartan_family(
    datum: RootDatum, random_per_support: int = 2, seed: int = 7
) -> tuple[CartanElement, ...]:
    """The Cartan directions distinguished by the spanning arguments.

    All 0/1 coefficient vectors over the simple coroots; for series D also
    the vectors with opposite signs on the last two coefficients; plus a
    seeded sample of random small rational coefficient vectors per support.
    Denominators stay in {1, 2}, so the family is usable in any odd
    characteristic.
    """
    n = len(datum.simple_roots)
    rng = random.Random(seed)
    nonzero = [Fraction(a, b) for a in (-3, -2, -1, 1, 2, 3) for b in (1, 2)]
    family: list[CartanElement] = []
    for mask in range(1, 1 << n):
        support = [i for i in range(n) if mask >> i & 1]
        coeffs = {i: Fraction(1) for i in support}
        family.append(CartanElement.from_simple_coefficients(datum, coeffs))
        if datum.series == "D" and n - 2 in support and n - 1 in support:
            flipped = dict(coeffs)
            flipped[n - 1] = Fraction(-1)
            family.append(CartanElement.from_simple_coefficients(datum, flipped))
        for _ in range(random_per_support):
            coeffs = {i: rng.choice(nonzero) for i in support}
            family.append(CartanElement.from_simple_coefficients(datum, coeffs))
    return tuple(family)


def check_cartan_equality(
    datum: RootDatum,
    mu: Vec,
    lam: Vec,
    family: Sequence[CartanElement] | None = None,
    search: Sequence[Vec] | None = None,
    char: int = 0,
) -> VerificationReport:
    """Cartan bound == minimum curve bound over the support, per direction."""
    if family is None:
        family = default_cartan_family(datum)
    if not family:
        raise ValueError("the family of Cartan directions must be nonempty")
    report = VerificationReport(_instance_descriptor(datum, mu, lam, char))
    report.assumptions.extend(characteristic_assumptions(datum, char))
    profile = curve_cartan_profile(datum, lam, mu)
    ok = True
    for h in family:
        coeffs = h.simple_coefficients(datum)
        if coeffs is None:
            expected = 0  # directions outside the derived Cartan pair with a
            # central character at cost zero
        else:
            expected = min(
                profile.exponents[i] for i, c in enumerate(coeffs) if c != 0
            )
        got = cartan_bound(datum, lam, mu, h, search, char)
        if got != expected:
            ok = False
            report.witnesses.append(
                Witness(
                    "cartan_bound_gap",
                    {
                        "h": [format_rational(c) for c in h.coords],
                        "coefficients": None
                        if coeffs is None
                        else [format_rational(c) for c in coeffs],
                        "cartan_bound": got,
                        "min_support_curve_bound": expected,
                    },
                )
            )
    report.checks["cartan_equality"] = ok
    return report


# -- verdicts --------------------------------------------------------------------


def quaternionic_boundary(datum: RootDatum, lam: Vec) -> bool:
    """<lam, a_{n-1}> = 0 or <lam, a_n> = 0 (the D-pattern boundary condition)."""
    a1 = datum.simple_roots[-2].vector
    a2 = datum.simple_roots[-1].vector
    return dot2(lam, a1) == 0 or dot2(lam, a2) == 0


@dataclass
class SpanningVerdict:
    status: str  # "certified", "certified_minimal_lambda" or "not_certified"
    classification: AbelianClass
    root_report: VerificationReport
    cartan_report: VerificationReport
    boundary: bool | None
    assumptions: list[str]

    @property
    def witnesses(self) -> list[Witness]:
        return self.root_report.witnesses + self.cartan_report.witnesses

    def to_jsonable(self) -> dict[str, object]:
        return {
            "status": self.status,
            "classification": self.classification.describe(),
            "boundary_condition": self.boundary,
            "root_equality": self.root_report.checks.get("root_equality"),
            "cartan_equality": self.cartan_report.checks.get("cartan_equality"),
            "witnesses": [w.to_jsonable() for w in self.witnesses],
            "assumptions": list(self.assumptions),
        }


def spanning_verdict(
    datum: RootDatum, mu: Vec, lam: Vec, char: int = 0
) -> SpanningVerdict:
    """Combined verdict for one (mu, lam): do curves span both bound layers?"""
    cls = classify_pair(datum, mu)
    if not cls.is_abelian:
        raise ValueError(
            f"({datum.label}, {mu}) is {cls.describe()}; no spanning claim applies"
        )
    search = selector_weights(datum, mu)
    rr = check_root_equality(datum, mu, lam, search)
    cr = check_cartan_equality(datum, mu, lam, search=search, char=char)
    boundary = (
        quaternionic_boundary(datum, lam) if cls.kind == "d_quaternionic" else None
    )
    certified = rr.certified and cr.certified
    if not certified:
        status = "not_certified"
    elif cls.kind == "d_quaternionic" and boundary:
        status = "certified_minimal_lambda"
    else:
        status = "certified"
    return SpanningVerdict(
        status, cls, rr, cr, boundary, characteristic_assumptions(datum, char)
    )


# -- enumeration below mu -----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def dominant_below(datum: RootDatum, mu: Vec) -> tuple[Vec, ...]:
    """All dominant coweights lam <= mu, in deterministic order."""
    _require_dominant_coweight(datum, mu)
    bound2 = max((abs(a) for a in mu), default=0)
    parity = 0 if mu.is_integral() else 1
    total2 = sum(mu) if datum.series == "A" else None
    return tuple(
        nu
        for nu in dominant_vectors(datum, bound2, parity, total2)
        if datum.dominance_leq(nu, mu)
    )


def minimal_dominant_below(datum: RootDatum, mu: Vec) -> Vec:
    """The unique dominance-minimal dominant coweight below mu."""
    candidates = dominant_below(datum, mu)
    # the minimum has the smallest pairing with 2rho; verify it against all
    best = min(candidates, key=lambda v: (dot2(v, datum.two_rho), v))
    for other in candidates:
        if not datum.dominance_leq(best, other):
            raise AssertionError(
                f"coset below {mu} has incomparable minimal elements"
            )
    return best


# -- restriction-of-scalars bookkeeping ----------------------------------------------


@dataclass(frozen=True)
class ResidueEmbedding:
    """One embedding theta, tagged by the residue embedding phi it restricts to."""

    phi: int
    mu: Vec


@dataclass(frozen=True)
class ResidueInput:
    """Input datum for the restriction-of-scalars reduction.

    The special fiber of the corresponding model is a product of f copies
    of the split factor; the cocharacter of the phi-component is the sum of
    the mu_theta over the theta lying above phi.
    """

    series: str
    rank: int
    f: int
    embeddings: tuple[ResidueEmbedding, ...]


@dataclass
class ResidueFactor:
    phi: int
    mu: Vec
    classification: AbelianClass
    minimal_lambda: Vec
    verdict_at_minimal: SpanningVerdict


@dataclass
class ResidueProduct:
    factors: list[ResidueFactor]
    spans_everywhere: bool
    spans_minimal_stratum: bool

    def to_jsonable(self) -> dict[str, object]:
        return {
            "factors": [
                {
                    "phi": f.phi,
                    "mu": format_vector(f.mu),
                    "classification": f.classification.describe(),
                    "minimal_lambda": format_vector(f.minimal_lambda),
                    "verdict_at_minimal": f.verdict_at_minimal.status,
                }
                for f in self.factors
            ],
            "spans_everywhere": self.spans_everywhere,
            "spans_minimal_stratum": self.spans_minimal_stratum,
        }


def residue_product(data: ResidueInput, char: int = 0) -> ResidueProduct:
    """Fold the embeddings into per-phi cocharacters and certify each factor."""
    from .rootdata import build_root_datum

    datum = build_root_datum(data.series, data.rank)
    if data.f < 1:
        raise ValueError("the residue degree f must be at least 1")
    groups: dict[int, Vec] = {phi: Vec.zero(datum.dim) for phi in range(data.f)}
    for emb in data.embeddings:
        if not 0 <= emb.phi < data.f:
            raise ValueError(f"embedding tag {emb.phi} outside 0..{data.f - 1}")
        _require_dominant_coweight(datum, emb.mu)
        groups[emb.phi] = groups[emb.phi] + emb.mu

    factors = []
    for phi in range(data.f):
        mu_phi = datum.dominant_rep(groups[phi])
        cls = classify_pair(datum, mu_phi)
        if not cls.is_abelian:
            raise ValueError(
                f"factor {phi} has mu = {mu_phi}, which is {cls.describe()}"
            )
        lam0 = minimal_dominant_below(datum, mu_phi)
        verdict = spanning_verdict(datum, mu_phi, lam0, char)
        factors.append(ResidueFactor(phi, mu_phi, cls, lam0, verdict))

    everywhere = all(f.classification.kind != "d_quaternionic" for f in factors)
    minimal_ok = all(
        f.verdict_at_minimal.status in ("certified", "certified_minimal_lambda")
        for f in factors
    )
    return ResidueProduct(factors, everywhere and minimal_ok, minimal_ok)


# -- closed forms -------------------------------------------------------------------


def closed_form_cartan_profile(
    datum: RootDatum, mu: Vec, lam: Vec
) -> tuple[int, ...] | None:
    """Closed forms for the negative-simple-root curve bounds, where known.

    B (mu = (r,0,...,0)): delta + lam_{i+1} for i < n and delta for i = n,
    with delta = (r - sum lam_i)/2.  C (mu = (r/2,...,r/2)): r/2 - lam_i.
    D real pattern: as in B after normalizing lam_n >= 0 by the diagram
    flip.  Returns None for series A and the quaternionic D-pattern.
    """
    cls = classify_pair(datum, mu)
    n = datum.rank
    lam_c = list(lam.coords)
    if datum.series == "B" and cls.kind == "abc":
        r = Fraction(mu[0], 2)
        delta = (r - sum(lam_c)) / 2
        if delta.denominator != 1 or delta < 0:
            raise AssertionError("delta must be a non-negative integer below mu")
        out = [int(delta + lam_c[i + 1]) for i in range(n - 1)] + [int(delta)]
        return tuple(out)
    if datum.series == "C" and cls.kind == "abc":
        half_r = Fraction(mu[0], 2)
        return tuple(int(half_r - lam_c[i]) for i in range(n))
    if datum.series == "D" and cls.kind == "d_real":
        flipped = lam_c[-1] < 0
        if flipped:
            lam_c[-1] = -lam_c[-1]
        r = Fraction(mu[0], 2)
        delta = (r - sum(lam_c)) / 2
        if delta.denominator != 1 or delta < 0:
            raise AssertionError("delta must be a non-negative integer below mu")
        out = [int(delta + lam_c[i + 1]) for i in range(n - 1)] + [int(delta)]
        if flipped:
            out[n - 2], out[n - 1] = out[n - 1], out[n - 2]
        return tuple(out)
    return None
