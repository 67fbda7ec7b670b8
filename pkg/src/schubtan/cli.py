"""Command-line front end.

Subcommands::

    bounds    per-root curve and pair bounds for one (mu, lambda)
    phi       curve / outer exponent sets, Cartan profile, tangent dimension
    cartan    Cartan profile and Cartan-bound comparisons for the H family
    classify  abelian-type classification, selector set and its certification
    verify    sweep lambda below mu, certify the bound equalities
    modp      fold a restriction-of-scalars datum and certify each factor

Instances come from inline flags (--series/--rank/--mu/--lam) or a JSON
spec file (--spec); reports are JSON (default) or TSV, deterministic byte
for byte.  All rationals are serialized as strings "p" or "p/2", never
floats.  Exit status: 0 success, 1 unexpected witness, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import abelian, bounds, oracle
from .rootdata import DominanceError, RootDatum, build_root_datum
from .vectors import Vec, format_rational, format_vector, parse_vector
from .weylmodules import CartanElement

SCHEMA_VERSION = "1"


class InputError(ValueError):
    """Bad command-line or spec-file input (exit status 2)."""


# -- instance specs -----------------------------------------------------------------


def _parse_indices(text: str | Sequence[int] | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    if isinstance(text, str):
        parts = [p for p in text.split(",") if p.strip()]
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise InputError(f"bad search index list {text!r}: {exc}") from None
    return tuple(int(i) for i in text)


def _load_spec(path: str) -> dict[str, object]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read spec file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"spec file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"spec file {path} must contain a JSON object")
    return data


class Instance:
    """A fully parsed instance: datum, mu, optional lambda, knobs."""

    def __init__(self, args: argparse.Namespace, need_lambda: bool) -> None:
        spec: dict[str, object] = {}
        if getattr(args, "spec", None):
            spec = _load_spec(args.spec)
        series = getattr(args, "series", None) or spec.get("series")
        rank = getattr(args, "rank", None) or spec.get("rank")
        mu = getattr(args, "mu", None) or spec.get("mu")
        lam = getattr(args, "lam", None) or spec.get("lambda")
        char = getattr(args, "char", None)
        if char is None:
            char = int(spec.get("characteristic", 0) or 0)
        search = getattr(args, "search", None)
        if search is None:
            search = spec.get("search_set")
        margin = getattr(args, "box_margin", None)
        if margin is None:
            margin = spec.get("box_margin")

        if series is None or rank is None or mu is None:
            raise InputError("an instance needs a series, a rank and mu")
        try:
            self.datum: RootDatum = build_root_datum(str(series), int(rank))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        try:
            self.mu: Vec = parse_vector(mu)
            self.lam: Vec | None = parse_vector(lam) if lam is not None else None
        except ValueError as exc:
            raise InputError(f"bad vector: {exc}") from None
        for name, v in (("mu", self.mu), ("lambda", self.lam)):
            if v is None:
                continue
            if len(v) != self.datum.dim:
                raise InputError(
                    f"{name} has {len(v)} coordinates; {self.datum.label} needs "
                    f"{self.datum.dim}"
                )
        if need_lambda and self.lam is None:
            raise InputError("this command needs lambda (--lam)")
        self.char = int(char)
        if self.char and (self.char < 3 or self.char % 2 == 0):
            raise InputError(f"characteristic must be 0 or an odd prime, got {self.char}")
        self.search_indices = _parse_indices(search)
        try:
            self.search = bounds.search_from_indices(self.datum, self.search_indices)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        self.box_margin = int(margin) if margin is not None else None

    def descriptor(self) -> dict[str, object]:
        out: dict[str, object] = {
            "series": self.datum.series,
            "rank": self.datum.rank,
            "mu": format_vector(self.mu),
            "characteristic": self.char,
            "search": [format_vector(w) for w in self.search],
        }
        if self.lam is not None:
            out["lambda"] = format_vector(self.lam)
        if self.box_margin is not None:
            out["box_margin"] = self.box_margin
        return out


# -- output ----------------------------------------------------------------------


def _emit_json(report: dict[str, object], out) -> None:
    out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _emit_tsv(rows: list[Sequence[object]], out) -> None:
    for row in rows:
        out.write("\t".join(str(c) for c in row) + "\n")


def _envelope(command: str, instance: dict[str, object]) -> dict[str, object]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "instance": instance,
        "results": {},
        "witnesses": [],
        "assumptions": [],
    }


def _root_label(v: Vec) -> str:
    return ",".join(format_rational(c) for c in v.coords)


# -- subcommands --------------------------------------------------------------------


def _cmd_bounds(args: argparse.Namespace, out) -> int:
    inst = Instance(args, need_lambda=True)
    table = bounds.build_bound_table(inst.datum, inst.lam, inst.mu, inst.search)
    rows = []
    relations_ok = True
    for e in table.entries:
        neg = table.entry(inst.datum.negative(e.root))
        pair = inst.datum.pairing(inst.lam, e.root.vector)
        shift_ok = e.k == neg.k + pair and e.l == neg.l + pair
        relations_ok = relations_ok and shift_ok and e.k <= e.l
        rows.append(
            {
                "root": format_vector(e.root.vector),
                "positive": e.root.positive,
                "curve_bound": e.k,
                "pair_bound": e.l,
                "lambda_pairing": format_rational(pair),
            }
        )
    report = _envelope("bounds", inst.descriptor())
    report["results"] = {"roots": rows, "relations_ok": relations_ok}
    if args.format == "tsv":
        tsv = [("root", "curve_bound", "pair_bound")]
        tsv += [(_root_label(e.root.vector), e.k, e.l) for e in table.entries]
        _emit_tsv(tsv, out)
    else:
        _emit_json(report, out)
    return 0


def _cmd_phi(args: argparse.Namespace, out) -> int:
    inst = Instance(args, need_lambda=True)
    datum = inst.datum
    cur = bounds.curve_exponents(datum, inst.lam, inst.mu)
    fm = bounds.fm_exponent_bound(datum, inst.lam, inst.mu, inst.search)
    profile = bounds.curve_cartan_profile(datum, inst.lam, inst.mu)
    dim = bounds.curve_tangent_dimension(datum, inst.lam, inst.mu)

    def pairs(es: bounds.ExponentSet) -> list[dict[str, object]]:
        return [
            {"root": format_vector(datum.roots[i].vector), "exponent": k}
            for i, k in es.sorted_pairs()
        ]

    report = _envelope("phi", inst.descriptor())
    report["results"] = {
        "curve": pairs(cur),
        "fm_bound": pairs(fm),
        "curve_subset_of_fm": cur.issubset(fm),
        "cartan_profile": list(profile.exponents),
        "cartan_dimension": profile.total,
        "tangent_dimension": dim,
    }
    if args.format == "tsv":
        tsv = [("set", "root", "exponent")]
        tsv += [("curve", _root_label(datum.roots[i].vector), k) for i, k in cur.sorted_pairs()]
        tsv += [("fm", _root_label(datum.roots[i].vector), k) for i, k in fm.sorted_pairs()]
        tsv.append(("tangent_dimension", "", dim))
        _emit_tsv(tsv, out)
    else:
        _emit_json(report, out)
    return 0


def _cmd_cartan(args: argparse.Namespace, out) -> int:
    inst = Instance(args, need_lambda=True)
    datum = inst.datum
    profile = bounds.curve_cartan_profile(datum, inst.lam, inst.mu)
    family = abelian.default_cartan_family(datum)
    directions = []
    ok = True
    for h in family:
        coeffs = h.simple_coefficients(datum)
        expected = (
            0
            if coeffs is None
            else min(profile.exponents[i] for i, c in enumerate(coeffs) if c != 0)
        )
        got = bounds.cartan_bound(datum, inst.lam, inst.mu, h, inst.search, inst.char)
        ok = ok and got == expected
        directions.append(
            {
                "h": [format_rational(c) for c in h.coords],
                "cartan_bound": got,
                "min_support_curve_bound": expected,
            }
        )
    report = _envelope("cartan", inst.descriptor())
    report["results"] = {
        "cartan_profile": list(profile.exponents),
        "cartan_equality": ok,
        "directions": directions,
    }
    report["assumptions"] = abelian.characteristic_assumptions(datum, inst.char)
    report["witnesses"] = [d for d in directions if d["cartan_bound"] != d["min_support_curve_bound"]]
    if args.format == "tsv":
        tsv = [("h", "cartan_bound", "min_support_curve_bound")]
        tsv += [
            (",".join(d["h"]), d["cartan_bound"], d["min_support_curve_bound"])
            for d in directions
        ]
        _emit_tsv(tsv, out)
    else:
        _emit_json(report, out)
    return 1 if report["witnesses"] else 0


def _cmd_classify(args: argparse.Namespace, out) -> int:
    inst = Instance(args, need_lambda=False)
    datum = inst.datum
    cls = abelian.classify_pair(datum, inst.mu)
    report = _envelope("classify", inst.descriptor())
    results: dict[str, object] = {
        "kind": cls.kind,
        "description": cls.describe(),
    }
    if cls.kind == "d_real":
        results["r"] = cls.r
    if cls.kind == "d_quaternionic":
        results.update({"s": cls.s, "t": cls.t, "q": cls.q})
    if cls.is_abelian:
        # an explicit --search overrides the per-type selector set, so a
        # deliberately wrong set can be probed for witnesses
        if inst.search_indices is not None:
            selector = inst.search
        else:
            selector = abelian.selector_weights(datum, inst.mu)
        star = abelian.check_selector_property(
            datum, inst.mu, selector, inst.box_margin
        )
        results["selector"] = [format_vector(w) for w in selector]
        results["selector_property"] = star.checks["selector_property"]
        report["witnesses"] = [w.to_jsonable() for w in star.witnesses]
        report["assumptions"] = star.assumptions
    report["results"] = results
    if args.format == "tsv":
        tsv = [(k, json.dumps(v, sort_keys=True)) for k, v in sorted(results.items())]
        _emit_tsv(tsv, out)
    else:
        _emit_json(report, out)
    return 1 if report["witnesses"] else 0


def _cmd_modp(args: argparse.Namespace, out) -> int:
    data = _load_spec(args.input)
    try:
        series = str(data["series"])
        rank = int(data["rank"])
        f = int(data["f"])
        embeddings = tuple(
            abelian.ResidueEmbedding(int(e["phi"]), parse_vector(e["mu"]))
            for e in data["embeddings"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad modp datum: {exc}") from None
    char = args.char or 0
    try:
        product = abelian.residue_product(
            abelian.ResidueInput(series, rank, f, embeddings), char
        )
    except (ValueError, DominanceError) as exc:
        raise InputError(str(exc)) from None
    report = _envelope(
        "modp",
        {"series": series, "rank": rank, "f": f, "characteristic": char},
    )
    report["results"] = product.to_jsonable()
    if args.format == "tsv":
        tsv = [("phi", "mu", "classification", "verdict_at_minimal")]
        tsv += [
            (
                fac.phi,
                _root_label(fac.mu),
                fac.classification.kind,
                fac.verdict_at_minimal.status,
            )
            for fac in product.factors
        ]
        _emit_tsv(tsv, out)
    else:
        _emit_json(report, out)
    return 0


# -- verify sweep -------------------------------------------------------------------


def _verify_one(
    work: tuple[str, int, tuple[int, ...], tuple[int, ...], int, bool, tuple[int, ...] | None]
) -> dict[str, object]:
    """Evaluate one lambda of a verify sweep (top level: process-pool safe)."""
    series, rank, mu_d, lam_d, char, use_oracle, search_indices = work
    datum = build_root_datum(series, rank)
    mu, lam = Vec(mu_d), Vec(lam_d)
    if search_indices is None:
        search = abelian.selector_weights(datum, mu)
    else:
        search = bounds.search_from_indices(datum, search_indices)
    rr = abelian.check_root_equality(datum, mu, lam, search)
    cr = abelian.check_cartan_equality(datum, mu, lam, search=search, char=char)
    cls = abelian.classify_pair(datum, mu)
    boundary = (
        abelian.quaternionic_boundary(datum, lam)
        if cls.kind == "d_quaternionic"
        else None
    )
    if not (rr.certified and cr.certified):
        status = "not_certified"
    elif cls.kind == "d_quaternionic" and boundary:
        status = "certified_minimal_lambda"
    else:
        status = "certified"
    entry: dict[str, object] = {
        "lambda": format_vector(lam),
        "status": status,
        "boundary_condition": boundary,
        "root_equality": rr.checks["root_equality"],
        "cartan_equality": cr.checks["cartan_equality"],
        "witnesses": [w.to_jsonable() for w in rr.witnesses + cr.witnesses],
    }
    if use_oracle:
        mismatches = []
        for r in datum.roots:
            k = bounds.curve_bound(datum, lam, mu, r)
            if k != oracle.oracle_k(datum, lam, mu, r):
                mismatches.append({"op": "curve_bound", "root": format_vector(r.vector)})
            l = bounds.fm_bound(datum, lam, mu, r, search)
            if l != oracle.oracle_l(datum, lam, mu, r, search, char=0):
                mismatches.append({"op": "pair_bound", "root": format_vector(r.vector)})
        entry["oracle_agreement"] = not mismatches
        entry["oracle_mismatches"] = mismatches
    return entry


def _cmd_verify(args: argparse.Namespace, out) -> int:
    inst = Instance(args, need_lambda=False)
    datum = inst.datum
    cls = abelian.classify_pair(datum, inst.mu)
    if not cls.is_abelian:
        raise InputError(
            f"({datum.label}, {inst.mu}) is {cls.describe()}; verify needs an "
            "abelian-type mu"
        )
    lams = [inst.lam] if inst.lam is not None else list(abelian.dominant_below(datum, inst.mu))
    work = [
        (
            datum.series,
            datum.rank,
            tuple(inst.mu),
            tuple(lam),
            inst.char,
            args.oracle,
            inst.search_indices,
        )
        for lam in lams
    ]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            entries = list(pool.map(_verify_one, work))
    else:
        entries = [_verify_one(w) for w in work]

    unexpected = 0
    expected_gaps = 0
    certified = 0
    for e in entries:
        if e["status"] in ("certified", "certified_minimal_lambda"):
            certified += 1
            ok = True
        elif args.expect_dh_gap and cls.kind == "d_quaternionic" and not e["boundary_condition"]:
            expected_gaps += 1
            ok = True
        else:
            ok = False
        if not e.get("oracle_agreement", True):
            ok = False
        if not ok:
            unexpected += 1
        e["expected"] = ok
    report = _envelope("verify", inst.descriptor())
    report["results"] = {
        "classification": cls.describe(),
        "instances": entries,
        "summary": {
            "total": len(entries),
            "certified": certified,
            "expected_gaps": expected_gaps,
            "unexpected": unexpected,
        },
    }
    report["assumptions"] = abelian.characteristic_assumptions(datum, inst.char)
    if args.format == "tsv":
        tsv = [("lambda", "status", "expected")]
        tsv += [
            (",".join(e["lambda"]), e["status"], str(e["expected"]).lower())
            for e in entries
        ]
        _emit_tsv(tsv, out)
    else:
        _emit_json(report, out)
    return 0 if unexpected == 0 else 1


# -- argument parsing ----------------------------------------------------------------


def _add_instance_flags(p: argparse.ArgumentParser, with_lambda: bool = True) -> None:
    p.add_argument("--spec", help="JSON instance-spec file")
    p.add_argument("--series", choices=["A", "B", "C", "D"])
    p.add_argument("--rank", type=int)
    p.add_argument("--mu", help="comma-separated rationals, e.g. 3,3,3,0 or 1/2,1/2")
    if with_lambda:
        p.add_argument("--lam", "--lambda", dest="lam", help="same format as --mu")
    p.add_argument("--char", type=int, default=None, help="0 (default) or an odd prime")
    p.add_argument("--search", help="1-based fundamental-weight indices, e.g. 1,3,4")
    p.add_argument("--box-margin", type=int, default=None)
    p.add_argument("--format", choices=["json", "tsv"], default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schubtan",
        description="Exact tangent-space bounds of affine Schubert varieties "
        "at torus-fixed points.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="per-root curve and pair bounds")
    _add_instance_flags(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("phi", help="exponent sets, Cartan profile, dimension")
    _add_instance_flags(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("cartan", help="Cartan-bound comparisons for the H family")
    _add_instance_flags(p)
    p.set_defaults(func=_cmd_cartan)

    p = sub.add_parser("classify", help="abelian-type classification and selector set")
    _add_instance_flags(p, with_lambda=False)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="sweep lambda below mu and certify equalities")
    _add_instance_flags(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the oracle")
    p.add_argument(
        "--expect-dh-gap",
        action="store_true",
        help="count quaternionic-D gaps off the boundary condition as expected",
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for the sweep")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("modp", help="restriction-of-scalars datum")
    p.add_argument("input", help="JSON file with series, rank, f, embeddings")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.set_defaults(func=_cmd_modp)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DominanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
