"""schubtan: exact tangent-space bound combinatorics for affine Schubert varieties.

The package models the classical root systems in explicit coordinates and
computes, entirely in exact arithmetic, the per-root curve bounds, the
weight-pair outer bounds and the Cartan bounds that control the tangent
spaces of affine Schubert varieties at torus-fixed points, together with
the abelian-type classification and selector-set machinery that certifies
when the bounds coincide.
"""

from .abelian import (
    AbelianClass,
    ResidueEmbedding,
    ResidueInput,
    SpanningVerdict,
    VerificationReport,
    Witness,
    check_cartan_equality,
    check_root_equality,
    check_selector_property,
    classify_pair,
    closed_form_cartan_profile,
    default_cartan_family,
    dominant_below,
    minimal_dominant_below,
    quaternionic_boundary,
    residue_product,
    selector_weights,
    spanning_verdict,
)
from .bounds import (
    BoundTable,
    CartanProfile,
    ExponentSet,
    GeodesicWitness,
    NoWeightPairError,
    build_bound_table,
    cartan_bound,
    curve_bound,
    curve_cartan_profile,
    curve_exponents,
    curve_tangent_dimension,
    default_search,
    fm_bound,
    fm_exponent_bound,
    geodesic,
    geodesic_bound,
    search_from_indices,
    varpi_alpha,
)
from .rootdata import (
    ClassicalType,
    DominanceError,
    Root,
    RootDatum,
    build_root_datum,
)
from .vectors import Vec, format_rational, format_vector, parse_rational, parse_vector
from .weylmodules import (
    CartanElement,
    cartan_pair_in_module,
    dominant_weights_below,
    is_minuscule,
    is_module_weight,
    minuscule_weights,
    root_pair_in_module,
    weights_of,
)

__version__ = "0.1.0"
