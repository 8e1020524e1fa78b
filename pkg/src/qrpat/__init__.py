"""qrpat: exact predictors and deterministic renderers for the parabola
patterns of quadratic-residue plots."""

from .parabola import (
    FractionParams,
    Parabola,
    ParabolaFamily,
    canonical_offsets,
    covering_members,
    evaluate_parabola,
    fraction_params,
    parabola_family,
    residues_near,
    verify_identity,
)
from .patterns import (
    BetaSignature,
    BundleLine,
    DenominatorSet,
    LayoutComparison,
    beta_signature,
    bundle_parameter,
    denominator_set,
    layouts_equivalent,
    vertex_on_bundle,
)
from .render import (
    BundleCurve,
    Canvas,
    Scene,
    VertexMarker,
    overlay_predictions,
    read_pgm,
    render_scatter,
    render_sum_squares,
    sample_bundle_curve,
    write_pgm,
    write_svg,
)
from .residues import (
    Rational,
    ReducedFraction,
    balanced_residue,
    farey_fractions,
    layout_period,
    q_congruent,
    qr_mod,
)

__version__ = "0.1.0"

__all__ = [
    "BetaSignature",
    "BundleCurve",
    "BundleLine",
    "Canvas",
    "DenominatorSet",
    "FractionParams",
    "LayoutComparison",
    "Parabola",
    "ParabolaFamily",
    "Rational",
    "ReducedFraction",
    "Scene",
    "VertexMarker",
    "balanced_residue",
    "beta_signature",
    "bundle_parameter",
    "canonical_offsets",
    "covering_members",
    "denominator_set",
    "evaluate_parabola",
    "farey_fractions",
    "fraction_params",
    "layout_period",
    "layouts_equivalent",
    "overlay_predictions",
    "parabola_family",
    "q_congruent",
    "qr_mod",
    "read_pgm",
    "render_scatter",
    "render_sum_squares",
    "residues_near",
    "sample_bundle_curve",
    "verify_identity",
    "vertex_on_bundle",
    "write_pgm",
    "write_svg",
]
