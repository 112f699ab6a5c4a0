"""Spectra of semistable rank-2 bundles on threefolds with a half-anticanonical pencil.

Everything works on numerical data only (intersection numbers, multiplicity
vectors, slope profiles) and in exact rational arithmetic.
"""
from .errors import ArtifactError
from .gm_family import (
    CurveFamily,
    SplittingType,
    d_elliptic,
    d_rational,
    gm_gap_ok,
    kernel_slope,
    restriction_types_elliptic,
    splitting_types_rational,
)
from .hn_polygon import (
    HNPolygon,
    RankDegreePoint,
    hnp_from_points,
    is_semistable_profile,
    polygon_geq,
    slopes,
)
from .riemann_roch import (
    SpectrumInvariants,
    euler_char_integral,
    euler_char_threefold,
    spectrum_degree,
    spectrum_invariants,
    spectrum_rank,
    todd_components,
)
from .spectrum import (
    Spectrum,
    SpectrumConstraints,
    bounds,
    connectedness_check,
    enumerate_spectra,
    h1_value,
    h2_value,
    partial_sum_f,
    symmetry_check,
    vanishing_thresholds,
)
from .threefold import (
    BundleChern,
    NormalizationResult,
    ThreefoldInvariants,
    catalog_lookup,
    normalize,
    slope,
    twist,
    validate_threefold,
)

__version__ = "0.1.0"
