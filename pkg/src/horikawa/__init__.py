"""Exact-arithmetic toolkit for two-component stable degenerations of
Horikawa surfaces: monomial weight calculus, toric intersection theory on
weighted projective planes and their weighted blow-ups, the singularity
catalog, stability testing of quintic covers, plane-sextic models, and the
machine-checked regeneration of every reference table.

All computations are over the rationals; nothing uses floating point.
Every value is immutable after construction, so the whole API is safe for
unrestricted concurrent use.
"""

from .poly import (
    NonHomogeneousError,
    PolynomialError,
    SparsePolynomial,
    VariableMismatchError,
    arith,
    binary_form_gcd,
    parse_polynomial,
    resultant,
)
from .weights import (
    Monomial110,
    MONOMIALS_110,
    SIGMA_ORDER,
    SINGULARITIES,
    SingularityClass,
    UElement,
    WeightDecomposition,
    boundary_contact_points,
    by_name,
    c_star_act,
    classify,
    count_degree_d_monomials,
    project,
    sigma_generic_necessary,
    theta_tail,
    truncate_dvr,
    weight,
)
from .toric import (
    AmplenessReport,
    BlownUpSurface,
    CyclicQuotientSingularity,
    DivisorClass,
    WPSPlane,
    ample_check,
    aut_dimension,
    blowup,
    canonical_class,
    divisor,
    e_square_from_rays,
    genus_smooth_curve,
    intersect,
    intersect_wps,
    log_canonical_toric,
    log_pair_class,
    quotient_singularities,
    strict_transform_branch_class,
    tail_ample_constant,
)
from .singularities import (
    LOCAL_MODELS,
    NonIsolatedSingularityError,
    adjacency_neighbors,
    catalog_export,
    classify_local,
    local_model,
    milnor_number,
    modality,
)
from .git import (
    NormalFormQuintic,
    NotNormalizableError,
    StabilityReport,
    is_git_stable,
    normalize,
    stability_from_singularities,
)
from .sextics import (
    IncidenceReport,
    NotTransformableError,
    ScanReport,
    SexticModel,
    line_incidence,
    mu_transform,
    sample_element,
    sample_model,
    sextic_model,
    sextic_moduli_dimension,
    singular_scan,
)
from .degeneration import (
    GluingDatum,
    NotSigmaGenericError,
    StableSurfaceDatum,
    YDatum,
    ZDatum,
    boundary_dimension,
    branch_curve_cohomology,
    dvr_compare,
    gamma_ideal,
    gamma_probabilistic_converse,
    gamma_substitution_check,
    gluing,
    hodge_summary,
    stable_surface_datum,
    y_datum,
    z_invariants,
)

__version__ = "1.0.0"
