"""Exact combinatorics of CAT(0) cube complex skeleta at desk scale.

Two interchangeable providers expose the 1-skeleton of a cube complex:
right-angled Coxeter presentations (:mod:`cubemedian.racg`), whose
Cayley graphs are materialized lazily with globally exact distances,
and finite explicit median graphs (:mod:`cubemedian.medgraph`).  On top
of them sit combinatorial geodesics, medians, convex hulls, projections
and thin-triangle estimation (:mod:`cubemedian.geometry`), boundary
points as eventually periodic rays with interval experiments
(:mod:`cubemedian.boundary`), and finite-depth boundary fingerprints
built from recurring edge-color strings
(:mod:`cubemedian.hyperfinite`).  :mod:`cubemedian.cli` wraps it all in
a command line emitting deterministic JSON reports and DOT diagrams.
"""

from .errors import (
    CubeMedianError,
    InternalCheckError,
    InvalidInputError,
    ResourceCapError,
)
from .racg import (
    Ball,
    DefiningGraph,
    GroupElement,
    Hyperplane,
    load_defining_graph,
    parse_word,
    word_to_text,
)
from .medgraph import (
    ExplicitGraph,
    MedianCheck,
    ThetaClasses,
    halfspaces,
    load_explicit_graph,
    theta_classes,
    validate_median,
)
from .geometry import (
    ConvexSet,
    DeltaEstimate,
    GeodesicCheck,
    GeodesicEnumeration,
    Path,
    ball_around,
    convex_hull,
    convex_set,
    delta_estimate,
    geodesics_between,
    interval,
    is_convex,
    is_geodesic,
    median,
    path_from_colors,
    path_from_vertices,
    project,
    project_edge,
    project_path,
    ray_surgery,
    walls_separating_set,
)
from .boundary import (
    FellowTravelReport,
    GeoDiffReport,
    GeoSetResult,
    RaySpec,
    RaySpecCertificate,
    fellow_travel,
    geo_diff_experiment,
    geo_set,
    load_ray_spec,
    materialize,
    ray_spec,
    sample_ray_specs,
    validate_ray_spec,
)
from .hyperfinite import (
    ColoringContext,
    Fingerprint,
    FingerprintComparison,
    LeastStringProfile,
    StringSample,
    ZDiagnostic,
    approx_strings,
    color_string,
    compare_fingerprints,
    fingerprint,
    fingerprint_from_profile,
    k_bound,
    least_strings,
    relatedness_classes,
    z_diagnostic,
)

__version__ = "0.1.0"
