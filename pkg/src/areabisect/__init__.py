"""Half-area polygons and the envelopes of their area-bisecting lines.

A convex polygon with ``2n`` vertices is *half-area* when every principal
diagonal splits its area in half.  This package validates and constructs
such polygons, computes the mid-points envelope, the discrete envelope
and the hyperbolic envelope of their bisecting lines, detects and counts
envelope cusps, generates the classic example families, realizes the
one-parameter family of polygons sharing a given envelope pair, and
renders figures as SVG.
"""

from .checks import (
    InvariantResult,
    arc_oracle_error,
    characterization_verdicts,
    run_invariant_suite,
    sum_identity_residuals,
)
from .envelope import (
    Classification,
    CuspCriteria,
    CuspReport,
    EnvelopeSet,
    HyperbolicArc,
    classify_symmetry,
    cusp_equivalence_report,
    detect_cusps,
    discrete_envelope,
    envelope_set,
    hyperbolic_envelope,
    midpoints_envelope,
)
from .errors import (
    AllEdgesParallel,
    ClassificationConflict,
    CriteriaDisagree,
    DegenerateEdge,
    DegenerateInput,
    EpsilonTooLarge,
    GeometryError,
    InconsistentArc,
    MalformedDocument,
    NoConvergence,
    NonConvexResult,
    NotATrapezoid,
    OddVertexCount,
    OutsideValidInterval,
    ParallelLines,
    RetriesExhausted,
    ValidationFailed,
)
from .family import (
    EMInvarianceReport,
    HChangeReport,
    InverseFamily,
    compute_valid_interval,
    family_member,
    inverse_family,
    verify_em_invariance,
    verify_h_changes,
)
from .generators import (
    GeneratorConfig,
    generate,
    maximal_cusp_polygon,
    trapezoid_companion_point,
    trapezoid_parallel_bisector,
)
from .geom import (
    AffineMap,
    Line,
    Point,
    Tolerance,
    Vec2,
    asymptote_frame,
    bracket,
    line_intersection,
    polygon_signed_area,
)
from .halfarea import (
    EdgeQuantities,
    FrameCoefficients,
    HalfAreaPolygon,
    HalfAreaReport,
    construct_from_seed,
    is_half_area,
)
from .io import (
    PolygonDocument,
    RenderOptions,
    read_polygon,
    render_svg,
    write_polygon,
)
from .polygon import (
    BoundaryPoint,
    Polygon,
    augment_to_half_area,
    bisecting_chord_from,
    boundary_point_coords,
)

__version__ = "0.1.0"
