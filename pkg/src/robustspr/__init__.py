"""Segment stability and simultaneous strictly-positive-real synthesis."""

__version__ = "0.1.0"

from .config import DEFAULT, Tolerances  # noqa: E402
from .errors import (  # noqa: E402
    DegreeMismatch,
    DimensionMismatch,
    IterationLimit,
    NoDeltaFound,
    NoEpsilonFound,
    NotApplicable,
    SegmentUnstable,
    Unbounded,
    ZeroPolynomial,
)
from .polycore import (  # noqa: E402
    EvenOddParts,
    Poly,
    bilinear_to_s,
    even_odd_split,
    isolate_min_on_halfline,
    normalize_monic,
    sturm_count,
)
from .sprcheck import (  # noqa: E402
    CandidatePoint,
    PositivityReport,
    coefficient_map,
    positivity_on_halfline,
    spr_margin,
    spr_numerator,
    verify_positivity,
    verify_spr,
)
from .stability import (  # noqa: E402
    SegmentVerdict,
    hurwitz_test,
    segment_crossing_function,
    segment_grid_oracle,
    segment_stable,
)
from .synthesis import (  # noqa: E402
    SynthesisResult,
    apply_epsilon,
    find_common_point,
    lift_degree,
    select_epsilon,
    synthesize,
    verify_certificate,
)
