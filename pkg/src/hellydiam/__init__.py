"""hellydiam: quantitative Helly theorems for diameter, executably.

Exact rational convex geometry (H-polytopes, LPs, vertex enumeration)
under Helly / Tverberg / selection / weak-net / (p,q) machinery where
every theorem returns a certificate that is re-verified before use.
"""

from .caps import CapCover, CapParams, build_cover, cap_fraction, pigeonhole_direction
from .core import (
    ConvexBody,
    Family,
    LpOutcome,
    Segment,
    colorful_caratheodory_pair,
    diameter,
    directional_extremum,
    hull_membership,
    intersect,
    pt,
    radon_partition,
    solve_lp,
    v_width,
    vertices,
)
from .diameter_helly import (
    ColourfulCounterexample,
    DiameterWitness,
    colorful_helly_diameter,
    fractional_helly_diameter,
)
from .errors import (
    CoverageUnverified,
    EmptyBody,
    GeometryError,
    GroundSetInsufficient,
    HypothesisFailed,
    InternalError,
    PreconditionFailed,
    Unbounded,
)
from .extremal import ClaimFamily, ClaimReport, build_claim_family, verify_claim
from .generators import GeneratorSpec, generate
from .pq import (
    FractionalWeights,
    GroundSet,
    PartitionResult,
    PqCondition,
    PqReport,
    Transversal,
    check_pq,
    fractional_packing,
    fractional_transversal,
    ground_set,
    partition_large_intersections,
    pq_transversal,
    transversal_from_weights,
)
from .scaling import scaling_experiment
from .tverberg import (
    NetResult,
    SelectionResult,
    TverbergResult,
    selection_diameter,
    tverberg_diameter,
    weak_net_diameter,
)
from .width_helly import (
    ClassWitness,
    RainbowChoice,
    WidthCounterexample,
    WidthWitness,
    colorful_helly_width,
    fractional_helly_width,
    helly_width_witness,
)

__version__ = "0.1.0"
