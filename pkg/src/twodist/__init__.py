"""2-distance coloring workbench for embedded planar graphs.

Connected simple planar graphs are carried with explicit rotation systems.
The package colors any such graph with maximum degree at least 6 using at
most 3*Delta + 2 colors so that vertices within distance 2 differ, audits
the exact-rational discharging argument behind that bound on concrete
graphs, and cross-checks everything against a brute-force chromatic oracle.
"""

from .classify import (
    VertexClass,
    classify_all,
    classify_vertex,
    is_bad4,
    is_bad5,
    is_special_vertex,
    neighbor_profile,
)
from .colorer import (
    ColorReport,
    Coloring,
    RunTrace,
    color,
    extend,
    merge_at_cut,
    verify_coloring,
)
from .discharge import (
    AuditReport,
    ChargeLedger,
    Transfer,
    apply_rules,
    audit,
    initial_charges,
    rule_totals,
)
from .errors import (
    BudgetExhausted,
    DegreeBudgetExceeded,
    EmbeddingInvalid,
    GenerationFailed,
    NoSafeColor,
    NotACutVertex,
    NotConnected,
    ParseError,
    PermutationInfeasible,
    SurgeryDisconnects,
    SurgeryNotPlanar,
    TwodistError,
    UnknownVertex,
)
from .oracle import OracleResult, chi2_exact, greedy_square
from .planar import (
    DistanceProfile,
    Face,
    PlanarGraph,
    SplitParts,
    SurgeryResult,
    articulation_points,
    distance_profile,
    edge_key,
    is_cut_vertex,
    split_at,
    square,
    surgery,
    trace_faces,
)
from .reductions import (
    ProofGapReport,
    Reduction,
    apply_reduction,
    check_properness,
    find_reduction,
    match_case,
    match_L2_1,
    match_L2_2,
    match_L2_3,
    match_L2_4,
    match_L2_5,
    match_L2_6,
    match_L2_7,
    match_L2_8,
    match_L2_9,
    match_L2_10,
    match_L2_11,
)
from .workbench import (
    HuntReport,
    gen_planar,
    hunt,
    parse_coloring,
    parse_graph,
    write_coloring,
    write_graph,
)

__version__ = "0.1.0"
