"""Partition lattice, observability, and the maximum output decomposition of a BCN."""

from .errors import AnalysisError, InvariantViolation
from .partition import (
    Coloring,
    Partition,
    PevpCheck,
    PevpClause,
    color_classes,
    edge_list,
    gcr,
    is_cc_pevp,
    meet,
    out_neighborhood,
    refines,
)
from .observability import (
    ObservabilityMatrix,
    ObservabilityRow,
    is_observable_columns,
    obs_partition,
    obs_rows,
    refine_partition,
    render_word,
    undecomposable_by_parity,
)
from .search import (
    CongruenceSearch,
    SearchMode,
    count_equal_partitions,
    enumerate_equal_partitions,
    exhaustive_cc_pevps,
    search_cc_pevp,
)
from .decomposition import (
    DecompositionResult,
    QuotientCheck,
    VerificationReport,
    check_projection_autonomy,
    decompose_at_order,
    extract_subsystems,
    max_decomposition,
    max_feasible_order,
    projection,
    q_from_partition,
    t_from_q,
    verify_decomposition,
)
from .regularity import RegularityReport, RegularityScan, Verdict, regularity_test, scan_regularity

__all__ = [
    'AnalysisError',
    'InvariantViolation',
    'Coloring',
    'Partition',
    'PevpCheck',
    'PevpClause',
    'color_classes',
    'edge_list',
    'gcr',
    'is_cc_pevp',
    'meet',
    'out_neighborhood',
    'refines',
    'ObservabilityMatrix',
    'ObservabilityRow',
    'is_observable_columns',
    'obs_partition',
    'obs_rows',
    'refine_partition',
    'render_word',
    'undecomposable_by_parity',
    'CongruenceSearch',
    'SearchMode',
    'count_equal_partitions',
    'enumerate_equal_partitions',
    'exhaustive_cc_pevps',
    'search_cc_pevp',
    'DecompositionResult',
    'QuotientCheck',
    'VerificationReport',
    'check_projection_autonomy',
    'decompose_at_order',
    'extract_subsystems',
    'max_decomposition',
    'max_feasible_order',
    'projection',
    'q_from_partition',
    't_from_q',
    'verify_decomposition',
    'RegularityReport',
    'RegularityScan',
    'Verdict',
    'regularity_test',
    'scan_regularity',
]
