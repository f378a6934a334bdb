"""Finite semilattice operations on chains.

Property predicates for operation tables, the order/operation
correspondence, Hasse-diagram structure, a fast recursive associativity
test, exact counting sequences with brute-force oracles, construction of
compatible total orders, and k-ary reducibility.
"""

from .assoc import (
    ContourPlot,
    FastTestResult,
    ascii_contour,
    contour_plot,
    fast_associativity_test,
    find_zero_by_degree,
)
from .construct import (
    count_ci_orders,
    count_internal_orders,
    count_nondecreasing_orders,
    total_orders_ci,
    total_orders_internal,
    total_orders_nondecreasing,
)
from .counting import (
    all_binary_tree_semilattice_orders,
    all_semilattice_orders,
    binary_ci_count,
    brute_count_operations,
    count_internal_only,
    generate_nondecreasing_orders,
    idempotent_monotone_tables,
    internal_linear_filter_count,
    monotone_tables,
    nondecreasing_order_count,
    shape_count,
    symmetric_idempotent_monotone_tables,
)
from .errors import (
    BoundExceeded,
    NotAssociative,
    NotBinaryTree,
    NotPartialOrder,
    NotSemilattice,
    ParseError,
    PreconditionViolated,
    ReductionMismatch,
    SemilatError,
)
from .hasse import (
    RootedTree,
    TreeShape,
    all_tree_shapes,
    canonical_nondecreasing_labeling,
    cover_pairs,
    dot_hasse,
    has_neutral_element,
    is_binary_tree_semilattice,
    is_nondecreasing_by_structure,
    is_smooth,
    order_from_parent_map,
    rooted_tree,
    satisfies_structure_condition,
    smooth_peak,
)
from .kary import (
    KaryOpTable,
    extend,
    format_kary,
    is_kary_associative,
    is_kary_idempotent,
    is_kary_preserving,
    is_kary_symmetric,
    kary_from_json,
    kary_to_json,
    load_kary,
    parse_kary,
    reduce_to_binary,
)
from .orders import (
    PartialOrder,
    SemilatticeOrder,
    TotalOrder,
    format_order,
    format_total_order,
    has_ci_property,
    has_linear_filter_property,
    is_internal_for,
    is_nondecreasing_for,
    is_single_peaked,
    join_op,
    load_order,
    order_from_json,
    order_from_op,
    order_to_json,
    parse_order,
    parse_total_order,
    principal_ideal,
)
from .tables import (
    DegreeSequence,
    OpTable,
    degree_sequence,
    format_table,
    is_associative,
    is_idempotent,
    is_internal_op,
    is_preserving,
    is_quasitrivial,
    is_symmetric,
    load_table,
    neutral_element,
    parse_table,
    table_from_json,
    table_to_json,
    zero_element,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "ContourPlot",
    "DegreeSequence",
    "FastTestResult",
    "KaryOpTable",
    "NotAssociative",
    "NotBinaryTree",
    "NotPartialOrder",
    "NotSemilattice",
    "OpTable",
    "ParseError",
    "PartialOrder",
    "PreconditionViolated",
    "ReductionMismatch",
    "RootedTree",
    "SemilatError",
    "SemilatticeOrder",
    "TotalOrder",
    "TreeShape",
    "all_binary_tree_semilattice_orders",
    "all_semilattice_orders",
    "all_tree_shapes",
    "ascii_contour",
    "binary_ci_count",
    "brute_count_operations",
    "canonical_nondecreasing_labeling",
    "contour_plot",
    "count_ci_orders",
    "count_internal_only",
    "count_internal_orders",
    "count_nondecreasing_orders",
    "cover_pairs",
    "degree_sequence",
    "dot_hasse",
    "extend",
    "fast_associativity_test",
    "find_zero_by_degree",
    "format_kary",
    "format_order",
    "format_table",
    "format_total_order",
    "generate_nondecreasing_orders",
    "has_ci_property",
    "has_linear_filter_property",
    "has_neutral_element",
    "idempotent_monotone_tables",
    "internal_linear_filter_count",
    "is_associative",
    "is_binary_tree_semilattice",
    "is_idempotent",
    "is_internal_for",
    "is_internal_op",
    "is_kary_associative",
    "is_kary_idempotent",
    "is_kary_preserving",
    "is_kary_symmetric",
    "is_nondecreasing_by_structure",
    "is_nondecreasing_for",
    "is_preserving",
    "is_quasitrivial",
    "is_single_peaked",
    "is_smooth",
    "is_symmetric",
    "join_op",
    "kary_from_json",
    "kary_to_json",
    "load_kary",
    "load_order",
    "load_table",
    "monotone_tables",
    "neutral_element",
    "nondecreasing_order_count",
    "order_from_json",
    "order_from_op",
    "order_from_parent_map",
    "order_to_json",
    "parse_kary",
    "parse_order",
    "parse_table",
    "parse_total_order",
    "principal_ideal",
    "reduce_to_binary",
    "rooted_tree",
    "satisfies_structure_condition",
    "shape_count",
    "smooth_peak",
    "symmetric_idempotent_monotone_tables",
    "table_from_json",
    "table_to_json",
    "total_orders_ci",
    "total_orders_internal",
    "total_orders_nondecreasing",
    "zero_element",
]
