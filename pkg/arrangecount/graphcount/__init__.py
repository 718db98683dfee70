from .builders import (
    InvalidStep,
    add_pendants,
    attach_copies,
    attach_cycle,
    build_F,
    build_F_affine,
    build_G,
    build_G_ratio,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    relabel_by_dlog,
)
from .counting import (
    DEFAULT_NODE_BUDGET,
    IndependenceCounts,
    IndependentSetCounter,
    count_independent_sets,
    independence_counts,
    pendant_counts,
    union_counts_by_convolution,
)
from .graph import Graph, iter_bits
