"""Exact combinatorics of Severi degrees on long-edge graphs.

Counts nodal plane curves through general points with arbitrary-precision
integer arithmetic, recovers node polynomials by exact interpolation, and
computes the coefficients of the formal log of the counting series two
independent ways.  Floor diagrams provide a third, independent route to
the same numbers.
"""

from .graphs import (
    EMPTY_GRAPH,
    Edge,
    LongEdgeGraph,
    automorphism_count,
    automorphism_count_with,
    cogenus,
    decompose,
    disjoint_union,
    is_allowable,
    is_offset_template,
    is_template,
    make_edge,
    make_graph,
    multiplicity,
    offset,
    parse_graph_text,
    format_graph_text,
    weight_profile,
)
from .templates import (
    TemplateCatalog,
    allowable_offsets,
    enumerate_graphs,
    enumerate_templates,
    min_allowable_offset,
)
from .counting import (
    enumerate_distributions,
    falling_factorial,
    n_graph,
    n_star,
    orderings_oracle,
    severi_degree,
)
from .qcalc import (
    SimpleGraphH,
    chromatic_derivative_at_zero,
    chromatic_polynomial,
    exp_recover_n,
    make_simple_graph,
    pair_identity,
    q_delta_log,
    q_delta_templates,
    q_graph,
    q_graph_partition_form,
    q_star,
    set_partitions,
    sigma,
)
from .polynomials import (
    RationalPolynomial,
    finite_difference_degree,
    interpolate,
    node_polynomial,
    q_polynomial,
)
from .floor_diagrams import (
    FloorDiagram,
    enumerate_floor_diagrams,
    fd_cogenus,
    fd_multiplicity,
    fmcount,
    from_long_edge,
    make_diagram,
    marking_count,
    parse_diagram_text,
    format_diagram_text,
    restored_long_edge,
    to_long_edge,
)

__version__ = "0.1.0"
