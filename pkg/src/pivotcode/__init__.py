"""Local and edge-local complementation orbits of graphs, and the
classification of binary linear codes they induce."""

from .graph import (
    Graph,
    Coloring,
    LEFT,
    RIGHT,
    MAX_VERTICES,
    bipartition,
    bits,
    check_coloring,
    components,
    elc_classes,
    elc_toggle,
    elc_via_lc,
    is_bipartite,
    is_connected,
    local_complement,
    mask_of,
    pivot_bipartite,
    relabel,
    side_counts,
    swap_labels,
)
from .canon import (
    CanonicalForm,
    canonical_form,
    canonical_graph,
    canonical_key,
    is_isomorphic,
)
from .orbit import (
    OrbitOverflowError,
    OrbitReport,
    dump_orbit,
    elc_orbit_labeled,
    elc_orbit_unlabeled,
    lc_orbit_unlabeled,
    orbit_canonical_rep,
    orbit_min_degree,
    partition_lc_orbit,
)
from .codes import (
    CodeSummary,
    GenMatrix,
    StandardForm,
    are_equivalent,
    code_to_graph,
    decompose,
    dual,
    gf2_rank,
    graph_to_code,
    hamming_7_4,
    information_sets,
    information_sets_oracle,
    information_sets_via_orbit,
    is_indecomposable,
    is_isodual,
    is_self_dual,
    min_distance,
    min_distance_bruteforce,
    min_distance_via_orbit,
    standard_form,
    summary,
)
from .census import (
    CodeCounts,
    OrbitRow,
    RepSet,
    census_table,
    classify_bipartite,
    classify_stream,
    connected_bipartite_classes,
    connected_graph_classes,
    count_codes,
    euler_transform,
    extend_bipartite,
    read_repset,
    repset_text,
    write_repset,
)
from .formats import (
    from_adjacency_text,
    from_edge_list,
    from_graph6,
    from_matrix_text,
    read_graph6_lines,
    to_adjacency_text,
    to_dot,
    to_edge_list,
    to_graph6,
    to_matrix_text,
    write_graph6_lines,
)

__all__ = [name for name in dir() if not name.startswith("_")]
