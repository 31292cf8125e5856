from .graph import (
    components,
    graph_report,
    incidence_graph,
    pencil_edge,
    planes_through_report,
    to_dot,
    verify_edges_over_extension,
)
from .maximal import maxp, maximal_report
from .points import (
    Plane,
    e2_points,
    e2_through,
    grassmannian2_points,
    is_cyclic,
    nullcone_points,
)
