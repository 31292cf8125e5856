"""
Incidence graphs on E(2) points.

Two planes can only be joined when they share a line, so candidate pairs are found by grouping the planes by
their lines. A pencil edge is a certificate: the whole family <v, u + t u'> lies in E(2) over every extension.
"""

import itertools
from collections import defaultdict
from typing import List, Optional, Tuple

import galois
import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from rlakit.io.reports import GraphReport, PathReport
from rlakit.linalg.field import field_embedding, field_extension, field_label, vector_to_json
from rlakit.linalg.matrix import as_ints, subspace_intersect
from rlakit.lie.algebra import RestrictedLieAlgebra, bracket, pmap, pmap_polynomial
from rlakit.lie.structure import center, extend_scalars
from rlakit.utils import BadParameters, log, progress

from .points import Plane, e2_points, e2_through, encode, is_cyclic, nullcone_points

PREDICATES = ("pencil", "meet")


def _split(e: Plane, f: Plane) -> Optional[Tuple[galois.FieldArray, galois.FieldArray, galois.FieldArray]]:
    "(v, u, u') with v spanning e n f, e = <v, u> and f = <v, u'>; None unless e and f meet in a line"
    meet = subspace_intersect(e.space, f.space)
    if meet.dim != 1:
        return None
    v = meet.basis[0]
    u = next(b for b in e.basis if not meet.contains(b))
    w = next(b for b in f.basis if not meet.contains(b))
    return v, u, w


def pencil_edge(L: RestrictedLieAlgebra, e: Plane, f: Plane) -> bool:
    """
    True iff e and f meet in a line Kv, v is p-nilpotent and central in both planes, and (u + T u')^[p] vanishes
    as a polynomial in T. [u, u'] itself need not vanish: every member <v, u + t u'> is abelian because v
    commutes with u and u'.
    """
    if e == f:
        raise BadParameters("a pencil edge joins two distinct planes")
    parts = _split(e, f)
    if parts is None:
        return False
    v, u, w = parts
    if np.any(as_ints(bracket(L, v, u))) or np.any(as_ints(bracket(L, v, w))):
        return False
    if np.any(as_ints(pmap(L, v))):
        return False
    return not any(np.any(as_ints(c)) for c in pmap_polynomial(L, u, w))


def _meets(L: RestrictedLieAlgebra, e: Plane, f: Plane) -> bool:
    return subspace_intersect(e.space, f.space).dim == 1


def incidence_graph(
    context, L: RestrictedLieAlgebra, planes: List[Plane], predicate: str = "pencil", all_edges: bool = False
) -> nx.Graph:
    """
    Nodes are the indices of `planes` (attributes `plane` and `label`), edges satisfy the predicate.

    * predicate: "pencil" (certifying) or "meet" (the planes share a line; exploratory only)
    * all_edges: test every candidate pair. By default pairs already in one component are skipped, which keeps
        the components but not every edge.
    """
    if predicate not in PREDICATES:
        raise BadParameters(f"unknown predicate: {predicate}", predicate=predicate)
    if len(set(planes)) != len(planes):
        raise BadParameters("the planes of an incidence graph must be pairwise distinct")
    test = pencil_edge if predicate == "pencil" else _meets
    q = int(planes[0].space.field.order) if planes else 0

    G = nx.Graph(predicate=predicate, certifying=predicate == "pencil")
    by_line = defaultdict(list)
    for i, e in enumerate(planes):
        G.add_node(i, plane=e, label=e.label(L))
        for code in encode(e.lines(), q).tolist():
            by_line[code].append(i)

    forest = UnionFind(range(len(planes)))
    for members in progress(list(by_line.values()), context, desc="pencil edges"):
        if len(members) < 2:
            continue
        if not all_edges and len({forest[i] for i in members}) == 1:
            continue
        for i, j in itertools.combinations(members, 2):
            if not all_edges and forest[i] == forest[j]:
                continue
            if test(L, planes[i], planes[j]):
                G.add_edge(i, j, predicate=predicate)
                forest.union(i, j)

    log.info(f"{predicate} graph: {G.number_of_nodes()} nodes, {G.number_of_edges()} edges")
    return G


def components(G: nx.Graph) -> List[List[int]]:
    "Connected components as sorted node lists, ordered by their smallest node"
    return sorted(sorted(c) for c in nx.connected_components(G))


def verify_edges_over_extension(context, L: RestrictedLieAlgebra, G: nx.Graph, samples: int = 5) -> bool:
    """
    Re-checks every pencil edge on `samples` random members <v, u + t u'> with t in the quadratic extension of
    the base field.
    """
    E = field_extension(L.field, 2)
    LE = extend_scalars(L, E)
    embed = field_embedding(L.field, E)
    rng = context.rng(2)
    for i, j in G.edges:
        v, u, w = (embed(x) for x in _split(G.nodes[i]["plane"], G.nodes[j]["plane"]))
        t = E(rng.integers(0, E.order, size=samples))
        members = u[None, :] + t[:, None] * w[None, :]
        vs = np.broadcast_to(as_ints(v), members.shape)
        if np.any(as_ints(pmap(LE, members))) or np.any(as_ints(bracket(LE, E(vs.copy()), members))):
            log.warning(f"pencil edge {G.nodes[i]['label']} -- {G.nodes[j]['label']} fails over {field_label(E)}")
            return False
    return True


def graph_report(
    context,
    L: RestrictedLieAlgebra,
    G: nx.Graph,
    check_extension: bool = False,
) -> GraphReport:
    """
    Summary of an incidence graph. A connected pencil graph certifies that its points lie in one component of
    the variety. Several components are only conclusive when the point set does not grow over the quadratic
    extension (`check_extension`); otherwise the status is "inconclusive".
    """
    comps = components(G)
    predicate = G.graph["predicate"]
    certifying = G.graph["certifying"]
    stable = verified = None
    if check_extension and G.number_of_nodes():
        extended = e2_points(context, L, field_extension(L.field, 2))
        stable = len(extended) == G.number_of_nodes()
        if certifying:
            verified = verify_edges_over_extension(context, L, G)

    if not comps:
        status = "empty"
    elif len(comps) == 1:
        status = "connected" if certifying else "inconclusive"
    elif stable:
        status = "disconnected"
    else:
        status = "inconclusive"

    return GraphReport(
        nodes=G.number_of_nodes(),
        edges=G.number_of_edges(),
        components=len(comps),
        component_sizes=[len(c) for c in comps],
        predicate=predicate,
        certifying=certifying,
        status=status,
        field=field_label(L.field),
        stable_under_extension=stable,
        edges_verified_over_extension=verified,
    )


def to_dot(G: nx.Graph) -> str:
    "DOT text: node label = plane representative, edge attribute = predicate tag"
    lines = ["graph E2 {"]
    for i, data in G.nodes(data=True):
        lines.append(f'  n{i} [label="{data["label"]}"];')
    for i, j, data in G.edges(data=True):
        lines.append(f'  n{i} -- n{j} [predicate="{data["predicate"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def planes_through_report(context, L: RestrictedLieAlgebra, z0: galois.FieldArray) -> PathReport:
    "E(2, L)_{z0} with its full pencil graph, the size of V(L) and whether L is cyclic"
    planes = e2_through(context, L, z0)
    G = incidence_graph(context, L, planes, all_edges=True)
    return PathReport(
        z0=vector_to_json(L.field, z0),
        central=center(L).space.contains(z0),
        planes=[e.label(L) for e in planes],
        edges=G.number_of_edges(),
        connected=bool(planes) and nx.is_connected(G),
        nullcone_points=len(nullcone_points(context, L)),
        algebra_is_cyclic=is_cyclic(context, L),
    )
