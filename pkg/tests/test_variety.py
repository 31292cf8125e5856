import numpy as np
import pytest
from common import OUTPUT_FOLDER, algebra, plane

from rlakit.catalog import build_algebra
from rlakit.linalg.field import field_make
from rlakit.linalg.matrix import as_ints
from rlakit.utils import BudgetExceeded, NotPNilpotent, NotUnipotent, ZeroVector
from rlakit.variety import (
    components,
    e2_points,
    e2_through,
    graph_report,
    grassmannian2_points,
    incidence_graph,
    is_cyclic,
    maximal_report,
    maxp,
    nullcone_points,
    pencil_edge,
    planes_through_report,
    to_dot,
    verify_edges_over_extension,
)
from rlakit.variety.points import decode, grassmannian2_count

context = None


def setup_module():
    global context

    import rlakit

    context = rlakit.Context()


def labels(L, planes):
    return [e.label(L) for e in planes]


# section 1 - nullcone
def test_1_0a__nullcone_of_sl2_s():
    L = algebra("sl2_s")
    points = nullcone_points(context, L)
    assert points.shape == (15, 4)
    assert as_ints(points[0]).tolist() == [0, 0, 0, 0]
    # h-coordinate zero and e f = 0
    P = as_ints(points)
    assert not np.any(P[:, 1])
    assert not np.any(P[:, 0] * P[:, 2])


@pytest.mark.parametrize("name", ["cubic_cone", "thmA_case"])
@pytest.mark.parametrize("params", [{"omega": w} for w in range(3)])
def test_1_1a__cubic_cone_nullcone_matches_its_equation(name, params):
    entry = build_algebra(name, **params)
    L = entry.algebra
    q = int(L.field.order)
    everything = L.field(decode(np.arange(q**L.n), q, L.n))
    expected = np.flatnonzero(entry.nullcone_equation(everything))
    points = nullcone_points(context, L)
    assert as_ints(points).tolist() == as_ints(everything[expected]).tolist()
    assert points.shape[0] == 9 * 3  # one g for every (a, b), c free


@pytest.mark.parametrize("name,params", [("cubic_cone_chain", {"length": 2}), ("cubic_cone_split", {})])
def test_1_1b__chain_and_split_nullcones(name, params):
    entry = build_algebra(name, **params)
    L = entry.algebra
    q = int(L.field.order)
    everything = L.field(decode(np.arange(q**L.n), q, L.n))
    mask = np.asarray(entry.nullcone_equation(everything))
    assert nullcone_points(context, L).shape[0] == int(mask.sum())


def test_1_2a__nullcone_over_an_extension():
    L = algebra("elementary_abelian", r=2)
    assert nullcone_points(context, L, field_make(3, 2)).shape == (81, 2)


def test_1_3a__enumeration_budget():
    import rlakit

    small = rlakit.Context()
    small.enumeration_budget = 10
    with pytest.raises(BudgetExceeded):
        nullcone_points(small, algebra("heisenberg"))


# section 2 - Gr_2 and E(2)
def test_2_0a__grassmannian_count():
    F = field_make(3)
    assert grassmannian2_count(4, 3) == 130
    planes = grassmannian2_points(context, 4, F)
    assert len(planes) == 130
    assert len(set(planes)) == 130
    assert planes == sorted(planes)


def test_2_1a__e2_of_sl2_s():
    L = algebra("sl2_s")
    planes = e2_points(context, L)
    assert sorted(labels(L, planes)) == ["<e, c0>", "<f, c0>"]


def test_2_1b__e2_of_elementary_abelian():
    assert len(e2_points(context, algebra("elementary_abelian", r=3))) == 13
    assert len(e2_points(context, algebra("elementary_abelian", r=4))) == 130
    assert e2_points(context, algebra("torus", r=2)) == []


def test_2_1c__e2_of_heisenberg():
    L = algebra("heisenberg")
    planes = e2_points(context, L)
    assert len(planes) == 4
    z = L.basis_vector(2)
    assert all(e.space.contains(z) for e in planes)


def test_2_1d__e2_of_cubic_cone_has_q_plus_1_planes():
    L = algebra("cubic_cone")
    assert len(e2_points(context, L)) == 4
    assert len(e2_points(context, L, field_make(3, 2))) == 10


def test_2_2a__planes_through_a_point():
    L = algebra("heisenberg")
    assert len(e2_through(context, L, L.basis_vector(2))) == 4
    assert labels(L, e2_through(context, L, L.basis_vector(0))) == ["<x, z>"]


def test_2_2b__planes_through_bad_points():
    L = algebra("heisenberg")
    with pytest.raises(ZeroVector):
        e2_through(context, L, L.zero())
    sl2 = algebra("sl2")
    with pytest.raises(NotPNilpotent):
        e2_through(context, sl2, sl2.basis_vector(1))


def test_2_3a__cyclic():
    assert is_cyclic(context, algebra("elementary_abelian", r=1))
    assert not is_cyclic(context, algebra("elementary_abelian", r=2))
    assert not is_cyclic(context, algebra("heisenberg"))
    L = algebra("cubic_cone")
    assert is_cyclic(context, L, plane(L, [0, 0, 1, 0], [0, 0, 0, 1]).space)


# section 3 - pencil graphs
def test_3_0a__sl2_s_has_two_components():
    L = algebra("sl2_s")
    planes = e2_points(context, L)
    G = incidence_graph(context, L, planes)
    assert len(components(G)) == 2
    assert graph_report(context, L, G).status == "inconclusive"
    report = graph_report(context, L, G, check_extension=True)
    assert report.stable_under_extension
    assert report.status == "disconnected"


def test_3_0b__heisenberg_is_connected():
    L = algebra("heisenberg")
    planes = e2_points(context, L)
    G = incidence_graph(context, L, planes, all_edges=True)
    assert G.number_of_edges() == 6
    report = graph_report(context, L, G, check_extension=True)
    assert report.status == "connected"
    assert report.component_sizes == [4]
    assert report.edges_verified_over_extension


def test_3_0c__pencil_edge():
    L = algebra("heisenberg")
    e = plane(L, [1, 0, 0], [0, 0, 1])
    f = plane(L, [0, 1, 0], [0, 0, 1])
    assert pencil_edge(L, e, f)
    M = algebra("cubic_cone")
    assert not pencil_edge(M, plane(M, [1, 0, 0, 0], [0, 0, 0, 1]), plane(M, [0, 1, 0, 0], [0, 0, 0, 1]))


CONNECTED_ALGEBRAS = [("heisenberg", {}), ("elementary_abelian", {"r": 3}), ("elementary_abelian", {"r": 4})]


@pytest.mark.parametrize("name,params", CONNECTED_ALGEBRAS)
@pytest.mark.parametrize("k", [1, 2])
def test_3_1a__pencil_graphs_are_connected(name, params, k):
    L = algebra(name, k=k, **params)
    G = incidence_graph(context, L, e2_points(context, L))
    report = graph_report(context, L, G)
    assert report.field == ("GF(3)" if k == 1 else "GF(3^2)")
    assert report.status == "connected"
    assert verify_edges_over_extension(context, L, G)


@pytest.mark.parametrize("omega", [0, 1, 2])
def test_3_2a__cubic_cone_pencil_graph_is_inconclusive(omega):
    # every plane of E(2) contains c, and the cubic curve they trace contains no line
    L = algebra("cubic_cone", omega=omega)
    planes = e2_points(context, L)
    report = graph_report(context, L, incidence_graph(context, L, planes), check_extension=True)
    assert report.edges == 0
    assert report.components == 4
    assert report.stable_under_extension is False
    assert report.status == "inconclusive"


def test_3_2b__meet_graph_is_not_certifying():
    L = algebra("cubic_cone")
    G = incidence_graph(context, L, e2_points(context, L), predicate="meet")
    report = graph_report(context, L, G)
    assert report.components == 1
    assert not report.certifying
    assert report.status == "inconclusive"


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("seed", range(20))
def test_3_3a__random_unipotent_pencil_graphs_are_connected(seed, n, k):
    # the last central basis vector is p-nilpotent and every plane is one pencil step from a plane through it
    L = algebra("random_unipotent", n=n, seed=seed, k=k)
    planes = e2_points(context, L)
    if not planes:
        assert is_cyclic(context, L)
        return
    G = incidence_graph(context, L, planes)
    assert graph_report(context, L, G).status == "connected"
    assert verify_edges_over_extension(context, L, G)


def test_3_4a__dot_output():
    L = algebra("heisenberg")
    G = incidence_graph(context, L, e2_points(context, L), all_edges=True)
    dot = to_dot(G)
    assert dot.startswith("graph E2 {")
    assert dot.count("--") == 6
    with open(f"{OUTPUT_FOLDER}/heisenberg.dot", "w") as f:
        f.write(dot)


def test_3_5a__planes_through_the_center():
    L = algebra("heisenberg")
    report = planes_through_report(context, L, L.basis_vector(2))
    assert report.central
    assert len(report.planes) == 4
    assert report.edges == 6
    assert report.connected
    assert report.nullcone_points == 27
    assert not report.algebra_is_cyclic


# section 4 - maximal p-subalgebras
def test_4_0a__maxp_of_heisenberg():
    L = algebra("heisenberg")
    assert len(maxp(context, L)) == 4
    report = maximal_report(context, L)
    assert report.e2_counts == [1, 1, 1, 1]
    assert report.center_codim == 2
    assert len(report.checks) == 6
    assert all(c.passed for c in report.checks)


def test_4_0b__maxp_of_cubic_cone():
    report = maximal_report(context, algebra("cubic_cone"))
    assert report.e2_counts == [1, 1, 1, 1]
    assert report.center_codim == 3
    assert report.center_codim_at_most_3
    assert all(c.intersection_dim == 2 and c.intersection_cyclic for c in report.checks)
    assert all(c.passed for c in report.checks)


def test_4_1a__maxp_needs_a_unipotent_algebra():
    with pytest.raises(NotUnipotent):
        maxp(context, algebra("sl2"))
