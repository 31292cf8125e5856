import numpy as np
import pytest
from common import algebra, ints, is_zero

from rlakit.catalog import list_entries
from rlakit.linalg.field import field_make
from rlakit.linalg.matrix import full_subspace, kernel_basis, matmul, row_space
from rlakit.lie import (
    algebra_info,
    bracket,
    center,
    cyclic,
    derived_series,
    is_nilpotent,
    is_p_ideal,
    is_supersolvable,
    is_torus,
    is_unipotent,
    jacobson_si,
    make_algebra,
    normalizer,
    p_closure,
    pmap,
    pmap_polynomial,
    quotient,
    require_axioms,
    subalgebra_structure,
    verify_axioms,
)
from rlakit.lie.structure import span_brackets
from rlakit.utils import AxiomFailure, DimensionMismatch, NotAnIdeal, NotPClosed
from rlakit.variety import grassmannian2_points
from rlakit.variety.points import decode

RANDOM_PAIRS = 100

context = None


def setup_module():
    global context

    import rlakit

    context = rlakit.Context()


def catalogue_algebras():
    return [name for name, info in list_entries().items() if info["kind"] == "algebra"]


# section 1 - axioms
@pytest.mark.parametrize("name", catalogue_algebras())
def test_1_0a__catalogue_algebras_are_restricted(name):
    report = verify_axioms(algebra(name), name)
    assert report.passed
    assert [c.name for c in report.checks] == ["antisymmetry", "jacobi", "restrictedness"]


def test_1_0b__sl2_at_p5():
    assert verify_axioms(algebra("sl2", p=5)).passed


def test_1_1a__heisenberg_with_a_toral_x_fails():
    F = field_make(3)
    L = make_algebra(F, ["x", "y", "z"], {(0, 1): [0, 0, 1]}, {0: [1, 0, 0]})
    report = verify_axioms(L)
    assert not report.passed
    failed = [c for c in report.checks if not c.passed]
    assert [c.name for c in failed] == ["restrictedness"]
    assert failed[0].witness == [0]
    with pytest.raises(AxiomFailure):
        require_axioms(L)


def test_1_1b__jacobi_failure_has_a_witness():
    F = field_make(3)
    brackets = {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0], (1, 2): [0, 1, 0]}
    L = make_algebra(F, ["a", "b", "c"], brackets, {})
    jacobi = next(c for c in verify_axioms(L).checks if c.name == "jacobi")
    assert not jacobi.passed
    assert jacobi.witness == [0, 1, 2]


def test_1_2a__wrong_number_of_coordinates():
    L = algebra("sl2")
    with pytest.raises(DimensionMismatch):
        L.element([1, 0])


# section 2 - bracket and p-map
def test_2_0a__sl2_brackets():
    L = algebra("sl2")
    e, h, f = (L.basis_vector(i) for i in range(3))
    assert ints(bracket(L, e, f)) == ints(h)
    assert ints(bracket(L, h, e)) == [2, 0, 0]
    assert ints(bracket(L, h, f)) == [0, 0, 1]  # -2f


def test_2_1a__jacobson_terms_of_e_and_f():
    L = algebra("sl2")
    e, f = L.basis_vector(0), L.basis_vector(2)
    s1, s2 = jacobson_si(L, e, f)
    assert ints(s1) == ints(f)
    assert ints(s2) == ints(e)


def test_2_1b__e_is_p_nilpotent_and_h_is_toral():
    L = algebra("sl2")
    assert is_zero(pmap(L, L.basis_vector(0)))
    assert ints(pmap(L, L.basis_vector(1))) == ints(L.basis_vector(1))


def test_2_1c__p_map_of_e_plus_f():
    # (e + f)^[3] = e + f, since e + f is conjugate to h
    L = algebra("sl2")
    x = L.element([1, 0, 1])
    assert ints(pmap(L, x)) == ints(x)


JACOBSON_CASES = [(name, {}) for name in catalogue_algebras()] + [
    ("heisenberg", {"variant": "toral"}),
    ("elementary_abelian", {"r": 3}),
    ("cubic_cone_chain", {"length": 3}),
    ("random_unipotent", {"n": 5, "seed": 3}),
    ("sl2", {"p": 5}),
    ("sl2_s", {"k": 2}),
]


@pytest.mark.parametrize("name,params", JACOBSON_CASES)
def test_2_2a__jacobson_formula_on_random_pairs(name, params):
    L = algebra(name, **params)
    F = L.field
    rng = context.rng(7)
    X = F(rng.integers(0, L.p, size=(RANDOM_PAIRS, L.n)))
    Y = F(rng.integers(0, L.p, size=(RANDOM_PAIRS, L.n)))
    rhs = pmap(L, X) + pmap(L, Y)
    for s in jacobson_si(L, X, Y):
        rhs = rhs + s
    assert ints(pmap(L, X + Y)) == ints(rhs)


def test_2_2b__p_map_is_semilinear_on_scalars():
    L = algebra("sl2_s")
    rng = context.rng(8)
    X = L.field(rng.integers(0, 3, size=(20, 4)))
    two = L.field(2)
    assert ints(pmap(L, two * X)) == ints(two**3 * pmap(L, X))


def test_2_2c__zero_algebra():
    L = make_algebra(field_make(3), [], {}, {})
    assert verify_axioms(L).passed
    assert is_unipotent(L) and is_nilpotent(L) and is_torus(L)
    X = L.zero(RANDOM_PAIRS)
    assert pmap(L, X).shape == (RANDOM_PAIRS, 0)
    assert all(s.shape == (RANDOM_PAIRS, 0) for s in jacobson_si(L, X, X))
    assert center(L).dim == 0


def test_2_3a__p_map_polynomial_of_a_pencil():
    L = algebra("cubic_cone")
    x, y = L.basis_vector(0), L.basis_vector(1)
    coeffs = pmap_polynomial(L, x, y)
    assert len(coeffs) == 4
    for t in L.field.elements:
        value = coeffs[0]
        for k in range(1, 4):
            value = value + t**k * coeffs[k]
        assert ints(value) == ints(pmap(L, x + t * y))


# section 3 - structure
def test_3_0a__center_of_sl2_s():
    C = center(algebra("sl2_s"))
    assert ints(C.basis) == [[0, 0, 0, 1]]
    assert C.is_elementary_abelian


def test_3_0b__predicates():
    sl2, heis, torus = algebra("sl2"), algebra("heisenberg"), algebra("torus", r=2)
    nonab = algebra("two_dim_nonabelian")
    assert not is_supersolvable(sl2)
    assert is_nilpotent(heis) and is_unipotent(heis) and is_supersolvable(heis)
    assert not is_unipotent(algebra("heisenberg", variant="toral"))
    assert is_torus(torus) and not is_unipotent(torus)
    assert is_supersolvable(nonab) and not is_nilpotent(nonab)
    assert is_unipotent(algebra("cubic_cone_chain", length=3))


def test_3_0c__series():
    assert [S.dim for S in derived_series(algebra("sl2"))] == [3]
    assert [S.dim for S in derived_series(algebra("heisenberg"))] == [3, 1, 0]


def test_3_1a__p_closure_and_cyclic():
    L = algebra("cubic_cone")
    z = L.basis_vector(2)
    Z = cyclic(L, z)
    assert Z.dim == 2
    assert ints(Z.basis) == [[0, 0, 1, 0], [0, 0, 0, 1]]
    S = p_closure(L, row_space(L.field([[1, 0, 0, 0], [0, 1, 0, 0]])))
    assert S.dim == 4


def test_3_1b__subalgebra_must_be_p_closed():
    L = algebra("cubic_cone")
    with pytest.raises(NotPClosed):
        subalgebra_structure(L, row_space(L.field([[0, 0, 1, 0]])))


def test_3_2a__quotient_by_the_center():
    L = algebra("heisenberg")
    Q, projection = quotient(L, center(L).space)
    assert Q.n == 2
    assert Q.is_abelian
    assert projection.shape == (2, 3)


def test_3_2b__quotient_by_a_non_ideal():
    L = algebra("heisenberg")
    with pytest.raises(NotAnIdeal):
        quotient(L, row_space(L.field([[1, 0, 0]])))


def test_3_2c__ideals_and_normalizers():
    L = algebra("sl2_s")
    b = row_space(L.field([[0, 1, 0, 1], [1, 0, 0, 0]]))
    assert not is_p_ideal(L, b)
    assert normalizer(L, b).space == row_space(L.field([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]))
    assert is_p_ideal(L, center(L).space)


def subspaces(L):
    "Every nonzero proper subspace of L; complete for dim L <= 4"
    F, n = L.field, L.n
    q = int(F.order)
    vectors = F(decode(np.arange(1, q**n), q, n))
    found = {row_space(v.reshape(1, n), n) for v in vectors}
    found |= {kernel_basis(v.reshape(1, n)) for v in vectors}
    if n >= 2:
        found |= {e.space for e in grassmannian2_points(context, n, F)}
    return sorted((S for S in found if 0 < S.dim < n), key=lambda S: S.key)


SMALL_ALGEBRAS = [
    ("sl2", {}),
    ("sl2_s", {}),
    ("b_s", {}),
    ("two_dim_nonabelian", {}),
    ("heisenberg", {}),
    ("heisenberg", {"variant": "toral"}),
    ("elementary_abelian", {"r": 3}),
    ("torus", {"r": 2}),
    ("cubic_cone", {}),
    ("random_unipotent", {}),
]
NILPOTENT_ALGEBRAS = [
    ("heisenberg", {}),
    ("elementary_abelian", {"r": 3}),
    ("cubic_cone", {}),
    ("random_unipotent", {}),
]


def test_3_2d__sl2_s_modulo_its_center_is_sl2():
    L = algebra("sl2_s")
    Q, projection = quotient(L, row_space(L.field([[0, 0, 0, 1]])))
    sl2 = algebra("sl2")
    assert Q.names == ("e", "h", "f")
    assert ints(Q.bracket_table) == ints(sl2.bracket_table)
    assert ints(Q.pmap_table) == ints(sl2.pmap_table)
    assert ints(projection) == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]


@pytest.mark.parametrize("name,params", SMALL_ALGEBRAS)
def test_3_2e__quotients_by_every_p_ideal_are_restricted(name, params):
    L = algebra(name, **params)
    ideals = [S for S in subspaces(L) if is_p_ideal(L, S)]
    ideals += [full_subspace(L.field, L.n)]
    for I in ideals:
        Q, projection = quotient(L, I)
        assert Q.n == L.n - I.dim
        assert verify_axioms(Q).passed
        # row i of P is the image of e_i; the projection respects brackets and p-powers
        E, P = L.field.Identity(L.n), projection.T
        products = bracket(L, E[:, None, :], E[None, :, :])
        assert ints(matmul(products, P)) == ints(bracket(Q, P[:, None, :], P[None, :, :]))
        assert ints(matmul(pmap(L, E), P)) == ints(pmap(Q, P))


@pytest.mark.parametrize("name,params", NILPOTENT_ALGEBRAS)
def test_3_2f__proper_subalgebras_of_a_nilpotent_algebra_grow_under_the_normalizer(name, params):
    L = algebra(name, **params)
    assert is_nilpotent(L)
    subalgebras = [S for S in subspaces(L) if S.contains_subspace(span_brackets(L, S, S))]
    assert subalgebras
    for S in subalgebras:
        N = normalizer(L, S)
        assert N.space.contains_subspace(S)
        assert N.dim > S.dim


@pytest.mark.parametrize("name,params", SMALL_ALGEBRAS)
def test_3_2g__p_closure_is_the_least_p_subalgebra(name, params):
    L = algebra(name, **params)
    candidates = subspaces(L)
    p_subalgebras = [S for S in candidates if p_closure(L, S).space == S]
    for S in candidates:
        P = p_closure(L, S)
        assert P.is_p_closed
        assert P.space.contains_subspace(S)
        assert P.space.contains_subspace(span_brackets(L, P.space, P.space))
        assert P.space.contains(pmap(L, P.basis))
        assert all(T.contains_subspace(P.space) for T in p_subalgebras if T.contains_subspace(S))


@pytest.mark.parametrize("name,params", SMALL_ALGEBRAS + [("cubic_cone_chain", {"length": 2})])
def test_3_2h__unipotence_matches_a_scan_of_every_element(name, params):
    L = algebra(name, **params)
    q = int(L.field.order)
    X = L.field(decode(np.arange(q**L.n), q, L.n))
    assert is_unipotent(L) == (is_nilpotent(L) and is_zero(pmap(L, X, iterations=L.n)))


def test_3_3a__algebra_info():
    info = algebra_info(algebra("sl2_s"), "sl2_s")
    assert info.dimension == 4
    assert info.basis == ["e", "h", "f", "c0"]
    assert info.center == [[0, 0, 0, 1]]
    assert not info.supersolvable
    assert not (info.nilpotent or info.unipotent or info.torus)
