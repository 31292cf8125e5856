import pytest
from common import algebra, ints, is_zero

from rlakit.catalog import build
from rlakit.lie import make_algebra
from rlakit.linalg.field import field_make
from rlakit.linalg.matrix import rank, row_space
from rlakit.linalg.radical import algebra_radical
from rlakit.u0 import (
    Isomorphism,
    change_basis,
    character_module,
    characters,
    composition_factors,
    cosyzygy,
    decompose,
    direct_sum,
    dual,
    free_rank,
    heller,
    hom_space,
    induce,
    is_indecomposable,
    is_isomorphic,
    is_projective,
    is_semisimple,
    make_module,
    module_verify,
    quotient_module,
    radical,
    regular_module,
    restrict,
    socle,
    strip_projectives,
    submodule,
    syzygy,
    tensor,
    trivial_module,
    u0_build,
)
from rlakit.utils import AxiomFailure, BudgetExceeded, DimensionMismatch

context = None


def setup_module():
    global context

    import rlakit

    context = rlakit.Context()


def monomial(U, exponents):
    return U.unit_vector(U.index(exponents))


def invertible(B) -> bool:
    return rank(B) == B.shape[0]


# section 1 - U_0(L)
def test_1_0a__pbw_basis():
    U = u0_build(context, algebra("heisenberg"))
    assert U.dim == 27
    assert U.index([0, 0, 0]) == 0
    assert U.index([2, 2, 2]) == U.top == 26
    assert U.exponents(U.index([1, 2, 0])).tolist() == [1, 2, 0]


def test_1_0b__heisenberg_commutator():
    U = u0_build(context, algebra("heisenberg"))
    x, y, z = monomial(U, [1, 0, 0]), monomial(U, [0, 1, 0]), monomial(U, [0, 0, 1])
    assert ints(U.product(x, y) - U.product(y, x)) == ints(z)
    assert is_zero(U.product(x, U.product(x, x)))


def test_1_0c__p_th_powers_follow_the_p_map():
    U = u0_build(context, algebra("sl2"))
    h = monomial(U, [0, 1, 0])
    assert ints(U.product(h, U.product(h, h))) == ints(h)
    e = monomial(U, [1, 0, 0])
    assert is_zero(U.product(e, U.product(e, e)))


def test_1_0d__locality():
    assert u0_build(context, algebra("heisenberg")).is_local
    assert not u0_build(context, algebra("sl2")).is_local
    assert not u0_build(context, algebra("two_dim_nonabelian")).is_local


def test_1_1a__u0_budget():
    import rlakit

    small = rlakit.Context()
    small.budget_level = "low"
    with pytest.raises(BudgetExceeded):
        u0_build(small, algebra("elementary_abelian", r=6))


# section 2 - modules
def test_2_0a__catalogue_modules():
    assert build(context, "baby_verma_Z0").value.dim == 9
    assert build(context, "rad_Z0").value.dim == 8
    assert build(context, "regular", algebra="heisenberg").value.dim == 27
    assert build(context, "trivial").value.dim == 1


def test_2_0b__module_checks():
    L = algebra("heisenberg")
    actions = [[[0, 0], [0, 0]], [[0, 0], [0, 0]], [[0, 1], [0, 0]]]  # z acts, but [x, y] = z
    report = module_verify(make_module(L, actions))
    assert not report.passed
    assert [c.name for c in report.checks if not c.passed] == ["bracket"]
    assert module_verify(regular_module(context, L)).passed


def test_2_0c__wrong_action_shape():
    L = algebra("heisenberg")
    with pytest.raises(DimensionMismatch):
        make_module(L, [[[0]], [[0]]])


def test_2_1a__characters():
    assert [ints(lam) for lam in characters(context, algebra("two_dim_nonabelian"))] == [[0, 0], [1, 0], [2, 0]]
    assert [ints(lam) for lam in characters(context, algebra("heisenberg"))] == [[0, 0, 0]]
    assert len(characters(context, algebra("torus", r=2))) == 9


def test_2_1b__tensor_and_dual():
    Z = build(context, "baby_verma_Z0").value
    K = trivial_module(Z.algebra)
    assert tensor(Z, K).dim == 9
    assert dual(dual(Z)).is_equal(Z)
    assert module_verify(dual(Z)).passed
    assert module_verify(tensor(Z, dual(Z))).passed


def test_2_1c__restrict_and_induce():
    L = algebra("heisenberg")
    S = row_space(L.field([[1, 0, 0], [0, 0, 1]]))
    N = restrict(regular_module(context, L), S)
    assert N.algebra.n == 2
    assert N.dim == 27
    assert is_projective(context, N)

    H = N.algebra
    induced = induce(context, L, S, trivial_module(H))
    assert induced.dim == 3
    assert module_verify(induced).passed


def test_2_1d__submodule_and_quotient():
    Z = build(context, "baby_verma_Z0").value
    R = radical(context, Z)
    assert R.dim == 8
    assert submodule(Z, R).dim == 8
    top = quotient_module(Z, R)
    assert top.dim == 1
    assert is_zero(top.actions)


UNIPOTENT_ALGEBRAS = [
    ("heisenberg", {}),
    ("elementary_abelian", {"r": 3}),
    ("cubic_cone", {}),
    ("thmA_case", {"omega": 0}),
    ("cubic_cone_chain", {"length": 1}),
    ("random_unipotent", {}),
]


# section 3 - radical and socle
@pytest.mark.parametrize("name,params", UNIPOTENT_ALGEBRAS)
def test_3_0a__radical_of_the_regular_module_is_the_augmentation_ideal(name, params):
    L = algebra(name, **params)
    U = regular_module(context, L)
    d = U.dim
    J = algebra_radical(list(U.actions))
    assert J.dim == d - 1
    images = row_space(J.basis.reshape(-1, d, d).transpose(0, 2, 1).reshape(-1, d), d)
    R = radical(context, U)
    assert images == R
    assert R.dim == d - 1
    assert not R.contains(u0_build(context, L).unit_vector(0))
    assert socle(context, U).dim == 1


def test_3_0b__torus_is_semisimple():
    U = regular_module(context, algebra("torus", r=2))
    assert radical(context, U).dim == 0
    assert is_semisimple(context, U)
    assert composition_factors(context, U) == [1] * 9


def test_3_0c__two_dim_nonabelian():
    U = regular_module(context, algebra("two_dim_nonabelian"))
    assert radical(context, U).dim == 6
    assert socle(context, U).dim == 3


# section 4 - projectives, Heller shifts, decomposition
@pytest.mark.parametrize("n,expected", [(1, 8), (2, 10), (3, 17), (4, 19), (-1, 8), (-2, 10), (-3, 17), (-4, 19)])
def test_4_0a__heller_dimensions_rank_2_p3(n, expected):
    K = trivial_module(algebra("elementary_abelian", r=2))
    assert heller(context, K, n).dim == expected


@pytest.mark.parametrize("n,expected", [(1, 24), (2, 26)])
def test_4_0b__heller_dimensions_rank_2_p5(n, expected):
    K = trivial_module(algebra("elementary_abelian", p=5, r=2))
    assert heller(context, K, n).dim == expected


def test_4_0c__heller_of_the_trivial_catalogue_module():
    M = build(context, "heller_trivial", n=2).value
    assert M.dim == 10


def test_4_1a__shifts_are_inverse():
    L = algebra("heisenberg")
    K = trivial_module(L)
    assert is_isomorphic(context, cosyzygy(context, syzygy(context, K)), K) is Isomorphism.TRUE
    Omega = syzygy(context, K)
    assert is_isomorphic(context, syzygy(context, cosyzygy(context, Omega)), Omega) is Isomorphism.TRUE


@pytest.mark.parametrize("n", [1, 2])
def test_4_1b__dual_of_omega_n(n):
    K = trivial_module(algebra("heisenberg"))
    answer = is_isomorphic(context, dual(heller(context, K, n)), heller(context, K, -n))
    assert answer is Isomorphism.TRUE


def test_4_2a__strip_free_summands():
    L = algebra("elementary_abelian", r=2)
    core = heller(context, trivial_module(L), 2)
    U = regular_module(context, L)
    M = direct_sum(core, U, U)
    stripped = strip_projectives(context, M)
    assert stripped.core.dim == 10
    assert stripped.proj_mult == 2
    assert stripped.projective_dims == [9, 9]
    assert free_rank(context, M) == 2
    assert is_isomorphic(context, stripped.core, core) is Isomorphism.TRUE


def test_4_2b__strip_over_a_frobenius_algebra():
    L = algebra("two_dim_nonabelian")
    stripped = strip_projectives(context, regular_module(context, L))
    assert stripped.core.dim == 0
    assert stripped.projective_dims == [3, 3, 3]

    K1 = character_module(L, L.field([1, 0]))
    M = direct_sum(K1, regular_module(context, L))
    stripped = strip_projectives(context, M)
    assert stripped.core.dim == 1
    assert is_isomorphic(context, stripped.core, K1) is Isomorphism.TRUE


def test_4_3a__decompose():
    L = algebra("two_dim_nonabelian")
    assert sorted(S.dim for S in decompose(context, regular_module(context, L))) == [3, 3, 3]
    assert is_indecomposable(context, build(context, "baby_verma_Z0").value)

    E = algebra("elementary_abelian", r=2)
    K = trivial_module(E)
    M = direct_sum(heller(context, K, 1), K, K)
    assert sorted(S.dim for S in decompose(context, M)) == [1, 1, 8]


def test_4_3b__indecomposability_needs_the_full_search():
    # t1^[3] = t2, t2^[3] = t1; A^2 = -1 makes M simple with End(M) = F_9
    import rlakit

    L = make_algebra(field_make(3), ["t1", "t2"], {}, {0: [0, 1], 1: [1, 0]})
    A = [[0, 1], [2, 0]]
    M = make_module(L, [A, [[0, 2], [1, 0]]])
    assert module_verify(M).passed
    assert is_indecomposable(context, M)
    assert [S.dim for S in decompose(context, M)] == [2]
    assert composition_factors(context, M) == [2]

    tight = rlakit.Context()
    tight.exhaustive_search_limit = 8
    with pytest.raises(BudgetExceeded) as e:
        is_indecomposable(tight, M)
    assert e.value.details == {"count": 9, "budget": 8}
    with pytest.raises(BudgetExceeded):
        composition_factors(tight, M)


# section 5 - Hom and isomorphism
def test_5_0a__hom_dimensions():
    L = algebra("heisenberg")
    K, U = trivial_module(L), regular_module(context, L)
    assert hom_space(context, K, U).shape == (1, 27, 1)
    assert hom_space(context, U, K).shape[0] == 1
    assert hom_space(context, U, U).shape[0] == 27


def test_5_0b__homs_commute_with_the_action():
    Z = build(context, "baby_verma_Z0").value
    R = submodule(Z, radical(context, Z))
    for f in hom_space(context, R, Z):
        for i in range(Z.algebra.n):
            assert ints(f @ R.actions[i]) == ints(Z.actions[i] @ f)


def test_5_1a__isomorphic_after_a_change_of_basis():
    M = heller(context, trivial_module(algebra("elementary_abelian", r=2)), 1)
    rng = context.rng(11)
    F = M.field
    while True:
        B = F(rng.integers(0, 3, size=(M.dim, M.dim)))
        if invertible(B):
            break
    assert is_isomorphic(context, M, change_basis(M, B)) is Isomorphism.TRUE


def test_5_1b__not_isomorphic():
    L = algebra("elementary_abelian", r=2)
    K = trivial_module(L)
    assert is_isomorphic(context, K, regular_module(context, L)) is Isomorphism.FALSE
    assert is_isomorphic(context, heller(context, K, 1), heller(context, K, -1)) is not Isomorphism.TRUE