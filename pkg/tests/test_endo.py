import pytest
from common import CORPUS_ALGEBRAS, algebra, assert_report_passed, heller_corpus, plane

from rlakit.catalog import build
from rlakit.endo import (
    check_degree_duality,
    check_syz3,
    classify_endotrivial,
    constant_rank,
    degree,
    degree_report,
    degree_with_stability,
    generic_kernel,
    is_endotrivial,
    syzygy_function,
    syzygy_value,
)
from rlakit.endo.syzygy import predicted_degree_times_2p
from rlakit.linalg.field import field_make
from rlakit.u0 import (
    Isomorphism,
    character_module,
    characters,
    direct_sum,
    heller,
    is_isomorphic,
    make_module,
    regular_module,
    strip_projectives,
    trivial_module,
    zero_module,
)
from rlakit.utils import (
    BudgetExceeded,
    DimensionDivisibleByP,
    EmptyE2,
    NotConstantRankOnPlane,
    NotEndotrivial,
    NotEndotrivialOnPlane,
    NotSplit,
    NotSupersolvable,
    WalkDepthExceeded,
)

context = None


def setup_module():
    global context

    import rlakit

    context = rlakit.Context()


def rank2():
    return algebra("elementary_abelian", r=2)


def whole_plane(L):
    return plane(L, [1, 0], [0, 1])


def omega(L, n, lam=None):
    K = trivial_module(L) if lam is None else character_module(L, lam)
    return heller(context, K, n)


def padded(M, copies):
    return direct_sum(M, *([regular_module(context, M.algebra)] * copies)) if copies else M


# section 1 - endotriviality
def test_1_0a__endotrivial_modules():
    L = rank2()
    assert is_endotrivial(context, trivial_module(L))
    assert is_endotrivial(context, omega(L, 1))
    assert is_endotrivial(context, omega(L, 2))
    assert is_endotrivial(context, build(context, "rad_Z0").value)


def test_1_0b__modules_that_are_not_endotrivial():
    L = rank2()
    K = trivial_module(L)
    assert not is_endotrivial(context, direct_sum(K, K))
    assert not is_endotrivial(context, zero_module(L))
    assert not is_endotrivial(context, build(context, "baby_verma_Z0").value)


def test_1_0c__tensor_limit():
    with pytest.raises(BudgetExceeded):
        is_endotrivial(context, regular_module(context, algebra("heisenberg")))


# section 2 - constant rank and degrees
def test_2_0a__constant_rank_of_the_regular_module():
    report = constant_rank(context, regular_module(context, rank2()))
    assert report.is_constant
    assert report.rank == 6
    assert report.points_checked == 8


@pytest.mark.parametrize("n,expected", [(0, 0), (2, 6), (-1, 5), (1, 5)])
def test_2_0b__constant_rank_of_heller_shifts(n, expected):
    report = constant_rank(context, omega(rank2(), n))
    assert report.is_constant
    assert report.rank == expected


def test_2_0c__rank_varies():
    L = rank2()
    M = make_module(L, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])
    report = constant_rank(context, M)
    assert not report.is_constant
    assert report.rank is None
    assert sorted(w.rank for w in report.witnesses) == [0, 1]
    with pytest.raises(NotConstantRankOnPlane):
        generic_kernel(context, M, whole_plane(L))


def test_2_1a__degree_of_the_free_module():
    L = rank2()
    U = regular_module(context, L)
    assert generic_kernel(context, U, whole_plane(L)).dim == 6
    assert degree(context, U, whole_plane(L)) == 3
    assert degree_with_stability(context, U, whole_plane(L)) == (3, 6, True)


@pytest.mark.parametrize("n,expected", [(0, 0), (1, 2), (2, 1), (-1, 3), (-2, 5)])
def test_2_1b__degrees_of_heller_shifts(n, expected):
    L = rank2()
    assert degree(context, omega(L, n), whole_plane(L)) == expected


def test_2_1c__degree_is_blind_to_free_summands():
    L = rank2()
    assert degree(context, padded(omega(L, 2), 1), whole_plane(L)) == 1 + 3


def test_2_2a__degrees_of_rad_z0():
    M = build(context, "rad_Z0").value
    assert degree_report(context, M).values_by_label() == {"<e, c0>": 3, "<f, c0>": 2}


@pytest.mark.parametrize("name", ["rad_Z0", "regular"])
def test_2_3a__degree_duality(name):
    params = {"algebra": "elementary_abelian"} if name == "regular" else {}
    M = build(context, name, **params).value
    assert_report_passed(check_degree_duality(context, M), f"duality_{name}")


@pytest.mark.parametrize("name,params", CORPUS_ALGEBRAS)
def test_2_3b__constant_rank_and_duality_on_the_heller_corpus(name, params):
    L = algebra(name, **params)
    p = L.p
    for n, M in heller_corpus(context, L).items():
        report = constant_rank(context, M)
        assert report.is_constant
        if M.dim % p == 1:
            assert report.rank == (p - 1) * (M.dim - 1) // p
        else:
            assert report.rank == (p - 1) * (M.dim + 1) // p - 1
        assert_report_passed(check_degree_duality(context, M, rank=report.rank), f"duality_{name}_{n}")


def test_2_3c__degree_duality_of_omega():
    report = check_degree_duality(context, omega(algebra("heisenberg"), 1))
    assert_report_passed(report, "duality_heisenberg_omega")
    assert {c.rhs for c in report.entries} == {17}


# section 3 - syzygy functions
def test_3_0a__syzygy_function_of_rad_z0():
    report = syzygy_function(context, build(context, "rad_Z0").value)
    assert report.values_by_label() == {"<e, c0>": -1, "<f, c0>": 1}
    assert not report.constant
    assert not report.contradiction_candidate


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
def test_3_0b__syzygy_of_heller_shifts(n):
    L = rank2()
    assert syzygy_value(context, padded(omega(L, n), 1), whole_plane(L)) == n


def test_3_0c__heisenberg_syzygy_function_is_constant():
    report = syzygy_function(context, omega(algebra("heisenberg"), 2))
    assert report.constant
    assert {e.value for e in report.entries} == {2}
    assert len(report.entries) == 4


def test_3_1a__walk_depth():
    L = rank2()
    with pytest.raises(WalkDepthExceeded):
        syzygy_value(context, omega(L, 2), whole_plane(L), depth=1)


def test_3_1b__not_endotrivial_on_a_plane():
    L = rank2()
    K = trivial_module(L)
    with pytest.raises(NotEndotrivialOnPlane):
        syzygy_value(context, direct_sum(K, K), whole_plane(L))


def test_3_1c__empty_e2():
    with pytest.raises(EmptyE2):
        syzygy_function(context, trivial_module(algebra("torus", r=2)))


def test_3_2a__syzygy_over_an_extension():
    L = rank2()
    F9 = field_make(3, 2)
    assert syzygy_value(context, omega(L, -1), whole_plane(L), F=F9) == -1


# section 4 - the degree formula
def test_4_0a__predicted_degree():
    assert predicted_degree_times_2p(3, 8, 1) == 12
    assert predicted_degree_times_2p(3, 8, -1) == 18
    assert predicted_degree_times_2p(3, 10, 2) == 6
    assert predicted_degree_times_2p(3, 1, 0) == 0
    with pytest.raises(DimensionDivisibleByP):
        predicted_degree_times_2p(3, 9, 0)


@pytest.mark.parametrize("name,params", CORPUS_ALGEBRAS)
def test_4_1a__degree_formula_on_the_heller_corpus(name, params):
    L = algebra(name, **params)
    for n, M in heller_corpus(context, L).items():
        assert_report_passed(check_syz3(context, M), f"syz3_{name}_{n}")


def test_4_1b__degree_formula_on_rad_z0():
    report = check_syz3(context, build(context, "rad_Z0").value)
    assert_report_passed(report, "syz3_rad_Z0")
    assert sorted(c.detail for c in report.entries) == ["deg=2, s=1", "deg=3, s=-1"]


def test_4_1c__dimension_divisible_by_p():
    with pytest.raises(DimensionDivisibleByP):
        check_syz3(context, build(context, "baby_verma_Z0").value)


# section 5 - classification
@pytest.mark.parametrize("n", [-3, -2, -1, 0, 1, 2, 3])
def test_5_0a__classify_elementary_abelian(n):
    result = classify_endotrivial(context, omega(rank2(), n))
    assert result.status == "classified"
    assert result.n == n
    assert result.lambda_ == [0, 0]
    assert result.proj_mult == 0


@pytest.mark.parametrize("n", [-3, -2, -1, 0, 1, 2, 3])
@pytest.mark.parametrize("copies", [0, 1, 2])
def test_5_0b__classify_heisenberg(n, copies):
    L = algebra("heisenberg")
    result = classify_endotrivial(context, padded(omega(L, n), copies))
    assert result.status == "classified"
    assert result.n == n
    assert result.proj_mult == copies
    assert result.projective_dims == [27] * copies


@pytest.mark.parametrize("n", [-1, 0, 1, 2])
@pytest.mark.parametrize("copies", [0, 2])
def test_5_0c__classify_two_dim_nonabelian(n, copies):
    # Omega^2 of a character is again a character here, so n is only determined mod 2
    L = algebra("two_dim_nonabelian")
    for lam in characters(context, L):
        M = padded(omega(L, n, lam), copies)
        result = classify_endotrivial(context, M)
        assert result.status == "classified"
        assert (result.n - n) % 2 == 0
        assert result.proj_mult == 3 * copies
        core = strip_projectives(context, M).core
        expected = heller(context, character_module(L, L.field(result.lambda_)), result.n)
        assert is_isomorphic(context, core, expected) is Isomorphism.TRUE


def test_5_0d__classify_padded_elementary_abelian():
    result = classify_endotrivial(context, padded(omega(rank2(), -2), 2))
    assert (result.status, result.n, result.proj_mult) == ("classified", -2, 2)


@pytest.mark.parametrize("n", [-3, -2, 0, 2, 3])
@pytest.mark.parametrize("copies", [0, 2])
def test_5_0e__classify_rank_3_elementary_abelian(n, copies):
    L = algebra("elementary_abelian", r=3)
    result = classify_endotrivial(context, padded(omega(L, n), copies))
    assert result.status == "classified"
    assert result.n == n
    assert result.lambda_ == [0, 0, 0]
    assert result.proj_mult == copies
    assert result.projective_dims == [27] * copies


def test_5_1a__no_match_within_the_depth():
    result = classify_endotrivial(context, omega(rank2(), 3), depth=2)
    assert result.status == "no_match"
    assert result.core_dim == 17
    assert result.reason


def test_5_1b__not_endotrivial():
    L = rank2()
    K = trivial_module(L)
    with pytest.raises(NotEndotrivial):
        classify_endotrivial(context, direct_sum(K, K))
    with pytest.raises(NotEndotrivial):
        classify_endotrivial(context, regular_module(context, algebra("heisenberg")))


def test_5_1c__rad_z0_is_outside_the_supersolvable_case():
    M = build(context, "rad_Z0").value
    with pytest.raises(NotSupersolvable):
        classify_endotrivial(context, M)
    with pytest.raises(NotSplit) as e:
        classify_endotrivial(context, M, force=True)
    assert e.value.details["suggested_degree"] == 2
