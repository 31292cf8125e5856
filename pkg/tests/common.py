import numpy as np

from rlakit.catalog import build_algebra
from rlakit.linalg.matrix import as_ints, row_space
from rlakit.u0 import heller, strip_projectives, trivial_module
from rlakit.variety.points import Plane

OUTPUT_FOLDER = "tmp/tests"

# (name, params) of the algebras the Heller corpus is built over
CORPUS_ALGEBRAS = [
    ("heisenberg", {}),
    ("elementary_abelian", {"r": 3}),
]
CORPUS_SHIFTS = (-2, -1, 0, 1, 2)


def algebra(name: str, **params):
    return build_algebra(name, **params).algebra


def plane(L, *rows) -> Plane:
    "The plane spanned by the given coordinate rows"
    e = Plane(row_space(L.field(rows)))
    assert e.space.dim == 2
    return e


def ints(x) -> list:
    return as_ints(x).tolist()


def is_zero(x) -> bool:
    return not np.any(as_ints(x))


def heller_corpus(context, L, shifts=CORPUS_SHIFTS) -> dict:
    "{n: Omega^n(K)} with the projective summands stripped"
    K = trivial_module(L)
    return {n: strip_projectives(context, heller(context, K, n)).core for n in shifts}


def assert_report_passed(report, test_name: str = None):
    failed = [c for c in report.entries if not c.passed]
    if failed and test_name:
        print(f">> {test_name}: failed on {[(c.plane, c.lhs, c.rhs, c.detail) for c in failed]}")
    assert report.passed
    assert not failed
