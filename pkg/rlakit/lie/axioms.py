import itertools

import numpy as np

from rlakit.io.reports import Check, VerificationReport
from rlakit.linalg.matrix import as_ints, matrix_power
from rlakit.utils import AxiomFailure

from .algebra import RestrictedLieAlgebra, ad_basis, ad_matrix, bracket


def verify_axioms(L: RestrictedLieAlgebra, name: str = None) -> VerificationReport:
    """
    Antisymmetry, the Jacobi identity on basis triples and ad(e_i^[p]) = (ad e_i)^p. Checking the last
    identity on a basis is enough, the p-map then extends by Jacobson's formula. Failures carry the offending
    index tuple.
    """
    n, F, p = L.n, L.field, L.p
    C = as_ints(L.bracket_table)
    checks = []

    witness = None
    for i, j in itertools.product(range(n), repeat=2):
        if np.any(C[i, j] != as_ints(-L.bracket_table[j, i])):
            witness = [i, j]
            break
    checks.append(Check(name="antisymmetry", passed=witness is None, witness=witness))

    witness = None
    if n >= 3:
        E = F.Identity(n)
        for i, j, k in itertools.combinations(range(n), 3):
            a = bracket(L, E[i], bracket(L, E[j], E[k]))
            b = bracket(L, E[j], bracket(L, E[k], E[i]))
            c = bracket(L, E[k], bracket(L, E[i], E[j]))
            if np.any(as_ints(a + b + c)):
                witness = [i, j, k]
                break
    checks.append(Check(name="jacobi", passed=witness is None, witness=witness))

    witness = None
    for i, ad in enumerate(ad_basis(L)):
        if np.any(as_ints(ad_matrix(L, L.pmap_table[i]) - matrix_power(ad, p))):
            witness = [i]
            break
    checks.append(
        Check(
            name="restrictedness",
            passed=witness is None,
            witness=witness,
            detail=None if witness is None else f"ad({L.names[witness[0]]}^[p]) != (ad {L.names[witness[0]]})^p",
        )
    )

    return VerificationReport(subject=name or repr(L), passed=all(c.passed for c in checks), checks=checks)


def require_axioms(L: RestrictedLieAlgebra, name: str = None) -> RestrictedLieAlgebra:
    report = verify_axioms(L, name)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        raise AxiomFailure(f"{name or L} fails {', '.join(failed)}", report=report.model_dump())
    return L
