import numpy as np

from rlakit.lie.algebra import RestrictedLieAlgebra, make_algebra
from rlakit.utils import BadParameters, log


def random_unipotent(F, n: int = 4, seed: int = 0) -> RestrictedLieAlgebra:
    """
    A seeded random unipotent algebra of nilpotency class at most 2, for property tests.

    The basis is a_1..a_m, z_1..z_k with the z_j central. Brackets [a_i, a_j] and the p-powers a_i^[p] are random
    vectors in span(z); z_j^[p] is a random combination of z_{j+1}, ..., z_k. All brackets of length 3 vanish,
    so every Jacobson correction does too and the algebra is restricted. No other structure is guaranteed.
    """
    if n < 2:
        raise BadParameters(f"random_unipotent needs a dimension of at least 2, got {n}", n=n)
    q = int(F.characteristic)
    rng = np.random.default_rng([int(seed), n])
    k = int(rng.integers(1, n))  # 1 <= k <= n - 1
    m = n - k

    def central(low: int = m):
        v = np.zeros(n, dtype=np.int64)
        v[low:] = rng.integers(0, q, size=n - low)
        return v

    brackets = {(i, j): central() for i in range(m) for j in range(i + 1, m)}
    pmaps = {i: central() for i in range(m)}
    pmaps.update({m + j: central(m + j + 1) for j in range(k)})
    names = [f"a{i + 1}" for i in range(m)] + [f"z{j + 1}" for j in range(k)]
    L = make_algebra(F, names, brackets, pmaps)
    log.debug(f"random unipotent algebra (seed {seed}): {m} + {k} dimensions")
    return L
