"""
U_0(L)-modules as matrix representations: the action matrices of the basis of L on column vectors.
"""

import itertools
from dataclasses import dataclass, field
from typing import List, Optional

import galois
import numpy as np

from rlakit.io.reports import Check, VerificationReport
from rlakit.linalg.field import field_embedding
from rlakit.linalg.matrix import (
    Subspace,
    as_ints,
    block_diag,
    full_subspace,
    inverse,
    kernel_basis,
    kron,
    matmul,
    matrix_power,
    row_space,
    stack_rows,
)
from rlakit.lie.algebra import RestrictedLieAlgebra
from rlakit.lie.axioms import require_axioms
from rlakit.lie.structure import PSubalgebra, extend_scalars, rebase, span_brackets, subalgebra_structure
from rlakit.utils import AxiomFailure, BadParameters, DimensionMismatch, check_budget, log
from rlakit.variety.points import decode, encode

from .enveloping import u0_build


@dataclass(eq=False)
class RepModule:
    """
    * algebra: the restricted Lie algebra acting
    * actions: field array of shape (n, d, d); actions[i] is the matrix of e_i
    * name: a label for logs and reports
    """

    algebra: RestrictedLieAlgebra
    actions: galois.FieldArray
    name: str = ""
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = self.algebra.n
        if self.actions.ndim != 3 or self.actions.shape[0] != n or self.actions.shape[1] != self.actions.shape[2]:
            raise DimensionMismatch(f"expected actions of shape ({n}, d, d), got {self.actions.shape}")

    def __repr__(self) -> str:
        return f"RepModule({self.name or 'M'}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return self.actions.shape[1]

    @property
    def field(self):
        return self.algebra.field

    def act(self, x: galois.FieldArray) -> galois.FieldArray:
        "rho(x) for an element x of L"
        n, d = self.algebra.n, self.dim
        return matmul(x.reshape(1, n), self.actions.reshape(n, d * d)).reshape(d, d)

    def word(self, indices) -> galois.FieldArray:
        "rho(e_{i_k}) ... rho(e_{i_1}) for indices (i_1, ..., i_k)"
        out = self.field.Identity(self.dim)
        for i in indices:
            out = matmul(self.actions[i], out)
        return out

    def is_equal(self, other: "RepModule") -> bool:
        "Same algebra and identical action matrices"
        return (
            self.algebra == other.algebra
            and self.actions.shape == other.actions.shape
            and np.array_equal(as_ints(self.actions), as_ints(other.actions))
        )


def make_module(L: RestrictedLieAlgebra, actions, name: str = "") -> RepModule:
    F = L.field
    actions = actions if isinstance(actions, galois.FieldArray) else F(np.asarray(actions, dtype=np.int64) % L.p)
    return RepModule(L, actions, name)


def module_verify(M: RepModule, name: str = None) -> VerificationReport:
    "rho([e_i, e_j]) = [rho_i, rho_j] for i < j, and rho(e_i^[p]) = rho_i^p"
    L, A = M.algebra, M.actions
    checks = []

    witness = None
    for i, j in itertools.combinations(range(L.n), 2):
        commutator = matmul(A[i], A[j]) - matmul(A[j], A[i])
        if np.any(as_ints(M.act(L.bracket_table[i, j]) - commutator)):
            witness = [i, j]
            break
    checks.append(Check(name="bracket", passed=witness is None, witness=witness))

    witness = None
    for i in range(L.n):
        if np.any(as_ints(M.act(L.pmap_table[i]) - matrix_power(A[i], L.p))):
            witness = [i]
            break
    checks.append(
        Check(
            name="p-map",
            passed=witness is None,
            witness=witness,
            detail=None if witness is None else f"rho({L.names[witness[0]]}^[p]) != rho({L.names[witness[0]]})^p",
        )
    )
    return VerificationReport(subject=name or M.name or repr(M), passed=all(c.passed for c in checks), checks=checks)


def require_module(M: RepModule, name: str = None) -> RepModule:
    report = module_verify(M, name)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        raise AxiomFailure(f"{name or M} fails {', '.join(failed)}", report=report.model_dump())
    return M


def monomials(context, M: RepModule) -> galois.FieldArray:
    "rho(e^a) for every PBW monomial, shape (p^n, d, d); cached on the module"
    cached = M.cache.get("monomials")
    if cached is None:
        U = u0_build(context, M.algebra)
        check_budget(U.dim * M.dim**2, context.enumeration_budget, "monomial action table")
        cached = U.monomial_actions(M.actions)
        M.cache["monomials"] = cached
    return cached


def characters(context, L: RestrictedLieAlgebra, F=None) -> List[galois.FieldArray]:
    """
    X(L): the functionals lambda vanishing on [L, L] with lambda(e_i^[p]) = lambda(e_i)^p, sorted by their
    coordinates. Only the annihilator of [L, L] is enumerated.
    """
    if F is not None and F is not L.field:
        L = extend_scalars(L, F)
    F, n, q = L.field, L.n, int(L.field.order)
    full = full_subspace(F, n)
    annihilator = kernel_basis(span_brackets(L, full, full).basis)
    m = annihilator.dim
    check_budget(q**m, context.enumeration_budget, "character enumeration")
    if m == 0:
        return [F.Zeros(n)]

    lams = matmul(F(decode(np.arange(q**m), q, m)), annihilator.basis)
    lhs = matmul(lams, L.pmap_table.T)
    keep = ~np.any(as_ints(lhs - lams**L.p), axis=1)
    lams = lams[keep]
    order = np.argsort(encode(lams, q), kind="stable")
    return [lams[i] for i in order]


def character_module(L: RestrictedLieAlgebra, lam: galois.FieldArray) -> RepModule:
    "K_lambda: e_i acts by lambda(e_i) on a line"
    lam = lam if isinstance(lam, galois.FieldArray) else L.field(np.asarray(lam, dtype=np.int64) % L.p)
    return RepModule(L, lam.reshape(L.n, 1, 1).copy(), f"K{as_ints(lam).tolist()}")


def trivial_module(L: RestrictedLieAlgebra) -> RepModule:
    return RepModule(L, L.field.Zeros((L.n, 1, 1)), "K")


def regular_module(context, L: RestrictedLieAlgebra) -> RepModule:
    "U_0(L) acting on itself from the left"
    return RepModule(L, u0_build(context, L).left, "U0")


def adjoint_module(L: RestrictedLieAlgebra) -> RepModule:
    return RepModule(L, L.bracket_table.transpose(0, 2, 1).copy(), "ad")


def free_module(context, L: RestrictedLieAlgebra, rank: int) -> RepModule:
    U = u0_build(context, L)
    check_budget(rank * U.dim, context.heller_budget, "free module")
    return direct_sum(*([regular_module(context, L)] * rank)) if rank else zero_module(L)


def zero_module(L: RestrictedLieAlgebra) -> RepModule:
    return RepModule(L, L.field.Zeros((L.n, 0, 0)), "0")


def _same_algebra(*modules: RepModule):
    L = modules[0].algebra
    for M in modules[1:]:
        if M.algebra != L:
            raise DimensionMismatch(f"modules over different algebras: {L} and {M.algebra}")


def tensor(M: RepModule, N: RepModule) -> RepModule:
    "x (m (x) n) = x m (x) n + m (x) x n"
    _same_algebra(M, N)
    F = M.field
    I_M, I_N = F.Identity(M.dim), F.Identity(N.dim)
    actions = [kron(a, I_N) + kron(I_M, b) for a, b in zip(M.actions, N.actions)]
    return RepModule(M.algebra, _stack(F, actions, M.dim * N.dim), f"({M.name} (x) {N.name})")


def dual(M: RepModule) -> RepModule:
    "(x f)(m) = -f(x m), in the dual basis"
    return RepModule(M.algebra, -M.actions.transpose(0, 2, 1), f"{M.name}*")


def direct_sum(*modules: RepModule) -> RepModule:
    _same_algebra(*modules)
    L = modules[0].algebra
    d = sum(M.dim for M in modules)
    actions = [block_diag([M.actions[i] for M in modules]) for i in range(L.n)]
    return RepModule(L, _stack(L.field, actions, d), " + ".join(M.name for M in modules))


def _stack(F, matrices, d: int) -> galois.FieldArray:
    if not matrices:
        return F.Zeros((0, d, d))
    return F(np.stack([as_ints(m) for m in matrices]))


def extend_module(M: RepModule, E) -> RepModule:
    "M (x) E over L (x) E"
    embed = field_embedding(M.field, E)
    return RepModule(extend_scalars(M.algebra, E), embed(M.actions), M.name)


def restrict(M: RepModule, S) -> RepModule:
    """
    M as a module over the p-subalgebra S (a Subspace or PSubalgebra), in the echelon basis of S.
    Raises NotPClosed when S is not p-closed.
    """
    space = S.space if isinstance(S, PSubalgebra) else S
    H = subalgebra_structure(M.algebra, space)
    actions = _stack(M.field, [M.act(b) for b in space.basis], M.dim)
    return RepModule(H, actions, f"{M.name}|{'<' + ', '.join(H.names) + '>'}")


def action_images(M: RepModule, vectors: galois.FieldArray) -> galois.FieldArray:
    "rho_i v for every generator i and every row v, stacked as rows (n * k, d)"
    k = vectors.shape[0]
    return matmul(vectors, M.actions.transpose(0, 2, 1)).reshape(M.algebra.n * k, M.dim)


def spin(M: RepModule, vectors: galois.FieldArray, side: str = "left") -> Subspace:
    """
    The submodule generated by the rows of `vectors`. With side="right" the rows are functionals and the
    closure is taken under f -> f rho_i.
    """
    d = M.dim
    actions = M.actions if side == "right" else M.actions.transpose(0, 2, 1)
    S = row_space(vectors.reshape(-1, d), d)
    frontier = S.basis
    while frontier.shape[0]:
        images = matmul(frontier, actions).reshape(-1, d)
        new = row_space(S.reduce(images), d)
        if new.dim == 0:
            break
        S = row_space(stack_rows(M.field, [S.basis, new.basis], d), d)
        frontier = new.basis
    return S


def is_submodule(M: RepModule, S: Subspace) -> bool:
    return S.dim == 0 or S.contains(action_images(M, S.basis))


def submodule(M: RepModule, S: Subspace, name: str = None) -> RepModule:
    "The action on an invariant subspace, in its echelon basis"
    F, k = M.field, S.dim
    if k == 0:
        return zero_module(M.algebra)
    images = matmul(S.basis, M.actions.transpose(0, 2, 1))  # (n, k, d): rows rho_i b
    if not S.contains(images.reshape(-1, M.dim)):
        raise BadParameters(f"the subspace is not a submodule of {M}")
    actions = S.coordinates(images).transpose(0, 2, 1)
    return RepModule(M.algebra, F(np.ascontiguousarray(as_ints(actions))), name or f"sub({M.name})")


def quotient_module(M: RepModule, S: Subspace, name: str = None) -> RepModule:
    "M / S on the classes of the standard vectors at the non-pivot columns of S"
    if not is_submodule(M, S):
        raise BadParameters(f"the subspace is not a submodule of {M}")
    comp = list(S.complement)
    if not comp:
        return zero_module(M.algebra)
    images = M.actions[:, :, comp].transpose(0, 2, 1)  # (n, m, d): rows rho_i c
    actions = S.quotient_coordinates(images).transpose(0, 2, 1)
    return RepModule(M.algebra, M.field(np.ascontiguousarray(as_ints(actions))), name or f"({M.name})/S")


def change_basis(M: RepModule, B: galois.FieldArray) -> RepModule:
    "The same module in the basis given by the columns of the invertible matrix B"
    B_inv = inverse(B)
    return RepModule(M.algebra, matmul(matmul(B_inv, M.actions), B), M.name)


def induce(context, L: RestrictedLieAlgebra, S, N: RepModule) -> RepModule:
    """
    U_0(L) (x)_{U_0(h)} N for the p-subalgebra h = S, on the basis e^alpha (x) n with e^alpha the PBW monomials
    in a complement of h.

    L is first rewritten in a basis (c_1, ..., c_m, h_1, ..., h_k): the complement vectors, then the echelon
    basis of h. In that basis a PBW monomial factors as e^alpha h^beta, so

        e_i (e^alpha (x) n) = sum_{alpha', beta} coefficient (e^alpha' (x) h^beta n).
    """
    space = S.space if isinstance(S, PSubalgebra) else S
    H = subalgebra_structure(L, space)
    if N.algebra.n != H.n or N.field is not L.field:
        raise DimensionMismatch(f"{N} is not a module over a {H.n}-dimensional subalgebra of {L}")
    F, p = L.field, L.p
    k, m, d = space.dim, L.n - space.dim, N.dim
    check_budget(d * p**m, context.heller_budget, "induced module")

    comp = F.Identity(L.n)[list(space.complement)]
    B = stack_rows(F, [comp, space.basis], L.n)
    rebased = require_axioms(rebase(L, B), "induction basis")
    U = u0_build(context, rebased)
    mon_N = monomials(context, RepModule(H, N.actions, N.name))  # (p^k, d, d)

    pm, pk = p**m, p**k
    blocks = []
    for i in range(L.n):
        # column alpha * p^k of left[i] is e_i e^alpha, with coefficients indexed by (alpha', beta)
        V = U.left[i][:, ::pk].reshape(pm, pk, pm).transpose(2, 0, 1).reshape(pm * pm, pk)
        W = matmul(V, mon_N.reshape(pk, d * d)).reshape(pm, pm, d, d)  # [alpha, alpha', row, col]
        blocks.append(as_ints(W).transpose(1, 2, 0, 3).reshape(pm * d, pm * d))
    rebased_actions = F(np.stack(blocks))

    # rho(e_i) = sum_j (B^-1)[i, j] rho(b_j) for the original basis
    actions = matmul(inverse(B), rebased_actions.reshape(L.n, -1)).reshape(L.n, pm * d, pm * d)
    M = RepModule(L, actions, f"Ind({N.name})")
    log.debug(f"induced {N} from a {k}-dimensional subalgebra: dimension {M.dim}")
    return M

