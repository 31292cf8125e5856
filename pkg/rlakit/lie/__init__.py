from .algebra import (
    RestrictedLieAlgebra,
    ad_matrix,
    bracket,
    jacobson_si,
    make_algebra,
    pmap,
    pmap_polynomial,
)
from .axioms import require_axioms, verify_axioms
from .structure import (
    PSubalgebra,
    algebra_info,
    center,
    cyclic,
    derived_series,
    extend_scalars,
    is_nilpotent,
    is_p_ideal,
    is_supersolvable,
    is_torus,
    is_unipotent,
    lower_central_series,
    normalizer,
    p_closure,
    psubalgebra,
    quotient,
    rebase,
    subalgebra_structure,
)
