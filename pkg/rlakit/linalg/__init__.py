from .field import (
    Field,
    coerce,
    element_from_json,
    element_to_json,
    field_embedding,
    field_extension,
    field_label,
    field_make,
    modulus_coefficients,
)
from .matrix import (
    Subspace,
    as_ints,
    batch_rank,
    column_space,
    inverse,
    invertible_mask,
    kernel_basis,
    kernel_matrix,
    matmul,
    rank,
    row_space,
    rref,
    subspace_intersect,
    subspace_sum,
)
from .radical import algebra_radical, check_radical
