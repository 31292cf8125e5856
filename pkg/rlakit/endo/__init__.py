from .classify import classify_endotrivial
from .endotrivial import is_endotrivial
from .rank import (
    check_degree_duality,
    constant_rank,
    degree,
    degree_report,
    degree_with_stability,
    generic_kernel,
)
from .syzygy import check_syz3, syzygy_function, syzygy_value
