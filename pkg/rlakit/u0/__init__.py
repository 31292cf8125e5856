from .decompose import decompose, fitting_split, is_indecomposable
from .enveloping import U0Algebra, is_local, u0_build
from .heller import cosyzygy, heller, syzygy
from .hom import Isomorphism, Presentation, end_space, hom_space, is_isomorphic, presentation
from .module import (
    RepModule,
    adjoint_module,
    change_basis,
    character_module,
    characters,
    direct_sum,
    dual,
    extend_module,
    free_module,
    induce,
    make_module,
    module_verify,
    quotient_module,
    regular_module,
    require_module,
    restrict,
    spin,
    submodule,
    tensor,
    trivial_module,
    zero_module,
)
from .projective import Stripped, free_rank, is_projective, strip_projectives
from .radical import composition_factors, is_semisimple, radical, radical_layers, socle, top, top_generators
