from siltinglib.repmod.decompose import (
    IsomorphismUndecided,
    NotSplitError,
    decompose,
    endomorphism_radical,
    group_isomorphic,
    in_gen,
    is_brick,
    is_indecomposable,
    is_isomorphic,
    local_radical,
    random_combination,
    split_off,
    trace_submodule,
)
from siltinglib.repmod.hom import end_basis, hom_basis, hom_dim
from siltinglib.repmod.presentation import (
    TwoTermComplex,
    compose_entries,
    dual_complex,
    dual_module,
    element_components,
    ext1_dim,
    injective_sum,
    is_projective,
    min_proj_presentation,
    projective_cover,
    projective_sum,
    syzygy,
    tau,
    tensor_and_tor1,
    tensor_dim,
    transpose,
)
from siltinglib.repmod.rep import (
    KernelCokernelImage,
    Rep,
    RepMap,
    StandardModules,
    change_basis,
    direct_sum,
    generated_subrep,
    inclusions,
    map_kernel_cokernel_image,
    projections,
    quotient_rep,
    radical_submodule,
    regular_basis_vector,
    standard_modules,
    subrep,
    top,
)

__all__ = [
    "IsomorphismUndecided",
    "KernelCokernelImage",
    "NotSplitError",
    "Rep",
    "RepMap",
    "StandardModules",
    "TwoTermComplex",
    "change_basis",
    "compose_entries",
    "decompose",
    "direct_sum",
    "dual_complex",
    "dual_module",
    "element_components",
    "end_basis",
    "endomorphism_radical",
    "ext1_dim",
    "generated_subrep",
    "group_isomorphic",
    "hom_basis",
    "hom_dim",
    "in_gen",
    "inclusions",
    "injective_sum",
    "is_brick",
    "is_indecomposable",
    "is_isomorphic",
    "is_projective",
    "local_radical",
    "map_kernel_cokernel_image",
    "min_proj_presentation",
    "projections",
    "projective_cover",
    "projective_sum",
    "quotient_rep",
    "radical_submodule",
    "regular_basis_vector",
    "random_combination",
    "split_off",
    "standard_modules",
    "subrep",
    "syzygy",
    "tau",
    "tensor_and_tor1",
    "tensor_dim",
    "top",
    "trace_submodule",
    "transpose",
]
