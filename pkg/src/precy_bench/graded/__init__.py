"""Exact graded linear algebra and the Koszul sign engine."""

from precy_bench.graded.maps import (
    MultiMap,
    compose,
    compose_unary,
    dual_map,
    extend_identity,
    hom_postcompose,
    hom_precompose,
    shift_map,
    permutation_map,
    sum_maps,
    tensor_maps,
    tensor_of_maps,
)
from precy_bench.graded.signs import (
    SignedPermutation,
    apply_functionals,
    evaluation_sign,
    koszul_sign,
    move_suspension,
    parity,
    permute_tensor,
)
from precy_bench.graded.space import (
    BasisElement,
    GradedSpace,
    boundary_space,
    dual_shift_space,
    dual_space,
    tuple_degree,
)
from precy_bench.graded.tensor import Key, Tensor, tensor_product, vector

__all__ = [
    "BasisElement",
    "GradedSpace",
    "Key",
    "MultiMap",
    "SignedPermutation",
    "Tensor",
    "apply_functionals",
    "evaluation_sign",
    "boundary_space",
    "compose",
    "compose_unary",
    "dual_map",
    "dual_shift_space",
    "dual_space",
    "extend_identity",
    "hom_postcompose",
    "hom_precompose",
    "koszul_sign",
    "move_suspension",
    "parity",
    "permutation_map",
    "permute_tensor",
    "shift_map",
    "sum_maps",
    "tensor_maps",
    "tensor_of_maps",
    "tensor_product",
    "tuple_degree",
    "vector",
]
