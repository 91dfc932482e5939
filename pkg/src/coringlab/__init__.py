"""Exact-arithmetic verification of corings, entwining structures,
cowreaths, wreaths, twisted tensor products and skew polynomial rings,
over finite-dimensional structure-constant data."""

from .exactla import GF, QQ, Matrix, kernel_basis, rank, rref, solve
from .algebra import (
    AlgebraMorphism,
    FinAlgebra,
    check_algebra,
    check_algebra_morphism,
    field_algebra,
    group_algebra_cyclic,
    matrix_algebra,
    truncated_poly_algebra,
)
from .bimodule import (
    Bimodule,
    LinearMap,
    TensorQuotient,
    check_bimodule,
    regular_bimodule,
    space,
    tensor_maps,
    tensor_over,
    unit_iso,
)
from .coring import (
    Bicomodule,
    Comodule,
    Coring,
    check_bicomodule,
    check_comodule,
    check_coring,
    check_coring_morphism,
    grouplike_coalgebra,
    is_colinear,
    trivial_coring,
)
from .rcat import (
    LObject,
    RMorphism,
    RObject,
    canonical_c_object,
    check_l_object,
    check_r_morphism,
    check_r_object,
    r_tensor_morphisms,
    r_tensor_objects,
)
from .entwine import (
    EntwiningStructure,
    check_entwining,
    doi_koppinen_entwining,
    entwined_coring,
    lift_r_object,
)
from .cowreath import (
    Cowreath,
    check_cowreath,
    cowreath_product,
    entwining_lift_cowreath,
    flip_cowreath,
)
from .wreath import (
    RingExtension,
    RTObject,
    Wreath,
    check_rt_object,
    check_wreath,
    twisted_tensor_product,
    wreath_product,
)
from .ore import OreTwistTable, SkewPoly, SkewPolyData, check_ore_wreath, skew_mul
from .reports import InputError, PreconditionFailure, Report, WellDefinednessError, Witness

__version__ = "0.1.0"
