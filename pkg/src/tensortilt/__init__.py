"""Exact computations with tilting complexes over finite-dimensional algebras."""
from .algebra import (
    Algebra,
    AlgebraError,
    Bimodule,
    GeneralizedMatrixRing,
    Quiver,
    dual_bimodule,
    generalized_matrix_ring,
    iterated_tilt_ring,
    linear_path_algebra,
    path_algebra,
    point_algebra,
    regular_bimodule,
    replicated_algebra,
    tensor_algebra,
    triangular_matrix_algebra,
    truncated_line_algebra,
)
from .ar import (
    ARData,
    KnitError,
    ar_quiver_dot,
    auslander_algebra,
    initial_endomorphism_algebra,
    is_homogeneous,
    knit,
    stable_auslander_algebra,
)
from .complexes import (
    ComplexError,
    ModuleComplex,
    ProjComplex,
    ResolutionTooLong,
    derived_hom,
    global_dimension,
    hom_complex,
    nakayama,
    nakayama_inverse,
    projective_resolution,
    shift,
    stalk,
    tau,
    tau_inverse,
    tensor_complex,
)
from .dynkin import all_orientations, dynkin_quiver, is_symmetric_orientation
from .invariants import CartanData, CYFraction, cartan_data, cy_check, cy_sum, derived_probe
from .linalg import Matrix, Subspace, char_poly, matrix_power
from .modules import (
    Module,
    ModuleMap,
    hom_space,
    injective_module,
    projective_module,
    simple_module,
)
from .tensor import TensorTiltingInput, build_tensor_tilting, verify_construction
from .tilting import (
    TiltingCertificate,
    certify_tilting,
    dual_module,
    endomorphism_ring,
    standard_tilting,
    verify_line_rectangle_iso,
)

__version__ = "0.1.0"
