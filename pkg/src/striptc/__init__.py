"""Exact sequential (distributional) topological complexity of disk
configurations in an infinite strip, verified mechanically.

The package builds the finite cell model of the configuration space of n
unit disks in a width-w strip, computes its homology over the two-element
field, constructs explicit disjoint decomposable torus pairs, re-derives the
zero-divisor product that turns such a pair into a lower bound, and
assembles matched upper and lower bounds into exact complexity values.
"""

from .certificates import (
    CertificateReport,
    TorusPair,
    build_tori,
    lower_bound,
    verify_certificate,
)
from .chains import (
    BOUNDARY_CONVENTION,
    ChainComplexF2,
    ChainVector,
    betti,
    build_complex,
    classes_independent,
    clear_cache,
    get_complex,
    rank_f2,
)
from .cohomology import (
    ExtElement,
    ExtGenerator,
    evaluate_witness,
    surviving_terms,
    witness_factor_count,
    zeta_pullback,
)
from .errors import (
    DimensionMismatchError,
    InvalidParamsError,
    NotACycleError,
    ResourceLimitError,
    TorusConstructionError,
    UnknownSpaceError,
    WheelTooSmallError,
)
from .reports import (
    ReferenceValue,
    TCReport,
    bgrt_upper,
    dtc_value,
    reference_values,
    tc_value,
)
from .symbols import (
    ComplexParams,
    Symbol,
    cell_count,
    cofaces,
    enumerate_cells,
    faces,
    shuffles,
)
from .wheels import (
    H1BasisClass,
    H1Vector,
    Wheel,
    WheelProduct,
    class_to_cycle,
    h1_rank,
    is_basis_form,
    product_h1_image,
    rank_compare,
    spans_disjoint,
    wheel_h1_image,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_CONVENTION",
    "CertificateReport",
    "ChainComplexF2",
    "ChainVector",
    "ComplexParams",
    "DimensionMismatchError",
    "ExtElement",
    "ExtGenerator",
    "H1BasisClass",
    "H1Vector",
    "InvalidParamsError",
    "NotACycleError",
    "ReferenceValue",
    "ResourceLimitError",
    "Symbol",
    "TCReport",
    "TorusConstructionError",
    "TorusPair",
    "UnknownSpaceError",
    "Wheel",
    "WheelProduct",
    "WheelTooSmallError",
    "betti",
    "bgrt_upper",
    "build_complex",
    "build_tori",
    "cell_count",
    "class_to_cycle",
    "classes_independent",
    "clear_cache",
    "cofaces",
    "dtc_value",
    "enumerate_cells",
    "evaluate_witness",
    "faces",
    "get_complex",
    "h1_rank",
    "is_basis_form",
    "lower_bound",
    "product_h1_image",
    "rank_compare",
    "rank_f2",
    "reference_values",
    "shuffles",
    "spans_disjoint",
    "surviving_terms",
    "tc_value",
    "verify_certificate",
    "wheel_h1_image",
    "witness_factor_count",
    "zeta_pullback",
]
