"""Inertia-based eigenvalue counting for Hermitian pencils and matrix polynomials.

Bounds the positive/zero/negative/complex/infinite eigenvalue counts of
A - z*B from the inertias of A and B alone, counts eigenvalues in real
intervals by spectrum slicing, extends the interval lower bounds to
Hermitian matrix polynomials and black-box Hermitian functions, constructs
sharpness witnesses, and ships a desk-scale oracle for validation.
"""

from .bounds import (
    Bound,
    BoundsReport,
    Inertia5,
    WITNESS_TARGETS,
    pencil_bounds,
    pencil_bounds_of,
    pencil_bounds_with_rank,
    real_lower_sharp,
    witness_pair,
)
from .eig import (
    Inertia3,
    Tolerance,
    general_eigenvalues,
    ldlt_inertia,
    numeric_rank,
    symmetric_eigenvalues,
)
from .errors import (
    ConvergenceError,
    MatrixFormatError,
    PencilSliceError,
    PreconditionError,
    SingularPencilError,
    TrivialBoundError,
)
from .interval import (
    IntervalReport,
    geometric_interval_bounds,
    half_line_bounds,
    interval_bounds,
    mobius_pair,
    near_definite_bounds,
    parity_counts,
    slice_spectrum,
    slice_table_csv,
)
from .matrices import (
    HermitianMatrix,
    MatrixPolynomial,
    Pencil,
    gen_jordan_pair,
    gen_random_symmetric,
    gen_shifted_inertia,
    gen_spring_quadratic,
    load_matrix_market,
    load_polynomial_manifest,
    save_matrix_market,
    save_polynomial_manifest,
)
from .nep import (
    DefinitePolyReport,
    HermitianFunctionSlice,
    Trace,
    definite_poly_check,
    hyperbolic_quadratic_count,
    nep_interval_lower,
    poly_endpoint_lower,
    poly_eval,
    symmetric_linearization,
    trace_eigenfunctions,
)
from .oracle import (
    EigenRecord,
    classify_inertia5,
    normal_rank,
    pencil_eigen_records,
)

__version__ = "0.1.0"
