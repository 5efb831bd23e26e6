"""radiuslab: numerical radii, operator norms, and verification of
numerical-radius inequalities for finite-dimensional complex matrices."""

from .bounds import (
    BoundReport,
    Operand,
    Pair,
    bound_bp,
    bound_cor10,
    bound_eq16,
    bound_eq18,
    bound_eq19,
    bound_equiv,
    bound_fg,
    bound_final_thm,
    bound_heydarbeygi,
    bound_kittaneh,
    bound_ms,
    bound_normal_prop,
    bound_power_mean,
    bound_product,
    bound_prop4,
    bound_remark_min,
    bound_thm5,
    bound_thm6,
    bound_thm8,
    bound_thm24,
    bound_thm25,
    catalog_ids,
    check_lemma,
    evaluate_bound,
)
from .ensembles import EnsembleSpec, canonical_suite, sample
from .errors import (
    BadExponentError,
    BadSpecError,
    DimensionMismatchError,
    FGProductViolationError,
    IncomparableBoundsError,
    MatrixParseError,
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
    RadiusLabError,
    UnknownBoundError,
    UnknownLemmaError,
)
from .linalg import (
    EigenDecomposition,
    MatrixClassification,
    cartesian_decomposition,
    classify,
    hermitian_eigen,
    matrix_abs,
    off_diag_embed,
    operator_norm,
    psd_power,
    schatten_norm,
    spectral_map,
    spectral_radius_psd_product,
)
from .matrixio import load_matrix, matrix_from_payload, matrix_to_payload, save_matrix
from .radius import (
    SweepConfig,
    numerical_radius,
    numerical_radius_oracle,
    off_diag_numerical_radius,
    weighted_numerical_radius,
)

__version__ = "0.1.0"
