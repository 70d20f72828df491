"""(k,p)-support norms, spectral lifts, Frank-Wolfe solvers, completion experiments."""

from .norms import (
    NormCertificate,
    SortedAbsView,
    SupportParams,
    critical_index,
    dual_maximizer,
    kp_dual_norm,
    kp_norm,
    lmo_vector,
    norm_certificate,
    sort_abs,
)
from .projection import ProjectionResult, project_kinf, project_unit_kinf
from .spectral import (
    SingularTriplets,
    full_svd,
    lmo_spectral,
    project_spectral_kinf,
    spectral_kp_dual_norm,
    spectral_kp_norm,
    top_k_svd,
)
from .solver import (
    KpBall,
    LeastSquares,
    SolverConfig,
    SolverError,
    SolverTrace,
    continuation_over_p,
    duality_gap,
    frank_wolfe,
)
from .completion import (
    GridSpec,
    MaskedLossObjective,
    MaskedMatrix,
    generate_decay,
    generate_flat,
    generate_lowrank,
    masked_loss,
    nmae,
    relative_error,
    run_validation_grid,
    sample_mask,
    split_mask,
    threshold_predictions,
)

__version__ = "0.1.0"
