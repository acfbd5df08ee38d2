"""Cauchy-preserving transformations, continued-fraction chains, and
angular random walks, with exact rational parameter arithmetic and
seeded Monte Carlo verification."""

__version__ = "0.1.0"

from .cauchy import (
    CauchyParams,
    STANDARD,
    cdf,
    char_fn,
    density,
    quantile,
    sample,
    sample_brownian_hitting,
)
from .chains import (
    ArcsineChainCoeffs,
    ChainStepCoeffs,
    PHI,
    RationalPair,
    fibonacci,
    golden_gap,
    golden_gap_within_bound,
    sample_u_chain,
    sample_v_chain,
    u_chain_coeffs,
    u_chain_density,
    u_chain_support,
    v_chain_params,
    v_chain_step,
    w_chain_step,
)
from .gof import (
    GoFReport,
    KS_CRITICAL,
    POLE_RATE_CAP,
    QuadratureResult,
    ecf_distance,
    integrate_singular,
    ks_test,
    quantile_table,
)
from .rng import RngSeed, generator, open_uniform
from .transforms import (
    MobiusCoeffs,
    TransformKind,
    arctan_sum_params,
    centered_params,
    discard_poles,
    eval_general,
    eval_transform,
    noncentered_params,
    scaled_centered_params,
)
from .walks import (
    AnglePair,
    EuclideanStepSpec,
    HyperbolicStep,
    WalkPath,
    euclidean_fold_params,
    euclidean_tangent_ensemble,
    euclidean_walk,
    hyperbolic_angle,
    hyperbolic_tangent_ensemble,
    hyperbolic_triangle_area,
    hyperbolic_walk,
    step_law,
    uniform_angle_tangent,
)
from .report import (
    ExperimentReport,
    ReportRow,
    Verdict,
    all_passed,
    format_value,
    load_schema,
    to_csv,
    to_json,
)
from .experiments import EXPERIMENTS, ExperimentConfig, run

__all__ = [
    "__version__",
    "CauchyParams",
    "STANDARD",
    "cdf",
    "char_fn",
    "density",
    "quantile",
    "sample",
    "sample_brownian_hitting",
    "ArcsineChainCoeffs",
    "ChainStepCoeffs",
    "PHI",
    "RationalPair",
    "fibonacci",
    "golden_gap",
    "golden_gap_within_bound",
    "sample_u_chain",
    "sample_v_chain",
    "u_chain_coeffs",
    "u_chain_density",
    "u_chain_support",
    "v_chain_params",
    "v_chain_step",
    "w_chain_step",
    "GoFReport",
    "KS_CRITICAL",
    "POLE_RATE_CAP",
    "QuadratureResult",
    "ecf_distance",
    "integrate_singular",
    "ks_test",
    "quantile_table",
    "RngSeed",
    "generator",
    "open_uniform",
    "MobiusCoeffs",
    "TransformKind",
    "arctan_sum_params",
    "centered_params",
    "discard_poles",
    "eval_general",
    "eval_transform",
    "noncentered_params",
    "scaled_centered_params",
    "AnglePair",
    "EuclideanStepSpec",
    "HyperbolicStep",
    "WalkPath",
    "euclidean_fold_params",
    "euclidean_tangent_ensemble",
    "euclidean_walk",
    "hyperbolic_angle",
    "hyperbolic_tangent_ensemble",
    "hyperbolic_triangle_area",
    "hyperbolic_walk",
    "step_law",
    "uniform_angle_tangent",
    "ExperimentReport",
    "ReportRow",
    "Verdict",
    "all_passed",
    "format_value",
    "load_schema",
    "to_csv",
    "to_json",
    "EXPERIMENTS",
    "ExperimentConfig",
    "run",
]
