"""Entropy inequalities for densities under symmetric decreasing rearrangement.

Step densities on one-dimensional grids and radial step profiles in higher
dimension, Renyi entropies of every order in [0, infinity], exact grid-level
rearrangement, convolution, majorization, and a set of randomized
verification suites for the comparison inequalities these objects satisfy.
"""

from .config import DEFAULT_TOLS, Tolerances, eps_conv
from .errors import (
    BadParameter,
    BetaOutOfRange,
    ConfigInvalid,
    DensityError,
    DimensionMismatch,
    EmptyGrid,
    GridMismatch,
    NegativeValue,
    NonPositiveSpacing,
    NotIndicator,
    NotSymmetric,
    OrderOutOfRange,
    SpacingMismatch,
    TruncationInsufficient,
    UnsupportedDimension,
    WeightSum,
    ZeroMass,
)
from .grids import (
    GENERATOR_KINDS,
    DensityGeneratorSpec,
    Grid1D,
    RadialDensity,
    is_symmetric_decreasing,
    make_grid,
    make_radial,
    moment,
    normalize,
    radial_from_grid,
    random_density,
    read_density_csv,
    refine,
    shell_volume,
    unit_ball_volume,
    variance,
    write_density_csv,
)
from .rearrange import (
    LevelSetProfile,
    l1_distance,
    level_set_measure,
    level_set_profile,
    majorizes,
    rearrange_1d,
    rearrange_radial,
    sorted_layers,
)
from .convolve import convolve, convolve_k, project_onto, resample, scale_density
from .entropy import (
    RenyiOrder,
    entropy_power,
    fisher_information,
    mixture_entropy_bound_check,
    renyi_affinity,
    renyi_divergence,
    renyi_entropy,
)
from .densities import (
    GAUSSIAN_ENTROPY_POWER,
    beta_of_p,
    gaussian,
    gaussian_on_grid,
    generalized_gaussian,
    gg_exponent,
    gg_normalizer,
    np_closed_form,
    uniform_ball,
    uniform_interval,
)
from .balls import (
    BallPair,
    ball_sum_entropy,
    ball_sum_radial,
    brunn_minkowski_check,
    cap_integral,
    epi_gap_balls,
)
from .levy import LevySpec, check_levy_dominance, marginal_density, rearranged_marginal
from .conjecture import (
    CONJECTURE_LABEL,
    LandscapePoint,
    bobkov_chistyakov_bound_check,
    bobkov_constant,
    c_constant,
    ratio_landscape,
)
from .reports import VerificationReport, report_geq, report_leq, reports_to_json, summarize
from .verifier import SUITES, PhiSpec, SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "BadParameter",
    "BallPair",
    "BetaOutOfRange",
    "CONJECTURE_LABEL",
    "ConfigInvalid",
    "DEFAULT_TOLS",
    "DensityError",
    "DensityGeneratorSpec",
    "DimensionMismatch",
    "EmptyGrid",
    "GAUSSIAN_ENTROPY_POWER",
    "GENERATOR_KINDS",
    "Grid1D",
    "GridMismatch",
    "LandscapePoint",
    "LevelSetProfile",
    "LevySpec",
    "NegativeValue",
    "NonPositiveSpacing",
    "NotIndicator",
    "NotSymmetric",
    "OrderOutOfRange",
    "PhiSpec",
    "RadialDensity",
    "RenyiOrder",
    "SUITES",
    "SpacingMismatch",
    "SuiteConfig",
    "Tolerances",
    "TruncationInsufficient",
    "UnsupportedDimension",
    "VerificationReport",
    "WeightSum",
    "ZeroMass",
    "ball_sum_entropy",
    "ball_sum_radial",
    "beta_of_p",
    "bobkov_chistyakov_bound_check",
    "bobkov_constant",
    "brunn_minkowski_check",
    "c_constant",
    "cap_integral",
    "check_levy_dominance",
    "convolve",
    "convolve_k",
    "entropy_power",
    "eps_conv",
    "epi_gap_balls",
    "fisher_information",
    "gaussian",
    "gaussian_on_grid",
    "generalized_gaussian",
    "gg_exponent",
    "gg_normalizer",
    "is_symmetric_decreasing",
    "l1_distance",
    "level_set_measure",
    "level_set_profile",
    "majorizes",
    "make_grid",
    "make_radial",
    "marginal_density",
    "mixture_entropy_bound_check",
    "moment",
    "normalize",
    "np_closed_form",
    "radial_from_grid",
    "random_density",
    "ratio_landscape",
    "read_density_csv",
    "rearrange_1d",
    "rearrange_radial",
    "rearranged_marginal",
    "refine",
    "renyi_affinity",
    "renyi_divergence",
    "renyi_entropy",
    "report_geq",
    "report_leq",
    "reports_to_json",
    "resample",
    "run_suite",
    "scale_density",
    "shell_volume",
    "sorted_layers",
    "summarize",
    "uniform_ball",
    "uniform_interval",
    "unit_ball_volume",
    "variance",
    "write_density_csv",
]
