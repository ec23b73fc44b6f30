"""Exact photon-number statistics of a lossless beam splitter.

Two independent computations of the same physics: a path-sum over
reflected/transmitted photon partitions (distributions module) and a
direct expansion of creation operators over the output modes (oracle
module).  The splitter module carries the classical Fresnel-coefficient
constraint system, and scenarios/cli expose standard limiting cases.
"""

from ._backend import kernel_backend
from .distributions import (
    DEFAULT_MAX_TOTAL,
    FockPair,
    OutputDistribution,
    PoissonReference,
    cell_count_approx_error,
    poisson_reference,
    poisson_tv_distance,
    single_input_distribution,
    two_input_distribution,
    two_input_distribution_streamlined,
)
from .numerics import (
    LogMagnitudePhase,
    complex_pow,
    log_factorial,
    sqrt_binomial,
    wrap_phase,
)
from .oracle import (
    TwoModeState,
    apply_splitter,
    coherent_passthrough_fidelity,
    coherent_two_mode,
    expand_output_state,
)
from .scenarios import (
    annihilation_amplitude,
    cascade_two_photon_annihilator,
    creation_amplitude,
    hom_coincidence_probability,
)
from .splitter import (
    AsymmetricSplitter,
    ConstraintReport,
    SymmetricSplitter,
    complete_family,
    lossless_residual,
    michelson_amplitudes,
    time_reversal_residuals,
    validate_family,
    validate_symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_TOTAL",
    "AsymmetricSplitter",
    "ConstraintReport",
    "FockPair",
    "LogMagnitudePhase",
    "OutputDistribution",
    "PoissonReference",
    "SymmetricSplitter",
    "TwoModeState",
    "annihilation_amplitude",
    "apply_splitter",
    "cascade_two_photon_annihilator",
    "cell_count_approx_error",
    "coherent_passthrough_fidelity",
    "coherent_two_mode",
    "complete_family",
    "complex_pow",
    "creation_amplitude",
    "expand_output_state",
    "hom_coincidence_probability",
    "kernel_backend",
    "log_factorial",
    "lossless_residual",
    "michelson_amplitudes",
    "poisson_reference",
    "poisson_tv_distance",
    "single_input_distribution",
    "sqrt_binomial",
    "time_reversal_residuals",
    "two_input_distribution",
    "two_input_distribution_streamlined",
    "validate_family",
    "validate_symmetric",
    "wrap_phase",
]
