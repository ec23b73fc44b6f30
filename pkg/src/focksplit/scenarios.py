"""Closed-form limiting cases of the splitter distributions.

Each function here is a named special case of the general path sum,
small enough to write down directly.  The test suite checks every one
against both the path-sum kernels and the operator expansion.
"""

from __future__ import annotations

import math

from .distributions import FockPair, two_input_distribution
from .numerics import complex_pow
from .splitter import SymmetricSplitter


def hom_coincidence_probability(s: SymmetricSplitter) -> float:
    """Probability that |1, 1> yields one photon at each output.

    The Hong-Ou-Mandel coincidence: both-reflect and both-transmit paths
    interfere, leaving |rho^2 + tau^2|^2.  Zero for a balanced splitter.
    """
    return abs(s.rho * s.rho + s.tau * s.tau) ** 2


def annihilation_amplitude(n: int, s: SymmetricSplitter) -> complex:
    """Amplitude for |n, 0> to put exactly one photon at output 3.

    sqrt(n) rho tau^(n-1): for weak reflection the tap acts as the
    annihilation operator, whose sqrt(n) factor is the point of the
    exercise.
    """
    if n < 1:
        raise ValueError(f"annihilation requires n >= 1, got {n}")
    tau_power = complex_pow(s.tau, n - 1).to_complex()
    return math.sqrt(n) * s.rho * tau_power


def creation_amplitude(n: int, s: SymmetricSplitter) -> complex:
    """Amplitude for |n, 1> to move the extra photon into the main beam.

    sqrt(n + 1) rho tau^n: the stimulated term of the creation operator,
    with its sqrt(n + 1) bunching enhancement.
    """
    if n < 0:
        raise ValueError(f"creation requires n >= 0, got {n}")
    tau_power = complex_pow(s.tau, n).to_complex()
    return math.sqrt(n + 1) * s.rho * tau_power


def cascade_two_photon_annihilator(n: int, s: SymmetricSplitter) -> complex:
    """Joint amplitude of two single-photon taps in series on |n>.

    Post-selecting one reflected photon at each of two weak splitters
    applies the annihilation operator twice, giving
    sqrt(n (n - 1)) rho^2 tau^(2n - 3).  A single splitter post-selected
    on two reflected photons instead yields sqrt(n (n - 1) / 2) rho^2
    tau^(n-2), off by sqrt(2), because the two photons then leave
    together as a |2> state at the tap port; the cascade is the faithful
    two-photon annihilator.
    """
    if n < 2:
        raise ValueError(f"two-photon cascade requires n >= 2, got {n}")
    return annihilation_amplitude(n, s) * annihilation_amplitude(n - 1, s)


def hom_output_probabilities(s: SymmetricSplitter) -> tuple[float, float, float]:
    """Full |1, 1> output distribution (P(0), P(1), P(2)) at output 3."""
    dist = two_input_distribution(FockPair(1, 1), s)
    p = dist.probabilities
    return float(p[0]), float(p[1]), float(p[2])
