"""Shared test utilities: random splitter factories and an independent
exact-combinatorics oracle for two-input output amplitudes.

The oracle here deliberately avoids every code path used by the package:
coefficients are built from ``math.comb``/``math.factorial`` big integers
with a single square root per term (exact rational radicand via
``fractions.Fraction``), and complex powers are accumulated by repeated
multiplication.  Agreement between this routine and the package therefore
checks the physics, not a shared implementation.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from focksplit import SymmetricSplitter


def random_valid_splitter(
    rng: np.random.Generator,
    r2_low: float = 0.02,
    r2_high: float = 0.98,
) -> SymmetricSplitter:
    """Random symmetric splitter: uniform reflectance in [r2_low, r2_high],
    uniform reflection phase, and a random sign for the 90-degree
    transmission offset."""
    r2 = float(rng.uniform(r2_low, r2_high))
    rho_mag = math.sqrt(r2)
    rho_phase = float(rng.uniform(-math.pi, math.pi))
    sign = 1.0 if rng.integers(0, 2) == 0 else -1.0
    return SymmetricSplitter.from_polar(
        rho_mag,
        rho_phase,
        math.sqrt(1.0 - r2),
        rho_phase + sign * (math.pi / 2.0),
    )


def _complex_powers(z: complex, k_max: int) -> list[complex]:
    powers = [1.0 + 0.0j]
    for _ in range(k_max):
        powers.append(powers[-1] * z)
    return powers


def exact_two_input_amplitudes(
    n1: int, n2: int, rho: complex, tau: complex
) -> list[complex]:
    """Output amplitudes A(m) for inputs (n1, n2), summing every
    reflection/transmission assignment with exact integer combinatorics.

    Each term carries sqrt(n1! n2! m! (tot-m)!) / (m1! m2! (n1-m1)! (n2-m2)!)
    where m1 photons from input 1 reflect and m2 photons from input 2
    transmit into the same output.  The radicand is kept as an exact
    Fraction so only one floating square root is taken per term.
    """
    tot = n1 + n2
    rho_pow = _complex_powers(complex(rho), tot)
    tau_pow = _complex_powers(complex(tau), tot)
    pref = (
        math.factorial(n1)
        * math.factorial(n2)
    )
    amps = [0.0 + 0.0j] * (tot + 1)
    for m1 in range(n1 + 1):
        for m2 in range(n2 + 1):
            m = m1 + m2
            denom = (
                math.factorial(m1)
                * math.factorial(m2)
                * math.factorial(n1 - m1)
                * math.factorial(n2 - m2)
            )
            radicand = Fraction(
                pref * math.factorial(m) * math.factorial(tot - m), denom * denom
            )
            coeff = math.sqrt(radicand)
            # input 1 contributes m1 reflections and n1-m1 transmissions;
            # input 2 contributes m2 transmissions and n2-m2 reflections.
            amps[m] += coeff * rho_pow[m1 + n2 - m2] * tau_pow[n1 - m1 + m2]
    return amps


def exact_two_input_probabilities(
    n1: int, n2: int, rho: complex, tau: complex
) -> list[float]:
    return [abs(a) ** 2 for a in exact_two_input_amplitudes(n1, n2, rho, tau)]
