"""Photon-count distributions from the path-sum picture.

A Fock state |n1> on one input port and |n2> on the other scatter into
output counts (m, n1 + n2 - m).  The amplitude for m photons at the
first output is a sum over the ways m1 reflected photons from input 1
and m2 transmitted photons from input 2 can add up to m = m1 + m2, each
path weighted by a square root of factorials (Bose bunching factor)
times rho and tau raised to the corresponding photon numbers.

The kernels run in a selectable backend (compiled or NumPy).  Single-input
amplitudes are assembled in log space, term by term.  Two-input amplitudes
cannot be: near a balanced splitter the individual path terms are
exponentially larger than their sum, so any term-by-term float summation
loses most of its accuracy to cancellation.  The kernels instead build the
output state by inserting one photon at a time with Bose enhancement
weights on a proportional schedule, which keeps every intermediate bounded
and reproduces the path-sum amplitudes to machine precision (the term-level
view remains available through the kernel term grids).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._backend import kernels
from .numerics import (
    LOG_FACTORIAL_TABLE,
    LOG_FACTORIAL_TABLE_SIZE,
    LogMagnitudePhase,
    log_factorial,
)
from .splitter import SymmetricSplitter

_K = kernels()

# Cap on n1 + n2.  Distributions stay well conditioned beyond this (the
# photon-insertion builder never materializes large terms), but the
# term-grid view of the same inputs would, and the factorial table only
# covers totals up to its size; half of it is a comfortable contract.
DEFAULT_MAX_TOTAL = 512


class FockPair(NamedTuple):
    """Photon numbers entering the two input ports."""

    n1: int
    n2: int


@dataclass(frozen=True)
class OutputDistribution:
    """Output amplitudes A(m) for m photons at the first output port."""

    amplitudes: np.ndarray

    @property
    def total(self) -> int:
        return len(self.amplitudes) - 1

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @property
    def norm_residual(self) -> float:
        return float(abs(self.probabilities.sum() - 1.0))


@dataclass(frozen=True)
class PoissonReference:
    """Truncated Poisson law used as a weak-reflection reference."""

    mean: float
    probabilities: np.ndarray


def _check_photon_number(n: int, name: str) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")
    return int(n)


def _check_max_total(total: int, max_total: int) -> None:
    if max_total > LOG_FACTORIAL_TABLE_SIZE:
        raise ValueError(
            f"max_total {max_total} exceeds the exact factorial table "
            f"({LOG_FACTORIAL_TABLE_SIZE})"
        )
    if total > max_total:
        raise ValueError(f"total photon number {total} exceeds maximum {max_total}")


def _log_polar(s: SymmetricSplitter) -> tuple[float, float, float, float]:
    lr = LogMagnitudePhase.from_complex(s.rho)
    lt = LogMagnitudePhase.from_complex(s.tau)
    return lr.log_mag, lr.phase, lt.log_mag, lt.phase


def single_input_distribution(
    n: int, s: SymmetricSplitter, max_total: int = DEFAULT_MAX_TOTAL
) -> OutputDistribution:
    """Distribution for |n> on input 1 and vacuum on input 2.

    A(m) = sqrt(C(n, m)) rho^m tau^(n-m): each photon independently
    reflects or transmits, with a binomial bunching weight.
    """
    n = _check_photon_number(n, "n")
    _check_max_total(n, max_total)
    amps = _K.single_input_amplitudes(n, LOG_FACTORIAL_TABLE, *_log_polar(s))
    amps.setflags(write=False)
    return OutputDistribution(amplitudes=amps)


def _two_input(
    photons: FockPair, s: SymmetricSplitter, max_total: int, mirrored: bool
) -> OutputDistribution:
    n1, n2 = photons
    n1 = _check_photon_number(n1, "n1")
    n2 = _check_photon_number(n2, "n2")
    _check_max_total(n1 + n2, max_total)
    amps = _K.two_input_amplitudes(n1, n2, complex(s.rho), complex(s.tau), mirrored)
    amps.setflags(write=False)
    return OutputDistribution(amplitudes=amps)


def two_input_distribution(
    photons: FockPair, s: SymmetricSplitter, max_total: int = DEFAULT_MAX_TOTAL
) -> OutputDistribution:
    """Distribution for Fock states |n1>, |n2> on the two inputs."""
    return _two_input(photons, s, max_total, mirrored=False)


def two_input_distribution_streamlined(
    photons: FockPair, s: SymmetricSplitter, max_total: int = DEFAULT_MAX_TOTAL
) -> OutputDistribution:
    """Same amplitudes evaluated along the mirrored insertion schedule.

    Mathematically identical to two_input_distribution, matching the
    binomial-product regrouping of the path-sum coefficient; the two
    evaluations differ only in floating-point rounding order, which makes
    them a cross-check on each other.
    """
    return _two_input(photons, s, max_total, mirrored=True)


def poisson_reference(
    n: int, s: SymmetricSplitter, cutoff: int
) -> PoissonReference:
    """Poisson law with mean n |rho/tau|^2, truncated at cutoff counts.

    For weak reflection the reflected-count distribution of |n> tends to
    this law, the discrete analogue of a coherent tap.
    """
    n = _check_photon_number(n, "n")
    cutoff = _check_photon_number(cutoff, "cutoff")
    if cutoff > n:
        raise ValueError(f"cutoff {cutoff} exceeds photon number {n}")
    tau_mag = abs(s.tau)
    if tau_mag == 0.0:
        raise ValueError("poisson reference undefined for zero transmission")
    mean = n * (abs(s.rho) / tau_mag) ** 2
    m = np.arange(cutoff + 1)
    if mean == 0.0:
        probs = np.zeros(cutoff + 1)
        probs[0] = 1.0
    else:
        log_fact = np.array([log_factorial(int(k)) for k in m])
        probs = np.exp(-mean + m * math.log(mean) - log_fact)
    probs.setflags(write=False)
    return PoissonReference(mean=mean, probabilities=probs)


def poisson_tv_distance(dist: OutputDistribution, ref: PoissonReference) -> float:
    """Total variation distance between exact counts and the reference.

    The reference is truncated; its missing tail mass and any exact
    probability beyond the cutoff are added in full, so the result is an
    upper bound on the untruncated distance.
    """
    p = dist.probabilities
    q = ref.probabilities
    if len(q) > len(p):
        raise ValueError("reference cutoff exceeds the distribution support")
    head = np.abs(p[: len(q)] - q).sum()
    p_tail = p[len(q):].sum()
    q_tail = max(0.0, 1.0 - q.sum())
    return float(0.5 * (head + p_tail + q_tail))


def cell_count_approx_error(n_cells: int, m: int) -> float:
    """Relative error of the n_cells^m / m! approximation to C(n_cells, m).

    C(N, m) counts the ways m photons occupy N phase-space cells; for
    m << sqrt(N) the approximation error is about m(m-1)/(2N).  Computed
    as expm1 of an exact sum of log1p terms, which stays accurate where
    differences of large log factorials would cancel catastrophically.
    """
    n_cells = _check_photon_number(n_cells, "n_cells")
    m = _check_photon_number(m, "m")
    if m > n_cells:
        raise ValueError(f"m {m} exceeds cell count {n_cells}")
    if n_cells > 10**8:
        raise ValueError(f"cell count {n_cells} exceeds supported range 1e8")
    if m <= 1:
        return 0.0
    # C(N, m) * m! / N^m = prod_{j<m} (1 - j/N)
    j = np.arange(1, m)
    terms = np.log1p(-j / n_cells)
    if m <= 100_000:
        log_ratio = math.fsum(terms)
    else:
        log_ratio = float(terms.sum())
    return math.expm1(-log_ratio)
