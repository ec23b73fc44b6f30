"""Operator-algebra computation of the output state.

Independent cross-check for the path-sum distributions: write the input
Fock states as creation operators, substitute the splitter relations
a1+ -> rho a3+ + tau a4+ and a2+ -> tau a3+ + rho a4+, expand the two
binomials, and collect output number states.  All combinatorics use
exact Python integers (math.comb / math.factorial); the only square
root is taken once per output component on an exact factorial ratio.
This path shares no code with the log-space kernels, so agreement
between the two is a real consistency check rather than a tautology.

Kept exact and simple rather than fast: the default photon cap is 64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, factorial
from types import MappingProxyType
from typing import Mapping

from .splitter import SymmetricSplitter

DEFAULT_MAX_TOTAL_EXACT = 64

# Amplitudes at or below this magnitude are dropped from sparse states.
PRUNE_THRESHOLD = 1e-15


@dataclass(frozen=True)
class TwoModeState:
    """Sparse two-mode number state sum(amplitudes[(m3, m4)] |m3, m4>).

    norm_deficit records probability mass lost to truncation at
    construction time; states are never silently renormalized.
    """

    n_max: int
    amplitudes: Mapping[tuple[int, int], complex]
    norm_deficit: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplitudes", MappingProxyType(dict(self.amplitudes)))

    def norm_squared(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self.amplitudes.values())

    def amplitude(self, m3: int, m4: int) -> complex:
        return self.amplitudes.get((m3, m4), 0j)

    def overlap(self, other: "TwoModeState") -> complex:
        """Inner product <self|other> over the common support."""
        if len(self.amplitudes) > len(other.amplitudes):
            return other.overlap(self).conjugate()
        return sum(
            a.conjugate() * other.amplitudes.get(key, 0j)
            for key, a in self.amplitudes.items()
        )


def _checked_pair(n1: int, n2: int, max_total: int) -> tuple[int, int]:
    if n1 < 0 or n2 < 0:
        raise ValueError(f"photon numbers must be nonnegative, got ({n1}, {n2})")
    if n1 + n2 > max_total:
        raise ValueError(
            f"total photon number {n1 + n2} exceeds exact-path maximum {max_total}"
        )
    return int(n1), int(n2)


def _powers(z: complex, k_max: int) -> list[complex]:
    out = [1.0 + 0j]
    for _ in range(k_max):
        out.append(out[-1] * z)
    return out


def expand_output_state(
    photons: tuple[int, int],
    s: SymmetricSplitter,
    max_total: int = DEFAULT_MAX_TOTAL_EXACT,
) -> TwoModeState:
    """Output state of |n1, n2> through the splitter, expanded exactly.

    (rho a3+ + tau a4+)^n1 (tau a3+ + rho a4+)^n2 / sqrt(n1! n2!) |0, 0>
    via the binomial theorem: the coefficient of |m, tot - m> is

        sum over m1 + m2 = m of C(n1, m1) C(n2, m2)
            rho^(n2 + m1 - m2) tau^(n1 - m1 + m2)
            * sqrt(m! (tot - m)! / (n1! n2!)).
    """
    n1, n2 = _checked_pair(*photons, max_total)
    tot = n1 + n2
    rho_pow = _powers(complex(s.rho), tot)
    tau_pow = _powers(complex(s.tau), tot)
    sums = [0j] * (tot + 1)
    for m1 in range(n1 + 1):
        c1 = comb(n1, m1)
        for m2 in range(n2 + 1):
            c = c1 * comb(n2, m2)
            sums[m1 + m2] += c * (rho_pow[n2 + m1 - m2] * tau_pow[n1 - m1 + m2])
    denom = factorial(n1) * factorial(n2)
    amplitudes: dict[tuple[int, int], complex] = {}
    for m, total_amp in enumerate(sums):
        scale = math.sqrt(factorial(m) * factorial(tot - m) / denom)
        amp = total_amp * scale
        if abs(amp) > PRUNE_THRESHOLD:
            amplitudes[(m, tot - m)] = amp
    return TwoModeState(n_max=tot, amplitudes=amplitudes)


def apply_splitter(
    state: TwoModeState,
    s: SymmetricSplitter,
    max_total: int = DEFAULT_MAX_TOTAL_EXACT,
) -> TwoModeState:
    """Send a sparse two-mode state through the splitter.

    Each basis component is expanded independently and the results are
    accumulated; the map is unitary for a valid splitter, so the norm
    (and the recorded truncation deficit) carries over.
    """
    accum: dict[tuple[int, int], complex] = {}
    out_n_max = 0
    for (a, b), weight in state.amplitudes.items():
        out_n_max = max(out_n_max, a + b)
        expanded = expand_output_state((a, b), s, max_total)
        for key, amp in expanded.amplitudes.items():
            accum[key] = accum.get(key, 0j) + weight * amp
    pruned = {k: v for k, v in accum.items() if abs(v) > PRUNE_THRESHOLD}
    return TwoModeState(
        n_max=out_n_max, amplitudes=pruned, norm_deficit=state.norm_deficit
    )


def coherent_two_mode(
    gamma_1: complex, gamma_2: complex, n_max: int
) -> TwoModeState:
    """Product of two Glauber coherent states, truncated at n_max per mode.

    Requires |gamma|^2 <= n_max / 4 for each mode so the discarded
    Poisson tail is negligible; the actual missing mass is recorded as
    norm_deficit.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    for label, g in (("gamma_1", gamma_1), ("gamma_2", gamma_2)):
        if abs(g) ** 2 > n_max / 4.0:
            raise ValueError(
                f"|{label}|^2 = {abs(g) ** 2:.6g} exceeds n_max/4 = {n_max / 4.0:.6g}; "
                "truncation would be inadequate"
            )

    def mode_amplitudes(g: complex) -> list[complex]:
        out = [complex(math.exp(-0.5 * abs(g) ** 2))]
        for k in range(1, n_max + 1):
            out.append(out[-1] * g / math.sqrt(k))
        return out

    a1 = mode_amplitudes(complex(gamma_1))
    a2 = mode_amplitudes(complex(gamma_2))
    amplitudes = {}
    for i, x in enumerate(a1):
        for j, y in enumerate(a2):
            amp = x * y
            if abs(amp) > PRUNE_THRESHOLD:
                amplitudes[(i, j)] = amp
    stored = math.fsum(abs(v) ** 2 for v in amplitudes.values())
    return TwoModeState(
        n_max=n_max, amplitudes=amplitudes, norm_deficit=max(0.0, 1.0 - stored)
    )


def coherent_passthrough_fidelity(
    gamma_1: complex,
    gamma_2: complex,
    s: SymmetricSplitter,
    n_max: int,
) -> float:
    """Overlap check that coherent states pass through as coherent states.

    The splitter should map |gamma_1>|gamma_2> to
    |rho gamma_1 + tau gamma_2>|tau gamma_1 + rho gamma_2>.  Returns the
    squared overlap between the numerically scattered input state and
    that analytic output; up to truncation deficits this is 1, and it
    stays above 1 - 10 * (combined deficit).
    """
    state_in = coherent_two_mode(gamma_1, gamma_2, n_max)
    # Scattering conserves total photon number, which can reach 2 * n_max.
    scattered = apply_splitter(state_in, s, max_total=2 * n_max)
    expected = coherent_two_mode(
        s.rho * gamma_1 + s.tau * gamma_2,
        s.tau * gamma_1 + s.rho * gamma_2,
        n_max,
    )
    return abs(expected.overlap(scattered)) ** 2
