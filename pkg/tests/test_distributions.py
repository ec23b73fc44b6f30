"""Tests for the Fock-state output distributions.

Oracles:
- hand-reduced amplitude formulas for zero, one, and two photons;
- the exact-combinatorics path sum from tests/helpers.py;
- the operator-expansion routine (an independent implementation inside
  the package, exercised against the distributions here);
- closed-form Poisson laws for the weak-reflection comparisons.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from focksplit import (
    FockPair,
    SymmetricSplitter,
    cell_count_approx_error,
    poisson_reference,
    poisson_tv_distance,
    single_input_distribution,
    two_input_distribution,
    two_input_distribution_streamlined,
)
from focksplit._backend import kernels
from focksplit.numerics import LOG_FACTORIAL_TABLE, LogMagnitudePhase
from helpers import exact_two_input_amplitudes, random_valid_splitter


def _grid(n1, n2, s, streamlined):
    lr = LogMagnitudePhase.from_complex(s.rho)
    lt = LogMagnitudePhase.from_complex(s.tau)
    return kernels().two_input_term_grid(
        n1, n2, LOG_FACTORIAL_TABLE, lr.log_mag, lr.phase, lt.log_mag, lt.phase,
        streamlined,
    )


# ---------------------------------------------------------------------------
# Single-input distributions


def test_single_input_binomial_examples():
    s = SymmetricSplitter.balanced()
    # Two photons: (1/4, 1/2, 1/4); three photons: (1/8, 3/8, 3/8, 1/8).
    d2 = single_input_distribution(2, s)
    assert np.allclose(d2.probabilities, [0.25, 0.5, 0.25], rtol=1e-12, atol=1e-15)
    d3 = single_input_distribution(3, s)
    assert np.allclose(
        d3.probabilities, [0.125, 0.375, 0.375, 0.125], rtol=1e-12, atol=1e-15
    )
    # Amplitudes carry the splitter phases: A(m) = sqrt(C(n,m)) rho^m tau^(n-m).
    expected = [
        math.sqrt(math.comb(3, m)) * s.rho**m * s.tau ** (3 - m) for m in range(4)
    ]
    assert np.allclose(d3.amplitudes, expected, rtol=1e-12, atol=1e-15)


def test_single_input_vacuum():
    d = single_input_distribution(0, SymmetricSplitter.balanced())
    assert d.total == 0
    assert d.amplitudes[0] == 1.0 + 0.0j
    assert d.norm_residual == 0.0


def test_single_input_general_splitter_against_formula():
    rng = np.random.default_rng(5)
    for _ in range(20):
        s = random_valid_splitter(rng)
        n = int(rng.integers(0, 40))
        d = single_input_distribution(n, s)
        expected = [
            math.sqrt(math.comb(n, m)) * s.rho**m * s.tau ** (n - m)
            for m in range(n + 1)
        ]
        assert np.allclose(d.amplitudes, expected, rtol=1e-11, atol=1e-14)
        assert d.norm_residual <= 1e-12


def test_single_input_mirror_and_window_are_point_masses():
    mirror = SymmetricSplitter.from_polar(1.0)  # |rho| = 1
    window = SymmetricSplitter.from_polar(0.0)  # |tau| = 1
    n = 7
    dm = single_input_distribution(n, mirror)
    dw = single_input_distribution(n, window)
    assert np.isclose(dm.probabilities[n], 1.0, rtol=1e-14, atol=0.0)
    assert np.all(dm.probabilities[:n] == 0.0)
    assert np.isclose(dw.probabilities[0], 1.0, rtol=1e-14, atol=0.0)
    assert np.all(dw.probabilities[1:] == 0.0)


# ---------------------------------------------------------------------------
# Two-input distributions: small exact cases


def test_two_photon_interference_amplitudes():
    # Inputs (1, 1): A = (sqrt(2) rho tau, rho^2 + tau^2, sqrt(2) rho tau).
    rng = np.random.default_rng(17)
    for _ in range(20):
        s = random_valid_splitter(rng)
        d = two_input_distribution(FockPair(1, 1), s)
        rt = math.sqrt(2.0) * s.rho * s.tau
        expected = [rt, s.rho**2 + s.tau**2, rt]
        assert np.allclose(d.amplitudes, expected, rtol=1e-13, atol=1e-15)


def test_two_photon_interference_balanced_cancels_coincidences():
    d = two_input_distribution(FockPair(1, 1), SymmetricSplitter.balanced())
    assert d.probabilities[1] <= 1e-30
    assert np.isclose(d.probabilities[0], 0.5, rtol=1e-12, atol=0.0)
    assert np.isclose(d.probabilities[2], 0.5, rtol=1e-12, atol=0.0)


def test_three_photon_balanced_example():
    # Inputs (2, 1) on a 50/50 splitter give (3/8, 1/8, 1/8, 3/8).
    d = two_input_distribution(FockPair(2, 1), SymmetricSplitter.balanced())
    assert np.allclose(
        d.probabilities, [0.375, 0.125, 0.125, 0.375], rtol=1e-12, atol=1e-15
    )


def test_two_input_vacuum_both_ports():
    d = two_input_distribution(FockPair(0, 0), SymmetricSplitter.balanced())
    assert d.total == 0
    assert d.amplitudes[0] == 1.0 + 0.0j


def test_two_input_collapses_to_single_input():
    rng = np.random.default_rng(29)
    for _ in range(10):
        s = random_valid_splitter(rng)
        n = int(rng.integers(0, 25))
        single = single_input_distribution(n, s)
        as_pair = two_input_distribution(FockPair(n, 0), s)
        assert np.allclose(
            as_pair.amplitudes, single.amplitudes, rtol=1e-12, atol=1e-15
        )
        # Vacuum on port 1 mirrors the binomial: A(m) picks up tau<->rho.
        swapped = two_input_distribution(FockPair(0, n), s)
        expected = [
            math.sqrt(math.comb(n, m)) * s.tau**m * s.rho ** (n - m)
            for m in range(n + 1)
        ]
        assert np.allclose(swapped.amplitudes, expected, rtol=1e-11, atol=1e-14)


def test_two_input_against_exact_combinatorics():
    rng = np.random.default_rng(43)
    for _ in range(40):
        s = random_valid_splitter(rng)
        n1 = int(rng.integers(0, 11))
        n2 = int(rng.integers(0, 11))
        d = two_input_distribution(FockPair(n1, n2), s)
        ref = exact_two_input_amplitudes(n1, n2, complex(s.rho), complex(s.tau))
        assert np.allclose(d.amplitudes, ref, rtol=1e-12, atol=1e-13)


# ---------------------------------------------------------------------------
# Evaluation-path and symmetry identities


def test_streamlined_path_matches_direct_path():
    rng = np.random.default_rng(59)
    for _ in range(30):
        s = random_valid_splitter(rng)
        pair = FockPair(int(rng.integers(0, 21)), int(rng.integers(0, 21)))
        a = two_input_distribution(pair, s)
        b = two_input_distribution_streamlined(pair, s)
        assert np.allclose(a.amplitudes, b.amplitudes, rtol=1e-12, atol=1e-14)


def test_coefficient_swap_reverses_distribution():
    # Exchanging rho and tau alone reverses the output ports exactly.
    rng = np.random.default_rng(61)
    for _ in range(15):
        s = random_valid_splitter(rng)
        swapped = SymmetricSplitter(rho=s.tau, tau=s.rho)
        pair = FockPair(int(rng.integers(0, 13)), int(rng.integers(0, 13)))
        a = two_input_distribution(pair, s)
        b = two_input_distribution(pair, swapped)
        assert np.allclose(a.amplitudes, b.amplitudes[::-1], rtol=1e-12, atol=1e-14)


def test_input_swap_reverses_distribution():
    # Exchanging the two input occupations also reverses the outputs.
    rng = np.random.default_rng(67)
    for _ in range(15):
        s = random_valid_splitter(rng)
        n1, n2 = int(rng.integers(0, 13)), int(rng.integers(0, 13))
        a = two_input_distribution(FockPair(n1, n2), s)
        b = two_input_distribution(FockPair(n2, n1), s)
        assert np.allclose(a.amplitudes, b.amplitudes[::-1], rtol=1e-12, atol=1e-14)


def test_double_swap_is_the_identity():
    # Swapping both the coefficients and the inputs composes the two
    # reversals, so it reproduces the original distribution.
    rng = np.random.default_rng(71)
    for _ in range(15):
        s = random_valid_splitter(rng)
        swapped = SymmetricSplitter(rho=s.tau, tau=s.rho)
        n1, n2 = int(rng.integers(0, 13)), int(rng.integers(0, 13))
        a = two_input_distribution(FockPair(n1, n2), s)
        b = two_input_distribution(FockPair(n2, n1), swapped)
        assert np.allclose(a.amplitudes, b.amplitudes, rtol=1e-12, atol=1e-14)


def test_normalization_sweep():
    rng = np.random.default_rng(83)
    for _ in range(20):
        s = random_valid_splitter(rng)
        for pair in ((16, 16), (16, 0), (3, 14), (9, 9)):
            d = two_input_distribution(FockPair(*pair), s)
            assert d.norm_residual <= 1e-12
            ds = two_input_distribution_streamlined(FockPair(*pair), s)
            assert ds.norm_residual <= 1e-12


def test_large_totals_stay_normalized():
    # The photon-insertion builder keeps every intermediate normalized,
    # so even very large inputs hold the norm to near machine precision.
    d = two_input_distribution(FockPair(256, 256), SymmetricSplitter.balanced())
    assert d.norm_residual <= 1e-12
    weak = SymmetricSplitter.from_polar(0.05)
    d = two_input_distribution(FockPair(400, 0), weak)
    assert d.norm_residual <= 1e-12


def test_repeat_calls_are_bit_identical():
    s = SymmetricSplitter.from_polar(0.6, 0.3)
    a = two_input_distribution(FockPair(9, 6), s)
    b = two_input_distribution(FockPair(9, 6), s)
    assert np.array_equal(a.amplitudes, b.amplitudes)


# ---------------------------------------------------------------------------
# Term grids (path-sum view)


def test_term_grids_agree_termwise():
    # The four-binomial regrouping of each path coefficient equals the
    # factorial-ratio form term by term, up to rounding, for every
    # occupation up to twenty photons per port.
    rng = np.random.default_rng(97)
    for n1 in range(21):
        for n2 in range(21):
            s = random_valid_splitter(rng)
            direct = _grid(n1, n2, s, streamlined=False)
            regrouped = _grid(n1, n2, s, streamlined=True)
            scale = np.maximum(1.0, np.abs(direct))
            assert np.max(np.abs(direct - regrouped) / scale) <= 1e-12


def test_term_grid_example_pair_absolute_agreement():
    rng = np.random.default_rng(103)
    s = random_valid_splitter(rng)
    direct = _grid(5, 3, s, streamlined=False)
    regrouped = _grid(5, 3, s, streamlined=True)
    assert np.max(np.abs(direct - regrouped)) <= 1e-12


def test_term_grid_antidiagonals_sum_to_amplitudes():
    # Summing the grid along m1 + m2 = m reproduces the distribution, for
    # totals small enough that the term sum is well conditioned.
    rng = np.random.default_rng(109)
    for _ in range(15):
        s = random_valid_splitter(rng)
        n1, n2 = int(rng.integers(0, 8)), int(rng.integers(0, 8))
        grid = _grid(n1, n2, s, streamlined=False)
        d = two_input_distribution(FockPair(n1, n2), s)
        flipped = np.fliplr(grid)
        summed = np.array(
            [np.trace(flipped, offset=n2 - m) for m in range(n1 + n2 + 1)]
        )
        assert np.allclose(summed, d.amplitudes, rtol=1e-10, atol=1e-12)


# ---------------------------------------------------------------------------
# Poisson reference for the weak-reflection limit


def test_poisson_reference_mean_and_shape():
    s = SymmetricSplitter.from_polar(0.1)  # reflectance 0.01
    ref = poisson_reference(400, s, cutoff=30)
    assert np.isclose(ref.mean, 400.0 * 0.01 / 0.99, rtol=1e-12, atol=0.0)
    k = np.arange(31)
    expected = np.exp(-ref.mean) * ref.mean**k / np.array(
        [float(math.factorial(int(i))) for i in k]
    )
    assert np.allclose(ref.probabilities, expected, rtol=1e-10, atol=1e-300)


def test_poisson_reference_zero_reflection():
    ref = poisson_reference(50, SymmetricSplitter.from_polar(0.0), cutoff=5)
    assert ref.mean == 0.0
    assert np.array_equal(ref.probabilities, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0])


def test_poisson_reference_validation():
    s = SymmetricSplitter.balanced()
    with pytest.raises(ValueError):
        poisson_reference(10, s, cutoff=11)
    with pytest.raises(ValueError):
        poisson_reference(-1, s, cutoff=0)
    mirror = SymmetricSplitter.from_polar(1.0)
    with pytest.raises(ValueError):
        poisson_reference(10, mirror, cutoff=2)


def test_weak_reflection_approaches_poisson():
    # n |rho|^2 fixed at 1 while n grows: the reflected-count law tends
    # to Poisson, and the distance bound shrinks roughly like n |rho|^4.
    distances = []
    for n in (100, 400):
        s = SymmetricSplitter.from_polar(math.sqrt(1.0 / n))
        d = two_input_distribution(FockPair(n, 0), s)
        ref = poisson_reference(n, s, cutoff=min(n, 40))
        distances.append(poisson_tv_distance(d, ref))
    assert distances[0] <= 0.02
    assert distances[1] <= distances[0]


def test_poisson_tv_distance_accounts_for_tails():
    # Hand-checked case: inputs (2, 0) on a balanced splitter give counts
    # (1/4, 1/2, 1/4); the reference mean is n |rho/tau|^2 = 2, and a
    # cutoff-zero reference keeps only q(0) = exp(-2), so
    # TV = 0.5 * (|1/4 - q0| + 3/4 + (1 - q0)).
    d = two_input_distribution(FockPair(2, 0), SymmetricSplitter.balanced())
    ref = poisson_reference(2, SymmetricSplitter.balanced(), cutoff=0)
    got = poisson_tv_distance(d, ref)
    q0 = math.exp(-2.0)
    expected = 0.5 * (abs(0.25 - q0) + 0.75 + (1.0 - q0))
    assert np.isclose(got, expected, rtol=1e-12, atol=0.0)
    with pytest.raises(ValueError):
        poisson_tv_distance(
            two_input_distribution(FockPair(1, 0), SymmetricSplitter.balanced()),
            poisson_reference(400, SymmetricSplitter.from_polar(0.1), cutoff=10),
        )


def test_weak_tap_distance_bound_sweep():
    # For n >= 500 and n |rho|^2 <= 10 the distance stays below
    # max(0.02, 5 n |rho|^4).
    rng = np.random.default_rng(127)
    for _ in range(6):
        n = int(rng.integers(500, 900))
        mean_target = float(rng.uniform(0.2, 10.0))
        r2 = mean_target / n
        s = SymmetricSplitter.from_polar(math.sqrt(r2))
        d = two_input_distribution(FockPair(n, 0), s, max_total=1024)
        ref = poisson_reference(n, s, cutoff=min(n, 80))
        tv = poisson_tv_distance(d, ref)
        assert tv <= max(0.02, 5.0 * n * r2 * r2)


# ---------------------------------------------------------------------------
# Phase-space cell-count approximation


def test_cell_count_examples():
    assert cell_count_approx_error(10**6, 1) == 0.0
    assert cell_count_approx_error(10**6, 0) == 0.0
    # Error ~ m(m-1)/(2N) for m << sqrt(N).
    got = cell_count_approx_error(10**6, 3)
    assert np.isclose(got, 3.0e-6, rtol=0.05, atol=0.0)
    # Marginal regime N = 100, m = 10: within a factor of two of the
    # exponential estimate 1 - exp(-45/100).
    got = cell_count_approx_error(100, 10)
    anchor = 1.0 - math.exp(-45.0 / 100.0)
    assert anchor / 2.0 <= got <= anchor * 2.0


def test_cell_count_matches_exact_combinatorics():
    for n_cells, m in ((1000, 5), (5000, 12), (333, 7)):
        exact = math.comb(n_cells, m)
        approx = n_cells**m / math.factorial(m)
        expected = approx / exact - 1.0
        assert np.isclose(
            cell_count_approx_error(n_cells, m), expected, rtol=1e-9, atol=0.0
        )


def test_cell_count_validation():
    with pytest.raises(ValueError):
        cell_count_approx_error(5, 6)
    with pytest.raises(ValueError):
        cell_count_approx_error(10**8 + 1, 2)
    with pytest.raises(ValueError):
        cell_count_approx_error(-1, 0)


# ---------------------------------------------------------------------------
# Input validation and immutability


def test_photon_number_validation():
    s = SymmetricSplitter.balanced()
    with pytest.raises(ValueError):
        two_input_distribution(FockPair(-1, 0), s)
    with pytest.raises(ValueError):
        two_input_distribution(FockPair(2.0, 0), s)  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        two_input_distribution(FockPair(True, 0), s)  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        single_input_distribution(-3, s)


def test_max_total_enforcement():
    s = SymmetricSplitter.balanced()
    with pytest.raises(ValueError):
        two_input_distribution(FockPair(300, 300), s)  # over the default cap
    with pytest.raises(ValueError):
        two_input_distribution(FockPair(2, 2), s, max_total=3)
    with pytest.raises(ValueError):
        two_input_distribution(FockPair(2, 2), s, max_total=2000)  # over the table
    # Raising the cap within the table is allowed.
    d = two_input_distribution(FockPair(300, 300), s, max_total=1024)
    assert d.norm_residual <= 1e-12


def test_amplitudes_are_read_only():
    d = two_input_distribution(FockPair(2, 1), SymmetricSplitter.balanced())
    with pytest.raises(ValueError):
        d.amplitudes[0] = 0.0
