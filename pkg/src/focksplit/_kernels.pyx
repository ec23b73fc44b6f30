# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled amplitude kernels.

Mirrors _kernels_py: term grids use the log-magnitude-plus-phasor
assembly, while output distributions are built by inserting one photon at
a time on a proportional schedule, which keeps every intermediate bounded
and the amplitudes accurate to machine precision (see the _kernels_py
module docstring for the numerical argument).  The normalization sweeps
hit these loops hundreds of thousands of times, which is why they are
compiled.
"""

from libc.math cimport cos, exp, sin, sqrt

import numpy as np


cdef inline double _power_log_mag(long k, double log_mag) nogil:
    if k == 0:
        return 0.0
    return k * log_mag


def single_input_amplitudes(
    long n,
    const double[::1] log_fact,
    double log_rho,
    double phi_rho,
    double log_tau,
    double phi_tau,
):
    out = np.empty(n + 1, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef long m
    cdef double lm, ang
    cdef double dphi = phi_rho - phi_tau
    for m in range(n + 1):
        lm = 0.5 * (log_fact[n] - (log_fact[m] + log_fact[n - m]))
        lm += _power_log_mag(m, log_rho)
        lm += _power_log_mag(n - m, log_tau)
        ang = n * phi_tau + m * dphi
        ov[m] = exp(lm) * (cos(ang) + 1j * sin(ang))
    return out


cdef inline double _log_coeff(
    const double[::1] lf, long n1, long n2, long m1, long m2, bint streamlined
) nogil:
    cdef long m = m1 + m2
    cdef long tot_m = (n1 - m1) + (n2 - m2)
    if streamlined:
        return 0.5 * (
            (lf[n1] - (lf[m1] + lf[n1 - m1]))
            + (lf[n2] - (lf[m2] + lf[n2 - m2]))
            + (lf[m] - (lf[m1] + lf[m2]))
            + (lf[tot_m] - (lf[n1 - m1] + lf[n2 - m2]))
        )
    return 0.5 * (lf[n1] + lf[n2] + lf[m] + lf[tot_m]) - (
        lf[m1] + lf[m2] + lf[n1 - m1] + lf[n2 - m2]
    )


def two_input_amplitudes(
    long n1,
    long n2,
    double complex rho,
    double complex tau,
    bint second_port_first,
):
    """One-photon-at-a-time state builder; see _kernels_py for the scheme.

    The proportional schedule's tie-break uses exact integer
    cross-multiplication so both backends insert photons in the same
    order; ``second_port_first`` mirrors the schedule.
    """
    cdef long tot = n1 + n2
    buf_a = np.zeros(tot + 1, dtype=np.complex128)
    buf_b = np.empty(tot + 1, dtype=np.complex128)
    sqrt_tab = np.sqrt(np.arange(tot + 2, dtype=np.float64))
    cdef double complex[::1] cur = buf_a
    cdef double complex[::1] nxt = buf_b
    cdef double complex[::1] swp
    cdef const double[::1] sq = sqrt_tab
    cdef double complex refl, trans
    cdef double scale
    cdef long k, i, j1 = 0, j2 = 0
    cdef bint pick_first, cur_is_a = True
    cur[0] = 1.0
    for k in range(tot):
        if j1 >= n1:
            pick_first = False
        elif j2 >= n2:
            pick_first = True
        else:
            if (j1 + 1) * n2 < (j2 + 1) * n1:
                pick_first = True
            elif (j1 + 1) * n2 == (j2 + 1) * n1:
                pick_first = not second_port_first
            else:
                pick_first = False
        if pick_first:
            j1 += 1
            scale = 1.0 / sqrt(<double> j1)
            refl = rho * scale
            trans = tau * scale
        else:
            j2 += 1
            scale = 1.0 / sqrt(<double> j2)
            refl = tau * scale
            trans = rho * scale
        nxt[0] = 0.0
        for i in range(k + 1):
            nxt[i + 1] = refl * (sq[i + 1] * cur[i])
        for i in range(k + 1):
            nxt[i] = nxt[i] + trans * (sq[k + 1 - i] * cur[i])
        swp = cur
        cur = nxt
        nxt = swp
        cur_is_a = not cur_is_a
    return buf_a if cur_is_a else buf_b


def two_input_term_grid(
    long n1,
    long n2,
    const double[::1] log_fact,
    double log_rho,
    double phi_rho,
    double log_tau,
    double phi_tau,
    bint streamlined,
):
    cdef long tot = n1 + n2
    grid = np.empty((n1 + 1, n2 + 1), dtype=np.complex128)
    rotor = np.empty(tot + 1, dtype=np.complex128)
    cdef double complex[:, ::1] gv = grid
    cdef double complex[::1] rv = rotor
    cdef double dphi = phi_rho - phi_tau
    cdef double base_arg = n2 * phi_rho + n1 * phi_tau
    cdef double complex base = cos(base_arg) + 1j * sin(base_arg)
    cdef long idx, m1, m2
    cdef double d, lm
    for idx in range(tot + 1):
        d = idx - n2
        rv[idx] = cos(d * dphi) + 1j * sin(d * dphi)
    for m1 in range(n1 + 1):
        for m2 in range(n2 + 1):
            lm = _log_coeff(log_fact, n1, n2, m1, m2, streamlined)
            lm += _power_log_mag(n2 + m1 - m2, log_rho)
            lm += _power_log_mag(n1 - m1 + m2, log_tau)
            gv[m1, m2] = exp(lm) * (base * rv[m1 - m2 + n2])
    return grid
