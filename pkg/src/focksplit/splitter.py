"""Fresnel-coefficient constraints for a lossless beam splitter.

A symmetric splitter is described by one reflection coefficient rho and
one transmission coefficient tau, shared by both input ports.  Energy
conservation requires |rho|^2 + |tau|^2 = 1 together with a 90-degree
phase offset between the two coefficients.

The general lossless element has four incidence geometries (front side,
first return, second return, back side), giving the coefficient family
(rho, tau), (rho', tau'), (rho'', tau''), (rho''', tau''').  A two-arm
interferometer closed by such an element is lossless for every pair of
arm phases only if the magnitudes and phase sums of the family satisfy
the constraints checked here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numerics import wrap_phase


@dataclass(frozen=True)
class SymmetricSplitter:
    """Front-side coefficients of a symmetric lossless splitter."""

    rho: complex
    tau: complex

    @classmethod
    def from_polar(
        cls,
        rho_mag: float,
        rho_phase: float = 0.0,
        tau_mag: float | None = None,
        tau_phase: float | None = None,
    ) -> "SymmetricSplitter":
        """Build a splitter from polar coefficients (phases in radians).

        tau_mag defaults to sqrt(1 - rho_mag^2) and tau_phase to
        rho_phase + pi/2, which yields a valid splitter for any
        reflection magnitude in [0, 1].
        """
        if rho_mag < 0.0 or (tau_mag is not None and tau_mag < 0.0):
            raise ValueError("coefficient magnitudes must be nonnegative")
        if tau_mag is None:
            if rho_mag > 1.0:
                raise ValueError(
                    f"cannot infer tau magnitude from |rho| = {rho_mag} > 1"
                )
            tau_mag = math.sqrt(1.0 - rho_mag * rho_mag)
        if tau_phase is None:
            tau_phase = rho_phase + 0.5 * math.pi
        return cls(
            rho=cmath.rect(rho_mag, rho_phase),
            tau=cmath.rect(tau_mag, tau_phase),
        )

    @classmethod
    def balanced(cls) -> "SymmetricSplitter":
        """The 50/50 splitter rho = 1/sqrt(2), tau = i/sqrt(2)."""
        return cls.from_polar(1.0 / math.sqrt(2.0))

    @property
    def reflectance(self) -> float:
        return abs(self.rho) ** 2

    @property
    def transmittance(self) -> float:
        return abs(self.tau) ** 2


@dataclass(frozen=True)
class AsymmetricSplitter:
    """Coefficient family of a lossless element for all four geometries.

    rho, tau      front side (first pass)
    rho_p, tau_p  first return (arm 1 light coming back)
    rho_pp, tau_pp  second return (arm 2 light coming back)
    rho_ppp, tau_ppp  back side
    """

    rho: complex
    tau: complex
    rho_p: complex
    tau_p: complex
    rho_pp: complex
    tau_pp: complex
    rho_ppp: complex
    tau_ppp: complex


@dataclass(frozen=True)
class ConstraintReport:
    """Named nonnegative residuals compared against one tolerance."""

    residuals: dict[str, float]
    tol: float

    @property
    def passes(self) -> dict[str, bool]:
        return {name: r <= self.tol for name, r in self.residuals.items()}

    @property
    def ok(self) -> bool:
        return all(r <= self.tol for r in self.residuals.values())


def _quadrature_residual(a: complex, b: complex) -> float:
    # |cos(phase(a) - phase(b))|: zero exactly when the phases differ by
    # 90 degrees either way.  A zero-magnitude coefficient leaves its
    # phase unconstrained, so the residual is reported as passing.
    ma, mb = abs(a), abs(b)
    if ma == 0.0 or mb == 0.0:
        return 0.0
    return abs((a * b.conjugate()).real) / (ma * mb)


def validate_symmetric(s: SymmetricSplitter, tol: float = 1e-10) -> ConstraintReport:
    """Check energy conservation and the 90-degree phase offset."""
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    residuals = {
        "unitarity": abs(abs(s.rho) ** 2 + abs(s.tau) ** 2 - 1.0),
        "phase_quadrature": _quadrature_residual(s.rho, s.tau),
    }
    return ConstraintReport(residuals=residuals, tol=tol)


def complete_family(
    s: SymmetricSplitter, phi_tau_p: float, branch: int
) -> AsymmetricSplitter:
    """Extend front-side coefficients to a full lossless family.

    Losslessness and time-reversal symmetry pin everything except one
    free phase (phi_tau_p, the first-return transmission phase) and a
    binary branch choice (the sign of the pi offset in the return
    reflection phases).  The construction sets

        rho' = rho, tau'' = tau,
        tau' = |tau| * exp(i * phi_tau_p),
        rho'' = |rho| * exp(i * (phase(tau) + phi_tau_p - phase(rho) + branch * pi)),

    and back-side coefficients rho''' = rho'', tau''' = tau'.
    """
    if branch not in (1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")
    # Only energy conservation constrains the front pair here; the
    # 90-degree quadrature relation belongs to the symmetric-splitter
    # special case and is not assumed by the family construction.
    unitarity = abs(abs(s.rho) ** 2 + abs(s.tau) ** 2 - 1.0)
    if unitarity > 1e-10:
        raise ValueError(
            f"front-side coefficients are not lossless: "
            f"| |rho|^2 + |tau|^2 - 1 | = {unitarity:.3e}"
        )
    phi_rho = cmath.phase(s.rho) if abs(s.rho) > 0.0 else 0.0
    phi_tau = cmath.phase(s.tau) if abs(s.tau) > 0.0 else 0.0
    tau_p = cmath.rect(abs(s.tau), phi_tau_p)
    rho_pp = cmath.rect(
        abs(s.rho), wrap_phase(phi_tau + phi_tau_p - phi_rho + branch * math.pi)
    )
    return AsymmetricSplitter(
        rho=s.rho,
        tau=s.tau,
        rho_p=s.rho,
        tau_p=tau_p,
        rho_pp=rho_pp,
        tau_pp=s.tau,
        rho_ppp=rho_pp,
        tau_ppp=tau_p,
    )


def michelson_amplitudes(
    s: AsymmetricSplitter, phi_1: float, phi_2: float
) -> tuple[complex, complex]:
    """Return amplitudes of a two-arm interferometer closed by s.

    psi_1 goes back out the source port, psi_2 out the detection port;
    phi_1 and phi_2 are the round-trip phases of the two arms.
    """
    e1 = cmath.exp(1j * phi_1)
    e2 = cmath.exp(1j * phi_2)
    psi_1 = s.rho * s.rho_p * e1 + s.tau * s.tau_pp * e2
    psi_2 = s.rho * s.tau_p * e1 + s.tau * s.rho_pp * e2
    return psi_1, psi_2


def lossless_residual(s: AsymmetricSplitter, delta_phi: float) -> float:
    """Signed energy defect |psi_1|^2 + |psi_2|^2 - 1 at arm offset delta_phi.

    Zero for every delta_phi exactly when the family satisfies the
    lossless constraints; a phase-sum violation makes the residual
    oscillate with delta_phi.
    """
    psi_1, psi_2 = michelson_amplitudes(s, delta_phi, 0.0)
    return abs(psi_1) ** 2 + abs(psi_2) ** 2 - 1.0


def time_reversal_residuals(s: AsymmetricSplitter) -> tuple[complex, complex]:
    """Defects of the two time-reversal identities.

    Running the outputs backwards must reconstruct the input, which
    requires conj(rho) * rho' + conj(tau) * tau'' = 1 and
    conj(rho) * tau' + conj(tau) * rho'' = 0.  Returns both left-hand
    sides minus their targets.
    """
    c1 = s.rho.conjugate() * s.rho_p + s.tau.conjugate() * s.tau_pp - 1.0
    c2 = s.rho.conjugate() * s.tau_p + s.tau.conjugate() * s.rho_pp
    return c1, c2


def _phase_sum_residual(s: AsymmetricSplitter) -> float:
    # The return phases must satisfy
    # (phase(rho') + phase(rho'')) - (phase(tau') + phase(tau'')) = pi mod 2pi.
    # Unconstrained if any participating coefficient vanishes.
    coeffs = (s.rho_p, s.rho_pp, s.tau_p, s.tau_pp)
    if any(abs(c) == 0.0 for c in coeffs):
        return 0.0
    diff = (
        cmath.phase(s.rho_p)
        + cmath.phase(s.rho_pp)
        - cmath.phase(s.tau_p)
        - cmath.phase(s.tau_pp)
    )
    return abs(abs(wrap_phase(diff)) - math.pi)


def validate_family(s: AsymmetricSplitter, tol: float = 1e-10) -> ConstraintReport:
    """Full residual report for an asymmetric coefficient family."""
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    c1, c2 = time_reversal_residuals(s)
    residuals = {
        "unitarity_front": abs(abs(s.rho) ** 2 + abs(s.tau) ** 2 - 1.0),
        "unitarity_first_return": abs(abs(s.rho_p) ** 2 + abs(s.tau_p) ** 2 - 1.0),
        "unitarity_second_return": abs(abs(s.rho_pp) ** 2 + abs(s.tau_pp) ** 2 - 1.0),
        "return_rho_magnitudes": abs(abs(s.rho_p) - abs(s.rho_pp)),
        "return_tau_magnitudes": abs(abs(s.tau_p) - abs(s.tau_pp)),
        "return_phase_sum": _phase_sum_residual(s),
        "time_reversal_direct": abs(c1),
        "time_reversal_cross": abs(c2),
        "backside_rho": abs(s.rho_ppp - s.rho_pp),
        "backside_tau": abs(s.tau_ppp - s.tau_p),
    }
    return ConstraintReport(residuals=residuals, tol=tol)
