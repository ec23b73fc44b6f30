"""Command-line interface.

Splitter coefficients enter as magnitude plus phase in degrees; all
internal math uses radians.  Results go to standard output as JSON or
CSV with full round-trip float precision and a fixed field order, so
identical invocations produce identical bytes.  Exit code 0 on success,
2 for usage errors or a splitter that fails validation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any

from .distributions import (
    FockPair,
    poisson_reference,
    poisson_tv_distance,
    single_input_distribution,
    two_input_distribution,
)
from .scenarios import cascade_two_photon_annihilator, hom_coincidence_probability
from .splitter import (
    SymmetricSplitter,
    complete_family,
    lossless_residual,
    michelson_amplitudes,
    validate_family,
    validate_symmetric,
)

_REFS = {
    "constraints": "lossless splitter: |rho|^2+|tau|^2=1, 90-degree rho/tau phase offset",
    "distribution": "path sum over reflected/transmitted partitions of Fock inputs",
    "hom": "Hong-Ou-Mandel coincidence dip, Phys. Rev. Lett. 59, 2044 (1987)",
    "michelson": "two-arm interferometer energy balance over the coefficient family",
    "poisson": "weak-reflection tap approaches a Poisson photon-count law",
    "annihilation": "post-selected weak tap realizes sqrt(n) annihilation scaling",
}


def _complex_obj(z: complex) -> dict[str, float]:
    return {"re": float(z.real), "im": float(z.imag)}


def _fmt(value: Any) -> str:
    # repr of a float is the shortest string that round-trips, never more
    # than 17 significant digits.
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_json(obj: dict[str, Any]) -> None:
    print(json.dumps(obj, indent=2))


def _emit_csv(header: list[str], rows: list[list[Any]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(_fmt(v) for v in row))


def _add_splitter_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rho-mag", type=float, required=True, help="|rho|")
    p.add_argument(
        "--rho-deg", type=float, default=0.0, help="phase of rho in degrees (default 0)"
    )
    p.add_argument(
        "--tau-mag",
        type=float,
        default=None,
        help="|tau| (default sqrt(1 - rho_mag^2))",
    )
    p.add_argument(
        "--tau-deg",
        type=float,
        default=None,
        help="phase of tau in degrees (default rho_deg + 90)",
    )
    p.add_argument(
        "--tol",
        type=float,
        default=1e-10,
        help="validation tolerance (default 1e-10)",
    )


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("json", "csv"),
        default="json",
        help="output format (default json)",
    )


def _splitter_inputs(args: argparse.Namespace) -> dict[str, float]:
    tau_mag = args.tau_mag
    if tau_mag is None:
        if args.rho_mag > 1.0:
            raise ValueError(f"cannot infer |tau| from |rho| = {args.rho_mag} > 1")
        tau_mag = math.sqrt(1.0 - args.rho_mag * args.rho_mag)
    tau_deg = args.tau_deg if args.tau_deg is not None else args.rho_deg + 90.0
    return {
        "rho_mag": args.rho_mag,
        "rho_deg": args.rho_deg,
        "tau_mag": tau_mag,
        "tau_deg": tau_deg,
    }


def _build_splitter(inputs: dict[str, float]) -> SymmetricSplitter:
    return SymmetricSplitter.from_polar(
        inputs["rho_mag"],
        math.radians(inputs["rho_deg"]),
        inputs["tau_mag"],
        math.radians(inputs["tau_deg"]),
    )


def _validated_splitter(
    args: argparse.Namespace,
) -> tuple[dict[str, float], SymmetricSplitter] | None:
    """Parse and validate the splitter; on failure report to stderr."""
    inputs = _splitter_inputs(args)
    s = _build_splitter(inputs)
    report = validate_symmetric(s, tol=args.tol)
    if not report.ok:
        print(
            "invalid splitter: "
            + ", ".join(f"{k}={v!r}" for k, v in report.residuals.items()),
            file=sys.stderr,
        )
        return None
    return inputs, s


def _validated_front_pair(
    args: argparse.Namespace,
) -> tuple[dict[str, float], SymmetricSplitter] | None:
    """Parse a front-side (rho, tau) pair, requiring only unit norm.

    The coefficient-family commands accept any lossless front pair; the
    90-degree quadrature constraint applies to symmetric splitters only.
    """
    inputs = _splitter_inputs(args)
    s = _build_splitter(inputs)
    unitarity = abs(abs(s.rho) ** 2 + abs(s.tau) ** 2 - 1.0)
    if unitarity > args.tol:
        print(f"invalid splitter: unitarity={unitarity!r}", file=sys.stderr)
        return None
    return inputs, s


def _cmd_validate(args: argparse.Namespace) -> int:
    inputs = _splitter_inputs(args)
    report = validate_symmetric(_build_splitter(inputs), tol=args.tol)
    if args.format == "json":
        _emit_json(
            {
                "inputs": {**inputs, "tol": args.tol},
                "checks": report.residuals,
                "pass": report.ok,
                "paper_refs": [_REFS["constraints"]],
            }
        )
    else:
        _emit_csv(
            ["constraint", "residual", "pass"],
            [[k, v, v <= args.tol] for k, v in report.residuals.items()],
        )
    return 0 if report.ok else 2


def _cmd_distribution(args: argparse.Namespace) -> int:
    parsed = _validated_splitter(args)
    if parsed is None:
        return 2
    inputs, s = parsed
    dist = two_input_distribution(FockPair(args.n1, args.n2), s)
    probs = dist.probabilities
    if args.format == "json":
        _emit_json(
            {
                "inputs": {"n1": args.n1, "n2": args.n2, **inputs},
                "probabilities": [float(p) for p in probs],
                "amplitudes": [_complex_obj(a) for a in dist.amplitudes],
                "checks": {"norm_residual": dist.norm_residual},
                "paper_refs": [_REFS["distribution"]],
            }
        )
    else:
        _emit_csv(
            ["m", "probability", "amplitude_re", "amplitude_im"],
            [
                [m, float(probs[m]), dist.amplitudes[m].real, dist.amplitudes[m].imag]
                for m in range(dist.total + 1)
            ],
        )
    return 0


def _cmd_hom_scan(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ValueError(f"--steps must be at least 2, got {args.steps}")
    rows = []
    for i in range(args.steps):
        reflectance = i / (args.steps - 1)
        s = SymmetricSplitter.from_polar(math.sqrt(reflectance))
        rows.append([reflectance, hom_coincidence_probability(s)])
    if args.format == "json":
        _emit_json(
            {
                "inputs": {"steps": args.steps},
                "scan": [
                    {"reflectance": r, "coincidence_probability": p} for r, p in rows
                ],
                "paper_refs": [_REFS["hom"]],
            }
        )
    else:
        _emit_csv(["reflectance", "coincidence_probability"], rows)
    return 0


def _cmd_michelson(args: argparse.Namespace) -> int:
    parsed = _validated_front_pair(args)
    if parsed is None:
        return 2
    inputs, s = parsed
    branch = 1 if args.branch == "plus" else -1
    family = complete_family(s, math.radians(args.tau_p_deg), branch)
    phi_1 = math.radians(args.phi1_deg)
    phi_2 = math.radians(args.phi2_deg)
    psi_1, psi_2 = michelson_amplitudes(family, phi_1, phi_2)
    energy_residual = abs(psi_1) ** 2 + abs(psi_2) ** 2 - 1.0
    if args.format == "json":
        _emit_json(
            {
                "inputs": {
                    **inputs,
                    "tau_p_deg": args.tau_p_deg,
                    "branch": args.branch,
                    "phi1_deg": args.phi1_deg,
                    "phi2_deg": args.phi2_deg,
                },
                "psi_1": _complex_obj(psi_1),
                "psi_2": _complex_obj(psi_2),
                "probabilities": [abs(psi_1) ** 2, abs(psi_2) ** 2],
                "checks": {
                    "energy_residual": energy_residual,
                    "residual_at_offset": lossless_residual(
                        family, phi_1 - phi_2
                    ),
                },
                "paper_refs": [_REFS["michelson"]],
            }
        )
    else:
        _emit_csv(
            ["quantity", "value"],
            [
                ["psi_1_re", psi_1.real],
                ["psi_1_im", psi_1.imag],
                ["psi_2_re", psi_2.real],
                ["psi_2_im", psi_2.imag],
                ["p_1", abs(psi_1) ** 2],
                ["p_2", abs(psi_2) ** 2],
                ["energy_residual", energy_residual],
            ],
        )
    return 0


def _cmd_poisson_compare(args: argparse.Namespace) -> int:
    parsed = _validated_splitter(args)
    if parsed is None:
        return 2
    inputs, s = parsed
    cutoff = args.cutoff if args.cutoff is not None else args.n
    dist = single_input_distribution(args.n, s, max_total=1024)
    ref = poisson_reference(args.n, s, cutoff)
    tv = poisson_tv_distance(dist, ref)
    if args.format == "json":
        _emit_json(
            {
                "inputs": {"n": args.n, "cutoff": cutoff, **inputs},
                "mean": ref.mean,
                "probabilities": [float(p) for p in dist.probabilities[: cutoff + 1]],
                "poisson_probabilities": [float(p) for p in ref.probabilities],
                "checks": {
                    "tv_distance": tv,
                    "norm_residual": dist.norm_residual,
                },
                "paper_refs": [_REFS["poisson"]],
            }
        )
    else:
        probs = dist.probabilities
        _emit_csv(
            ["m", "exact_probability", "poisson_probability"],
            [
                [m, float(probs[m]), float(ref.probabilities[m])]
                for m in range(cutoff + 1)
            ],
        )
    return 0


def _cmd_cascade(args: argparse.Namespace) -> int:
    parsed = _validated_splitter(args)
    if parsed is None:
        return 2
    inputs, s = parsed
    amp = cascade_two_photon_annihilator(args.n, s)
    reference = math.sqrt(args.n * (args.n - 1)) * abs(s.rho) ** 2
    deviation = abs(abs(amp) - reference) / reference if reference > 0.0 else 0.0
    if args.format == "json":
        _emit_json(
            {
                "inputs": {"n": args.n, **inputs},
                "amplitude": _complex_obj(amp),
                "magnitude": abs(amp),
                "reference_magnitude": reference,
                "checks": {"relative_deviation": deviation},
                "paper_refs": [_REFS["annihilation"]],
            }
        )
    else:
        _emit_csv(
            ["quantity", "value"],
            [
                ["amplitude_re", amp.real],
                ["amplitude_im", amp.imag],
                ["magnitude", abs(amp)],
                ["reference_magnitude", reference],
                ["relative_deviation", deviation],
            ],
        )
    return 0


def _cmd_complete_family(args: argparse.Namespace) -> int:
    parsed = _validated_front_pair(args)
    if parsed is None:
        return 2
    inputs, s = parsed
    branch = 1 if args.branch == "plus" else -1
    family = complete_family(s, math.radians(args.tau_p_deg), branch)
    report = validate_family(family, tol=args.tol)
    names = [
        "rho", "tau", "rho_p", "tau_p", "rho_pp", "tau_pp", "rho_ppp", "tau_ppp",
    ]
    if args.format == "json":
        _emit_json(
            {
                "inputs": {
                    **inputs,
                    "tau_p_deg": args.tau_p_deg,
                    "branch": args.branch,
                },
                "coefficients": {
                    name: _complex_obj(getattr(family, name)) for name in names
                },
                "checks": report.residuals,
                "pass": report.ok,
                "paper_refs": [_REFS["constraints"]],
            }
        )
    else:
        _emit_csv(
            ["coefficient", "re", "im"],
            [
                [name, getattr(family, name).real, getattr(family, name).imag]
                for name in names
            ],
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="focksplit",
        description="Photon-number statistics and constraints of a lossless beam splitter",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check splitter coefficients")
    _add_splitter_args(p)
    _add_format_arg(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("distribution", help="output counts for Fock inputs |n1>,|n2>")
    p.add_argument("--n1", type=int, required=True, help="photons on input 1")
    p.add_argument("--n2", type=int, required=True, help="photons on input 2")
    _add_splitter_args(p)
    _add_format_arg(p)
    p.set_defaults(func=_cmd_distribution)

    p = sub.add_parser("hom-scan", help="coincidence probability vs reflectance")
    p.add_argument(
        "--steps", type=int, default=101, help="number of scan points (default 101)"
    )
    _add_format_arg(p)
    p.set_defaults(func=_cmd_hom_scan)

    p = sub.add_parser("michelson", help="two-arm interferometer amplitudes")
    _add_splitter_args(p)
    p.add_argument(
        "--tau-p-deg",
        type=float,
        required=True,
        help="first-return transmission phase in degrees (free parameter)",
    )
    p.add_argument(
        "--branch",
        choices=("plus", "minus"),
        required=True,
        help="sign of the pi offset in the return reflection phase",
    )
    p.add_argument("--phi1-deg", type=float, default=0.0, help="arm 1 phase (degrees)")
    p.add_argument("--phi2-deg", type=float, default=0.0, help="arm 2 phase (degrees)")
    _add_format_arg(p)
    p.set_defaults(func=_cmd_michelson)

    p = sub.add_parser(
        "poisson-compare", help="reflected counts of |n> vs the Poisson law"
    )
    p.add_argument("--n", type=int, required=True, help="input photon number")
    p.add_argument(
        "--cutoff", type=int, default=None, help="reference cutoff (default n)"
    )
    _add_splitter_args(p)
    _add_format_arg(p)
    p.set_defaults(func=_cmd_poisson_compare)

    p = sub.add_parser("cascade", help="two weak taps in series on |n>")
    p.add_argument("--n", type=int, required=True, help="input photon number (>= 2)")
    _add_splitter_args(p)
    _add_format_arg(p)
    p.set_defaults(func=_cmd_cascade)

    p = sub.add_parser(
        "complete-family", help="extend (rho, tau) to all four incidence geometries"
    )
    _add_splitter_args(p)
    p.add_argument(
        "--tau-p-deg",
        type=float,
        required=True,
        help="first-return transmission phase in degrees (free parameter)",
    )
    p.add_argument(
        "--branch",
        choices=("plus", "minus"),
        required=True,
        help="sign of the pi offset in the return reflection phase",
    )
    _add_format_arg(p)
    p.set_defaults(func=_cmd_complete_family)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
