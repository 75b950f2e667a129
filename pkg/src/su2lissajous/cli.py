"""Command-line front end: validates flags, drives the pipeline, writes CSV.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 I/O error.
Angles are radians; complex flags use the literal form a+bi (no spaces);
floats in CSV output carry 17 significant digits.  Output files are
written atomically (temp file + rename) and identical invocations
produce byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .localization import (default_epsilon, glauber_trajectory_check,
                           localization_scan, tube_mass)
from .orbits import orbits_from_coherent, sample_orbit
from .oscillator import (OscillatorConfig, enumerate_subspace, gcd_bezout,
                         subspace_energy)
from .su2 import (SU2CoherentSpec, build_generators, build_su2_coherent,
                  decompose_glauber_su2, j_expectations)
from .wavefield import GridSpec, default_grid, evaluate_density, integrate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

_COMPLEX_RE = re.compile(
    r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$")


def complex_flag(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' (or a bare real) into a complex number."""
    m = _COMPLEX_RE.match(text)
    if m is None:
        raise argparse.ArgumentTypeError(
            f"expected complex literal a+bi with no spaces, got {text!r}")
    return complex(float(m.group(1)), float(m.group(2) or 0.0))


def grid_flag(text: str) -> tuple:
    """Parse 'xmin,xmax,nx,ymin,ymax,ny'."""
    parts = text.split(",")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            f"expected xmin,xmax,nx,ymin,ymax,ny, got {text!r}")
    try:
        return (float(parts[0]), float(parts[1]), int(parts[2]),
                float(parts[3]), float(parts[4]), int(parts[5]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def n_list_flag(text: str) -> list:
    try:
        return [int(s) for s in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}")


@dataclass(frozen=True)
class RunConfig:
    """A validated subcommand invocation."""

    subcommand: str
    params: dict


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".su2lissajous-")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_orbit_csv(ensemble, n_samples: int) -> str:
    lines = ["k,t,x,y"]
    for k, orbit in zip(ensemble.k_labels, ensemble.orbits):
        t, points = sample_orbit(orbit, n_samples)
        for ti, (xi, yi) in zip(t, points):
            lines.append(f"{k},{_fmt(ti)},{_fmt(xi)},{_fmt(yi)}")
    return "\n".join(lines) + "\n"


def format_density_csv(field) -> str:
    xs = field.grid.x_centers()
    ys = field.grid.y_centers()
    lines = ["x,y,density"]
    for iy, y in enumerate(ys):
        row = field.values[iy]
        for ix, x in enumerate(xs):
            lines.append(f"{_fmt(x)},{_fmt(y)},{_fmt(row[ix])}")
    return "\n".join(lines) + "\n"


def format_localization_csv(reports) -> str:
    lines = ["N,epsilon,union_mass,per_orbit_masses"]
    for N, report in reports:
        shares = ";".join(_fmt(m) for m in report.per_orbit_mass)
        lines.append(f"{N},{_fmt(report.epsilon)},{_fmt(report.union_mass)},{shares}")
    return "\n".join(lines) + "\n"


def _add_pq(parser, omega=True):
    parser.add_argument("--p", type=int, required=True,
                        help="y-mode frequency multiplier (positive integer)")
    parser.add_argument("--q", type=int, required=True,
                        help="x-mode frequency multiplier (positive integer)")
    if omega:
        parser.add_argument("--omega", type=float, default=1.0,
                            help="common frequency, natural units (default 1.0)")


def _add_sphere(parser):
    parser.add_argument("--N", type=int, required=True,
                        help="total internal quantum number, N = 2j")
    parser.add_argument("--theta", type=float, required=True,
                        help="polar angle in radians, within [0, pi]")
    parser.add_argument("--phi", type=float, default=0.0,
                        help="azimuthal angle in radians, within [0, 2*pi) (default 0)")


def _add_lambdas(parser):
    parser.add_argument("--lambda1", type=int, default=0,
                        help="x-mode residue in [0, p) (default 0)")
    parser.add_argument("--lambda2", type=int, default=0,
                        help="y-mode residue in [0, q) (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2lissajous",
        description="Coherent states of the commensurate anisotropic "
                    "oscillator and their classical Lissajous orbits.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("bezout", help="solve p*nu1 + q*nu2 = gcd(p, q)")
    _add_pq(sp, omega=False)

    sp = sub.add_parser("spectrum", help="energy of a degenerate eigenspace")
    _add_pq(sp)
    _add_lambdas(sp)
    sp.add_argument("--N", type=int, required=True,
                    help="total internal quantum number, N = 2j")

    sp = sub.add_parser("coherent",
                        help="build a coherent state; print norm, energy and <J>")
    _add_pq(sp)
    _add_sphere(sp)
    _add_lambdas(sp)

    sp = sub.add_parser("density", help="position density on a grid, CSV x,y,density")
    _add_pq(sp)
    _add_sphere(sp)
    _add_lambdas(sp)
    sp.add_argument("--grid", type=grid_flag, default=None,
                    help="xmin,xmax,nx,ymin,ymax,ny (default: auto-sized square, 512x512)")
    sp.add_argument("--out", required=True, help="output CSV path")

    sp = sub.add_parser("orbits", help="classical orbit ensemble, CSV k,t,x,y")
    _add_pq(sp)
    _add_sphere(sp)
    sp.add_argument("--samples", type=int, default=4096,
                    help="time samples per orbit over one period (default 4096)")
    sp.add_argument("--out", required=True, help="output CSV path")

    sp = sub.add_parser("localize",
                        help="orbit-tube masses over an N scan, CSV "
                             "N,epsilon,union_mass,per_orbit_masses")
    _add_pq(sp)
    sp.add_argument("--theta", type=float, required=True,
                    help="polar angle in radians, within [0, pi]")
    sp.add_argument("--phi", type=float, default=0.0,
                    help="azimuthal angle in radians, within [0, 2*pi) (default 0)")
    _add_lambdas(sp)
    sp.add_argument("--N-list", type=n_list_flag, required=True,
                    help="ascending comma-separated N values, e.g. 10,20,40")
    sp.add_argument("--epsilon", type=float, default=None,
                    help="tube radius, position units (default 3*mean ground width)")
    sp.add_argument("--samples", type=int, default=4096,
                    help="orbit discretization count (default 4096)")
    sp.add_argument("--out", default=None, help="optional output CSV path")

    sp = sub.add_parser("evolve",
                        help="check mode expectations against the classical orbit")
    sp.add_argument("--alpha1", type=complex_flag, required=True,
                    help="mode-1 coherent amplitude, literal a+bi")
    sp.add_argument("--alpha2", type=complex_flag, required=True,
                    help="mode-2 coherent amplitude, literal a+bi")
    _add_pq(sp)
    sp.add_argument("--samples", type=int, default=100,
                    help="time samples over one period (default 100)")

    sp = sub.add_parser("decompose",
                        help="split a two-mode Glauber state over j subspaces (p = q = 1)")
    sp.add_argument("--alpha1", type=complex_flag, required=True,
                    help="mode-1 coherent amplitude, literal a+bi")
    sp.add_argument("--alpha2", type=complex_flag, required=True,
                    help="mode-2 coherent amplitude, literal a+bi (nonzero)")
    sp.add_argument("--jmax", type=float, required=True,
                    help="largest j (half-integer) to project onto")
    sp.add_argument("--out", default=None, help="optional CSV path j,re_weight,im_weight,prob")
    return parser


def parse_args(argv) -> RunConfig:
    """Validated RunConfig; argparse exits with status 2 on usage errors and
    domain violations raise DomainError."""
    ns = build_parser().parse_args(argv)
    params = dict(vars(ns))
    sub = params.pop("subcommand")
    if sub in {"bezout"}:
        OscillatorConfig(p=ns.p, q=ns.q)       # range validation only
    elif sub in {"spectrum", "coherent", "density", "orbits", "localize",
                 "evolve"}:
        cfg = OscillatorConfig(p=ns.p, q=ns.q, omega=getattr(ns, "omega", 1.0))
        params["cfg"] = cfg
        lam1 = getattr(ns, "lambda1", 0)
        lam2 = getattr(ns, "lambda2", 0)
        if not 0 <= lam1 < cfg.p:
            raise DomainError(f"lambda1 must lie in [0, p) = [0, {cfg.p}), got {lam1}")
        if not 0 <= lam2 < cfg.q:
            raise DomainError(f"lambda2 must lie in [0, q) = [0, {cfg.q}), got {lam2}")
        if hasattr(ns, "theta"):
            if not 0.0 <= ns.theta <= math.pi:
                raise DomainError(f"theta must lie in [0, pi], got {ns.theta}")
            if not 0.0 <= ns.phi < 2.0 * math.pi:
                raise DomainError(f"phi must lie in [0, 2*pi), got {ns.phi}")
        if getattr(ns, "N", 0) is not None and getattr(ns, "N", 0) < 0:
            raise DomainError(f"N must be nonnegative, got {ns.N}")
        if getattr(ns, "samples", 1) < 1:
            raise DomainError("samples must be positive")
        if getattr(ns, "epsilon", None) is not None and ns.epsilon <= 0:
            raise DomainError(f"epsilon must be positive, got {ns.epsilon}")
        if getattr(ns, "N_list", None) is not None:
            if any(n < 0 for n in ns.N_list):
                raise DomainError("N values must be nonnegative")
            if ns.N_list != sorted(ns.N_list):
                raise DomainError("N list must be ascending")
    elif sub == "decompose":
        if ns.alpha2 == 0:
            raise DomainError("alpha2 must be nonzero (tau = alpha1/alpha2)")
        if ns.jmax < 0:
            raise DomainError(f"jmax must be nonnegative, got {ns.jmax}")
    return RunConfig(subcommand=sub, params=params)


def _cmd_bezout(p):
    sol = gcd_bezout(p["p"], p["q"])
    print(f"M={sol.M} nu1={sol.nu1} nu2={sol.nu2}")
    return EXIT_OK


def _cmd_spectrum(p):
    cfg = p["cfg"]
    basis = enumerate_subspace(cfg, p["lambda1"], p["lambda2"], p["N"])
    print(f"E={_fmt(subspace_energy(cfg, basis))} dim={basis.dim}")
    return EXIT_OK


def _coherent_pieces(p):
    cfg = p["cfg"]
    spec = SU2CoherentSpec(N=p["N"], theta=p["theta"], phi=p["phi"],
                           lambda1=p["lambda1"], lambda2=p["lambda2"])
    basis = enumerate_subspace(cfg, spec.lambda1, spec.lambda2, spec.N)
    return cfg, spec, basis, build_su2_coherent(spec, basis)


def _cmd_coherent(p):
    cfg, spec, basis, state = _coherent_pieces(p)
    jx, jy, jz = j_expectations(state, build_generators(basis))
    print(f"norm={_fmt(state.norm)} E={_fmt(subspace_energy(cfg, basis))} "
          f"Jx={_fmt(jx)} Jy={_fmt(jy)} Jz={_fmt(jz)}")
    return EXIT_OK


def _cmd_density(p):
    cfg, spec, basis, state = _coherent_pieces(p)
    if p["grid"] is None:
        grid = default_grid(orbits_from_coherent(spec, cfg))
    else:
        grid = GridSpec(*p["grid"])
    field = evaluate_density(state, cfg, grid)
    _atomic_write(p["out"], format_density_csv(field))
    print(f"wrote {p['out']} ({grid.nx}x{grid.ny} cells, "
          f"mass={_fmt(integrate(field))})")
    return EXIT_OK


def _cmd_orbits(p):
    cfg = p["cfg"]
    spec = SU2CoherentSpec(N=p["N"], theta=p["theta"], phi=p["phi"])
    ensemble = orbits_from_coherent(spec, cfg)
    _atomic_write(p["out"], format_orbit_csv(ensemble, p["samples"]))
    print(f"wrote {p['out']} ({ensemble.M} orbits x {p['samples']} samples)")
    return EXIT_OK


def _cmd_localize(p):
    cfg = p["cfg"]
    template = SU2CoherentSpec(N=0, theta=p["theta"], phi=p["phi"],
                               lambda1=p["lambda1"], lambda2=p["lambda2"])
    rule = None
    if p["epsilon"] is not None:
        rule = lambda c, n: p["epsilon"]
    reports = localization_scan(template, cfg, p["N_list"], epsilon_rule=rule,
                                n_samples=p["samples"])
    if p["out"] is not None:
        _atomic_write(p["out"], format_localization_csv(reports))
        print(f"wrote {p['out']} ({len(reports)} rows)")
    else:
        masses = " ".join(f"N={N}:{report.union_mass:.6f}"
                          for N, report in reports)
        print(f"epsilon={_fmt(reports[0][1].epsilon)} union_mass {masses}")
    return EXIT_OK


def _cmd_evolve(p):
    cfg = p["cfg"]
    t = np.linspace(0.0, 2.0 * math.pi / cfg.omega, p["samples"])
    dev = glauber_trajectory_check(p["alpha1"], p["alpha2"], cfg, t)
    print(f"max_deviation={_fmt(dev)}")
    return EXIT_OK


def _cmd_decompose(p):
    parts = decompose_glauber_su2(p["alpha1"], p["alpha2"], p["jmax"])
    captured = sum(abs(w) ** 2 for _, w, _ in parts)
    if p["out"] is not None:
        lines = ["j,re_weight,im_weight,prob"]
        for j, w, _ in parts:
            lines.append(f"{_fmt(j)},{_fmt(w.real)},{_fmt(w.imag)},{_fmt(abs(w) ** 2)}")
        _atomic_write(p["out"], "\n".join(lines) + "\n")
        print(f"wrote {p['out']} ({len(parts)} subspaces, captured={_fmt(captured)})")
    else:
        print(f"subspaces={len(parts)} captured={_fmt(captured)}")
    return EXIT_OK


_COMMANDS = {
    "bezout": _cmd_bezout,
    "spectrum": _cmd_spectrum,
    "coherent": _cmd_coherent,
    "density": _cmd_density,
    "orbits": _cmd_orbits,
    "localize": _cmd_localize,
    "evolve": _cmd_evolve,
    "decompose": _cmd_decompose,
}


def run(config: RunConfig) -> int:
    """Dispatch a validated RunConfig; raises DomainError/OSError on failure."""
    return _COMMANDS[config.subcommand](config.params)


def main(argv=None) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
        return run(config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        name = getattr(exc, "filename", None) or ""
        print(f"error: I/O failure {name}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
