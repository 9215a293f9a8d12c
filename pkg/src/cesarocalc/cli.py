"""Command-line front end.

Subcommands: apply, symbol, norm, spectrum, mellin, nu, verify.  Numeric
output is CSV (headers `s,re,im` for symbols, `t,re,im` for curves,
`x,re,im` for operator actions) or plain text, always with 17 significant
digits so repeated runs are byte-identical.  Exit codes: 0 success,
1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from . import verify as verify_mod
from .calculus import mellin_transform
from .errors import CesaroCalcError
from .kernels import (cesaro_kernel, copson_kernel, fractional_part_kernel,
                      generalized_cesaro_kernel, hardy_kernel, holder_kernel,
                      log_inverse_kernel, log_resolvent_kernel)
from .operators import (DomainSpace, HausdorffOperator, apply, exp_decay,
                        indicator_unit, triangle)
from .quadrature import QuadratureConfig
from .special import volterra_nu
from .symbols import (SpectrumCurve, operator_norm, spectrum_circle,
                      spectrum_log_curve, symbol_grid)

__all__ = ["RunConfig", "run", "emit_curve", "main"]

_KERNELS = ("cesaro", "hardy", "copson", "holder", "gencesaro",
            "fracpart", "logres", "loginv")
_FUNCTIONS = ("indicator", "exp", "triangle")
_DOMAINS = {"full": DomainSpace.FullLine, "half": DomainSpace.HalfLine,
            "unit": DomainSpace.UnitInterval}
_ENV_OUT_DIR = "CESAROCALC_OUT_DIR"


@dataclass
class RunConfig:
    """A validated CLI invocation."""

    command: str
    kernel_spec: str = ""
    alpha: complex = 0.0
    lam: complex = 1.0
    p: complex = 1.0
    function: str = "indicator"
    domain: str = "full"
    x: Optional[float] = None
    y: Optional[complex] = None
    z: Optional[complex] = None
    s: Optional[float] = None
    s_range: Optional[tuple] = None
    x_range: Optional[tuple] = None
    y_range: Optional[tuple] = None
    curve: str = "circle"
    n: int = 100
    suite: str = "all"
    list_suites: bool = False
    tolerance: float = 1e-10
    halfwidth: float = 200.0
    output_path: str = ""
    format: str = "csv"


def _fmt(v: float) -> str:
    return "%.17g" % v


def _parse_range(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("range must be min:max:step, got %r" % text)
    lo, hi, step = float(parts[0]), float(parts[1]), float(parts[2])
    if not (lo < hi and step > 0):
        raise ValueError("range needs min < max and step > 0, got %r" % text)
    return lo, hi, step


def _range_values(rng: tuple) -> np.ndarray:
    lo, hi, step = rng
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", ""))


def _resolve_out(path: str) -> str:
    out_dir = os.environ.get(_ENV_OUT_DIR, "")
    if out_dir and path and not os.path.isabs(path):
        return os.path.join(out_dir, path)
    return path


def _open_out(path: str):
    if path:
        return open(_resolve_out(path), "w", newline="")
    return None


def _build_kernel(cfg: RunConfig):
    name = cfg.kernel_spec
    if name == "cesaro":
        return cesaro_kernel()
    if name == "hardy":
        return hardy_kernel(cfg.alpha)
    if name == "copson":
        return copson_kernel(cfg.alpha)
    if name == "holder":
        return holder_kernel(cfg.alpha)
    if name == "gencesaro":
        return generalized_cesaro_kernel(cfg.alpha.real)
    if name == "fracpart":
        return fractional_part_kernel()
    if name == "logres":
        return log_resolvent_kernel(cfg.lam)
    if name == "loginv":
        return log_inverse_kernel()
    raise ValueError("unknown kernel %r (choose from %s)" % (name, ", ".join(_KERNELS)))


def _build_function(cfg: RunConfig):
    if cfg.function == "indicator":
        return indicator_unit()
    if cfg.function == "exp":
        return exp_decay(cfg.p)
    if cfg.function == "triangle":
        return triangle()
    raise ValueError("unknown test function %r" % cfg.function)


def _emit_rows(header: str, rows, out_path: str) -> None:
    lines = [header]
    for t, v in rows:
        lines.append("%s,%s,%s" % (_fmt(t), _fmt(v.real), _fmt(v.imag)))
    text = "\n".join(lines) + "\n"
    fh = _open_out(out_path)
    if fh is None:
        sys.stdout.write(text)
    else:
        with fh:
            fh.write(text)


def emit_curve(curve: SpectrumCurve, n: int, path: str) -> None:
    """Write a spectrum curve as CSV rows t,re,im at n equispaced parameters."""
    if n < 2:
        raise ValueError("need n >= 2 samples")
    ts, vals = curve.sample(n)
    _emit_rows("t,re,im", zip(ts.tolist(), vals.tolist()), path)


def run(cfg: RunConfig) -> int:
    """Execute a validated invocation; returns the process exit code."""
    qcfg = QuadratureConfig(tolerance=cfg.tolerance,
                            critical_line_halfwidth=cfg.halfwidth)

    if cfg.command == "symbol":
        if cfg.s_range is None:
            raise ValueError("symbol needs --s-range")
        ss = _range_values(cfg.s_range)
        grid = symbol_grid(HausdorffOperator(_build_kernel(cfg)), ss, qcfg)
        if cfg.format == "plain":
            fh = _open_out(cfg.output_path)
            text = "\n".join("%s %s %s" % (_fmt(s), _fmt(v.real), _fmt(v.imag))
                             for s, v in zip(grid.s_values, grid.phi_values)) + "\n"
            (sys.stdout if fh is None else fh).write(text)
            if fh:
                fh.close()
        else:
            _emit_rows("s,re,im", zip(grid.s_values.tolist(),
                                      grid.phi_values.tolist()), cfg.output_path)
        return 0

    if cfg.command == "norm":
        val = operator_norm(HausdorffOperator(_build_kernel(cfg)), qcfg)
        print(_fmt(val))
        return 0

    if cfg.command == "apply":
        op = HausdorffOperator(_build_kernel(cfg), _DOMAINS[cfg.domain])
        f = _build_function(cfg)
        if cfg.x_range is not None:
            xs = _range_values(cfg.x_range)
        elif cfg.x is not None:
            xs = np.array([cfg.x])
        else:
            raise ValueError("apply needs --x or --x-range")
        rows = [(float(x), apply(op, f, float(x), qcfg)) for x in xs]
        if cfg.format == "plain" and len(rows) == 1:
            v = rows[0][1]
            print("%s %s" % (_fmt(v.real), _fmt(v.imag)))
        else:
            _emit_rows("x,re,im", rows, cfg.output_path)
        return 0

    if cfg.command == "spectrum":
        if cfg.curve == "circle":
            curve = spectrum_circle()
        elif cfg.curve == "log":
            curve = spectrum_log_curve()
        elif cfg.curve == "image":
            alpha = cfg.alpha
            curve = spectrum_circle(lambda z: z / (1.0 - alpha * z))
        else:
            raise ValueError("unknown curve %r (circle|log|image)" % cfg.curve)
        emit_curve(curve, cfg.n, cfg.output_path)
        return 0

    if cfg.command == "mellin":
        kernel = _build_kernel(cfg)
        if cfg.z is not None:
            z = cfg.z
        elif cfg.s is not None:
            z = 0.5 - 1j * cfg.s
        else:
            raise ValueError("mellin needs --z or --s")
        val = mellin_transform(kernel, z, qcfg)
        print("%s %s" % (_fmt(val.real), _fmt(val.imag)))
        return 0

    if cfg.command == "nu":
        if cfg.y_range is not None:
            ys = _range_values(cfg.y_range)
            rows = [(float(y), volterra_nu(complex(y))) for y in ys]
            _emit_rows("x,re,im", rows, cfg.output_path)
        elif cfg.y is not None:
            v = volterra_nu(cfg.y)
            print("%s %s" % (_fmt(v.real), _fmt(v.imag)))
        else:
            raise ValueError("nu needs --y or --y-range")
        return 0

    if cfg.command == "verify":
        if cfg.list_suites:
            for name in verify_mod.suite_names():
                print(name)
            return 0
        if cfg.suite == "all":
            results = verify_mod.run_all()
        else:
            results = verify_mod.run_suite(cfg.suite)
        failed = 0
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print("[%s] %s/%s: %s" % (mark, r.suite, r.name, r.detail))
            failed += 0 if r.passed else 1
        print("%d/%d checks passed" % (len(results) - failed, len(results)))
        return 1 if failed else 0

    raise ValueError("unknown command %r" % cfg.command)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cesaro-calc",
        description="Functional calculus of continuous Cesaro operators: "
                    "Hausdorff kernels, Mellin symbols, fractional powers, "
                    "logarithms, resolvents and their spectra.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, kernel=False):
        p.add_argument("--tolerance", type=float, default=1e-10)
        p.add_argument("--halfwidth", type=float, default=200.0,
                       help="critical-line truncation half-width")
        p.add_argument("--out", default="", help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "plain"), default="csv")
        if kernel:
            p.add_argument("--kernel", required=True, choices=_KERNELS)
            p.add_argument("--alpha", type=_parse_complex, default=0.0 + 0.0j,
                           help="kernel parameter alpha (complex, e.g. '0.5+0.5j')")
            p.add_argument("--lam", type=_parse_complex, default=1.0 + 0.0j,
                           help="resolvent parameter lambda")

    p = sub.add_parser("symbol", help="scalar symbol on an s-grid (CSV s,re,im)")
    add_common(p, kernel=True)
    p.add_argument("--s-range", required=True, type=_parse_range,
                   metavar="MIN:MAX:STEP")

    p = sub.add_parser("norm", help="operator norm as the symbol supremum")
    add_common(p, kernel=True)

    p = sub.add_parser("apply", help="apply the operator to a test function")
    add_common(p, kernel=True)
    p.add_argument("--function", choices=_FUNCTIONS, default="indicator")
    p.add_argument("--p", type=_parse_complex, default=1.0 + 0.0j,
                   help="decay rate of the exponential test function")
    p.add_argument("--domain", choices=tuple(_DOMAINS), default="full")
    p.add_argument("--x", type=float)
    p.add_argument("--x-range", type=_parse_range, metavar="MIN:MAX:STEP")

    p = sub.add_parser("spectrum", help="emit a spectrum curve (CSV t,re,im)")
    add_common(p)
    p.add_argument("--curve", choices=("circle", "log", "image"), default="circle")
    p.add_argument("--alpha", type=_parse_complex, default=0.25 + 0.0j,
                   help="alpha of the Hardy image curve")
    p.add_argument("--n", type=int, default=100)

    p = sub.add_parser("mellin", help="Mellin transform of a kernel at one point")
    add_common(p, kernel=True)
    p.add_argument("--z", type=_parse_complex, help="transform argument")
    p.add_argument("--s", type=float, help="critical-line point z = 1/2 - i s")

    p = sub.add_parser("nu", help="Volterra nu(y,-1)")
    add_common(p)
    p.add_argument("--y", type=_parse_complex)
    p.add_argument("--y-range", type=_parse_range, metavar="MIN:MAX:STEP")

    p = sub.add_parser("verify", help="run named invariant suites")
    add_common(p)
    p.add_argument("--suite", default="all",
                   help="suite name or 'all' (see --list)")
    p.add_argument("--list", action="store_true", dest="list_suites",
                   help="list available suites")
    return ap


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("kernel", "alpha", "lam", "p", "function", "domain", "x", "y",
                 "z", "s", "curve", "n", "suite", "list_suites", "tolerance",
                 "halfwidth", "format"):
        if hasattr(args, name):
            if name == "kernel":
                cfg.kernel_spec = args.kernel
            else:
                setattr(cfg, name, getattr(args, name))
    for name in ("s_range", "x_range", "y_range"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "out"):
        cfg.output_path = args.out
    if cfg.n < 2:
        raise ValueError("--n must be at least 2")
    if cfg.tolerance <= 0:
        raise ValueError("--tolerance must be positive")
    return cfg


_RANGE_FLAGS = ("--s-range", "--x-range", "--y-range")


def _merge_range_args(argv: Sequence[str]) -> List[str]:
    """Join range flags with negative-starting values ('--s-range -10:10:1'
    would otherwise be read as a new option)."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_FLAGS and i + 1 < len(argv) and argv[i + 1].count(":") == 2:
            out.append("%s=%s" % (tok, argv[i + 1]))
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = ap.parse_args(_merge_range_args(list(argv)))
    try:
        cfg = _config_from_args(args)
        return run(cfg)
    except (ValueError, KeyError, CesaroCalcError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
