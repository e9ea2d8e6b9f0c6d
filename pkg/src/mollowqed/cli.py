"""Command-line interface: spectra, correction tables and parameter scans.

Outputs are CSV or JSON with every number written to 12 significant
digits, so repeated runs are byte identical.  Column order and field names
are documented in ``docs/output_schema.md``.

Exit status: 0 on success, 2 for invalid configuration, 3 for numerical
failures.  Errors are reported on stderr as a one-line JSON record.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from . import green
from .constants import CONSTANTS_ENV_VAR, ConfigError, InputData, load_config
from .prediction import aggregate, drive_for, table_one
from .spectrum import (
    DriveParams,
    PeaksUnresolved,
    find_peaks_numeric,
    sideband_positions_series,
    spectrum_exact,
    spectrum_secular,
)

__all__ = ["RunConfig", "run", "scan", "main", "SCHEMA_VERSION"]

SCHEMA_VERSION = "mollowqed/1"
FEASIBLE_IONIZATION_RATIO = 1e-3

Command = Literal["spectrum", "corrections", "table1", "scan", "peaks"]


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs.

    ``h_values`` and ``delta_values`` hold a single entry except for scans.
    ``grid`` is (start, stop, count) in units of the generalized Rabi
    frequency, offsets from the laser frequency.
    """

    command: Command
    j: Fraction = Fraction(1, 2)
    h_values: tuple[float, ...] = (1000.0,)
    delta_values: tuple[float, ...] = (0.0,)
    grid: tuple[float, float, int] = (-2.0, 2.0, 4001)
    output_format: Literal["csv", "json"] = "csv"
    output_path: str | None = None
    constants_file: str | None = None
    pole: str = "resonant_term"
    workers: int = 1
    data: InputData | None = field(default=None, compare=False)

    @property
    def h(self) -> float:
        return self.h_values[0]

    @property
    def delta_over_gamma(self) -> float:
        return self.delta_values[0]


class _Failure(Exception):
    def __init__(self, status: int, category: str, exc: BaseException | str):
        super().__init__(str(exc))
        self.status = status
        self.category = category
        self.kind = type(exc).__name__ if isinstance(exc, BaseException) else "InvalidConfig"


def _num(x) -> float:
    """Round to 12 significant digits."""
    return float(format(float(x), ".12g"))


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (float, int, np.floating)) and not isinstance(x, bool):
        return format(float(x), ".12g")
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _jstr(j: Fraction) -> str:
    return f"{j.numerator}/{j.denominator}"


def _uv(u) -> dict:
    return {"value": _num(u.value), "sigma": _num(u.sigma)}


# ---------------------------------------------------------------------------
# commands: each returns (csv header, csv rows, json payload)


def _cmd_table1(cfg: RunConfig, data: InputData):
    rows = table_one(cfg.h, cfg.delta_over_gamma, data, cfg.pole)
    header = ["channel", "j", "shift_plus_hz", "sigma_hz", "shift_minus_hz"]
    out = [[r.channel, _jstr(r.j), r.shift.value, r.shift.sigma, -r.shift.value] for r in rows]
    payload = {"rows": [{"channel": r.channel, "j": _jstr(r.j), "shift_plus_hz": _uv(r.shift),
                         "shift_minus_hz": _num(-r.shift.value)} for r in rows]}
    return header, out, payload


def _cmd_corrections(cfg: RunConfig, data: InputData):
    d = drive_for(cfg.j, cfg.h, cfg.delta_over_gamma, data)
    b = aggregate(cfg.j, d, data, cfg.pole)
    header = ["record", "name", "kind", "j", "value", "sigma", "first_order_hz", "in_aggregate",
              "valid"]
    out = []
    for ch in b.channels:
        jj = _jstr(ch.j) if ch.j is not None else ""
        out.append(["parameter", ch.id, ch.kind, jj, ch.parameter.value, ch.parameter.sigma, "",
                    ch.in_aggregate, ch.valid])
        out.append(["shift_plus_hz", ch.id, ch.kind, jj, ch.shift_plus.value, ch.shift_plus.sigma,
                    ch.first_order, ch.in_aggregate, ch.valid])
    summary = [
        ("delta_rad_hz", b.delta_rad.value, b.delta_rad.sigma),
        ("omega_hat_rad", b.omega_hat_rad.value, b.omega_hat_rad.sigma),
        ("omega_c_hz", b.omega_c.value, b.omega_c.sigma),
        ("omega_no_c_hz", b.omega_no_c.value, b.omega_no_c.sigma),
        ("bare_hz", b.bare, 0.0),
        ("headline_shift_hz", b.headline.value, b.headline.sigma),
        ("ionization_hz", b.ionization, 0.0),
        ("imaginary_width_hz", b.imaginary_width, 0.0),
    ]
    for name, value, sigma in summary:
        out.append(["summary", name, "", _jstr(cfg.j), value, sigma, "", "", ""])
    payload = {
        "j": _jstr(cfg.j),
        "drive": {"omega_rabi_hz": _num(d.omega_rabi), "detuning_hz": _num(d.detuning),
                  "gamma_hz": _num(d.gamma), "omega_laser_hz": _num(d.omega_laser)},
        "channels": [
            {"id": ch.id, "kind": ch.kind, "j": _jstr(ch.j) if ch.j is not None else None,
             "parameter": _uv(ch.parameter), "shift_plus_hz": _uv(ch.shift_plus),
             "first_order_hz": _num(ch.first_order), "in_aggregate": ch.in_aggregate,
             "valid": ch.valid}
            for ch in b.channels
        ],
        "off_resonant_per_hz": {"real": _uv(b.off_resonant.real), "imag": _uv(b.off_resonant.imag),
                                "branch": b.off_resonant.branch,
                                "pole_convention": b.off_resonant.pole},
    }
    for name, value, sigma in summary:
        payload[name] = {"value": _num(value), "sigma": _num(sigma)}
    payload["omega_c"] = payload.pop("omega_c_hz")
    return header, out, payload


def _cmd_spectrum(cfg: RunConfig, data: InputData):
    d = drive_for(cfg.j, cfg.h, cfg.delta_over_gamma, data)
    start, stop, count = cfg.grid
    units = np.linspace(start, stop, int(count))
    offsets = units * d.generalized_rabi
    # evaluate relative to the laser so the grid is exactly symmetric
    shifted = _local_drive(d)
    exact = spectrum_exact(offsets + shifted.omega_laser, shifted)
    secular = spectrum_secular(offsets + shifted.omega_laser, shifted)
    header = ["offset_over_rabi", "offset_hz", "s_exact_per_hz", "s_secular_per_hz"]
    out = [[u, o, e, s] for u, o, e, s in zip(units, offsets, exact, secular)]
    payload = {"j": _jstr(cfg.j), "omega_laser_hz": _num(d.omega_laser),
               "generalized_rabi_hz": _num(d.generalized_rabi),
               "rows": [{"offset_over_rabi": _num(u), "offset_hz": _num(o),
                         "s_exact_per_hz": _num(e), "s_secular_per_hz": _num(s)}
                        for u, o, e, s in out]}
    return header, out, payload


def _local_drive(d: DriveParams) -> DriveParams:
    """Same drive with the laser frequency moved to 1 Hz, used for offset grids."""
    return DriveParams(d.omega_rabi, d.detuning, d.gamma, 1.0)


def _cmd_peaks(cfg: RunConfig, data: InputData):
    d = drive_for(cfg.j, cfg.h, cfg.delta_over_gamma, data)
    local = _local_drive(d)
    numeric = find_peaks_numeric(local, rtol=1e-15)
    plus, minus = sideband_positions_series(local)
    names = ("plus", "centre", "minus")
    series = (plus, local.omega_laser, minus)
    header = ["peak", "numeric_offset_hz", "series_offset_hz", "difference_hz"]
    out = [[n, a - 1.0, b - 1.0, a - b] for n, a, b in zip(names, numeric, series)]
    payload = {"j": _jstr(cfg.j), "omega_laser_hz": _num(d.omega_laser),
               "rows": [{"peak": n, "numeric_offset_hz": _num(a), "series_offset_hz": _num(b),
                         "difference_hz": _num(c)} for n, a, b, c in out]}
    return header, out, payload


def _scan_cell(args) -> dict:
    j, h, delta, dd, pole = args
    d = drive_for(j, h, delta, dd)
    b = aggregate(j, d, dd, pole)
    ratio = b.ionization / d.omega_rabi
    return {
        "j": _jstr(j), "h": h, "delta_over_gamma": delta,
        "omega_c_hz": b.omega_c.value, "omega_c_sigma_hz": b.omega_c.sigma,
        "bare_hz": b.bare, "shift_plus_hz": b.headline.value,
        "shift_minus_hz": -b.headline.value,
        "intensity_displacement_hz": b.intensity_displacement,
        "ionization_hz": b.ionization, "ionization_ratio": ratio,
        "feasible": ratio < FEASIBLE_IONIZATION_RATIO,
    }


def scan(cfg: RunConfig, data: InputData | None = None) -> list[dict]:
    """Corrected predictions over the (h, Delta/Gamma) grid, ordered h-major.

    Cells are independent; with ``cfg.workers > 1`` they are evaluated in a
    process pool and collected in grid order.
    """
    dd = data or cfg.data or load_config(cfg.constants_file)
    jobs = [(cfg.j, h, delta, dd, cfg.pole) for h in cfg.h_values for delta in cfg.delta_values]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(_scan_cell, jobs))
    return [_scan_cell(job) for job in jobs]


_SCAN_HEADER = ["j", "h", "delta_over_gamma", "omega_c_hz", "omega_c_sigma_hz", "bare_hz",
                "shift_plus_hz", "shift_minus_hz", "intensity_displacement_hz", "ionization_hz",
                "ionization_ratio", "feasible"]


def _cmd_scan(cfg: RunConfig, data: InputData):
    cells = scan(cfg, data)
    out = [[c[k] for k in _SCAN_HEADER] for c in cells]
    payload = {"rows": [{k: (_num(v) if isinstance(v, float) else v) for k, v in c.items()}
                        for c in cells]}
    return _SCAN_HEADER, out, payload


_COMMANDS = {
    "table1": _cmd_table1,
    "corrections": _cmd_corrections,
    "spectrum": _cmd_spectrum,
    "peaks": _cmd_peaks,
    "scan": _cmd_scan,
}


def _render(cfg: RunConfig, header, rows, payload) -> str:
    if cfg.output_format == "json":
        doc = {"schema": SCHEMA_VERSION, "command": cfg.command,
               "inputs": {"j": _jstr(cfg.j), "h": [_num(h) for h in cfg.h_values],
                          "delta_over_gamma": [_num(x) for x in cfg.delta_values],
                          "pole_convention": cfg.pole},
               **payload}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


def run(cfg: RunConfig) -> int:
    """Execute one command and write its output; return the exit status."""
    try:
        _validate(cfg)
        try:
            data = cfg.data or load_config(cfg.constants_file)
        except ConfigError as exc:
            raise _Failure(2, "config", exc) from None
        try:
            header, rows, payload = _COMMANDS[cfg.command](cfg, data)
        except (green.GreenPoleError, green.ConvergenceError, PeaksUnresolved,
                ArithmeticError) as exc:
            raise _Failure(3, "numeric", exc) from None
        except ValueError as exc:
            raise _Failure(2, "config", exc) from None
        text = _render(cfg, header, rows, payload)
        if cfg.output_path:
            try:
                with open(cfg.output_path, "w", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise _Failure(2, "config", exc) from None
        else:
            sys.stdout.write(text)
        return 0
    except _Failure as f:
        _report(f.status, f.category, f.kind, str(f))
        return f.status


def _report(status: int, category: str, kind: str, message: str) -> None:
    record = {"error": category, "type": kind, "message": message, "exit_status": status}
    sys.stderr.write(json.dumps(record) + "\n")


def _validate(cfg: RunConfig) -> None:
    if cfg.command not in _COMMANDS:
        raise _Failure(2, "config", f"unknown command {cfg.command!r}")
    if cfg.j not in (Fraction(1, 2), Fraction(3, 2)):
        raise _Failure(2, "config", "j must be 1/2 or 3/2")
    if not cfg.h_values or any(not h > 0 for h in cfg.h_values):
        raise _Failure(2, "config", "h must be > 0")
    if not cfg.delta_values:
        raise _Failure(2, "config", "delta must not be empty")
    if cfg.grid[2] < 2:
        raise _Failure(2, "config", "grid count must be >= 2")
    if cfg.workers < 1:
        raise _Failure(2, "config", "workers must be >= 1")
    if cfg.output_format not in ("csv", "json"):
        raise _Failure(2, "config", "format must be csv or json")
    if cfg.pole not in ("resonant_term", "limit"):
        raise _Failure(2, "config", "pole must be resonant_term or limit")


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _report(2, "config", "ArgumentError", message)
        raise SystemExit(2)


def _parse_j(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid j {text!r}") from None
    if value not in (Fraction(1, 2), Fraction(3, 2)):
        raise argparse.ArgumentTypeError("j must be 1/2 or 3/2")
    return value


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}") from None
    if count < 2:
        raise argparse.ArgumentTypeError("grid count must be >= 2")
    return start, stop, count


def _parse_values(text: str) -> tuple[float, ...]:
    """Comma list ``a,b,c`` or an inclusive grid ``start:stop:count``."""
    try:
        if ":" in text:
            start, stop, count = _parse_grid(text)
            return tuple(float(x) for x in np.linspace(start, stop, count))
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid value list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mollowqed",
                     description="Mollow sideband predictions for hydrogen 1S-2P.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, multi=False):
        p.add_argument("--j", type=_parse_j, default=Fraction(1, 2),
                       help="upper level, 1/2 or 3/2 (default 1/2)")
        if multi:
            p.add_argument("--h", type=_parse_values, default=(1000.0,),
                           help="drive strengths Omega/Gamma, list a,b or grid a:b:n")
            p.add_argument("--delta", type=_parse_values, default=(0.0,),
                           help="detunings Delta/Gamma, list or grid")
            p.add_argument("--workers", type=int, default=1,
                           help="worker processes for independent cells (default 1)")
        else:
            p.add_argument("--h", type=float, default=1000.0, help="Omega/Gamma (default 1000)")
            p.add_argument("--delta", type=float, default=0.0, help="Delta/Gamma (default 0)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
        p.add_argument("--constants", default=None,
                       help=f"key=value constants file (default ${CONSTANTS_ENV_VAR} or shipped)")
        p.add_argument("--pole", choices=("resonant_term", "limit"), default="resonant_term",
                       help="pole convention for the off-resonant constant")

    common(sub.add_parser("table1", help="summary table of upper-sideband shifts"))
    common(sub.add_parser("corrections", help="all channels and the corrected prediction"))
    p = sub.add_parser("spectrum", help="exact and secular spectrum on a grid")
    common(p)
    p.add_argument("--grid", type=_parse_grid, default=(-2.0, 2.0, 4001),
                   help="offsets from the laser in units of Omega_R, start:stop:count")
    common(sub.add_parser("peaks", help="numerical peak positions against the series"))
    common(sub.add_parser("scan", help="predictions over an (h, Delta/Gamma) grid"), multi=True)
    return parser


def _config_from_args(args) -> RunConfig:
    h = args.h if isinstance(args.h, tuple) else (args.h,)
    delta = args.delta if isinstance(args.delta, tuple) else (args.delta,)
    return RunConfig(
        command=args.command, j=args.j, h_values=h, delta_values=delta,
        grid=getattr(args, "grid", (-2.0, 2.0, 4001)), output_format=args.format,
        output_path=args.output, constants_file=args.constants, pole=args.pole,
        workers=getattr(args, "workers", 1),
    )


_VALUE_OPTIONS = ("--grid", "--h", "--delta")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Join value options with their argument so ``--grid -2:2:5`` parses."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``mollowqed`` command."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_attach_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(_config_from_args(args))


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
