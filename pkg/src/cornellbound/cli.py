"""Command-line interface.

Subcommands:
  numerov   eigenvalues for one or more (B, l) cases, optionally as a
            mesh-convergence table
  phase     phase-integral quantization for (B, l, s) cases
  compare   full sweep comparing both methods, emitted as CSV/JSON
  rates     N_k (and optionally M_k) convergence rates from a value list,
            a CSV column, or a freshly computed convergence table

All subcommands accept --config JSON_FILE; flags override config values.
Exit codes: 0 full success, 1 configuration error, 2 partial per-case
failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numerov, phase_integral, report
from .errors import DomainError
from .model import DimensionlessCase
from .numerov import Grid


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip() != ""]


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config file; flags override its values")
    p.add_argument("--grid", type=int, default=None, help="number of mesh subintervals N")
    p.add_argument("--zmin", type=float, default=None)
    p.add_argument("--zmax", type=float, default=None)
    p.add_argument("--out", default=None, help="output path (CSV); JSON goes to OUT.json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cornellbound", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numerov", help="Numerov eigenvalues / convergence table")
    _add_common(p)
    p.add_argument("-B", type=_float_list, default=[0.0], help="comma-separated B values")
    p.add_argument("-l", type=_int_list, default=[0], help="comma-separated l values")
    p.add_argument("--levels", type=int, default=1, help="number of lowest levels")
    p.add_argument("--grids", type=_int_list, default=None, help="mesh sweep, e.g. 8,16,32,64")
    p.add_argument(
        "--tracked",
        action="store_true",
        help="report the smallest-|A| level instead of the ground level",
    )

    p = sub.add_parser("phase", help="phase-integral quantization")
    _add_common(p)
    p.add_argument("-B", type=_float_list, default=[0.0])
    p.add_argument("-l", type=_int_list, default=[0])
    p.add_argument("-s", type=_int_list, default=[0])
    p.add_argument("--order", type=int, default=1, choices=(0, 1), help="truncation order j")

    p = sub.add_parser("compare", help="sweep both methods and emit |Delta A| tables")
    _add_common(p)
    p.add_argument("-B", type=_float_list, default=None)
    p.add_argument("-l", type=_int_list, default=None)
    p.add_argument("-s", type=_int_list, default=None)
    p.add_argument("--order", type=int, default=None, choices=(0, 1))

    p = sub.add_parser("rates", help="convergence-rate diagnostics N_k / M_k")
    _add_common(p)
    p.add_argument("--values", type=_float_list, default=None, help="explicit eigenvalue sequence")
    p.add_argument("--csv", default=None, help="read the A_N column of a comparison CSV")
    p.add_argument("-B", type=_float_list, default=None)
    p.add_argument("-l", type=_int_list, default=None)
    p.add_argument("--grids", type=_int_list, default=[8, 16, 32, 64, 128, 256, 512])
    p.add_argument("--ref", type=float, default=None, help="reference value: also print M_k")
    return ap


def _load_config(args) -> dict:
    cfg = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise DomainError("config file must hold a JSON object")
    return cfg


def _grid_from(args, cfg) -> Grid:
    z_min = args.zmin if args.zmin is not None else cfg.get("z_min", numerov.DEFAULT_Z_MIN)
    z_max = args.zmax if args.zmax is not None else cfg.get("z_max", numerov.DEFAULT_Z_MAX)
    n = args.grid if args.grid is not None else cfg.get("n", numerov.DEFAULT_N)
    return Grid(z_min, z_max, n)


def _header() -> None:
    print(f"# cornellbound | adopted convention: {report.B_DEFINITION}")


def cmd_numerov(args) -> int:
    cfg = _load_config(args)
    _header()
    failures = 0
    if args.grids:
        z_min = args.zmin if args.zmin is not None else cfg.get("z_min", 1e-5)
        z_max = args.zmax if args.zmax is not None else cfg.get("z_max", 20.0)
        for B in args.B:
            for l in args.l:
                grids = [Grid(z_min, z_max, n) for n in args.grids]
                table = numerov.convergence_table(DimensionlessCase(B=B, l=l), grids, tracked=True)
                cells = "  ".join(f"N={n}: {a:.6g}" for n, a in table)
                print(f"B={B:g} l={l}  {cells}")
        return 0
    grid = _grid_from(args, cfg)
    for B in args.B:
        for l in args.l:
            try:
                if args.tracked:
                    a = numerov.tracked_level(DimensionlessCase(B=B, l=l), grid)
                    print(f"B={B:g} l={l}  tracked A = {a:.10g}")
                else:
                    spec = numerov.solve(DimensionlessCase(B=B, l=l), grid, args.levels)
                    vals = "  ".join(f"{v:.10g}" for v in spec.eigenvalues)
                    print(f"B={B:g} l={l}  A = {vals}")
            except Exception as exc:
                failures += 1
                print(f"B={B:g} l={l}  FAILED: {exc}", file=sys.stderr)
    return 2 if failures else 0


def cmd_phase(args) -> int:
    cfg = _load_config(args)
    _header()
    failures = 0
    results = []
    for B in args.B:
        for l in args.l:
            for s in args.s:
                try:
                    res = phase_integral.quantize(DimensionlessCase(B=B, l=l, s=s, j=args.order))
                    u0 = res.u0.as_complex()
                    print(
                        f"B={B:g} l={l} s={s} j={args.order}  A = {res.A:.10g}  "
                        f"x2 = {res.x2:.10g}  |C(u0)| = {res.C_abs:.2e}  "
                        f"u0 = {u0.real:.6f}{u0.imag:+.6f}i  residual = {res.residual:.2e}"
                    )
                    results.append(res)
                except Exception as exc:
                    failures += 1
                    print(f"B={B:g} l={l} s={s}  FAILED: {exc}", file=sys.stderr)
    if args.out:
        payload = [
            {
                "B": r.case.B,
                "l": r.case.l,
                "s": r.case.s,
                "j": r.case.j,
                "A": r.A,
                "x2": r.x2,
                "u0": {"re": r.u0.re, "im": r.u0.im},
                "residual": r.residual,
                "C_abs": r.C_abs,
            }
            for r in results
        ]
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 2 if failures else 0


def cmd_compare(args) -> int:
    cfg = _load_config(args)
    _header()
    config = report.RunConfig(
        B_values=args.B if args.B is not None else cfg.get("B_values", [0.0, 2.0, 5.0, 10.0]),
        l_values=args.l if args.l is not None else cfg.get("l_values", [0, 1, 2]),
        s_values=args.s if args.s is not None else cfg.get("s_values", [0]),
        j=args.order if args.order is not None else cfg.get("j", 1),
        z_min=args.zmin if args.zmin is not None else cfg.get("z_min", numerov.DEFAULT_Z_MIN),
        z_max=args.zmax if args.zmax is not None else cfg.get("z_max", numerov.DEFAULT_Z_MAX),
        n=args.grid if args.grid is not None else cfg.get("n", numerov.DEFAULT_N),
    )
    rows = report.compare_sweep(config)
    for r in rows:
        if r.error:
            print(f"B={r.B:g} l={r.l} s={r.s} j={r.j}  FAILED: {r.error}", file=sys.stderr)
        else:
            print(
                f"B={r.B:g} l={r.l} s={r.s} j={r.j}  A_N = {r.A_N:.8g}  "
                f"A_PhI = {r.A_PhI:.8g}  |dA| = {r.delta_A:.4e}"
            )
    if args.out:
        report.write_csv([r for r in rows if r.error is None], args.out)
        report.write_json(rows, str(args.out) + ".json")
        print(f"# wrote {args.out} and {args.out}.json")
    return 2 if any(r.error for r in rows) else 0


def cmd_rates(args) -> int:
    _load_config(args)
    _header()
    sequences = []
    if args.values is not None:
        sequences.append(("values", args.values))
    elif args.csv is not None:
        rows = report.read_csv(args.csv)
        sequences.append((args.csv, [r.A_N for r in rows]))
    else:
        if args.B is None or args.l is None:
            print("rates: need --values, --csv, or -B and -l", file=sys.stderr)
            return 1
        z_min = args.zmin if args.zmin is not None else 1e-5
        z_max = args.zmax if args.zmax is not None else 20.0
        for B in args.B:
            for l in args.l:
                grids = [Grid(z_min, z_max, n) for n in args.grids]
                table = numerov.convergence_table(DimensionlessCase(B=B, l=l), grids, tracked=True)
                sequences.append((f"B={B:g} l={l}", [a for _, a in table]))
    for label, seq in sequences:
        nk = report.rate_N(seq)
        print(f"{label}  N_k = " + ", ".join(f"{v:.2f}" for v in nk))
        if args.ref is not None:
            mk = report.rate_M(seq, args.ref)
            print(f"{label}  M_k = " + ", ".join(f"{v:.2f}" for v in mk))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "numerov":
            return cmd_numerov(args)
        if args.command == "phase":
            return cmd_phase(args)
        if args.command == "compare":
            return cmd_compare(args)
        if args.command == "rates":
            return cmd_rates(args)
    except (DomainError, OSError, json.JSONDecodeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    return 1


if __name__ == "__main__":
    sys.exit(main())
