"""Cross-method comparison, convergence-rate diagnostics, and table emission.

The central deliverables are the comparison rows |Delta A| = |A_N - A_PhI|
per (B, l, s, j) and the empirical convergence rates

    N_k = log2(|A_{k-2} - A_{k-1}| / |A_{k-1} - A_k|)
    M_k = log2(|A_{k-1} - A_ref| / |A_k - A_ref|)

computed on mesh-refinement sequences.  Tables are written as CSV (12
significant digits) and full diagnostics as JSON.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

from . import numerov, phase_integral
from .errors import DegenerateDifferenceError, DomainError
from .model import DimensionlessCase
from .numerov import Grid

CSV_FIELDS = ["B", "l", "s", "j", "A_N", "A_PhI", "delta_A", "residual", "C_abs"]

#: the adopted definition of the dimensionless Coulomb strength, logged in
#: every run header for traceability
B_DEFINITION = "B = (4*mass^2 / (hbar^4 * a))^(1/3) * b  (independent of the energy)"


@dataclass
class ComparisonRow:
    """One (B, l, s, j) case: both methods and their discrepancy."""

    B: float
    l: int
    s: int
    j: int
    A_N: float = math.nan
    A_PhI: float = math.nan
    delta_A: float = math.nan
    residual: float = math.nan
    C_abs: float = math.nan
    u0: complex | None = None
    error: str | None = None


@dataclass
class RunConfig:
    """A sweep specification plus grid and output settings."""

    B_values: list[float] = field(default_factory=lambda: [0.0, 2.0, 5.0, 10.0])
    l_values: list[int] = field(default_factory=lambda: [0, 1, 2])
    s_values: list[int] = field(default_factory=lambda: [0])
    j: int = 1
    z_min: float = numerov.DEFAULT_Z_MIN
    z_max: float = numerov.DEFAULT_Z_MAX
    n: int = numerov.DEFAULT_N
    csv_path: str | None = None
    json_path: str | None = None

    def __post_init__(self):
        if any(b < 0 for b in self.B_values):
            raise DomainError("B values must be non-negative")
        if any(l < 0 for l in self.l_values) or any(s < 0 for s in self.s_values):
            raise DomainError("l and s values must be non-negative")
        if self.j not in (0, 1):
            raise DomainError("j must be 0 or 1")

    def grid(self) -> Grid:
        return Grid(self.z_min, self.z_max, self.n)


def rate_N(values) -> list[float]:
    """Empirical mesh-refinement rates from an eigenvalue sequence."""
    values = [float(v) for v in values]
    if len(values) < 3:
        raise DomainError("need at least 3 values for N_k")
    out = []
    for k in range(2, len(values)):
        num = abs(values[k - 2] - values[k - 1])
        den = abs(values[k - 1] - values[k])
        if den == 0.0 or num == 0.0:
            raise DegenerateDifferenceError(f"consecutive values coincide at k={k}")
        out.append(math.log2(num / den))
    return out


def rate_M(values, A_ref: float) -> list[float]:
    """Convergence rates of a sequence toward an external reference value."""
    values = [float(v) for v in values]
    if len(values) < 2:
        raise DomainError("need at least 2 values for M_k")
    out = []
    for k in range(1, len(values)):
        num = abs(values[k - 1] - A_ref)
        den = abs(values[k] - A_ref)
        if den == 0.0 or num == 0.0:
            raise DegenerateDifferenceError(f"value equals the reference at k={k}")
        out.append(math.log2(num / den))
    return out


def compare_case(B: float, l: int, s: int, j: int, A_N: float) -> ComparisonRow:
    """Quantize one case and pair it with a precomputed Numerov level."""
    row = ComparisonRow(B=B, l=l, s=s, j=j, A_N=A_N)
    try:
        res = phase_integral.quantize(DimensionlessCase(B=B, l=l, s=s, j=j))
    except Exception as exc:
        row.error = f"{type(exc).__name__}: {exc}"
        return row
    row.A_PhI = res.A
    row.delta_A = abs(A_N - res.A)
    row.residual = res.residual
    row.C_abs = res.C_abs
    row.u0 = res.u0.as_complex()
    return row


def compare_sweep(config: RunConfig) -> list[ComparisonRow]:
    """One comparison row per (B, l, s, j) of the configured sweep.

    The Numerov spectrum for each (B, l) is computed once and indexed by s
    (the s-th level is the s-th ascending eigenvalue).  Per-case failures
    are recorded in the row instead of aborting the sweep; output order is
    sorted by (B, l, s, j).
    """
    grid = config.grid()
    rows = []
    for B in sorted(config.B_values):
        for l in sorted(config.l_values):
            count = max(config.s_values) + 1
            try:
                spectrum = numerov.solve(DimensionlessCase(B=B, l=l), grid, count)
            except Exception as exc:
                for s in sorted(config.s_values):
                    rows.append(
                        ComparisonRow(B=B, l=l, s=s, j=config.j, error=f"{type(exc).__name__}: {exc}")
                    )
                continue
            for s in sorted(config.s_values):
                rows.append(compare_case(B, l, s, config.j, float(spectrum.eigenvalues[s])))
    rows.sort(key=lambda r: (r.B, r.l, r.s, r.j))
    return rows


def delta_series(rows: list[ComparisonRow]) -> dict[tuple[float, int, int], list[tuple[int, float]]]:
    """Group rows into (s, |Delta A|) series keyed by (B, l, j): plot data."""
    series: dict[tuple[float, int, int], list[tuple[int, float]]] = {}
    for r in rows:
        if r.error is not None:
            continue
        series.setdefault((r.B, r.l, r.j), []).append((r.s, r.delta_A))
    for key in series:
        series[key].sort()
    return series


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def write_csv(rows: list[ComparisonRow], path) -> None:
    """UTF-8 CSV with a header row and 12 significant digits."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for r in rows:
            writer.writerow(
                [_fmt(r.B), r.l, r.s, r.j, _fmt(r.A_N), _fmt(r.A_PhI), _fmt(r.delta_A), _fmt(r.residual), _fmt(r.C_abs)]
            )


def read_csv(path) -> list[ComparisonRow]:
    """Parse a CSV written by :func:`write_csv`."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for rec in csv.DictReader(fh):
            rows.append(
                ComparisonRow(
                    B=float(rec["B"]),
                    l=int(rec["l"]),
                    s=int(rec["s"]),
                    j=int(rec["j"]),
                    A_N=float(rec["A_N"]),
                    A_PhI=float(rec["A_PhI"]),
                    delta_A=float(rec["delta_A"]),
                    residual=float(rec["residual"]),
                    C_abs=float(rec["C_abs"]),
                )
            )
    return rows


def rows_to_json(rows: list[ComparisonRow]) -> list[dict]:
    out = []
    for r in rows:
        d = {
            "B": r.B,
            "l": r.l,
            "s": r.s,
            "j": r.j,
            "A_N": r.A_N,
            "A_PhI": r.A_PhI,
            "delta_A": r.delta_A,
            "residual": r.residual,
            "C_abs": r.C_abs,
            "error": r.error,
        }
        if r.u0 is not None:
            d["u0"] = {"re": r.u0.real, "im": r.u0.imag}
        out.append(d)
    return out


def write_json(rows: list[ComparisonRow], path, extra: dict | None = None) -> None:
    """Full per-case diagnostics, one object per case."""
    payload = {"B_definition": B_DEFINITION, "cases": rows_to_json(rows)}
    if extra:
        payload.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, default=str)
        fh.write("\n")
