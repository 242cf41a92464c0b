"""Anatomy of one phase-integral level.

Solves the quantization condition for (B, l, s) = (2, 1, 0) at both
truncation orders and prints everything the solution is made of: the
turning points, the elliptic parameters, the complex base point that kills
the boundary term, and the verification diagnostics.

Run:  python demos/phase_quantization.py
"""

import numpy as np

from cornellbound import DimensionlessCase, quantize
from cornellbound.phase_integral import L1_closed, L3_closed, chi0_diagnostic


def main():
    for j in (0, 1):
        case = DimensionlessCase(B=2.0, l=1, s=0, j=j)
        res = quantize(case)
        tp = res.turning_points
        print(f"--- truncation order j = {j} ---")
        print(f"A                = {res.A:.10f}")
        print(f"turning points   x0 = {tp.x0:.6f}, x1 = {tp.x1:.6f}, x2 = {tp.x2:.6f}")
        print(f"elliptic params  m = {tp.m:.6f}, alpha^2 = {tp.alpha2:.6f}")
        print(f"L1 = {L1_closed(tp):.10f}   L3 = {L3_closed(tp):+.3e}")
        u0 = res.u0.as_complex()
        print(f"base point       u0 = {u0.real:.6f} {u0.imag:+.6f}i   |C(u0)| = {res.C_abs:.2e}")
        print(f"phase residual   {res.residual:.2e}")
        # base-function quality deep inside the well
        zmid = 0.5 * (tp.x1 + tp.x2)
        chi0 = chi0_diagnostic(res.A, DimensionlessCase(B=2.0, l=1), np.array([zmid]))
        print(f"|chi0| at well midpoint = {chi0:.3e}")
        print()


if __name__ == "__main__":
    main()
