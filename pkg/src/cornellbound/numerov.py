"""Numerov matrix discretization of the dimensionless radial equation.

The fourth-order three-point scheme

    -(psi_{i-1} - 2 psi_i + psi_{i+1})/delta^2
      + (V_{i-1} psi_{i-1} + 10 V_i psi_i + V_{i+1} psi_{i+1})/12
      = A (psi_{i-1} + 10 psi_i + psi_{i+1})/12

on a uniform lattice over [z_min, z_max] with Dirichlet ends becomes the
pencil (-Ahat + Bhat Vhat, Bhat).  Because Ahat and Bhat are Toeplitz
tridiagonal they commute, so the equivalent operator -Bhat^{-1} Ahat + Vhat
is exactly symmetric and the levels come from a standard symmetric
eigenproblem.

Note the pencil written row-by-row (the Bhat Vhat term) is NOT symmetric
for a non-constant potential, and its eigenvectors are only approximately
Bhat-orthogonal; reality of the spectrum follows from the symmetric
equivalent form above.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eig, eigh, solve_banded

from .errors import DomainError, NonConvergenceError
from .model import DimensionlessCase

# switch point between dense generalized eig and the symmetric-operator route
_DENSE_LIMIT = 700

#: default production domain; the reference convergence tables use
#: z in [1e-5, 20] instead (both are accepted via Grid).
DEFAULT_Z_MIN = 1e-4
DEFAULT_Z_MAX = 50.0
DEFAULT_N = 5000


@dataclass(frozen=True)
class Grid:
    """Uniform lattice on [z_min, z_max] with n subintervals.

    The lattice has n+1 nodes spaced by delta = (z_max - z_min)/n; the
    Dirichlet conditions sit on the two end nodes and the eigenproblem
    lives on the n-1 interior nodes.  z_min must be strictly positive
    because of the 1/z and 1/z^2 singularities.
    """

    z_min: float
    z_max: float
    n: int

    def __post_init__(self):
        if self.z_min <= 0.0:
            raise DomainError("z_min must be strictly positive")
        if self.z_max <= self.z_min:
            raise DomainError("z_max must exceed z_min")
        if self.n < 8:
            raise DomainError("need at least 8 subintervals")

    @property
    def delta(self) -> float:
        return (self.z_max - self.z_min) / self.n

    def interior_nodes(self) -> np.ndarray:
        return self.z_min + self.delta * np.arange(1, self.n)


@dataclass
class NumerovSystem:
    """Assembled coefficient data for the Numerov pencil on a grid."""

    grid: Grid
    potential_values: np.ndarray  # V at interior nodes
    a_main: float  # -2/delta^2
    a_off: float  # 1/delta^2
    b_main: float = 10.0 / 12.0
    b_off: float = 1.0 / 12.0

    @property
    def size(self) -> int:
        return len(self.potential_values)

    def kinetic_matrix(self) -> np.ndarray:
        """Dense Ahat = (I_{-1} - 2 I_0 + I_{+1}) / delta^2."""
        n = self.size
        return (
            np.diag(np.full(n, self.a_main))
            + np.diag(np.full(n - 1, self.a_off), 1)
            + np.diag(np.full(n - 1, self.a_off), -1)
        )

    def b_matrix(self) -> np.ndarray:
        """Dense Bhat = (I_{-1} + 10 I_0 + I_{+1}) / 12."""
        n = self.size
        return (
            np.diag(np.full(n, self.b_main))
            + np.diag(np.full(n - 1, self.b_off), 1)
            + np.diag(np.full(n - 1, self.b_off), -1)
        )

    def left_matrix(self) -> np.ndarray:
        """Dense -Ahat + Bhat Vhat: the left side of the pencil."""
        return -self.kinetic_matrix() + self.b_matrix() @ np.diag(self.potential_values)

    def symmetric_operator(self) -> np.ndarray:
        """-Bhat^{-1} Ahat + Vhat, symmetrized against rounding noise."""
        n = self.size
        ab = np.zeros((3, n))
        ab[0, 1:] = self.b_off
        ab[1, :] = self.b_main
        ab[2, :-1] = self.b_off
        binv_a = solve_banded((1, 1), ab, self.kinetic_matrix())
        c = -binv_a + np.diag(self.potential_values)
        return 0.5 * (c + c.T)

    def pencil_residual(self, eigenvalue: float, vector: np.ndarray) -> float:
        """Max row residual of (-Ahat + Bhat Vhat) psi = A Bhat psi."""
        r = self.left_matrix() @ vector - eigenvalue * (self.b_matrix() @ vector)
        return float(np.max(np.abs(r)))


@dataclass
class Spectrum:
    """Ascending eigenvalues (and optional eigenvectors) of one case."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    case: DimensionlessCase | None = None
    grid: Grid | None = None
    diagnostics: dict = field(default_factory=dict)

    def tracked_value(self) -> float:
        """The level the reference tables track: smallest |A|.

        With a strong Coulomb term and small l, levels collapse toward the
        origin and drop far below the linear-regime states; the published
        convergence tables follow the state of smallest magnitude instead
        of the absolute ground state.
        """
        w = self.eigenvalues
        return float(w[np.argmin(np.abs(w))])


def effective_potential(case: DimensionlessCase, z):
    """V_eff(z) = z - B/z + l(l+1)/z^2, so that R(z) = A - V_eff(z)."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0.0):
        raise DomainError("z must be positive")
    out = z - case.B / z + case.l * (case.l + 1) / z**2
    return float(out) if out.ndim == 0 else out


def assemble(case: DimensionlessCase, grid: Grid) -> NumerovSystem:
    """Evaluate the potential on the interior nodes and fix the pencil rows."""
    z = grid.interior_nodes()
    v = effective_potential(case, z)
    d2 = grid.delta**2
    return NumerovSystem(grid=grid, potential_values=v, a_main=-2.0 / d2, a_off=1.0 / d2)


def solve(case: DimensionlessCase, grid: Grid, count: int, eigenvectors: bool = False) -> Spectrum:
    """The `count` smallest dimensionless levels A on the given grid.

    Small systems go through the dense generalized solver on the pencil as
    written; large ones through the symmetric equivalent operator with a
    partial eigendecomposition.  Both realize the same spectrum.
    """
    system = assemble(case, grid)
    n = system.size
    if not (1 <= count <= n):
        raise DomainError(f"count must be between 1 and {n}")

    if n <= _DENSE_LIMIT and not eigenvectors:
        w = eig(system.left_matrix(), system.b_matrix(), right=False)
        if np.max(np.abs(w.imag)) > 1e-8 * max(1.0, np.max(np.abs(w.real))):
            raise NonConvergenceError("generalized eigenvalues acquired imaginary parts")
        vals = np.sort(w.real)[:count]
        return Spectrum(eigenvalues=vals, case=case, grid=grid)

    c = system.symmetric_operator()
    if eigenvectors:
        w, vecs = eigh(c, subset_by_index=[0, count - 1])
        return Spectrum(eigenvalues=w, eigenvectors=vecs, case=case, grid=grid)
    w = eigh(c, eigvals_only=True, subset_by_index=[0, count - 1])
    return Spectrum(eigenvalues=w, case=case, grid=grid)


def tracked_level(case: DimensionlessCase, grid: Grid, window: int = 16) -> float:
    """Smallest-|A| level among the lowest `window` eigenvalues."""
    count = min(window, grid.n - 1)
    return solve(case, grid, count).tracked_value()


def convergence_table(
    case: DimensionlessCase, grids: list[Grid], tracked: bool = True, level: int = 0
) -> list[tuple[int, float]]:
    """Per-grid eigenvalue, for mesh-refinement studies.

    With tracked=True (the reference-table convention) each entry is the
    smallest-|A| level; otherwise the `level`-th ascending eigenvalue.
    """
    if len(grids) < 3:
        raise DomainError("need at least 3 grids for a convergence table")
    out = []
    for g in grids:
        if tracked:
            a = tracked_level(case, g)
        else:
            a = float(solve(case, g, level + 1).eigenvalues[level])
        out.append((g.n, a))
    return out
