"""Maxwellian kinetic representation of a density on a tensor grid.

The central objects are cell-averaged kinetic profiles f(t, x, v) together
with their velocity averages (densities) and the relaxation defect measure.
The cell-average representation of the equilibrium profile uses exact
interval overlaps, so reconstructing the density from its own projection
telescopes exactly; with a power-of-two velocity spacing the round trip is
bit-exact.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainTooSmallError, InvariantViolation

#: absolute tolerance for invariants of analytically constructed fields
ANALYTIC_TOL = 1e-12
#: tolerance for invariants of solver-produced fields (interpolation error)
RUNTIME_TOL = 1e-6


@dataclass(frozen=True)
class Grid:
    """Tensor product grid on [x_min, x_max] x [-v_max, v_max].

    Cells are centered: x_i = x_min + (i + 1/2) dx, v_j = -v_max + (j + 1/2) dv.
    ``nv`` must be even so a cell edge sits exactly at v = 0; no velocity cell
    straddles the sign change.
    """

    x_min: float
    x_max: float
    nx: int
    v_max: float
    nv: int

    def __post_init__(self):
        if self.nx < 2 or self.nv < 2:
            raise ValueError("grid needs nx >= 2 and nv >= 2")
        if self.nv % 2 != 0:
            raise ValueError("nv must be even so a cell edge sits at v = 0")
        if not (self.x_max > self.x_min and self.v_max > 0):
            raise ValueError("grid extents must be positive")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dv(self) -> float:
        return 2.0 * self.v_max / self.nv

    @cached_property
    def x_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.nx) + 0.5) * self.dx

    @cached_property
    def v_centers(self) -> np.ndarray:
        return -self.v_max + (np.arange(self.nv) + 0.5) * self.dv

    @property
    def zero_index(self) -> int:
        """Column index of the first velocity cell above v = 0."""
        return self.nv // 2

    @property
    def cell_area(self) -> float:
        return self.dx * self.dv


@dataclass
class DensityField:
    """Density rho(x) on the spatial part of a grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.nx,):
            raise ValueError("density values must have shape (nx,)")

    def mass(self) -> float:
        return float(np.sum(self.values) * self.grid.dx)

    def l1(self) -> float:
        return float(np.sum(np.abs(self.values)) * self.grid.dx)

    def sup(self) -> float:
        return float(np.max(np.abs(self.values)))


@dataclass
class KineticField:
    """Cell averages of a kinetic profile f(x, v) at a fixed time."""

    grid: Grid
    time: float
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.nx, self.grid.nv):
            raise ValueError("kinetic values must have shape (nx, nv)")

    def l1(self) -> float:
        return float(np.sum(np.abs(self.values)) * self.grid.cell_area)

    def sign_violation(self) -> float:
        """Largest breach of sign(v) f in [0, 1] (0 when the invariant holds)."""
        signed = np.sign(self.grid.v_centers)[None, :] * self.values
        return float(max(np.max(-signed), np.max(signed - 1.0), 0.0))

    def support_leak(self, v_bound: float) -> float:
        """Mass carried by cells with |v_j| > v_bound (absolute)."""
        mask = np.abs(self.grid.v_centers) > v_bound
        if not np.any(mask):
            return 0.0
        return float(np.sum(np.abs(self.values[:, mask])) * self.grid.cell_area)

    def copy(self) -> "KineticField":
        return KineticField(self.grid, self.time, self.values.copy())


@dataclass
class KineticMeasureField:
    """Density of the relaxation defect measure w.r.t. dt dx dv."""

    grid: Grid
    values: np.ndarray
    min_entry: float

    def total(self, v_bound: float | None = None) -> float:
        """Integral over x and {|v| <= v_bound} (whole grid when None)."""
        if v_bound is None:
            return float(np.sum(self.values) * self.grid.cell_area)
        mask = np.abs(self.grid.v_centers) <= v_bound
        return float(np.sum(self.values[:, mask]) * self.grid.cell_area)


def maxwellian(rho, v):
    """Pointwise equilibrium profile: +1 on 0 <= v < rho, -1 on rho <= v < 0.

    Total function of (rho, v); broadcasts over array inputs and returns
    values in {-1.0, 0.0, 1.0}.
    """
    rho = np.asarray(rho, dtype=float)
    v = np.asarray(v, dtype=float)
    pos = (v >= 0.0) & (v < rho)
    neg = (v >= rho) & (v < 0.0)
    out = np.where(pos, 1.0, np.where(neg, -1.0, 0.0))
    if out.ndim == 0:
        return float(out)
    return out


def _as_density_values(rho, grid: Grid) -> np.ndarray:
    if isinstance(rho, DensityField):
        return rho.values
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (grid.nx,):
        raise ValueError("density must have shape (nx,)")
    return rho


def project_maxwellian(rho, grid: Grid, time: float = 0.0) -> KineticField:
    """Cell-averaged equilibrium profile of a density.

    Each cell holds the exact fractional overlap of the velocity cell with
    the interval (0, rho_i) (negated for the interval (rho_i, 0)), so the
    velocity integral reproduces rho_i exactly.
    """
    vals = _as_density_values(rho, grid)
    sup = float(np.max(np.abs(vals))) if vals.size else 0.0
    if sup > grid.v_max:
        raise DomainTooSmallError(
            f"v_max={grid.v_max} cannot hold a density with sup {sup:.6g}"
        )
    # work in cell units measured from v = 0 on each side of the sign split
    t = vals / grid.dv
    half = grid.zero_index
    lev = np.arange(half, dtype=float)
    pos = np.clip(np.maximum(t, 0.0)[:, None] - lev[None, :], 0.0, 1.0)
    neg = -np.clip(np.maximum(-t, 0.0)[:, None] - lev[None, :], 0.0, 1.0)
    values = np.concatenate([neg[:, ::-1], pos], axis=1)
    return KineticField(grid, time, values)


def density(f: KineticField) -> DensityField:
    """Velocity average rho_i = (sum_j f_ij) dv; exact for cell-average data."""
    return DensityField(f.grid, f.values.sum(axis=1) * f.grid.dv)


def bgk_defect_measure(
    f: KineticField, eps: float, neg_tol: float = RUNTIME_TOL
) -> KineticMeasureField:
    """Cumulative velocity integral of (equilibrium(f) - f) / eps.

    Non-negative for fields satisfying the sign property; entries below
    ``-neg_tol`` abort with :class:`InvariantViolation` since they signal a
    sign-property breach upstream.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    rho = density(f)
    eq = project_maxwellian(rho, f.grid, f.time)
    m = np.cumsum(eq.values - f.values, axis=1) * (f.grid.dv / eps)
    min_entry = float(m.min()) if m.size else 0.0
    if min_entry < -neg_tol:
        i, j = np.unravel_index(np.argmin(m), m.shape)
        raise InvariantViolation(
            "defect measure has a negative entry", cell=(int(i), int(j)),
            value=min_entry,
        )
    return KineticMeasureField(f.grid, m, min_entry)


def lp_moment(f: KineticField, p: float) -> float:
    """Weighted mass sum_ij |v_j|^p |f_ij| dx dv."""
    if not np.isfinite(p):
        raise ValueError("moment exponent must be finite")
    w = np.abs(f.grid.v_centers) ** p
    return float(np.sum(np.abs(f.values) * w[None, :]) * f.grid.cell_area)


def l1_distance(f1: KineticField, f2: KineticField) -> float:
    """L1 distance between two kinetic fields on the same grid."""
    if f1.grid != f2.grid:
        raise ValueError("fields live on different grids")
    return float(np.sum(np.abs(f1.values - f2.values)) * f1.grid.cell_area)


def write_field_csv(f: KineticField, path) -> None:
    """Snapshot CSV: header "x,v,f", one line per cell, row-major (i outer)."""
    x = f.grid.x_centers
    v = f.grid.v_centers
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "v", "f"])
        for i in range(f.grid.nx):
            xi = repr(float(x[i]))
            for j in range(f.grid.nv):
                writer.writerow([xi, repr(float(v[j])), repr(float(f.values[i, j]))])


def read_field_csv(path, time: float = 0.0) -> KineticField:
    """Rebuild a field from a snapshot CSV written by :func:`write_field_csv`."""
    xs, vs, fs = [], [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header[:3] != ["x", "v", "f"]:
            raise ValueError("expected header x,v,f")
        for row in reader:
            xs.append(float(row[0]))
            vs.append(float(row[1]))
            fs.append(float(row[2]))
    x_u = np.unique(xs)
    v_u = np.unique(vs)
    nx, nv = len(x_u), len(v_u)
    if nx * nv != len(fs):
        raise ValueError("snapshot is not a full tensor grid")
    dx = x_u[1] - x_u[0]
    dv = v_u[1] - v_u[0]
    grid = Grid(
        x_min=float(x_u[0] - dx / 2), x_max=float(x_u[-1] + dx / 2),
        nx=nx, v_max=float(v_u[-1] + dv / 2), nv=nv,
    )
    values = np.asarray(fs).reshape(nx, nv)
    return KineticField(grid, time, values)
