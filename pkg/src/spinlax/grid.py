"""Uniform 2-d grids, field containers, and the FLD1 dump format.

Arrays are indexed ``values[ix, iy]`` (x is axis 0, y is axis 1) with
component axes trailing.  All fields are plain numpy arrays wrapped with a
reference to their grid; operations elsewhere in the package work on the
``.values`` arrays directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SpinlaxError

# FLD1 component layouts, in file order
_FLD_KINDS = {"real": (), "cplx": (2,), "vec3": (3,)}


@dataclass(frozen=True)
class Grid2D:
    """Uniform rectangular grid: nx*ny nodes, spacings dx, dy, origin (x0, y0)."""

    nx: int
    ny: int
    dx: float
    dy: float
    x0: float = 0.0
    y0: float = 0.0

    def __post_init__(self):
        if self.nx < 16 or self.ny < 16:
            raise SpinlaxError(f"grid must be at least 16x16, got {self.nx}x{self.ny}")
        if self.dx <= 0 or self.dy <= 0:
            raise SpinlaxError("grid spacings must be positive")

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.nx)

    @property
    def y(self) -> np.ndarray:
        return self.y0 + self.dy * np.arange(self.ny)

    def meshgrid(self):
        """(X, Y) arrays of shape (nx, ny)."""
        return np.meshgrid(self.x, self.y, indexing="ij")

    @property
    def shape(self):
        return (self.nx, self.ny)

    @classmethod
    def centered(cls, n: int, half_extent: float, ny: int | None = None,
                 half_extent_y: float | None = None) -> "Grid2D":
        """Square-ish grid on [-L, L] x [-Ly, Ly] with n (x ny) nodes."""
        ny = n if ny is None else ny
        ly = half_extent if half_extent_y is None else half_extent_y
        return cls(nx=n, ny=ny,
                   dx=2.0 * half_extent / (n - 1), dy=2.0 * ly / (ny - 1),
                   x0=-half_extent, y0=-ly)


def _check_shape(grid: Grid2D, values: np.ndarray, comp: tuple, kind: str):
    expect = (grid.nx, grid.ny) + comp
    if values.shape != expect:
        raise SpinlaxError(f"{kind} field shaped {values.shape}, expected {expect}")


@dataclass
class ScalarField:
    """Real scalar samples on a Grid2D."""

    grid: Grid2D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        _check_shape(self.grid, self.values, (), "scalar")

    @classmethod
    def zeros(cls, grid: Grid2D):
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def from_function(cls, grid: Grid2D, fn):
        return cls(grid, np.asarray(fn(*grid.meshgrid()), dtype=float))

    def copy(self):
        return ScalarField(self.grid, self.values.copy())


@dataclass
class CplxField:
    """Complex scalar samples on a Grid2D."""

    grid: Grid2D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        _check_shape(self.grid, self.values, (), "complex")

    @classmethod
    def zeros(cls, grid: Grid2D):
        return cls(grid, np.zeros(grid.shape, dtype=complex))

    @classmethod
    def from_function(cls, grid: Grid2D, fn):
        return cls(grid, np.asarray(fn(*grid.meshgrid()), dtype=complex))

    def copy(self):
        return CplxField(self.grid, self.values.copy())


@dataclass
class Vec3Field:
    """Real 3-vector samples, shape (nx, ny, 3)."""

    grid: Grid2D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        _check_shape(self.grid, self.values, (3,), "vec3")

    @classmethod
    def zeros(cls, grid: Grid2D):
        return cls(grid, np.zeros(grid.shape + (3,)))

    def copy(self):
        return Vec3Field(self.grid, self.values.copy())


@dataclass
class Mat2Field:
    """Complex 2x2 matrix samples, shape (nx, ny, 2, 2); entries must be finite."""

    grid: Grid2D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        _check_shape(self.grid, self.values, (2, 2), "mat2")
        if not np.all(np.isfinite(self.values)):
            raise SpinlaxError("mat2 field contains non-finite entries")

    @classmethod
    def zeros(cls, grid: Grid2D):
        return cls(grid, np.zeros(grid.shape + (2, 2), dtype=complex))

    def copy(self):
        return Mat2Field(self.grid, self.values.copy())


# ----------------------------------------------------------------------
# FLD1 dump format: one ASCII header line
#     FLD1 kind nx ny dx dy x0 y0
# followed by little-endian float64, row-major over (ix, iy) with
# components interleaved (re,im for cplx; x,y,z for vec3).
# ----------------------------------------------------------------------


def save_fld(path, fld):
    """Write a ScalarField / CplxField / Vec3Field in FLD1 format."""
    if isinstance(fld, ScalarField):
        kind, raw = "real", fld.values
    elif isinstance(fld, CplxField):
        kind = "cplx"
        raw = np.stack([fld.values.real, fld.values.imag], axis=-1)
    elif isinstance(fld, Vec3Field):
        kind, raw = "vec3", fld.values
    else:
        raise SpinlaxError(f"cannot dump field of type {type(fld).__name__}")
    g = fld.grid
    header = f"FLD1 {kind} {g.nx} {g.ny} {g.dx!r} {g.dy!r} {g.x0!r} {g.y0!r}\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        fh.write(np.ascontiguousarray(raw, dtype="<f8").tobytes())


def load_fld(path):
    """Read an FLD1 file back into the matching field type."""
    with open(path, "rb") as fh:
        header = fh.readline().decode("ascii").split()
        blob = fh.read()
    if len(header) != 8 or header[0] != "FLD1":
        raise SpinlaxError(f"{path}: not an FLD1 file")
    kind = header[1]
    if kind not in _FLD_KINDS:
        raise SpinlaxError(f"{path}: unknown FLD1 kind {kind!r}")
    nx, ny = int(header[2]), int(header[3])
    dx, dy, x0, y0 = (float(v) for v in header[4:8])
    grid = Grid2D(nx=nx, ny=ny, dx=dx, dy=dy, x0=x0, y0=y0)
    comp = _FLD_KINDS[kind]
    raw = np.frombuffer(blob, dtype="<f8").reshape((nx, ny) + comp)
    if kind == "real":
        return ScalarField(grid, raw)
    if kind == "cplx":
        return CplxField(grid, raw[..., 0] + 1j * raw[..., 1])
    return Vec3Field(grid, raw)
