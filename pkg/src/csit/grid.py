"""Uniform periodic grids, sampled series, and their discrete spectra.

All spectral machinery in this package shares one Fourier convention:

* analysis (``fft_forward``) is the plain sum
  ``coeff_k = sum_j s_j * exp(-i k x_j)``,
* synthesis (``fft_inverse``) carries the ``1/n`` factor
  ``s_j = (1/n) * sum_k coeff_k * exp(+i k x_j)``,

with signed wavenumbers ``k_j = 2*pi*j_signed/L`` ordered
``[0, 1, ..., ceil(n/2)-1, -floor(n/2), ..., -1]`` (for even ``n`` the
Nyquist mode sits on the negative branch).  This is numpy's native FFT
normalization; coefficients are phased against absolute node coordinates
(``x_j`` includes the grid origin), so the synthesis identity above holds
verbatim for grids that do not start at zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "UniformGrid",
    "Series",
    "Spectrum",
    "wavenumbers",
    "fft_forward",
    "fft_inverse",
]


@dataclass(frozen=True)
class UniformGrid:
    """Uniform periodic sampling of an interval ``[x0, x0 + length)``.

    Parameters
    ----------
    x0 : float
        Coordinate of the first node.
    length : float
        Period ``L`` of the domain; the right endpoint is excluded.
    n : int
        Number of nodes, at least 2.  Any length is accepted (the FFT
        backend is mixed-radix), not just powers of two.
    """

    x0: float
    length: float
    n: int

    def __post_init__(self) -> None:
        if not np.isfinite(self.x0):
            raise ValueError("grid origin must be finite")
        if not (self.length > 0.0 and np.isfinite(self.length)):
            raise ValueError("grid length must be positive and finite")
        if self.n < 2:
            raise ValueError("grid needs at least 2 nodes")

    @property
    def dx(self) -> float:
        """Node spacing ``L/n``."""
        return self.length / self.n

    @property
    def nodes(self) -> np.ndarray:
        """Node coordinates ``x0 + j*dx`` for ``j = 0..n-1``."""
        return self.x0 + self.dx * np.arange(self.n)


def wavenumbers(grid: UniformGrid) -> np.ndarray:
    """Signed wavenumbers ``2*pi*j_signed/L`` in FFT order.

    For even ``n`` the Nyquist wavenumber appears once, on the negative
    branch (index ``n/2`` holds ``-pi*n/L``).
    """
    return 2.0 * np.pi * np.fft.fftfreq(grid.n, d=grid.dx)


def _as_series_values(values: np.ndarray) -> np.ndarray:
    arr = np.asarray(values)
    if np.iscomplexobj(arr):
        arr = arr.astype(np.complex128, copy=True)
    else:
        arr = arr.astype(np.float64, copy=True)
    if arr.ndim != 1:
        raise ValueError("series values must be one-dimensional")
    if not np.all(np.isfinite(arr.view(np.float64) if arr.dtype == np.complex128 else arr)):
        raise ValueError("series values must all be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Series:
    """Finite samples attached to a grid.

    ``values`` is a read-only float64 or complex128 array of length
    ``grid.n``; real and complex series share this type and are told apart
    by dtype.
    """

    grid: UniformGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_series_values(self.values))
        if len(self.values) != self.grid.n:
            raise ValueError(
                f"series has {len(self.values)} values but the grid has {self.grid.n} nodes"
            )

    @property
    def is_real(self) -> bool:
        return self.values.dtype == np.float64


@dataclass(frozen=True)
class Spectrum:
    """Fourier coefficients of a series, in the package convention.

    ``coeffs[j]`` multiplies ``exp(i k_j x)`` with ``k_j`` given by
    :func:`wavenumbers`; synthesis divides by ``n``.
    """

    grid: UniformGrid
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs, dtype=np.complex128).copy()
        if arr.ndim != 1 or len(arr) != self.grid.n:
            raise ValueError("spectrum length must match the grid")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def wavenumbers(self) -> np.ndarray:
        return wavenumbers(self.grid)


def fft_forward(s: Series) -> Spectrum:
    """Analysis transform: plain summation against ``exp(-i k x_j)``.

    A constant series of value 1 on ``n`` nodes yields ``coeff[0] == n``.
    """
    coeffs = np.fft.fft(s.values)
    if s.grid.x0 != 0.0:
        # coefficients are phased to absolute coordinates, not node indices
        coeffs = coeffs * np.exp(-1j * wavenumbers(s.grid) * s.grid.x0)
    return Spectrum(s.grid, coeffs)


def fft_inverse(spec: Spectrum, real: bool = False) -> Series:
    """Synthesis transform, carrying the ``1/n`` factor.

    With ``real=True`` the imaginary part is discarded; callers assert
    conjugate symmetry by using it.
    """
    coeffs = spec.coeffs
    if spec.grid.x0 != 0.0:
        coeffs = coeffs * np.exp(1j * wavenumbers(spec.grid) * spec.grid.x0)
    values = np.fft.ifft(coeffs)
    if real:
        return Series(spec.grid, values.real)
    return Series(spec.grid, values)
