"""Analytic-signal construction and instantaneous-frequency estimation.

A real trace and its quadrature component (built in the Fourier domain,
no explicit Hilbert convolution) form an analytic trace whose phase rate
is the instantaneous frequency.  Three estimators share that trace:

* the classical ratio ``(x*dy/dt - y*dx/dt) / (x^2 + y^2)``, which is
  indeterminate at amplitude zeros,
* its damped variant with an additive ``eps^2`` in the denominator,
* a complex-step estimator that averages ``Im[arctan(B/A)]/tau`` over a
  small rectangle of complex shifts, where the imaginary offset keeps
  the arctangent argument away from the singular ratio 0/0 without any
  explicit damping term.

All estimators return samples in Hz together with a validity mask; only
the classical ratio ever produces invalid (NaN) samples in practice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .continuation import ComplexShift, continue_spectral
from .grid import Series, Spectrum, UniformGrid, fft_forward, fft_inverse
from .operators import CsitParams, fd_centered, pseudospectral_derivative

__all__ = [
    "AnalyticTrace",
    "IfParams",
    "FrequencyEstimate",
    "analytic_signal",
    "default_if_params",
    "if_classical",
    "if_damped",
    "if_csit",
    "chirp",
    "edge_mask",
]

_TWO_PI = 2.0 * np.pi
# squared amplitudes below this are treated as exact zeros of the trace
_DENOM_FLOOR = 1e-300
# |1 + (B/A)^2| below this marks a branch-point hit of the arctangent
_BRANCH_TOL = 1e-14

_VARIANTS = ("spectral_shift", "pointwise_additive")


@dataclass(frozen=True)
class AnalyticTrace:
    """A real trace paired with its quadrature component.

    ``x + i*y`` must be one-sided in the Fourier domain: coefficients on
    the strictly negative branch (Nyquist excluded) may not exceed
    1e-10 of the largest coefficient.  :func:`analytic_signal` is the
    usual constructor; building the pair by hand is allowed as long as
    that invariant holds.
    """

    x: Series
    y: Series

    def __post_init__(self) -> None:
        if not (self.x.is_real and self.y.is_real):
            raise ValueError("trace components must be real series")
        if self.x.grid != self.y.grid:
            raise ValueError("trace components must share one grid")
        coeffs = np.fft.fft(self.x.values + 1j * self.y.values)
        tail = np.abs(coeffs[self.grid.n // 2 + 1 :])
        if tail.size and tail.max() > 1e-10 * np.max(np.abs(coeffs)):
            raise ValueError(
                "quadrature component leaves negative-frequency content"
            )

    @property
    def grid(self) -> UniformGrid:
        return self.x.grid

    @property
    def amplitude(self) -> np.ndarray:
        """Envelope ``sqrt(x^2 + y^2)``."""
        return np.hypot(self.x.values, self.y.values)

    @property
    def phase(self) -> np.ndarray:
        """Wrapped phase ``arctan2(y, x)`` in (-pi, pi]."""
        return np.arctan2(self.y.values, self.x.values)


def analytic_signal(s: Series) -> AnalyticTrace:
    """Build the analytic trace of a real series in the Fourier domain.

    Strictly positive frequencies are doubled, strictly negative ones
    zeroed, and the DC and (even-grid) Nyquist coefficients kept once;
    the inverse transform then carries the input in its real part and
    the quadrature component in its imaginary part.

    Parameters
    ----------
    s : Series
        Real input samples on a uniform periodic grid.

    Returns
    -------
    AnalyticTrace
        The input as ``x`` and the derived quadrature series as ``y``.
    """
    if not s.is_real:
        raise ValueError("analytic signal needs a real input series")
    n = s.grid.n
    gain = np.ones(n)
    if n % 2 == 0:
        gain[1 : n // 2] = 2.0
        gain[n // 2 + 1 :] = 0.0
    else:
        gain[1 : (n + 1) // 2] = 2.0
        gain[(n + 1) // 2 :] = 0.0
    spec = fft_forward(s)
    v = fft_inverse(Spectrum(s.grid, spec.coeffs * gain)).values
    return AnalyticTrace(x=s, y=Series(s.grid, v.imag))


@dataclass(frozen=True)
class IfParams:
    """Shift rectangle and node counts for the complex-step estimator.

    Geometry fields match :class:`~csit.operators.CsitParams`.  The
    ``variant`` field selects how the shift ``eta + i*tau`` enters:
    ``"spectral_shift"`` (default) evaluates both trace components at
    the shifted time through their spectra, which is the reading under
    which the rectangle average approximates the phase rate;
    ``"pointwise_additive"`` adds the shift to the sample values
    themselves, which probes a different functional of the trace and is
    kept for comparison only.
    """

    eta_half_width: float
    tau_max: float
    tau_min: float | None = None
    n_eta: int = 4
    n_tau: int = 4
    rule: Literal["trapezoid", "midpoint"] = "trapezoid"
    variant: Literal["spectral_shift", "pointwise_additive"] = "spectral_shift"

    def __post_init__(self) -> None:
        if self.variant not in _VARIANTS:
            raise ValueError(f"unknown estimator variant {self.variant!r}")
        q = self.quadrature()
        # adopt the resolved defaults so the instance is self-describing
        if self.tau_min is None:
            object.__setattr__(self, "tau_min", q.tau_min)
        if self.n_eta != q.n_eta:
            object.__setattr__(self, "n_eta", q.n_eta)

    def quadrature(self) -> CsitParams:
        """The same rectangle as plain transform parameters."""
        return CsitParams(
            eta_half_width=self.eta_half_width,
            tau_max=self.tau_max,
            tau_min=self.tau_min,
            n_eta=self.n_eta,
            n_tau=self.n_tau,
            rule=self.rule,
        )


def default_if_params(
    dt: float,
    variant: Literal["spectral_shift", "pointwise_additive"] = "spectral_shift",
) -> IfParams:
    """Field defaults for a trace sampled at spacing ``dt``.

    Both extents equal one sample (``H = Z = dt``) with the lower tau
    cutoff at ``dt/100`` and 4 nodes per axis.  A smaller cutoff is not
    recommended: it amplifies the high-frequency noise inherent to the
    analytic continuation.
    """
    if not (dt > 0.0 and np.isfinite(dt)):
        raise ValueError("sample spacing dt must be positive and finite")
    return IfParams(
        eta_half_width=dt, tau_max=dt, tau_min=1e-2 * dt, variant=variant
    )


@dataclass(frozen=True)
class FrequencyEstimate:
    """Instantaneous-frequency samples in Hz with a validity mask.

    ``frequency`` is finite wherever ``valid`` is True.  Invalid samples
    hold NaN when the estimator refused to divide (classical ratio at an
    amplitude zero) or a finite placeholder when it fell back to one
    (complex-step estimator with every quadrature node flagged).
    """

    grid: UniformGrid
    frequency: np.ndarray = field(repr=False)
    valid: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        freq = np.asarray(self.frequency, dtype=np.float64).copy()
        valid = np.asarray(self.valid, dtype=bool).copy()
        if freq.shape != (self.grid.n,) or valid.shape != (self.grid.n,):
            raise ValueError("estimate length must match the grid")
        if not np.all(np.isfinite(freq[valid])):
            raise ValueError("samples marked valid must be finite")
        freq.flags.writeable = False
        valid.flags.writeable = False
        object.__setattr__(self, "frequency", freq)
        object.__setattr__(self, "valid", valid)


def _phase_rate_numerator(tr: AnalyticTrace, backend: str) -> np.ndarray:
    if backend == "pseudospectral":
        dx = pseudospectral_derivative(tr.x).values
        dy = pseudospectral_derivative(tr.y).values
    elif backend == "fd":
        dx = fd_centered(tr.x).values
        dy = fd_centered(tr.y).values
    else:
        raise ValueError(f"unknown derivative backend {backend!r}")
    return tr.x.values * dy - tr.y.values * dx


def if_classical(
    tr: AnalyticTrace,
    backend: Literal["pseudospectral", "fd"] = "pseudospectral",
) -> FrequencyEstimate:
    """Classical phase-rate ratio with flagged amplitude zeros.

    Computes ``(x*dy/dt - y*dx/dt) / (2*pi*(x^2 + y^2))``.  Samples
    where the squared amplitude falls below 1e-300, or where the ratio
    overflows, are flagged invalid and reported NaN rather than as a
    fabricated value.

    Parameters
    ----------
    tr : AnalyticTrace
        Trace to analyze.
    backend : {"pseudospectral", "fd"}
        Time-derivative scheme; the default differentiates the
        trigonometric interpolant, "fd" uses the second-order centered
        difference.
    """
    num = _phase_rate_numerator(tr, backend)
    denom = tr.x.values**2 + tr.y.values**2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ratio = num / denom / _TWO_PI
    valid = (denom >= _DENOM_FLOOR) & np.isfinite(ratio)
    return FrequencyEstimate(tr.grid, np.where(valid, ratio, np.nan), valid)


def if_damped(
    tr: AnalyticTrace,
    eps_damp: float,
    backend: Literal["pseudospectral", "fd"] = "pseudospectral",
) -> FrequencyEstimate:
    """Phase-rate ratio with an additive ``eps_damp**2`` damping term.

    The damped denominator ``x^2 + y^2 + eps_damp^2`` never vanishes, so
    amplitude zeros yield 0 Hz instead of an indeterminate value; where
    the amplitude dominates the damping the estimate matches the
    classical one to first order in ``eps_damp^2 / amplitude^2``.
    """
    if not (eps_damp > 0.0 and np.isfinite(eps_damp)):
        raise ValueError("damping eps_damp must be positive and finite")
    num = _phase_rate_numerator(tr, backend)
    denom = tr.x.values**2 + tr.y.values**2 + eps_damp**2
    with np.errstate(over="ignore"):
        ratio = num / denom / _TWO_PI
    valid = np.isfinite(ratio)
    return FrequencyEstimate(tr.grid, np.where(valid, ratio, np.nan), valid)


def _imag_arctan_ratio(
    a: np.ndarray, b: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Elementwise ``Im[arctan(b/a)]`` with branch-point flags.

    The ratio is always formed with the smaller-modulus component on
    top, using ``Im[arctan(w)] = -Im[arctan(1/w)]``; this bounds the
    arctangent argument by modulus one and avoids the cancellation that
    the principal-branch logarithm suffers for large ``|w|``.  Entries
    within ``_BRANCH_TOL`` of the branch points at ``+-i`` are flagged;
    entries with ``a = b = 0`` exactly contribute zero unflagged.
    """
    a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
    out = np.zeros(a.shape)
    flag = np.zeros(a.shape, dtype=bool)
    inverse = np.abs(b) > np.abs(a)
    direct = ~inverse & (a != 0)
    # branch-point hits produce non-finite arctan values; they are always
    # flagged below and replaced by the caller, so the warnings are noise
    with np.errstate(divide="ignore", invalid="ignore"):
        if np.any(direct):
            w = b[direct] / a[direct]
            out[direct] = np.arctan(w).imag
            flag[direct] = np.abs(1.0 + w * w) < _BRANCH_TOL
        if np.any(inverse):
            u = a[inverse] / b[inverse]
            out[inverse] = -np.arctan(u).imag
            # |1 + (b/a)^2| rewritten through u = a/b
            flag[inverse] = np.abs(1.0 + u * u) < _BRANCH_TOL * np.abs(u) ** 2
    return out, flag


def _nearest_clean(ip: int, im: int, good: np.ndarray) -> tuple[int, int]:
    """Closest unflagged node, ordered by tau distance then eta distance."""
    best_key = None
    best = (ip, im)
    for jp in range(good.shape[0]):
        for jm in range(good.shape[1]):
            if not good[jp, jm]:
                continue
            key = (abs(jm - im), abs(jp - ip), jm - im, jp - ip)
            if best_key is None or key < best_key:
                best_key = key
                best = (jp, jm)
    return best


def _patch_flagged(integrand: np.ndarray, flagged: np.ndarray) -> np.ndarray:
    """Replace flagged integrand entries in place; return the validity mask."""
    n = integrand.shape[2]
    valid = np.ones(n, dtype=bool)
    if not flagged.any():
        return valid
    for j in np.nonzero(flagged.any(axis=(0, 1)))[0]:
        good = ~flagged[:, :, j]
        if not good.any():
            integrand[:, :, j] = 0.0
            valid[j] = False
            continue
        for ip, im in zip(*np.nonzero(flagged[:, :, j])):
            jp, jm = _nearest_clean(int(ip), int(im), good)
            integrand[ip, im, j] = integrand[jp, jm, j]
    return valid


def _shifted_components(
    tr: AnalyticTrace, eta: float, tau: float, variant: str
) -> tuple[np.ndarray, np.ndarray]:
    if variant == "spectral_shift":
        shift = ComplexShift(eta=eta, tau=tau)
        return (
            continue_spectral(tr.x, shift).values,
            continue_spectral(tr.y, shift).values,
        )
    step = complex(eta, tau)
    return tr.x.values + step, tr.y.values + step


def if_csit(tr: AnalyticTrace, p: IfParams) -> FrequencyEstimate:
    """Complex-step estimator: rectangle average of ``Im[arctan(B/A)]/tau``.

    ``A`` and ``B`` are the trace components under the quadrature shift
    ``eta + i*tau`` (see :class:`IfParams` for the two readings of that
    shift).  The imaginary offset keeps the ratio ``B/A`` off the real
    axis, so amplitude zeros of the trace produce finite output without
    any explicit damping term.

    Nodes that land within 1e-14 of an arctangent branch point borrow
    the value of the nearest clean node of the same sample (smallest tau
    distance first, then eta distance, lower index on ties); a sample
    with no clean node at all is reported as 0 Hz and flagged invalid.
    """
    q = p.quadrature()
    etas, w_eta = q.eta_nodes_weights()
    taus, w_tau = q.tau_nodes_weights()
    n = tr.grid.n
    integrand = np.empty((len(etas), len(taus), n))
    flagged = np.empty((len(etas), len(taus), n), dtype=bool)
    for ip, eta in enumerate(etas):
        for im, tau in enumerate(taus):
            a, b = _shifted_components(tr, float(eta), float(tau), p.variant)
            value, bad = _imag_arctan_ratio(a, b)
            integrand[ip, im] = value / tau
            flagged[ip, im] = bad
    valid = _patch_flagged(integrand, flagged)
    weights = np.outer(w_eta, w_tau)[:, :, None]
    freq = np.sum(weights * integrand, axis=(0, 1)) / (_TWO_PI * q.normalization)
    return FrequencyEstimate(tr.grid, freq, valid)


def chirp(f0: float, rate: float, grid: UniformGrid) -> Series:
    """Cosine sweep ``cos(2*pi*(f0*t + 0.5*rate*t^2))`` on the grid.

    Its instantaneous frequency at time ``t`` is ``f0 + rate*t``; a rate
    of zero degenerates to a pure tone at ``f0``.
    """
    t = grid.nodes
    return Series(grid, np.cos(_TWO_PI * (f0 * t + 0.5 * rate * t * t)))


def edge_mask(n: int, fraction: float = 0.05) -> np.ndarray:
    """Boolean mask keeping the interior, dropping a fraction per edge.

    ``ceil(fraction * n)`` samples are masked off at each end; analytic
    signals built by periodic transforms carry their wrap artifacts
    there.
    """
    if not (0.0 <= fraction < 0.5):
        raise ValueError("edge fraction must lie in [0, 0.5)")
    trim = int(np.ceil(fraction * n))
    mask = np.ones(n, dtype=bool)
    if trim:
        mask[:trim] = False
        mask[-trim:] = False
    return mask
