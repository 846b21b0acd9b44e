"""Differentiating a steep logistic: where each operator breaks.

A logistic with steepness 100 on the unit interval is smooth but
nearly discontinuous on a 500-point grid.  Centered differences smear
the transition; the raw pseudospectral derivative rings globally
because the function is not periodic-smooth at the domain seam; the
transform tempers that ringing while keeping spectral accuracy in the
transition.
"""

import numpy as np

from csit import (
    CsitParams,
    Series,
    UniformGrid,
    csit_quadrature,
    fd_centered,
    pseudospectral_derivative,
)


def main():
    n, steep, mid = 500, 100.0, 0.5
    grid = UniformGrid(0.0, 1.0, n)
    t = grid.nodes
    f = 1.0 / (1.0 + np.exp(-steep * (t - mid)))
    truth = steep * f * (1.0 - f)
    s = Series(grid, f)

    dt = grid.dx
    p = CsitParams(eta_half_width=dt, tau_max=dt, n_eta=4, n_tau=4)
    estimates = {
        "fd": fd_centered(s).values,
        "pseudospectral": pseudospectral_derivative(s).values,
        "csit": csit_quadrature(s, p).values,
    }

    scale = np.max(np.abs(truth))
    interior = np.zeros(n, dtype=bool)
    interior[5:-5] = True
    transition = np.abs(np.arange(n) - np.argmax(truth)) <= 10

    print(f"peak derivative {scale:.1f}, grid spacing {dt:.4f}")
    print()
    print(f"{'operator':>16} {'max rel err':>14} {'transition only':>16} {'elsewhere':>12}")
    for name, d in estimates.items():
        rel = np.abs(d - truth) / scale
        print(
            f"{name:>16} {np.max(rel[interior]):14.3e}"
            f" {np.max(rel[interior & transition]):16.3e}"
            f" {np.max(rel[interior & ~transition]):12.3e}"
        )
    print()
    print("The pseudospectral column is poisoned away from the transition")
    print("by ringing from the seam; the transform keeps both regions small.")


if __name__ == "__main__":
    main()
