"""Parasitic modes in forced advection, and how the transform kills them.

A point source injecting a smooth wavelet into a leapfrog advection
scheme also excites the grid checkerboard: the centered spatial
difference gives that mode zero phase speed and group velocity -c, so
a parasitic packet crawls backward out of the forward pulse.  Swapping
the spatial derivative for the transform attenuates the checkerboard
at the operator level, so the parasitic mode never accumulates.

Runs the same forced problem (ring of 10 km, 900 m/s, 1 Hz wavelet)
with three spatial operators and reports where the energy ended up.
"""

import numpy as np

from csit import (
    SourceTimeFunction,
    parasitic_energy,
    pulse_centroid,
    pulse_speed,
    reference_config,
    run_advection,
)


def sketch(values, width=64):
    """Coarse amplitude profile as a text strip."""
    bins = np.array_split(np.abs(values), width)
    peaks = np.array([b.max() for b in bins])
    top = peaks.max()
    glyphs = " .:-=+*#%@"
    if top == 0.0:
        return " " * width
    levels = np.minimum((peaks / top * (len(glyphs) - 1)).astype(int), len(glyphs) - 1)
    return "".join(glyphs[i] for i in levels)


def main():
    cfg0 = reference_config()
    duration = cfg0.n_t * cfg0.dt
    wavelength = cfg0.c / cfg0.f0
    print(
        f"ring {cfg0.L:.0f} m, {cfg0.n_x} nodes, c = {cfg0.c:.0f} m/s, "
        f"wavelet {cfg0.f0:.0f} Hz, duration {duration:.2f} s"
    )

    runs = {}
    for scheme in ("fd", "pseudospectral", "csit"):
        cfg = reference_config(scheme=scheme)
        src = SourceTimeFunction(kind="gaussian_derivative", f0=cfg.f0)
        runs[scheme] = run_advection(cfg, src, [2.5, duration])

    center = pulse_centroid(runs["csit"][-1])
    window = (center - 4.0 * wavelength, center + 4.0 * wavelength)
    print(f"pulse window: [{window[0]:.0f}, {window[1]:.0f}] m (wraps past the seam)")
    print()

    print(f"{'scheme':>16} {'parasitic ratio':>16} {'centroid speed':>15}")
    for scheme, snaps in runs.items():
        ratio = parasitic_energy(snaps[-1], window)
        speed = pulse_speed(snaps)
        print(f"{scheme:>16} {ratio:16.3e} {speed:15.2f}")
    print()
    print("fd: the checkerboard packet runs backward at -c while the pulse")
    print("runs forward, so the energy centroid goes nowhere and nearly half")
    print("the energy sits outside the window.")
    print()

    for scheme, snaps in runs.items():
        print(f"{scheme:>16} |{sketch(snaps[-1].u.values)}|")
    print(f"{'':>16}  0 {'m':^58} {cfg0.L:.0f}")


if __name__ == "__main__":
    main()
