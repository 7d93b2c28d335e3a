"""Matplotlib rendering for the scan and region-map report paths.

Figures are written to files next to the CSV output; no interactive
backends are touched.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analysis import Region

__all__ = ["render_scan", "render_region_map"]

_REGION_COLORS = {
    Region.UNPHYSICAL: (0.45, 0.35, 0.25),
    Region.POSITIVE_CI: (0.55, 0.25, 0.65),
    Region.ZERO_CI: (0.93, 0.93, 0.93),
}


def render_scan(rows, path, base_label="nats", limit=None):
    """Plot G versus input photon number from scan rows (n, value, slope)."""
    ns = [r[0] for r in rows if r[0] > 0.0]
    gs = [r[1] for r in rows if r[0] > 0.0]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogx(ns, gs, lw=1.6, color="0.3")
    ax.axhline(0.0, color="0.7", lw=0.8)
    if limit is not None and np.isfinite(limit):
        ax.axhline(limit, color="tab:purple", lw=0.8, ls="--",
                   label=f"infinite-power limit = {limit:.6g}")
        ax.legend(frameon=False)
    ax.set_xlabel("input mean photon number N")
    ax.set_ylabel(f"coherent information G ({base_label})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_region_map(cells, n_tau, n_y, path):
    """Raster the (tau, y) classification; cells are (tau, y, RegionLabel)
    in row-major order with tau in the outer loop."""
    taus = sorted({c[0] for c in cells})
    ys = sorted({c[1] for c in cells})
    img = np.zeros((n_y, n_tau, 3))
    for idx, (tau, y, lab) in enumerate(cells):
        i, j = divmod(idx, n_y)
        img[j, i] = _REGION_COLORS[lab.label]
    fig, ax = plt.subplots(figsize=(6.5, 5))
    ax.imshow(
        img,
        origin="lower",
        extent=(taus[0], taus[-1], ys[0], ys[-1]),
        aspect="auto",
        interpolation="nearest",
    )
    ts = np.linspace(taus[0], taus[-1], 200)
    ax.plot(ts, np.abs(ts - 1.0), "k--", lw=1.0, label="zero-noise boundary")
    ax.set_xlabel("tau")
    ax.set_ylabel("y")
    ax.set_ylim(ys[0], ys[-1])
    ax.legend(frameon=False, loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
