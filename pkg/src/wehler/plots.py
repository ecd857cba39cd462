"""Figure rendering for the CLI report paths.

Everything here is presentation only: floats are fine, nothing feeds back
into the exact pipeline.  The Agg backend keeps rendering headless.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_cycle_spectrum(spectrum, path, title=""):
    """Bar chart of the cycle-length multiset {length: number of cycles}."""
    lengths = sorted(spectrum)
    counts = [spectrum[n] for n in lengths]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(len(lengths)), counts, color="#4878a8")
    ax.set_xticks(range(len(lengths)))
    ax.set_xticklabels([str(n) for n in lengths])
    ax.set_xlabel("cycle length")
    ax.set_ylabel("number of cycles")
    ax.set_title(title or "cycle spectrum")
    ax.yaxis.get_major_locator().set_params(integer=True)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_count_growth(counts, p, path, title=""):
    """Semilog plot of N_m against the dominant p^(2m) term."""
    m = np.arange(1, len(counts) + 1)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.semilogy(m, np.array(counts, dtype=float), "o-", label="N_m")
    ax.semilogy(m, [float(p) ** (2 * i) for i in m], "--",
                color="gray", label=f"{p}^(2m)")
    ax.set_xlabel("m")
    ax.set_ylabel("points over GF(p^m)")
    ax.set_title(title or f"point counts over GF({p}^m)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_root_diagram(p2, p, path, title=""):
    """Scatter of the scaled reciprocal roots alpha_i / p of P2.

    On correct input they all sit on the unit circle; root-of-unity
    positions are what the Picard bound counts.
    """
    roots = np.roots(np.array(p2[::-1], dtype=float))
    scaled = 1.0 / (roots * p)
    fig, ax = plt.subplots(figsize=(5, 5))
    circle = np.exp(2j * np.pi * np.linspace(0, 1, 400))
    ax.plot(circle.real, circle.imag, color="lightgray", lw=1)
    ax.scatter(scaled.real, scaled.imag, color="#a84848", zorder=3)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title or "reciprocal roots of P2, scaled by 1/p")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
