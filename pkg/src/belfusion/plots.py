"""Figure rendering for combination runs, sweeps, and verifier reports.

Everything draws through the Agg backend and writes straight to files, so
the report path works headless.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .core import MassFunction
from .scenarios import SweepReport, TheoremTrialReport


def plot_distributions(m1: MassFunction, m2: MassFunction, combined: MassFunction,
                       rule: str, path: str) -> None:
    """Grouped bars of both inputs and the combined output per subset."""
    frame = m1.frame
    subsets = sorted(set(m1.focal()) | set(m2.focal()) | set(combined.focal()))
    labels = [frame.format_subset(s) for s in subsets]
    x = np.arange(len(subsets))
    width = 0.27
    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * len(subsets) + 2), 3.2))
    ax.bar(x - width, [m1.mass(s) for s in subsets], width, label="source 1")
    ax.bar(x, [m2.mass(s) for s in subsets], width, label="source 2")
    ax.bar(x + width, [combined.mass(s) for s in subsets], width,
           label=f"combined ({rule})")
    ax.set_xticks(x, labels)
    ax.set_ylabel("mass")
    ax.set_ylim(0, 1)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sweep(report: SweepReport, path: str) -> None:
    """Replication gap of both rules across the grid, ordered by conflict.

    The gap is the max-norm distance from the combined output to the
    nearer input; a gap at or below epsilon means the rule replicated an
    input at that point.
    """
    order = sorted(range(len(report.points)), key=lambda i: report.points[i].conflict)
    conflicts = [report.points[i].conflict for i in order]
    floor = report.epsilon * 1e-4
    dempster = [max(report.points[i].dempster.max_deviation, floor) for i in order]
    alt = [max(report.points[i].alt.max_deviation, floor) for i in order]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.semilogy(conflicts, dempster, ".", label="Dempster")
    ax.semilogy(conflicts, alt, ".", label="alternative")
    ax.axhline(report.epsilon, color="gray", lw=0.8, ls="--",
               label="replication threshold")
    ax.set_xlabel("conflict between the sources")
    ax.set_ylabel("distance to nearer input")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_theorem(report: TheoremTrialReport, path: str) -> None:
    """Histogram of witness margins over the scored trials (log bins)."""
    margins = [m for m in report.margins if m > 0.0]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    if margins:
        lo = min(min(margins), report.epsilon)
        hi = max(max(margins), report.epsilon * 10)
        bins = np.logspace(math.log10(lo) - 0.1, math.log10(hi) + 0.1, 48)
        ax.hist(margins, bins=bins)
        ax.set_xscale("log")
    ax.axvline(report.epsilon, color="red", lw=0.8, ls="--", label="epsilon")
    ax.set_xlabel("witness margin")
    ax.set_ylabel("trials")
    ax.set_title(
        f"n={report.frame_size}, {report.passes} passes, "
        f"{len(report.violations)} violations"
    )
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
