"""Benchmark figures rendered next to the CSV/JSON output.

Figures are a convenience view of the same data the tables carry; the
pass/fail record stays in the tables.
"""

from __future__ import annotations

import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _style(ax):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.grid(True, axis="y", linewidth=0.4, alpha=0.5)


def plot_sizes(reports, path) -> None:
    """Per-instance algorithm sizes, with the exact optimum overlaid."""
    algs = sorted({alg for r in reports for alg in r.sizes
                   if alg != "strong-coloring"})
    if not algs or not reports:
        return
    fig, ax = plt.subplots(figsize=(max(6, 0.5 * len(reports)), 4))
    xs = range(len(reports))
    width = 0.8 / len(algs)
    for i, alg in enumerate(algs):
        ax.bar([x + i * width for x in xs],
               [r.sizes.get(alg, 0) for r in reports],
               width=width, label=alg)
    exact_x = [x + 0.4 - width / 2 for x, r in zip(xs, reports)
               if r.exact is not None]
    exact_y = [r.exact for r in reports if r.exact is not None]
    if exact_x:
        ax.plot(exact_x, exact_y, "k_", markersize=10, label="exact")
    ax.set_xticks([x + 0.4 - width / 2 for x in xs])
    ax.set_xticklabels([r.instance for r in reports], rotation=60,
                       ha="right", fontsize=7)
    ax.set_ylabel("matching size")
    ax.legend(fontsize=8)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_ratios(reports, path) -> None:
    """Histogram of exact/output ratios against the guaranteed ceiling."""
    ratios = []
    bound = None
    for r in reports:
        for c in r.checks:
            if c.name == "theorem1_ratio" and not c.skipped:
                ratios.append(float(Fraction(c.achieved)))
                bound = float(Fraction(c.required))
    if not ratios:
        return
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(ratios, bins=20, color="#4878a8", edgecolor="white")
    ax.axvline(bound, color="crimson", linestyle="--",
               label=f"guaranteed ratio {bound:.3f}")
    ax.set_xlabel("exact optimum / algorithm output")
    ax.set_ylabel("instances")
    ax.legend(fontsize=8)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_benchmark_figures(reports, outdir) -> list[str]:
    paths = []
    sizes_path = os.path.join(outdir, "bench_sizes.png")
    plot_sizes(reports, sizes_path)
    if os.path.exists(sizes_path):
        paths.append(sizes_path)
    ratios_path = os.path.join(outdir, "bench_ratios.png")
    plot_ratios(reports, ratios_path)
    if os.path.exists(ratios_path):
        paths.append(ratios_path)
    return paths
