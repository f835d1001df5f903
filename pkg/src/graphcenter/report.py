"""Matplotlib figures for benchmark results."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchmarkRecord  # noqa: E402

FLAG_COLORS = {"slower": "tab:red", "10x": "tab:green", "": "tab:gray"}


def plot_benchmark(records: list[BenchmarkRecord], path: str | Path) -> Path:
    """Two panels: speedup against P/N, and both timings per record."""
    path = Path(path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))

    ratio = [r.morphology.P / r.morphology.N for r in records]
    ax1.scatter(ratio, [r.speedup for r in records], c=[FLAG_COLORS[r.flag] for r in records])
    ax1.axhline(1.0, color="k", lw=0.8, ls="--")
    ax1.set_yscale("log")
    ax1.set_xlabel("P / N")
    ax1.set_ylabel("speedup (Floyd-Warshall / new)")

    x = range(len(records))
    ax2.plot(x, [r.t_fw * 1e3 for r in records], "o-", label="Floyd-Warshall")
    ax2.plot(x, [r.t_new * 1e3 for r in records], "s-", label="matrix powers")
    ax2.set_yscale("log")
    ax2.set_xticks(list(x))
    ax2.set_xticklabels(
        [f"{r.morphology.N}/{r.morphology.NA}/{r.morphology.P}" for r in records],
        rotation=60, ha="right", fontsize=7,
    )
    ax2.set_xlabel("N/NA/P")
    ax2.set_ylabel("median time (ms)")
    ax2.legend(frameon=False)

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
