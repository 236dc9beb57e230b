"""Figures for the benchmark suites (written to files, never shown)."""

from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_engines(rows, path):
    """Median time per engine against instance size, one panel per family."""
    families = sorted({r["family"] for r in rows})
    fig, axes = plt.subplots(1, len(families), figsize=(5 * len(families), 4), squeeze=False)
    for ax, family in zip(axes[0], families):
        series = defaultdict(lambda: defaultdict(list))
        failed = defaultdict(list)
        for r in rows:
            if r["family"] != family:
                continue
            if r["status"] == "ok":
                series[r["engine"]][r["size"]].append(r["time_s"])
            else:
                failed[r["engine"]].append(r["size"])
        for engine, by_size in sorted(series.items()):
            sizes = sorted(by_size)
            med = [sorted(by_size[s])[len(by_size[s]) // 2] for s in sizes]
            ax.plot(sizes, med, marker="o", label=engine)
        for engine, sizes in sorted(failed.items()):
            ax.scatter(sorted(set(sizes)), [ax.get_ylim()[1]] * len(set(sizes)), marker="x",
                       label=f"{engine} over budget")
        ax.set_yscale("log")
        ax.set_xlabel("instance size parameter")
        ax.set_ylabel("time (s)")
        ax.set_title(f"engines: {family}")
        ax.legend(fontsize="small")
    _save(fig, path)


def plot_growth(rows, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    for family, marker in (("A", "o"), ("L", "s")):
        pts = sorted((r["n"] + r["m"], r["usize"]) for r in rows if r["family"] == family)
        if pts:
            best = {}
            for x, y in pts:
                best[x] = max(best.get(x, 0), y)
            xs = sorted(best)
            ax.plot(xs, [best[x] for x in xs], marker=marker, label=f"par({family}, {family})")
    ax.set_yscale("log")
    ax.set_xlabel("n + m")
    ax.set_ylabel("largest uniform size")
    ax.set_title("uniform size of par of two chains")
    ax.legend()
    _save(fig, path)


def plot_shortcircuit(rows, path):
    fig, ax = plt.subplots(figsize=(6, 4))
    depths = [r["depth"] for r in rows]
    ax.plot(depths, [r["mean_visits_full"] for r in rows], marker="o", label="full traversal")
    ax.plot(depths, [r["mean_visits_short"] for r in rows], marker="s", label="short-circuit")
    ax.set_yscale("log")
    ax.set_xlabel("depth limit")
    ax.set_ylabel("mean nodes visited")
    ax.set_title("short-circuit evaluation on random trees")
    ax.legend()
    _save(fig, path)
