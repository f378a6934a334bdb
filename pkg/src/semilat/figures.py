"""Matplotlib rendering of contour plots and Hasse diagrams to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .hasse import cover_pairs
from .orders import SemilatticeOrder
from .tables import OpTable


def save_contour_figure(table: OpTable, path, title: str | None = None) -> None:
    """Render the table as a value grid with level-set boundaries and write
    it to path."""
    n = table.n
    fig, ax = plt.subplots(figsize=(max(3.0, 0.7 * n), max(3.0, 0.7 * n)))
    if n == 0:
        ax.text(0.5, 0.5, "empty table", ha="center", va="center")
        ax.set_axis_off()
    else:
        data = [[table(x, y) for x in range(1, n + 1)] for y in range(1, n + 1)]
        ax.imshow(
            data,
            origin="lower",
            cmap="YlGnBu",
            vmin=1,
            vmax=n,
            extent=(0.5, n + 0.5, 0.5, n + 0.5),
        )
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                ax.text(x, y, str(table(x, y)), ha="center", va="center", fontsize=9)
        # draw boundaries between cells holding different values
        for x in range(1, n):
            for y in range(1, n + 1):
                if table(x, y) != table(x + 1, y):
                    ax.plot([x + 0.5, x + 0.5], [y - 0.5, y + 0.5], color="black", lw=1.5)
        for x in range(1, n + 1):
            for y in range(1, n):
                if table(x, y) != table(x, y + 1):
                    ax.plot([x - 0.5, x + 0.5], [y + 0.5, y + 0.5], color="black", lw=1.5)
        ax.set_xticks(range(1, n + 1))
        ax.set_yticks(range(1, n + 1))
        ax.set_xlabel("x")
        ax.set_ylabel("y")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_hasse_figure(order: SemilatticeOrder, path, title: str | None = None) -> None:
    """Draw the Hasse diagram layered by chain height and write it to path."""
    n = order.n
    fig, ax = plt.subplots(figsize=(max(3.0, 0.8 * n), max(3.0, 0.6 * n)))
    if n == 0:
        ax.text(0.5, 0.5, "empty order", ha="center", va="center")
    else:
        edges = cover_pairs(order)
        uppers = {x: [] for x in range(1, n + 1)}
        for lo, hi in edges:
            uppers[lo].append(hi)
        depth: dict[int, int] = {}

        def height(x: int) -> int:
            if x not in depth:
                ups = uppers[x]
                depth[x] = 0 if not ups else 1 + max(height(u) for u in ups)
            return depth[x]

        for x in range(1, n + 1):
            height(x)
        layers: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            layers.setdefault(depth[x], []).append(x)
        pos = {}
        for level, members in layers.items():
            for i, x in enumerate(sorted(members)):
                pos[x] = (i - (len(members) - 1) / 2.0, -level)
        for lo, hi in edges:
            ax.plot(
                [pos[lo][0], pos[hi][0]],
                [pos[lo][1], pos[hi][1]],
                color="gray",
                zorder=1,
            )
        xs = [pos[x][0] for x in range(1, n + 1)]
        ys = [pos[x][1] for x in range(1, n + 1)]
        ax.scatter(xs, ys, s=450, color="#DCE9ED", edgecolors="#708BA6", zorder=2)
        for x in range(1, n + 1):
            ax.text(pos[x][0], pos[x][1], str(x), ha="center", va="center", zorder=3)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
