"""Matplotlib rendering of ideal lattices as layered Hasse diagrams."""

from __future__ import annotations

from typing import Sequence

from .classify import CanonicalIdeal
from .quotcode import CodeContext


def _layers(n_nodes: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Rank of each node: length of the longest chain down to a minimal one."""
    children: dict[int, list[int]] = {i: [] for i in range(n_nodes)}
    for i, j in edges:
        children[i].append(j)
    rank: dict[int, int] = {}

    def walk(i: int) -> int:
        if i in rank:
            return rank[i]
        rank[i] = 0 if not children[i] else 1 + max(walk(j) for j in children[i])
        return rank[i]

    return [walk(i) for i in range(n_nodes)]


def render_lattice(
    ideals: Sequence[CanonicalIdeal],
    edges: Sequence[tuple[int, int]],
    ctx: CodeContext,
    path: str,
    title: str | None = None,
) -> None:
    """Draw the Hasse diagram of the given ideals and save it to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [f"$\\langle {ideal.label(ctx)} \\rangle_{ideal.kind.subscript}$" for ideal in ideals]
    ranks = _layers(len(ideals), edges)
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(i)
    pos: dict[int, tuple[float, float]] = {}
    for r, nodes in by_rank.items():
        nodes.sort(key=lambda i: labels[i])
        for k, i in enumerate(nodes):
            pos[i] = ((k + 1) / (len(nodes) + 1), r)

    width = max(6.0, 1.6 * max(len(nodes) for nodes in by_rank.values()))
    height = max(3.0, 1.2 * (max(ranks) + 1))
    fig, ax = plt.subplots(figsize=(width, height))
    for i, j in edges:
        (x1, y1), (x2, y2) = pos[i], pos[j]
        ax.plot([x1, x2], [y1, y2], color="0.6", lw=1.0, zorder=1)
    for i, (x, y) in pos.items():
        ax.text(
            x,
            y,
            labels[i],
            ha="center",
            va="center",
            fontsize=10,
            zorder=2,
            bbox=dict(boxstyle="round,pad=0.3", fc="white", ec="0.3"),
        )
    if title:
        ax.set_title(title)
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.5, max(ranks) + 0.5)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
