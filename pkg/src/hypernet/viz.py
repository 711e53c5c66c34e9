"""Matplotlib rendering of hypergraphs to image files.

Figures mirror the DOT convention: vertices are labeled dots, each
hyperedge a small square junction with plain lines from its tail vertices
and arrows into its head vertices; highlighted edges are drawn in red.
Acyclic hosts are laid out in topological layers, anything else on a ring.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import Hypergraph, is_acyclic, reachability_digraph

_BASE = "#606060"
_HIGHLIGHT = "#d62728"


def layered_layout(h: Hypergraph) -> dict[int, tuple[float, float]]:
    """x = longest-path depth in the arc expansion (acyclic hosts), with
    vertices of equal depth spread vertically; cyclic hosts fall back to a
    ring."""
    if h.n_vertices == 0:
        return {}
    if not is_acyclic(h):
        step = 2.0 * math.pi / h.n_vertices
        radius = max(1.0, h.n_vertices / 4.0)
        return {
            v: (radius * math.cos(v * step), radius * math.sin(v * step))
            for v in range(h.n_vertices)
        }
    arcs = reachability_digraph(h)
    indegree = {v: 0 for v in range(h.n_vertices)}
    for u in arcs:
        for v in arcs[u]:
            indegree[v] += 1
    depth = {v: 0 for v in range(h.n_vertices)}
    queue = [v for v in range(h.n_vertices) if indegree[v] == 0]
    while queue:
        u = queue.pop()
        for v in arcs[u]:
            depth[v] = max(depth[v], depth[u] + 1)
            indegree[v] -= 1
            if indegree[v] == 0:
                queue.append(v)
    columns: dict[int, list[int]] = {}
    for v in range(h.n_vertices):
        columns.setdefault(depth[v], []).append(v)
    positions: dict[int, tuple[float, float]] = {}
    for x, members in columns.items():
        members.sort()
        for row, v in enumerate(members):
            positions[v] = (float(x), row - (len(members) - 1) / 2.0)
    return positions


def draw_hypergraph(
    h: Hypergraph,
    highlight_edges: frozenset[int] | set[int] = frozenset(),
    ax=None,
    title: str | None = None,
):
    """Draw onto ``ax`` (a new figure when omitted); returns (figure, ax)."""
    if ax is None:
        fig, ax = plt.subplots(figsize=(max(6.0, h.n_vertices * 0.6), 4.5))
    else:
        fig = ax.figure
    positions = layered_layout(h)
    for e in h.edges:
        color = _HIGHLIGHT if e.id in highlight_edges else _BASE
        width = 1.8 if e.id in highlight_edges else 0.9
        members = list(e.tail | e.head)
        if members:
            cx = sum(positions[v][0] for v in members) / len(members)
            cy = sum(positions[v][1] for v in members) / len(members)
        else:
            cx, cy = 0.0, 0.0
        # nudge junctions apart so parallel edges stay distinguishable
        cy += 0.12 * ((e.id % 5) - 2)
        ax.plot(
            [cx], [cy], marker="s", markersize=4.5, color=color, zorder=3
        )
        for u in e.tail:
            ax.plot(
                [positions[u][0], cx],
                [positions[u][1], cy],
                color=color,
                linewidth=width,
                zorder=1,
            )
        for w in e.head:
            ax.annotate(
                "",
                xy=positions[w],
                xytext=(cx, cy),
                arrowprops={
                    "arrowstyle": "-|>",
                    "color": color,
                    "linewidth": width,
                    "shrinkB": 9.0,
                },
                zorder=2,
            )
    for v, (x, y) in positions.items():
        ax.plot([x], [y], marker="o", markersize=11, color="white",
                markeredgecolor="black", zorder=4)
        ax.annotate(
            h.label_of(v),
            (x, y),
            ha="center",
            va="center",
            fontsize=7,
            zorder=5,
        )
    if title:
        ax.set_title(title, fontsize=10)
    ax.set_axis_off()
    return fig, ax


def render_figure(
    h: Hypergraph,
    path: str,
    highlight_edges: frozenset[int] | set[int] = frozenset(),
    title: str | None = None,
) -> None:
    """Render the hypergraph to an image file (format from the extension)."""
    fig, _ = draw_hypergraph(h, highlight_edges, title=title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
