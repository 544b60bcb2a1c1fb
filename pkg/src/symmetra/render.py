"""Figure rendering of the coloured bipartite graph to an image file."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D

from .graph import ColouredBipartiteGraph

_EDGE_COLORS = {"X": "#d62728", "Y": "#2ca02c", "Z": "#1f77b4"}


def render_graph(g: ColouredBipartiteGraph, path: str, dpi: int = 150) -> None:
    """Draw qubit vertices on the top row and term vertices on the bottom
    row, edges coloured by their Pauli letter, and save to `path`."""
    n, m = g.n_qubits, g.n_terms
    width = max(n, m, 1)
    qx = [(i + 0.5) * width / n for i in range(n)]
    tx = [(r + 0.5) * width / m for r in range(m)]

    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * width), 4.0))
    for i in range(n):
        for tv, letter in g.adjacency[i]:
            r = tv - n
            ax.plot(
                [qx[i], tx[r]], [1.0, 0.0], color=_EDGE_COLORS[letter], lw=1.6, zorder=1
            )
    ax.scatter(qx, [1.0] * n, s=700, c="white", edgecolors="black", zorder=2)
    class_count = max(len(g.class_table), 1)
    cmap = plt.get_cmap("Pastel1")
    term_face = [
        cmap(g.vertex_colors[g.term_vertex(r)].coeff_class % cmap.N / max(class_count, cmap.N))
        for r in range(m)
    ]
    ax.scatter(tx, [0.0] * m, s=700, c=term_face, edgecolors="black", marker="s", zorder=2)
    for i in range(n):
        ax.annotate(f"q{i + 1}", (qx[i], 1.0), ha="center", va="center", zorder=3)
    for r, term in enumerate(g.terms):
        ax.annotate(f"t{r + 1}", (tx[r], 0.0), ha="center", va="center", zorder=3)
        ax.annotate(
            f"{term.coeff} {term.pauli}",
            (tx[r], -0.12),
            ha="center",
            va="top",
            fontsize=8,
            zorder=3,
        )
    handles = [
        Line2D([], [], color=c, lw=2, label=letter) for letter, c in _EDGE_COLORS.items()
    ]
    ax.legend(handles=handles, loc="upper right", title="edge letter", fontsize=8)
    ax.set_xlim(-0.5, width + 0.5)
    ax.set_ylim(-0.5, 1.5)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
