"""Matplotlib renderings of a dimension report: the concept grid and the
inclusion diagram.  Uses the Agg backend so it works headless."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .lattice import _SYMBOLS, TABLE_COLUMNS, TABLE_ROWS, DimensionReport, GeometryId  # noqa: E402

__all__ = ["plot_hasse", "plot_table"]

_IN, _OUT = "#4caf50", "#e57373"

# fixed layout (x, y) per class representative, lower concept sets at the bottom
_POS = {
    GeometryId.OAff: (1.0, 0.0),
    GeometryId.Eucl: (0.0, 1.5),
    GeometryId.Rel: (1.0, 1.5),
    GeometryId.Gal: (2.0, 1.0),
    GeometryId.Newt: (2.0, 2.0),
    GeometryId.LClass: (1.0, 3.0),
    GeometryId.Mink: (1.6, 1.5),
}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated renders byte-identical
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def plot_table(section: DimensionReport, path) -> Path:
    rows, cols = TABLE_ROWS, TABLE_COLUMNS
    fig, ax = plt.subplots(figsize=(1.3 * len(cols) + 1, 0.5 * len(rows) + 1))
    for i, rel in enumerate(rows):
        for j, g in enumerate(cols):
            member = section.cell(rel, g).member
            ax.add_patch(plt.Rectangle((j, -i - 1), 1, 1, facecolor=_IN if member else _OUT,
                                       edgecolor="white", linewidth=2))
            ax.text(j + 0.5, -i - 0.5, "∈" if member else "∉", ha="center", va="center",
                    fontsize=13, color="white")
    ax.set_xlim(0, len(cols))
    ax.set_ylim(-len(rows), 0)
    ax.set_xticks([j + 0.5 for j in range(len(cols))], [f"Ca({g.value})" for g in cols])
    ax.xaxis.tick_top()
    ax.set_yticks([-i - 0.5 for i in range(len(rows))], [_SYMBOLS[r] for r in rows])
    ax.tick_params(length=0)
    for side in ax.spines.values():
        side.set_visible(False)
    ax.set_title(f"concepts per geometry, d = {section.d}", pad=28)
    return _save(fig, path)


def plot_hasse(section: DimensionReport, path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 5))
    labels = {cls[0]: "=".join(g.value for g in cls) for cls in section.classes()}
    for e in section.hasse_edges:
        ax.add_patch(FancyArrowPatch(_POS[e.lower], _POS[e.upper], arrowstyle="-|>",
                                     mutation_scale=14, shrinkA=22, shrinkB=22, color="#555"))
    for g, label in labels.items():
        x, y = _POS[g]
        ax.text(x, y, label, ha="center", va="center", fontsize=11,
                bbox=dict(boxstyle="round,pad=0.4", facecolor="#e3f2fd", edgecolor="#1565c0"))
    ax.set_xlim(-0.7, 2.7)
    ax.set_ylim(-0.5, 3.5)
    ax.axis("off")
    ax.set_title(f"concept-set inclusions, d = {section.d}")
    return _save(fig, path)
