"""Matplotlib figure of particle trajectories over a flow field."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .flow import FlowField, Particle  # noqa: E402

FIELD_COLORS = ("#f3ece0", "#d9e4f2")  # horizontal, vertical
TRACK_CMAP = "viridis"


def _tracks(history: list[list[Particle]], field: FlowField):
    """Per-particle polylines, split wherever a cyclic field wraps."""
    tracks = []
    for k in range(len(history[0])):
        xs, ys = [history[0][k].x], [history[0][k].y]
        pieces = []
        for state in history[1:]:
            p = state[k]
            if field.cyclic and (abs(p.x - xs[-1]) > field.m / 2 or abs(p.y - ys[-1]) > field.n / 2):
                pieces.append((xs, ys))
                xs, ys = [], []
            xs.append(p.x)
            ys.append(p.y)
        pieces.append((xs, ys))
        tracks.append(pieces)
    return tracks


def plot_trajectories(field: FlowField, history: list[list[Particle]], path: str,
                      title: str | None = None, dpi: int = 100) -> None:
    """Write a PNG with the field's tile axes as background and one line per particle."""
    axis = [[field.axis_at((i, j)) for i in range(field.m)] for j in range(field.n)]
    fig, ax = plt.subplots(figsize=(max(4.0, field.m * 0.6), max(3.0, field.n * 0.6)))
    ax.imshow(
        axis, cmap=ListedColormap(FIELD_COLORS), vmin=0, vmax=1,
        extent=(0, field.m, field.n, 0), interpolation="nearest",
    )
    cmap = plt.get_cmap(TRACK_CMAP)
    tracks = _tracks(history, field)
    for k, pieces in enumerate(tracks):
        color = cmap(k / max(1, len(tracks) - 1))
        for xs, ys in pieces:
            ax.plot(xs, ys, color=color, linewidth=0.8, alpha=0.7)
    ax.set_xlim(0, field.m)
    ax.set_ylim(field.n, 0)
    ax.set_aspect("equal")
    ax.set_xlabel("x (cells)")
    ax.set_ylabel("y (cells)")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    # no Software/date chunks, so reruns give identical bytes
    fig.savefig(path, dpi=dpi, format="png", metadata={"Software": None})
    plt.close(fig)


__all__ = ["plot_trajectories"]
