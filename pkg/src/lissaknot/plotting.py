"""Static figures of Lissajous projections.

The x-y shadow is drawn with y pointing up.  When the space curve is known,
the under-strand is interrupted around every crossing (the gap is 2% of the
larger side of the bounding box), so the picture is a knot diagram whose
pieces are tagged ``strand-<i>`` in SVG output.  Without height information
the closed curve or the arc is drawn in one piece and double points are
marked as ``double-point-<i>``.

Output bytes are deterministic for fixed input.
"""
from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .curves import LissajousParams, arc_double_points, double_points  # noqa: E402

__all__ = ["sample_count", "render_diagram", "render_shadow", "write_csv"]

GAP_FRACTION = 0.02
_STYLE = {"color": "#1f3b73", "linewidth": 1.4, "solid_capstyle": "round"}


def sample_count(nx: int, ny: int) -> int:
    return 2000 * max(nx, ny)


def _new_axes():
    plt.rcParams["svg.hashsalt"] = "lissaknot"
    plt.rcParams["svg.fonttype"] = "none"
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_xlim(-1.08, 1.08)
    ax.set_ylim(-1.08, 1.08)
    return fig, ax


def _save(fig, path):
    path = Path(path)
    fmt = path.suffix.lstrip(".").lower() or "svg"
    metadata = {"Date": None} if fmt == "svg" else {"Software": None} if fmt == "png" else None
    fig.savefig(path, format=fmt, metadata=metadata)
    plt.close(fig)
    return path


def _xy(nx, ny, phx, phy, t):
    return np.cos(nx * t + float(phx)), np.cos(ny * t + float(phy))


def render_diagram(p: LissajousParams, visits: Sequence, path, title: Optional[str] = None) -> Path:
    """Draw the projection of ``p`` with gaps at the under-passes listed in ``visits``.

    ``visits`` is the traversal returned by ``curves.build_crossings``.
    """
    n = sample_count(p.nx, p.ny)
    t = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    x, y = _xy(p.nx, p.ny, p.phx, p.phy, t)
    gap = GAP_FRACTION * max(np.ptp(x), np.ptp(y))
    keep = np.ones(n, dtype=bool)
    unders = [float(v.time) for v in visits if not v.is_over]
    for tau in unders:
        dx = -p.nx * math.sin(p.nx * tau + float(p.phx))
        dy = -p.ny * math.sin(p.ny * tau + float(p.phy))
        half = 0.5 * gap / math.hypot(dx, dy)
        dist = np.abs((t - tau + math.pi) % (2 * math.pi) - math.pi)
        keep &= dist > half
    fig, ax = _new_axes()
    pieces = _runs(keep)
    for i, idx in enumerate(pieces):
        line, = ax.plot(x[idx], y[idx], **_STYLE)
        line.set_gid(f"strand-{i}")
    if title:
        ax.set_title(title, fontsize=9)
    return _save(fig, path)


def _runs(keep: np.ndarray) -> list[np.ndarray]:
    """Index arrays of the maximal kept runs of a closed sample sequence."""
    n = len(keep)
    if keep.all():
        return [np.append(np.arange(n), 0)]
    start = int(np.argmin(keep))  # a dropped sample; runs are read cyclically from here
    order = (np.arange(n) + start) % n
    runs, current = [], []
    for i in order:
        if keep[i]:
            current.append(i)
        elif current:
            runs.append(np.array(current))
            current = []
    if current:
        runs.append(np.array(current))
    return runs


def render_shadow(nx: int, ny: int, phx, phy, path, arc: bool = False, title: Optional[str] = None) -> Path:
    """Draw the bare projection (or the zero-phase arc) and mark its double points."""
    n = sample_count(nx, ny)
    if arc:
        t = np.linspace(0.0, math.pi, n)
        x, y = _xy(nx, ny, 0, 0, t)
        marks = [(c.x, c.y) for c in arc_double_points(nx, ny)]
    else:
        t = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
        x, y = _xy(nx, ny, phx, phy, t)
        x, y = np.append(x, x[0]), np.append(y, y[0])
        marks = [(d.x, d.y) for d in double_points(nx, ny, phx, phy)]
    fig, ax = _new_axes()
    line, = ax.plot(x, y, **_STYLE)
    line.set_gid("strand-0")
    for i, (mx, my) in enumerate(marks):
        dot, = ax.plot([mx], [my], "o", color="#b03a2e", markersize=3.5)
        dot.set_gid(f"double-point-{i}")
    if title:
        ax.set_title(title, fontsize=9)
    return _save(fig, path)


def write_csv(nx: int, ny: int, phx, phy, path, nz: Optional[int] = None, phz=0,
              z2: Optional[tuple] = None) -> Path:
    """Write ``t,x,y,z`` samples.

    ``z`` is ``cos(nz t + phz)``, or ``cos(n3 t + phi3) + cos(n4 t + phi4)``
    when ``z2 = (n3, phi3, n4, phi4)`` is given.
    """
    n = sample_count(nx, ny)
    t = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    x, y = _xy(nx, ny, phx, phy, t)
    if z2 is not None:
        n3, ph3, n4, ph4 = z2
        z = np.cos(n3 * t + float(ph3)) + np.cos(n4 * t + float(ph4))
    elif nz is not None:
        z = np.cos(nz * t + float(phz))
    else:
        raise ValueError("a height needs either nz or z2")
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "x", "y", "z"])
        for row in zip(t, x, y, z):
            writer.writerow([f"{v:.12g}" for v in row])
    return path
