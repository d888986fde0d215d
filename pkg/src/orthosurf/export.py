"""Text exporters: cp-orders as DOT digraphs and 3D surfaces as SVG
projections onto the plane x1 + x2 + x3 = 0."""

from __future__ import annotations

import math

from .charpoints import characteristic_points
from .cporder import BOTTOM, CpOrder
from .points import GeometryError
from .surface import Surface

_ARC_COLORS = {1: "#c0392b", 2: "#1e8449", 3: "#1f618d"}


def export_poset_dot(order: CpOrder) -> str:
    """Render the cp-order (with its artificial bounds) as a DOT
    digraph: nodes carry rank and generating vertex ids, edges are the
    cover relations, everything in deterministic index order."""
    lines = [
        "digraph cporder {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for idx in range(order.size):
        if idx == BOTTOM:
            label = "rank -1 | bottom"
        elif idx == order.top:
            label = f"rank {order.dim} | top"
        else:
            cp = order.point_of(idx)
            ids = ",".join(map(str, cp.downset))
            label = f"rank {cp.rank} | D={{{ids}}}"
        lines.append(f'  n{idx} [label="{label}"];')
    for a, b in order.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _project(p) -> tuple[float, float]:
    x = (p[0] - p[1]) * math.sqrt(3) / 2
    y = (p[0] + p[1]) / 2 - p[2]
    return x, -y


def render3d_svg(surface: Surface) -> str:
    """Project a 3D surface along (1,1,1): vertices become labeled
    dots, every two-vertex characteristic point becomes an elbow
    through its join, halves tinted by the tight color when unique.
    Decorative output; only well-formedness is guaranteed."""
    if surface.dim != 3:
        raise GeometryError("the projection along (1,1,1) needs dimension 3")
    pts = characteristic_points(surface)
    proj = {vid: _project(v) for vid, v in enumerate(surface.vertices)}
    xs = [q[0] for q in proj.values()]
    ys = [q[1] for q in proj.values()]
    elbows = []
    for cp in pts:
        if len(cp.downset) != 2:
            continue
        mid = _project(cp.point)
        xs.append(mid[0])
        ys.append(mid[1])
        for vid, other in zip(cp.downset, reversed(cp.downset)):
            own = cp.tight_of(vid) - cp.tight_of(other)
            color = (
                _ARC_COLORS[next(iter(own))] if len(own) == 1 else "#7f8c8d"
            )
            elbows.append((proj[vid], mid, color))
    scale = 40.0
    pad = 30.0
    x0, y0 = min(xs) * scale - pad, min(ys) * scale - pad
    width = (max(xs) - min(xs)) * scale + 2 * pad
    height = (max(ys) - min(ys)) * scale + 2 * pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.1f} {y0:.1f} {width:.1f} {height:.1f}">'
    ]
    for (ax, ay), (bx, by), color in elbows:
        parts.append(
            f'  <line x1="{ax * scale:.1f}" y1="{ay * scale:.1f}" '
            f'x2="{bx * scale:.1f}" y2="{by * scale:.1f}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    for vid, (px, py) in proj.items():
        parts.append(
            f'  <circle cx="{px * scale:.1f}" cy="{py * scale:.1f}" '
            f'r="4" fill="#17202a"/>'
        )
        parts.append(
            f'  <text x="{px * scale + 6:.1f}" y="{py * scale - 6:.1f}" '
            f'font-size="12">{surface.names[vid]}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
