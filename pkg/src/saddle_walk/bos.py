"""Base of Support in saddle coordinates.

The region is the CoP-to-CoP disc, capped on the left half (y_S >= 0) by the
line x_S = +d_h and on the right half (y_S <= 0) by x_S = -d_h::

    (y_S >= 0  and  x_S <= +d_h  and  x_S^2 + y_S^2 <= Y_sLF^2)
 or (y_S <= 0  and  x_S >= -d_h  and  x_S^2 + y_S^2 <= Y_sRF^2)

Boundary points count as inside, so the margin is crossed on strict exit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .saddle import SaddleFrame, build_frame, to_saddle, to_task

EDGE_TOL = 1e-12


@dataclass(frozen=True)
class BosRegion:
    frame: SaddleFrame
    radius_left: float
    radius_right: float
    cap: float


def bos_region(cop_left, cop_right, d_h: float = 0.1) -> BosRegion:
    frame = build_frame(cop_left, cop_right)
    return BosRegion(frame, abs(frame.Y_sLF), abs(frame.Y_sRF), d_h)


def _contains_saddle(xs, ys, region: BosRegion):
    r2 = xs * xs + ys * ys
    rl = region.radius_left * (1.0 + EDGE_TOL) + EDGE_TOL
    rr = region.radius_right * (1.0 + EDGE_TOL) + EDGE_TOL
    cap = region.cap + EDGE_TOL
    left = (ys >= -EDGE_TOL) & (xs <= cap) & (r2 <= rl * rl)
    right = (ys <= EDGE_TOL) & (xs >= -cap) & (r2 <= rr * rr)
    return left | right


def bos_contains(p_task, region: BosRegion):
    """Membership test for one point (returns bool) or an (n, 2) array."""
    ps = to_saddle(p_task, region.frame)
    inside = _contains_saddle(ps[..., 0], ps[..., 1], region)
    if np.ndim(inside) == 0:
        return bool(inside)
    return inside


def _half_outline(radius: float, cap: float, sign: float,
                  split_apex: bool = True) -> list[tuple[str, tuple]]:
    """Outline pieces of one half, walked counterclockwise.

    ``sign`` = +1 for the left half (y_S >= 0, capped at +cap), -1 for the
    right half; the right half is the left half rotated by pi.
    """
    a0 = 0.0
    pieces = []
    if radius > cap:
        c = math.sqrt(radius * radius - cap * cap)
        a0 = math.atan2(c, cap)
        pieces = [("seg", ((radius, 0.0), (cap, 0.0))), ("seg", ((cap, 0.0), (cap, c)))]
    if split_apex:
        pieces += [("arc", (radius, a0, 0.5 * math.pi)), ("arc", (radius, 0.5 * math.pi, math.pi))]
    else:
        pieces.append(("arc", (radius, a0, math.pi)))
    if sign > 0:
        return pieces
    out = []
    for kind, data in pieces:
        if kind == "seg":
            (x0, y0), (x1, y1) = data
            out.append(("seg", ((-x0, -y0), (-x1, -y1))))
        else:
            r, a, b = data
            out.append(("arc", (r, a + math.pi, b + math.pi)))
    return out


def _piece_length(kind, data) -> float:
    if kind == "seg":
        (x0, y0), (x1, y1) = data
        return math.hypot(x1 - x0, y1 - y0)
    r, a, b = data
    return r * (b - a)


def _piece_point(kind, data, f: float):
    if kind == "seg":
        (x0, y0), (x1, y1) = data
        return x0 + (x1 - x0) * f, y0 + (y1 - y0) * f
    r, a, b = data
    ang = a + (b - a) * f
    return r * math.cos(ang), r * math.sin(ang)


def bos_boundary(region: BosRegion, n: int = 72, saddle: bool = False) -> np.ndarray:
    """``n`` points on the region border, counterclockwise, last == first.

    Every corner and both lateral apexes are vertices; the remaining points
    are shared out by piece length and spaced evenly inside each piece. The
    outline is returned in task space unless ``saddle`` is set.
    """
    if n < 8:
        raise ValueError(f"need at least 8 boundary points, got {n}")
    for split in (True, False):
        pieces = (_half_outline(region.radius_left, region.cap, +1.0, split)
                  + _half_outline(region.radius_right, region.cap, -1.0, split))
        pieces = [p for p in pieces if _piece_length(*p) > 0.0]
        if len(pieces) <= n - 1:
            break
    lengths = np.array([_piece_length(*p) for p in pieces])
    spare = n - 1 - len(pieces)
    share = spare * lengths / lengths.sum()
    extra = np.floor(share).astype(int)
    # largest remainders take the leftover points; ties go to the earlier piece
    for k in np.argsort(-(share - extra), kind="stable")[:spare - extra.sum()]:
        extra[k] += 1
    pts = []
    for piece, k in zip(pieces, extra):
        pts += [_piece_point(*piece, j / (k + 1)) for j in range(k + 1)]
    pts.append(pts[0])
    pts = np.array(pts)
    return pts if saddle else to_task(pts, region.frame)
