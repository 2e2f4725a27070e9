"""Brute-force BoS membership used as a test oracle.

Independent of the package: its own frame construction and exact half-plane
and circle tests. ``margin`` is the smallest slack over the active
constraints, which bounds the distance to the region boundary from below
for points away from the corners.
"""
import math

import numpy as np


def saddle_coords(points, cl, cr):
    cl, cr = np.asarray(cl, float), np.asarray(cr, float)
    mid = 0.5 * (cl + cr)
    ey = (cl - cr) / np.linalg.norm(cl - cr)
    ex = np.array([ey[1], -ey[0]])
    d = np.asarray(points, float) - mid
    return d @ ex, d @ ey, 0.5 * float(np.linalg.norm(cl - cr))


def membership(points, cl, cr, d_h):
    xs, ys, radius = saddle_coords(points, cl, cr)
    r = np.hypot(xs, ys)
    left = (ys >= 0) & (xs <= d_h) & (r <= radius)
    right = (ys <= 0) & (xs >= -d_h) & (r <= radius)
    # distance-like slack to every constraint surface
    near = np.minimum.reduce([np.abs(r - radius), np.abs(xs - d_h), np.abs(xs + d_h), np.abs(ys)])
    return left | right, near


def bounding_box(cl, cr, pad=0.02):
    radius = 0.5 * math.dist(cl, cr)
    cx, cy = 0.5 * (cl[0] + cr[0]), 0.5 * (cl[1] + cr[1])
    return cx - radius - pad, cx + radius + pad, cy - radius - pad, cy + radius + pad
