"""SVG pictures of a curve with its symmetry elements.

The curve is sampled over the whole parameter line through ``t = tan(s)``,
with segments refined where they are long and broken at poles.  Mirror lines
and rotation axes are drawn clipped to the window; centers are small circles.
Space curves are projected orthographically onto two chosen axes.
"""

import math

import numpy as np

from .numeric import CurveEvaluator

_AXES = {"xy": (0, 1), "xz": (0, 2), "yz": (1, 2)}


def _num(x):
    return "%.4f" % x


def _sample(curve, proj, n=600, depth=6, max_coord=1e6):
    ev = CurveEvaluator(curve)
    i, j = proj

    def pts(s):
        p, ok = ev(np.tan(s))
        ok &= np.all(np.abs(p) < max_coord, axis=0)
        return p[[i, j]].T, ok

    s = np.linspace(-math.pi / 2, math.pi / 2, n + 1)[1:-1]
    p, ok = pts(s)
    runs, cur = [], []
    for k in range(len(s)):
        if not ok[k]:
            if len(cur) > 1:
                runs.append(cur)
            cur = []
            continue
        cur.append((s[k], p[k]))
    if len(cur) > 1:
        runs.append(cur)
    return runs, pts, depth


def _refine(run, pts, depth, tol):
    out = [run[0][1]]
    for (s0, p0), (s1, p1) in zip(run, run[1:]):
        stack = [(s0, p0, s1, p1, 0)]
        seg = []
        while stack:
            a, pa, b, pb, d = stack.pop()
            if d >= depth or np.hypot(*(pb - pa)) <= tol:
                seg.append(pb)
                continue
            m = (a + b) / 2
            pm, okm = pts(np.array([m]))
            if not okm[0]:
                seg.append(pb)
                continue
            stack.append((m, pm[0], b, pb, d + 1))
            stack.append((a, pa, m, pm[0], d + 1))
        out.extend(seg)
    return np.array(out)


def _auto_window(runs):
    allp = np.concatenate([np.array([p for _, p in r]) for r in runs])
    lo = np.percentile(allp, 2, axis=0)
    hi = np.percentile(allp, 98, axis=0)
    pad = 0.15 * max(hi[0] - lo[0], hi[1] - lo[1], 1e-9)
    return (lo[0] - pad, hi[0] + pad, lo[1] - pad, hi[1] + pad)


def _clip_line(p, d, window):
    """Segment of the line ``p + s d`` inside the window, or None."""
    x0, x1, y0, y1 = window
    lo, hi = -math.inf, math.inf
    for k, (a, b) in enumerate(((x0, x1), (y0, y1))):
        if abs(d[k]) < 1e-15:
            if not a <= p[k] <= b:
                return None
            continue
        s0, s1 = (a - p[k]) / d[k], (b - p[k]) / d[k]
        lo, hi = max(lo, min(s0, s1)), min(hi, max(s0, s1))
    if lo >= hi:
        return None
    return (p[0] + lo * d[0], p[1] + lo * d[1]), (p[0] + hi * d[0], p[1] + hi * d[1])


def _mid(v):
    return float(v.mid) if hasattr(v, "mid") else float(v)


def emit_svg(curve, elements=(), window=None, projection="xy", size=480):
    """SVG bytes; ``window = (xmin, xmax, ymin, ymax)`` or None for automatic."""
    proj = _AXES[projection] if curve.dim == 3 else (0, 1)
    runs, pts, depth = _sample(curve, proj)
    if window is None:
        if not runs:
            raise ValueError("curve has no finite samples")
        window = _auto_window(runs)
    x0, x1, y0, y1 = (float(v) for v in window)
    if not (x1 > x0 and y1 > y0):
        raise ValueError("empty visible window %r" % (window,))
    scale = size / max(x1 - x0, y1 - y0)
    w, h = (x1 - x0) * scale, (y1 - y0) * scale
    tx = lambda x: (x - x0) * scale
    ty = lambda y: (y1 - y) * scale
    tol = 0.004 * max(x1 - x0, y1 - y0)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%s" height="%s" '
           'viewBox="0 0 %s %s">' % (_num(w), _num(h), _num(w), _num(h)),
           '<rect x="0" y="0" width="%s" height="%s" fill="white"/>' % (_num(w), _num(h))]
    if curve.name:
        out.append("<title>%s</title>" % curve.name.replace("&", "&amp;").replace("<", "&lt;"))
    for run in runs:
        poly = _refine(run, pts, depth, tol)
        coords = " ".join("%s,%s" % (_num(tx(p[0])), _num(ty(p[1]))) for p in poly)
        out.append('<polyline class="curve" fill="none" stroke="black" stroke-width="1.5" '
                   'points="%s"/>' % coords)
    centers = []
    for el in elements:
        f = el.fixed
        p = [_mid(v) for v in f["point"]]
        p = (p[proj[0]], p[proj[1]]) if curve.dim == 3 else tuple(p)
        if f["type"] == "line":
            d = [_mid(v) for v in f["direction"]]
            d = (d[proj[0]], d[proj[1]]) if curve.dim == 3 else tuple(d)
            if math.hypot(*d) < 1e-12:
                centers.append(p)  # axis seen end-on
                continue
            seg = _clip_line(p, d, (x0, x1, y0, y1))
            if seg:
                (ax, ay), (bx, by) = seg
                out.append('<line class="%s" x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" '
                           'stroke-dasharray="6,4" stroke-width="1"/>' % (
                               el.kind, _num(tx(ax)), _num(ty(ay)), _num(tx(bx)), _num(ty(by)),
                               "steelblue" if el.kind == "mirror_line" else "darkgreen"))
        elif f["type"] == "point":
            centers.append(p)
    seen = []
    for c in centers:
        if any(math.hypot(c[0] - o[0], c[1] - o[1]) < 1e-9 for o in seen):
            continue
        seen.append(c)
        out.append('<circle class="center" cx="%s" cy="%s" r="4" fill="firebrick"/>' % (
            _num(tx(c[0])), _num(ty(c[1]))))
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
