"""Floating-point cross-check of exact symmetry claims.

The certificate is rounded to doubles (after refining b* to a width below
1e-15) and ``f(x(t)) - x(phi(t))`` is sampled at random parameters.  This is
an independent oracle: it shares no code with the exact verification beyond
the certified enclosures of the certificate's entries.
"""

import numpy as np

from ..closure import ComposedSymmetry, base_enclosure

BITS = 56  # enclosure width 2**-56 < 1e-15
MAX_COORD = 1e2


def _horner(p):
    return np.array([float(c) for c in reversed(p.coeffs)], dtype=float)


class CurveEvaluator:
    def __init__(self, curve):
        self.nums = [_horner(c.num) for c in curve.components]
        self.dens = [_horner(c.den) for c in curve.components]

    def __call__(self, t):
        """Points at the parameters ``t`` (shape (n,)) and a mask of safe ones."""
        t = np.asarray(t, dtype=float)
        pts, ok = [], np.ones(t.shape, dtype=bool)
        for num, den in zip(self.nums, self.dens):
            d = np.polyval(den, t)
            ok &= np.abs(d) > 1e-6 * np.maximum(1.0, np.abs(t)) ** (len(den) - 1)
            with np.errstate(divide="ignore", invalid="ignore"):
                pts.append(np.polyval(num, t) / d)
        pts = np.array(pts)
        ok &= np.all(np.isfinite(pts), axis=0) & np.all(np.abs(pts) < MAX_COORD, axis=0)
        return pts, ok


def symmetry_floats(sym, bits=BITS):
    """``(Q, t, (a, b, c, d))`` as float arrays from certified enclosures."""
    enc = sym.enclosure(bits) if isinstance(sym, ComposedSymmetry) else base_enclosure(sym, bits)
    q = np.array([[float(x.mid) for x in row] for row in enc.Q])
    t = np.array([float(x.mid) for x in enc.t])
    phi = tuple(float(x.mid) for x in enc.phi)
    return q, t, phi


def numeric_residual(curve, q, tvec, phi, samples=100, seed=0):
    """Max ``||Q x(t) + tvec - x(phi(t))||`` over ``samples`` random safe parameters."""
    if samples <= 0:
        return 0.0
    ev = CurveEvaluator(curve)
    rng = np.random.default_rng(seed)
    a, b, c, d = phi
    q = np.asarray(q, dtype=float)
    tvec = np.asarray(tvec, dtype=float)
    found, worst, tries = 0, 0.0, 0
    while found < samples and tries < 200:
        tries += 1
        ts = np.tan(rng.uniform(-np.pi / 2, np.pi / 2, size=4 * samples))
        den = c * ts + d
        keep = np.abs(den) > 1e-6 * max(1.0, abs(c) + abs(d))
        ts = ts[keep]
        s = (a * ts + b) / den[keep]
        x, ok1 = ev(ts)
        y, ok2 = ev(s)
        ok = ok1 & ok2
        idx = np.flatnonzero(ok)[: samples - found]
        if idx.size:
            r = q @ x[:, idx] + tvec[:, None] - y[:, idx]
            worst = max(worst, float(np.max(np.linalg.norm(r, axis=0))))
            found += idx.size
    if found < samples:
        raise ValueError("could not find %d safe sample parameters" % samples)
    return worst


def verify_numeric(curve, sym, samples=100, seed=0):
    """Max residual of ``sym`` on ``curve`` in double precision."""
    if samples <= 0:
        return 0.0
    q, t, phi = symmetry_floats(sym)
    return numeric_residual(curve, q, t, phi, samples, seed)
