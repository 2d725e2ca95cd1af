"""What a verified symmetry is: its kind, fixed set, angle and order.

Exact certificates are classified with exact rank and determinant tests on
values in Q(b*).  Composites from the closure step only carry interval
enclosures; they are classified from the exact determinant sign and the
trace, using the same finite-order gap as the closure itself.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .closure import START_BITS, ComposedSymmetry, Iv, enclose, equal_elements
from .curve import moebius_order
from .detect import same_symmetry

KINDS = ("mirror_line", "mirror_plane", "rotation_2d", "rotation_3d", "axial_symmetry",
         "central_symmetry_2d", "central_inversion", "rotatory_reflection")

ROTATIONAL = ("rotation_2d", "rotation_3d", "axial_symmetry", "central_symmetry_2d",
              "rotatory_reflection")


@dataclass
class SymmetryElement:
    kind: str
    fixed: dict  # {"type": point|line|plane, "point": [...], "direction"|"normal": [...]}
    angle: tuple = None  # (cos, sin) as Iv
    order: int = None
    certificate: object = None
    certified: bool = True  # False only for fixed sets of closure composites
    exact: dict = field(default_factory=dict)  # exact cos, sin^2, sin sign when known

    def fixed_intervals(self, bits=40):
        out = {"type": self.fixed["type"]}
        for k, v in self.fixed.items():
            if k != "type":
                out[k] = [x if isinstance(x, Iv) else enclose(x, bits) for x in v]
        return out


# -- helpers ----------------------------------------------------------------------------


def _sub_identity(q, sign=1):
    """``Q - I`` (sign=1) or ``Q + I`` (sign=-1)."""
    n = len(q)
    return [[q[i][j] - (sign if i == j else 0) for j in range(n)] for i in range(n)]


def _is_minus_identity(q):
    n = len(q)
    return all(la.is_zero(q[i][j] + (1 if i == j else 0)) for i in range(n) for j in range(n))


def _trace(q):
    acc = q[0][0]
    for i in range(1, len(q)):
        acc = acc + q[i][i]
    return acc


def _sign(x):
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    return x.sign()


def _orient(v):
    """Scale ``v`` so its first nonzero coordinate is 1."""
    for x in v:
        if not la.is_zero(x):
            return [y / x for y in v]
    return v


def _orient_approx(v):
    """``_orient`` for midpoint vectors: coordinates below 2**-40 of the
    largest one count as zero."""
    big = max(abs(x) for x in v)
    for x in v:
        if abs(x) > big / (1 << 40):
            return [y / x for y in v]
    return v


def iv_sqrt(x, bits=60):
    """Enclosure of the square root of a nonnegative interval."""
    s = 1 << (2 * bits)
    lo = max(x.lo, Fraction(0))
    lo_n = math.isqrt(math.floor(lo * s))
    hi_n = math.isqrt(math.ceil(x.hi * s)) + 1
    return Iv(Fraction(lo_n, 1 << bits), Fraction(hi_n, 1 << bits))


def order_bound(curve_degree):
    return max(2, 2 * curve_degree)


def _gap(k):
    """Half the smallest distance between distinct values 2 cos(2 pi j / k')."""
    return Fraction(1 - math.cos(math.pi / k)) / 2


# -- exact certificates -----------------------------------------------------------------


def fixed_elements(sym):
    """Fixed set of ``x -> Q x + t`` solved exactly on the representatives."""
    if isinstance(sym, ComposedSymmetry):
        return _fixed_from_enclosure(sym)
    q, t = sym.Q, sym.t
    m = _sub_identity(q)
    sol = la.solve_affine(m, [-x for x in t])
    if sol is None:
        raise AssertionError("fixed-point system is inconsistent for a verified symmetry")
    point, basis = sol
    n = len(q)
    if not basis:
        return {"type": "point", "point": point}
    if len(basis) == 1:
        return {"type": "line", "point": point, "direction": _orient(basis[0])}
    if len(basis) == 2 and n == 3:
        normal = next(row for row in m if any(not la.is_zero(x) for x in row))
        return {"type": "plane", "point": point, "normal": _orient(list(normal))}
    raise AssertionError("trivial symmetry has no proper fixed set")


def _kind_exact(sym):
    q = sym.Q
    n = len(q)
    if sym.det == -1 and n == 2:
        return "mirror_line"
    if n == 2:
        return "central_symmetry_2d" if _is_minus_identity(q) else "rotation_2d"
    r = la.rank(_sub_identity(q))
    if r == 0:
        raise AssertionError("Q = I: callers filter trivial and pure translations")
    if r == 1:
        return "mirror_plane"
    if r == 2:
        return "axial_symmetry" if sym.is_involution() else "rotation_3d"
    if _is_minus_identity(q):
        return "central_inversion"
    return "rotatory_reflection"


def _axis_exact(q, kind):
    m = _sub_identity(q, 1 if kind in ("rotation_3d", "axial_symmetry") else -1)
    sol = la.solve_affine(m, [Fraction(0)] * 3)
    return _orient(sol[1][0])


def rotation_angle_data(sym, degree_bound):
    """``(cos, sin)`` enclosures and the order of a rotational symmetry.

    In space the axis is oriented so its first nonzero coordinate is positive
    and the sign of sin refers to that orientation.  Rotatory reflections
    report their rotational part.
    """
    if isinstance(sym, ComposedSymmetry):
        return _angle_from_enclosure(sym, degree_bound)
    q = sym.Q
    n = len(q)
    kind = _kind_exact(sym)
    if kind not in ROTATIONAL:
        raise ValueError("%s has no rotation angle" % kind)
    exact = {}
    if n == 2:
        cos, sin = q[0][0], q[1][0]
        exact = {"cos": cos, "sin_sq": sin * sin, "sin_sign": _sign(sin)}
        ang = (enclose(cos, START_BITS), enclose(sin, START_BITS))
    else:
        tr = _trace(q)
        cos = (tr - 1) / 2 if kind != "rotatory_reflection" else (tr + 1) / 2
        d = _axis_exact(q, kind)
        w = [q[2][1] - q[1][2], q[0][2] - q[2][0], q[1][0] - q[0][1]]
        wd = la.dot(w, d)
        dd = la.dot(d, d)
        sin_sq = wd * wd / (4 * dd)
        exact = {"cos": cos, "sin_sq": sin_sq, "sin_sign": _sign(wd), "axis": d}
        sin_iv = enclose(wd, START_BITS) / (2 * iv_sqrt(enclose(dd, START_BITS)))
        ang = (enclose(cos, START_BITS), sin_iv)
    k = moebius_order(sym.phi, degree_bound)
    return ang, k, exact


def classify(sym, curve_degree):
    if isinstance(sym, ComposedSymmetry):
        return _classify_composite(sym, curve_degree)
    kind = _kind_exact(sym)
    fixed = fixed_elements(sym)
    bound = order_bound(curve_degree)
    if kind in ROTATIONAL:
        ang, k, exact = rotation_angle_data(sym, bound)
    else:
        ang, exact = None, {}
        k = moebius_order(sym.phi, bound)
    return SymmetryElement(kind, fixed, ang, k, sym, True, exact)


# -- composites --------------------------------------------------------------------------


def _kind_composite(sym, k):
    n = sym.dim
    gap = _gap(k)
    bits = START_BITS
    while bits <= 4096:
        tr = _enc_trace(sym.enclosure(bits))
        if n == 2:
            if sym.det == -1:
                return "mirror_line"
            if tr.hi < -2 + gap:
                return "central_symmetry_2d"
            if tr.lo > -2 + gap:
                return "rotation_2d"
        elif sym.det == 1:
            if tr.hi < -1 + gap:
                return "axial_symmetry"
            if tr.lo > -1 + gap:
                return "rotation_3d"
        else:
            if tr.lo > 1 - gap:
                return "mirror_plane"
            if tr.hi < -3 + gap:
                return "central_inversion"
            if tr.lo > -3 + gap and tr.hi < 1 - gap:
                return "rotatory_reflection"
        bits *= 2
    raise AssertionError("trace gap did not resolve")


def _enc_trace(e):
    acc = Iv(0)
    for i in range(len(e.Q)):
        acc = acc + e.Q[i][i]
    return acc


def _mid_matrix(e):
    return [[x.mid for x in row] for row in e.Q], [x.mid for x in e.t]


def _fixed_from_enclosure(sym, bits=96):
    """Fixed set from a high-precision midpoint solve (not certified)."""
    q, t = _mid_matrix(sym.enclosure(bits))
    kind = _kind_composite(sym, sym.order_bound)
    m = _sub_identity(q)
    if kind in ("rotation_2d", "central_symmetry_2d", "central_inversion", "rotatory_reflection"):
        point = la.solve_affine(m, [-x for x in t])[0]
        return {"type": "point", "point": [Iv(x) for x in point]}
    if kind in ("mirror_plane", "mirror_line"):
        # Rows of Q - I are multiples of the normal; row r reads <row, x> = -t_r.
        r = max(range(len(m)), key=lambda i: sum(abs(x) for x in m[i]))
        normal = m[r]
        point = [x * (-t[r]) / sum(y * y for y in normal) for x in normal]
        if kind == "mirror_plane":
            return {"type": "plane", "point": [Iv(x) for x in point],
                    "normal": [Iv(x) for x in _orient_approx(normal)]}
        return {"type": "line", "point": [Iv(x) for x in point],
                "direction": [Iv(x) for x in _orient_approx([-normal[1], normal[0]])]}
    # Space rotation: direction from Q - Q^T (or Q + I for a half-turn), and
    # the axis point nearest the origin from (A^T A + d d^T) x = A^T (-t).
    w = [q[2][1] - q[1][2], q[0][2] - q[2][0], q[1][0] - q[0][1]]
    if kind == "axial_symmetry":
        w = max(_sub_identity(q, -1), key=lambda r: sum(abs(x) for x in r))
    d = _orient_approx(w)
    at = la.transpose(m)
    lhs = la.mat_mul(at, m)
    lhs = [[lhs[i][j] + d[i] * d[j] for j in range(3)] for i in range(3)]
    point = la.solve_affine(lhs, la.mat_vec(at, [-x for x in t]))[0]
    return {"type": "line", "point": [Iv(x) for x in point], "direction": [Iv(x) for x in d]}


def _angle_from_enclosure(sym, degree_bound):
    kind = _kind_composite(sym, sym.order_bound)
    if kind not in ROTATIONAL:
        raise ValueError("%s has no rotation angle" % kind)
    e = sym.enclosure(START_BITS)
    k = sym.order()
    if sym.dim == 2:
        return (e.Q[0][0], e.Q[1][0]), k, {}
    tr = _enc_trace(e)
    cos = (tr - 1) / 2 if kind != "rotatory_reflection" else (tr + 1) / 2
    fx = _fixed_from_enclosure(sym) if kind != "rotatory_reflection" else None
    q, _ = _mid_matrix(sym.enclosure(96))
    if kind == "rotatory_reflection":
        d = _orient_approx(max(_sub_identity(q, 1), key=lambda r: sum(abs(x) for x in r)))
    else:
        d = [x.mid for x in fx["direction"]]
    w = [e.Q[2][1] - e.Q[1][2], e.Q[0][2] - e.Q[2][0], e.Q[1][0] - e.Q[0][1]]
    wd = sum((wi * di for wi, di in zip(w, d)), Iv(0))
    dd = Iv(sum(x * x for x in d))
    return (cos, wd / (2 * iv_sqrt(dd))), k, {}


def _classify_composite(sym, curve_degree):
    kind = _kind_composite(sym, sym.order_bound)
    fixed = _fixed_from_enclosure(sym)
    if kind in ROTATIONAL:
        ang, k, _ = _angle_from_enclosure(sym, order_bound(curve_degree))
    else:
        ang, k = None, sym.order()
    return SymmetryElement(kind, fixed, ang, k, sym, False, {})


# -- dedupe ---------------------------------------------------------------------------------


def _same(a, b, bound):
    if isinstance(a, ComposedSymmetry) or isinstance(b, ComposedSymmetry):
        return equal_elements(a, b, bound)
    return same_symmetry(a, b)


def element_sort_key(el):
    ang = el.angle
    ang_key = (float(ang[0].mid), float(ang[1].mid)) if ang else (0.0, 0.0)
    fx = el.fixed_intervals(START_BITS)
    pts = tuple(float(x.mid) for k in ("point", "direction", "normal") for x in fx.get(k, []))
    return (KINDS.index(el.kind), ang_key, pts)


def dedupe(elements, curve_degree=None):
    bound = order_bound(curve_degree or 2)
    out = []
    for el in elements:
        if not any(_same(el.certificate, o.certificate, bound) for o in out):
            out.append(el)
    return sorted(out, key=element_sort_key)
