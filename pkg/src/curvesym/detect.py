"""The detection branches.

Every branch writes the unknown symmetry ``f(x) = Q x + t`` and its Möbius
certificate ``phi`` as rational functions of one parameter ``b``, substitutes
them into ``f(x(t)) = x(phi(t))``, and reads the candidate values of ``b`` off
the gcd of the resulting coefficients.  Each real root is then verified
exactly before it is reported.

Branches (all on a curve in general position):

* ``involution_d1``: ``phi = (-t + b)/(c t + 1)``; in space run once for each
  sign of ``det Q``.
* ``plane_rotation_d1``: plane rotations, ``phi = (a t + b)/(c t + 1)``.
* ``ph_rotation_d1``: space rotations of curves with rational ``||x'||``,
  once for each sign of ``Delta``.
* ``d0``: ``phi = (b t + a~)/t``, worked on ``x~(t) = x(1/t)``.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .curve import (
    DegenerateCurveError,
    MoebiusMap,
    compose_with_family,
    family_inner_map,
    general_position_conditions,
    general_position_reparam,
    involution_c_parts,
    is_degenerate,
    ph_sigma,
    properness_check,
)
from .exactnum import (
    ONE,
    AlgValue,
    ParamPolynomial,
    Polynomial,
    RationalFunction,
    content_gcd,
    isolate_real_roots,
    poly_gcd,
    remove_factors,
    squarefree_part,
    vanishes_at,
)

BRANCHES = ("involution_d1", "plane_rotation_d1", "ph_rotation_d1", "d0")

B = RationalFunction(Polynomial([0, 1]))  # the parameter b as a rational function


class ImproperCurveError(ValueError):
    """The parametrization is not injective (fiber test)."""


class VerificationError(RuntimeError):
    """An exact verification step failed where it must succeed."""


# -- families ------------------------------------------------------------------------


@dataclass(frozen=True)
class ParamFamily:
    branch: str
    d: int
    a_of_b: RationalFunction
    c_of_b: RationalFunction
    delta_of_b: RationalFunction
    excluded_b: Polynomial
    det_sign: int = 1
    sign: int = 1
    a_tilde_of_b: RationalFunction = None

    @property
    def label(self):
        if self.branch == "ph_rotation_d1":
            return "%s[%+d]" % (self.branch, self.sign)
        if self.branch in ("involution_d1", "d0") and self.det_sign is not None:
            return "%s[det%+d]" % (self.branch, self.det_sign)
        return self.branch


def _lcm(p, q):
    return p * q.exact_div(poly_gcd(p, q))


def _excluded(*polys):
    out = ONE
    for p in polys:
        if p.degree > 0:
            out = _lcm(out, squarefree_part(p))
    return out


def _at0(rf):
    return rf(Fraction(0))


def _vec_at0(v):
    return [_at0(c) for c in v]


def derive_involution_family(curve, det_sign=1):
    num, dnm, den, stationary = involution_c_parts(curve)
    if dnm.is_zero():
        raise VerificationError("involution c(b) has a zero denominator")
    c = RationalFunction(num, dnm)
    delta = -1 - B * c
    a = RationalFunction(Polynomial([-1]))
    excl = _excluded(den, stationary, c.den, delta.num, delta.den)
    return ParamFamily("involution_d1", 1, a, c, delta, excl,
                       det_sign=det_sign if curve.dim == 3 else None)


def derive_plane_rotation_family(curve):
    if curve.dim != 2:
        raise ValueError("plane rotations need a plane curve")
    h = curve.hodograph
    cr = h.cross12[2]  # signed x'y'' - y'x''
    if cr.is_zero():
        raise DegenerateCurveError("zero curvature")
    n0, dot0, cr0 = _at0(h.norm1sq), _at0(h.dot12), _at0(cr)
    # Im(z''/z') = cross/n and Re(z''/z') = dot/n.
    delta = h.norm1sq / cr * (cr0 / n0)
    c = (h.dot12 / h.norm1sq * delta - dot0 / n0) / 2
    a = delta + B * c
    den = curve.common_form[1]
    excl = _excluded(den, a.den, c.den, delta.num, delta.den)
    return ParamFamily("plane_rotation_d1", 1, a, c, delta, excl, det_sign=1)


def derive_ph_rotation_family(curve, sign, ph=None):
    ph = ph_sigma(curve) if ph is None else ph
    if ph is None:
        raise ValueError("curve is not Pythagorean-hodograph")
    s0 = ph.s_num(Fraction(0)) / ph.s_den(Fraction(0))
    if s0 == 0:
        raise DegenerateCurveError("sigma vanishes at the base point")
    h = curve.hodograph
    n0, dot0 = _at0(h.norm1sq), _at0(h.dot12)
    delta = RationalFunction(ph.s_den, ph.s_num) * (sign * s0)
    c = h.dot12 / h.norm1sq * delta / 2 - dot0 / (2 * n0)
    a = delta + B * c
    den = curve.common_form[1]
    excl = _excluded(den, a.den, c.den, delta.num, delta.den)
    return ParamFamily("ph_rotation_d1", 1, a, c, delta, excl, det_sign=1, sign=sign)


def derive_d0_family(curve, det_sign=1):
    inf = curve.at_infinity
    ht = inf.hodograph
    h = curve.hodograph
    n_inf, dot_inf = _at0(ht.norm1sq), _at0(ht.dot12)
    if dot_inf == 0:
        raise DegenerateCurveError("<x~'(0), x~''(0)> = 0; reparametrize")
    a_t = h.norm1sq / h.dot12 * (dot_inf / n_inf)
    den = curve.common_form[1]
    excl = _excluded(den, a_t.num, a_t.den)
    one = RationalFunction(ONE)
    return ParamFamily("d0", 0, B, one, -a_t, excl,
                       det_sign=det_sign if curve.dim == 3 else None,
                       a_tilde_of_b=a_t)


# -- isometry family -----------------------------------------------------------------------


@dataclass(frozen=True)
class IsometryFamily:
    Q_of_b: list
    t_of_b: list
    family: ParamFamily


def _columns_to_matrix(cols):
    return [[col[i] for col in cols] for i in range(len(cols[0]))]


def build_isometry_family(curve, family):
    h = curve.hodograph
    n = curve.dim
    xb = list(curve.components)
    if family.branch == "plane_rotation_d1":
        x0 = curve(Fraction(0))
        d0 = _vec_at0(h.d1)
        n0 = d0[0] ** 2 + d0[1] ** 2
        delta = family.delta_of_b
        u = (h.d1[0] * d0[0] + h.d1[1] * d0[1]) * delta / n0
        v = (h.d1[1] * d0[0] - h.d1[0] * d0[1]) * delta / n0
        q = [[u, -v], [v, u]]
    else:
        if family.d == 0:
            inf = curve.at_infinity
            hs = inf.hodograph
            x0 = inf(Fraction(0))
            scale = family.a_tilde_of_b
            s1, s2, s3 = scale, scale ** 2, scale ** 3
        else:
            hs = h
            x0 = curve(Fraction(0))
            delta, c = family.delta_of_b, family.c_of_b
            s1, s2, s3 = delta, delta ** 2, delta ** 3
        p1, p2 = _vec_at0(hs.d1), _vec_at0(hs.d2)
        col1 = [v * s1 for v in h.d1]
        if family.d == 0:
            col2 = [v * s2 for v in h.d2]
        else:
            col2 = [v2 * s2 - v1 * (2 * c * delta) for v1, v2 in zip(h.d1, h.d2)]
        if n == 3:
            cols_a = [p1, p2, la.cross(p1, p2)]
            col3 = [v * (family.det_sign * s3) for v in h.cross12]
            cols_b = [col1, col2, col3]
        else:
            cols_a = [p1, p2]
            cols_b = [col1, col2]
        a_inv = la.inverse(_columns_to_matrix(cols_a))
        bm = _columns_to_matrix(cols_b)
        q = [[_rf_row_dot(bm[i], [a_inv[k][j] for k in range(n)]) for j in range(n)]
             for i in range(n)]
    t = [xb[i] - _rf_row_dot(q[i], x0) for i in range(n)]
    return IsometryFamily(q, t, family)


def _rf_row_dot(rfs, consts):
    acc = RationalFunction(Polynomial())
    for r, k in zip(rfs, consts):
        if k:
            acc = acc + r * k
    return acc


# -- the functional identity ---------------------------------------------------------------


def _outer(bpoly, tpoly):
    return ParamPolynomial([bpoly * c for c in tpoly.coeffs])


def _lcm_all(polys):
    out = ONE
    for p in polys:
        out = _lcm(out, p)
    return out


def identity_coefficients(source, Q, tvec, inner, target):
    """t-coefficients of ``Q source(t) + tvec - target(N/D)`` with denominators cleared.

    ``Q`` and ``tvec`` hold rational functions of b; ``inner = (N, D)``.
    """
    comps = source.components
    r = _lcm_all([c.den for c in comps])
    lifted = [c.num * r.exact_div(c.den) for c in comps]
    pairs = compose_with_family(target, None, inner=inner)
    coeffs = []
    for i, (num_i, den_i) in enumerate(pairs):
        e = _lcm_all([x.den for x in Q[i]] + [tvec[i].den])
        m = _outer(tvec[i].num * e.exact_div(tvec[i].den), r)
        for qij, lj in zip(Q[i], lifted):
            if not qij.is_zero():
                m = m + _outer(qij.num * e.exact_div(qij.den), lj)
        ident = m * den_i - num_i * _outer(e, r)
        coeffs.extend(c for c in ident.coeffs if not c.is_zero())
    return coeffs


# -- candidates ------------------------------------------------------------------------------


def curvature_prefilter(curve):
    """Numerator of ``|x'(0) x x''(0)|^2 |x'(b)|^6 - |x'(0)|^6 |x'(b) x x''(b)|^2``."""
    h = curve.hodograph
    c0, n0 = _at0(h.cross12sq), _at0(h.norm1sq)
    if c0 == 0:
        raise DegenerateCurveError("curvature vanishes at the base point")
    k = h.norm1sq ** 3 * c0 - h.cross12sq * n0 ** 3
    return k.num


@dataclass
class CandidateSet:
    raw_content: Polynomial
    P: Polynomial
    roots: list = field(default_factory=list)
    coefficients: list = field(default_factory=list)
    excluded: Polynomial = None
    shortcut: bool = False


def candidate_polynomial(curve, family, iso, kpoly=None):
    source = curve.at_infinity if family.d == 0 else curve
    inner = family_inner_map(family)
    coeffs = identity_coefficients(source, iso.Q_of_b, iso.t_of_b, inner, curve)
    if family.d == 0:
        a_t = family.a_tilde_of_b
        n_inf = _at0(curve.at_infinity.hodograph.norm1sq)
        consistency = a_t ** 2 * curve.hodograph.norm1sq - n_inf
        if not consistency.is_zero():
            coeffs.append(consistency.num)
    excl = _excluded(family.excluded_b,
                     *[x.den for row in iso.Q_of_b for x in row],
                     *[x.den for x in iso.t_of_b])
    if not coeffs:
        raise VerificationError("identity vanishes for every b: degenerate family")
    # Poles of x(b) enter only through the cleared denominators.
    raw = remove_factors(content_gcd(coeffs), curve.common_form[1])
    p = remove_factors(raw, excl)
    if family.d != 0 and kpoly is not None and not kpoly.is_zero():
        p = poly_gcd(p, squarefree_part(kpoly))
    p = squarefree_part(p) if p.degree > 0 else ONE
    return CandidateSet(raw, p, [], coeffs, excl)


def _shortcut_candidates(curve, family, iso):
    """Candidates when the curvature condition leaves only b = 0.

    The family is specialized at b = 0 and checked directly, skipping the
    large symbolic identity.
    """
    excl = _excluded(family.excluded_b,
                     *[x.den for row in iso.Q_of_b for x in row],
                     *[x.den for x in iso.t_of_b])
    zero = Fraction(0)
    bpoly = Polynomial([0, 1])
    if excl(zero) == 0:
        return CandidateSet(None, ONE, [], [], excl, shortcut=True)
    q0 = [[RationalFunction(Polynomial.constant(x(zero))) for x in row] for row in iso.Q_of_b]
    t0 = [RationalFunction(Polynomial.constant(x(zero))) for x in iso.t_of_b]
    num, den = family_inner_map(family)
    inner = (ParamPolynomial([c(zero) for c in num.coeffs]),
             ParamPolynomial([c(zero) for c in den.coeffs]))
    coeffs = identity_coefficients(curve, q0, t0, inner, curve)
    ok = all(c(zero) == 0 for c in coeffs)
    return CandidateSet(None, bpoly if ok else ONE, [], [], excl, shortcut=True)


# -- verification ------------------------------------------------------------------------------


@dataclass
class VerifiedSymmetry:
    b_star: object
    phi: MoebiusMap
    Q: list
    t: list
    branch: str
    label: str
    det: int
    param: object = None  # phi(0) for d = 1, phi(infinity) for d = 0

    @property
    def dim(self):
        return len(self.Q)

    def is_involution(self):
        q2 = la.mat_mul(self.Q, self.Q)
        return all(la.is_zero(q2[i][j] - (1 if i == j else 0))
                   for i in range(self.dim) for j in range(self.dim))


def _alg_matrix(m, root):
    return [[AlgValue(x, root) for x in row] for row in m]


def _is_identity_matrix(m):
    n = len(m)
    return all(la.is_zero(m[i][j] - (1 if i == j else 0)) for i in range(n) for j in range(n))


def _det_sign(q):
    d = la.det(q)
    if la.is_zero(d - 1):
        return 1
    if la.is_zero(d + 1):
        return -1
    raise VerificationError("determinant of an orthogonal matrix is not +-1")


def verify_identity(curve, sym):
    """Independent exact check of ``Q x(t) + t = x(phi(t))`` at ``b_star``.

    Rebuilds the cleared identity from the certificate's own representatives
    (rational functions in b reduced modulo the defining polynomial) and tests
    every coefficient with ``vanishes_at``.
    """
    rep = lambda v: v.expr if isinstance(v, AlgValue) else RationalFunction.coerce(v)
    q = [[rep(x) for x in row] for row in sym.Q]
    t = [rep(x) for x in sym.t]
    a, b, c, d = (rep(x) for x in sym.phi.coefficients())
    lden = _lcm_all([a.den, b.den, c.den, d.den])
    k = [x.num * lden.exact_div(x.den) for x in (a, b, c, d)]
    inner = (ParamPolynomial.linear(k[0], k[1]), ParamPolynomial.linear(k[2], k[3]))
    coeffs = identity_coefficients(curve, q, t, inner, curve)
    return all(vanishes_at(c, sym.b_star) for c in coeffs)


def solve_candidates(curve, family, iso, cands):
    p = cands.P
    cands.roots = isolate_real_roots(p) if p.degree > 0 else []
    out = []
    n = curve.dim
    for root in cands.roots:
        if vanishes_at(cands.excluded, root):
            raise VerificationError("candidate root at an excluded parameter")
        q = _alg_matrix(iso.Q_of_b, root)
        t = [AlgValue(x, root) for x in iso.t_of_b]
        qtq = la.mat_mul(la.transpose(q), q)
        if not _is_identity_matrix(qtq):
            continue
        if _is_identity_matrix(q) and all(x.is_zero() for x in t):
            continue  # trivial symmetry
        bval = AlgValue(B, root)
        if family.d == 1:
            phi = MoebiusMap(AlgValue(family.a_of_b, root), bval,
                             AlgValue(family.c_of_b, root), 1)
        else:
            phi = MoebiusMap(bval, AlgValue(family.a_tilde_of_b, root), 1, 0)
        sym = VerifiedSymmetry(root, phi, q, t, family.branch, family.label,
                               _det_sign(q), param=root)
        if family.branch == "involution_d1" and not sym.is_involution():
            continue
        if cands.coefficients:
            if not all(vanishes_at(c, root) for c in cands.coefficients):
                continue
        elif not verify_identity(curve, sym):
            continue
        out.append(sym)
    return out


# -- dedupe -------------------------------------------------------------------------------------


def same_symmetry(s1, s2):
    """Exact equality of two verified symmetries through their Möbius maps."""
    d1 = la.is_zero(s1.phi.d)
    d2 = la.is_zero(s2.phi.d)
    if d1 != d2:
        return False
    if not s1.param.same_number(s2.param):
        return False
    p1, p2 = s1.phi.normalized(), s2.phi.normalized()
    return p1.same_as(p2)


def _sort_key(sym):
    iv = sym.param.isolating
    return (BRANCHES.index(sym.branch), sym.label, iv.mid)


def dedupe_symmetries(syms):
    out = []
    for s in sorted(syms, key=_sort_key):
        if not any(same_symmetry(s, o) for o in out):
            out.append(s)
    return out


# -- driver -------------------------------------------------------------------------------------


@dataclass
class DetectOptions:
    branches: str = "all"  # all | involutions | rotations
    closure: bool = False
    skip_properness: bool = False
    reparam: object = None  # MoebiusMap to pin, or None for the automatic search
    max_candidates: int = 200
    closure_bound: int = 1000


@dataclass
class BranchResult:
    label: str
    branch: str
    family: ParamFamily = None
    candidates: CandidateSet = None
    symmetries: list = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""


@dataclass
class SymmetryReport:
    curve: object
    working_curve: object
    reparam: MoebiusMap
    branches: list
    union: list
    rotations_complete: bool
    properness: str
    prefilter: Polynomial
    ph: object = None
    closure_added: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def branch_counts(self):
        out = {}
        for br in self.branches:
            out[br.label] = len(br.symmetries)
        return out

    def table_counts(self):
        """``(#rot, #inv)`` counted over the deduped union.

        Rotations are the orientation-preserving elements; involutions are
        elements with Q^2 = I.  A central symmetry in the plane is both.
        """
        rot = sum(1 for s in self.union if s.det == 1)
        inv = sum(1 for s in self.union if s.is_involution())
        if self.working_curve.dim == 3:
            rot = None
        return rot, inv


def _branch_plan(curve, opts, ph):
    plan = []
    want_inv = opts.branches in ("all", "involutions")
    want_rot = opts.branches in ("all", "rotations")
    if want_inv:
        if curve.dim == 3:
            plan += [("involution_d1", {"det_sign": 1}), ("involution_d1", {"det_sign": -1})]
        else:
            plan.append(("involution_d1", {}))
    if want_rot:
        if curve.dim == 2:
            plan.append(("plane_rotation_d1", {}))
        elif ph is not None:
            plan += [("ph_rotation_d1", {"sign": 1}), ("ph_rotation_d1", {"sign": -1})]
    if curve.dim == 3:
        plan += [("d0", {"det_sign": 1}), ("d0", {"det_sign": -1})]
    else:
        plan.append(("d0", {}))
    return plan


def _make_family(curve, branch, kw, ph):
    if branch == "involution_d1":
        return derive_involution_family(curve, kw.get("det_sign", 1))
    if branch == "plane_rotation_d1":
        return derive_plane_rotation_family(curve)
    if branch == "ph_rotation_d1":
        return derive_ph_rotation_family(curve, kw["sign"], ph)
    return derive_d0_family(curve, kw.get("det_sign", 1))


def run_branch(curve, branch, kw, ph, kpoly, k_roots_trivial):
    t0 = time.perf_counter()
    fam = _make_family(curve, branch, kw, ph)
    res = BranchResult(fam.label, branch, fam)
    iso = build_isometry_family(curve, fam)
    if fam.d != 0 and k_roots_trivial:
        cands = _shortcut_candidates(curve, fam, iso)
        res.note = "curvature prefilter: only b = 0 possible"
    else:
        cands = candidate_polynomial(curve, fam, iso, kpoly)
    res.candidates = cands
    res.symmetries = solve_candidates(curve, fam, iso, cands)
    res.seconds = time.perf_counter() - t0
    return res


def detect_all(curve, options=None):
    opts = options or DetectOptions()
    t_start = time.perf_counter()
    kind = is_degenerate(curve)
    if kind != "ok":
        raise DegenerateCurveError("curve is a %s; it has infinitely many symmetries" % kind)
    prop = "skipped"
    if not opts.skip_properness:
        prop = properness_check(curve)
        if prop == "improper":
            raise ImproperCurveError("parametrization is not proper")
    if opts.reparam is not None:
        u = opts.reparam
        work = curve if u.is_identity() else curve.reparametrize(u)
        failed = [k for k, v in general_position_conditions(work).items() if not v]
        if failed:
            raise DegenerateCurveError(
                "pinned reparametrization is not in general position: " + ", ".join(failed))
    else:
        u, work, _ = general_position_reparam(curve, opts.max_candidates)
    ph = ph_sigma(work) if work.dim == 3 else None
    kpoly = curvature_prefilter(work)
    k_roots = isolate_real_roots(kpoly) if not kpoly.is_zero() else None
    k_trivial = k_roots is not None and all(
        r.is_rational() and r.exact_rational == 0 for r in k_roots)
    branches = []
    for branch, kw in _branch_plan(work, opts, ph):
        branches.append(run_branch(work, branch, kw, ph, kpoly, k_trivial))
    union = dedupe_symmetries([s for br in branches for s in br.symmetries])
    report = SymmetryReport(
        curve=curve, working_curve=work, reparam=u, branches=branches, union=union,
        rotations_complete=work.dim == 2 or ph is not None, properness=prop,
        prefilter=kpoly, ph=ph)
    if opts.closure:
        from .closure import ComposedSymmetry, group_closure
        group = group_closure(union, work, opts.closure_bound)
        report.closure_added = [g for g in group if isinstance(g, ComposedSymmetry)]
    report.timings = {br.label: br.seconds for br in branches}
    report.timings["total"] = time.perf_counter() - t_start
    return report
