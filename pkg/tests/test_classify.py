import math
from fractions import Fraction

import numpy as np
import pytest

from curvesym import (
    DetectOptions,
    MoebiusMap,
    classify,
    dedupe,
    detect_all,
    fixed_elements,
    group_closure,
    rotation_angle_data,
)
from curvesym import _linalg as la
from curvesym.classify import order_bound
from curvesym.closure import ComposedSymmetry
from curvesym.exactnum import AlgValue

from .conftest import curve

SQ3_2 = math.sqrt(3) / 2


def exact(v):
    return v.exact if isinstance(v, AlgValue) else v


def elements(rep):
    deg = rep.working_curve.degree
    return dedupe([classify(s, deg) for s in rep.union], deg)


def test_twisted_cubic_is_axial_about_y(pinned_reports):
    rep = pinned_reports["twisted cubic"]
    (el,) = elements(rep)
    assert el.kind == "axial_symmetry" and el.order == 2
    # The pinned reparametrization leaves the point set alone, so the axis is the y-axis.
    assert el.fixed["type"] == "line"
    assert [exact(x) for x in el.fixed["point"]] == [0, 0, 0]
    assert [exact(x) for x in el.fixed["direction"]] == [0, 1, 0]
    assert exact(el.exact["cos"]) == -1


def test_central_inversion(pinned_reports):
    for name in ("inversion 1", "inversion 2"):
        (el,) = elements(pinned_reports[name])
        assert el.kind == "central_inversion"
        q = el.certificate.Q
        assert all(la.is_zero(q[i][j] + (i == j)) for i in range(3) for j in range(3))
        assert el.fixed["type"] == "point"


def test_parabola_mirror(parabola):
    rep = detect_all(parabola)
    (el,) = elements(rep)
    assert el.kind == "mirror_line"
    assert el.fixed["type"] == "line"
    assert exact(el.fixed["point"][0]) == 0
    assert [exact(x) for x in el.fixed["direction"]] == [0, 1]
    assert el.angle is None
    with pytest.raises(ValueError):
        rotation_angle_data(el.certificate, 4)


def test_deltoid_rotations(deltoid):
    rep = detect_all(deltoid, DetectOptions(reparam=MoebiusMap.identity()))
    rots = [el for el in elements(rep) if el.kind == "rotation_2d"]
    assert len(rots) == 2
    sins = []
    for el in rots:
        cos, sin = el.angle
        assert abs(float(cos.mid) + 0.5) < 1e-9 and cos.width < 1e-9
        assert abs(abs(float(sin.mid)) - SQ3_2) < 1e-9
        sins.append(float(sin.mid))
        assert el.order == 3
        assert [exact(x) for x in el.fixed["point"]] == [0, 0]
    assert sorted(math.copysign(1, s) for s in sins) == [-1, 1]


def test_axial_symmetry_angle_is_pi(pinned_reports):
    sym = pinned_reports["twisted cubic"].union[0]
    (cos, sin), k, ex = rotation_angle_data(sym, 6)
    assert k == 2 and cos.lo == cos.hi == -1
    assert sin.contains_zero()


def test_dedupe_examples(pinned_reports):
    assert len(elements(pinned_reports["lemniscate"])) == 3
    assert len(elements(pinned_reports["deltoid"])) == 5
    rep = pinned_reports["crunode"]
    deg = rep.working_curve.degree
    els = [classify(s, deg) for s in rep.union]
    assert len(dedupe(els + els, deg)) == len(els)


def test_dedupe_merges_all_branch_outputs(pinned_reports):
    for rep in pinned_reports.values():
        deg = rep.working_curve.degree
        raw = [classify(s, deg) for br in rep.branches for s in br.symmetries]
        assert len(dedupe(raw, deg)) == len(rep.union), rep.curve.name


def test_dedupe_order_is_deterministic(pinned_reports):
    rep = pinned_reports["astroid"]
    deg = rep.working_curve.degree
    els = [classify(s, deg) for s in rep.union]
    a = [id(e.certificate) for e in dedupe(els, deg)]
    b = [id(e.certificate) for e in dedupe(list(reversed(els)), deg)]
    assert a == b


# -- invariants over the corpus --

def test_fixed_sets_solve_the_fixed_point_system(pinned_reports):
    for rep in pinned_reports.values():
        for s in rep.union:
            fx = fixed_elements(s)
            m = [[s.Q[i][j] - (i == j) for j in range(s.dim)] for i in range(s.dim)]
            res = la.mat_vec(m, fx["point"])
            assert all(la.is_zero(r + t) for r, t in zip(res, s.t))
            if "direction" in fx:
                assert all(la.is_zero(x) for x in la.mat_vec(m, fx["direction"]))
            first = next(x for x in fx.get("direction", fx.get("normal", [1])) if not la.is_zero(x))
            assert first == 1 or exact(first) == 1


def test_rotation_angles_are_unit_and_match_the_order(pinned_reports):
    for rep in pinned_reports.values():
        for el in elements(rep):
            if el.angle is None:
                continue
            ex = el.exact
            assert la.is_zero(ex["cos"] * ex["cos"] + ex["sin_sq"] - 1)
            k = el.order
            assert k is not None and k <= order_bound(rep.working_curve.degree)
            cos = float(el.angle[0].mid)
            assert any(abs(cos - math.cos(2 * math.pi * j / k)) < 1e-9 for j in range(1, k))


def test_exact_rank_matches_numeric_rank(pinned_reports):
    for rep in pinned_reports.values():
        for s in rep.union:
            m = [[s.Q[i][j] - (i == j) for j in range(s.dim)] for i in range(s.dim)]
            num = np.array([[float(x) for x in row] for row in m])
            assert la.rank(m) == np.linalg.matrix_rank(num, tol=1e-8)


def test_elements_map_curve_points_within_intervals(pinned_reports):
    for rep in pinned_reports.values():
        k = order_bound(rep.working_curve.degree)
        for s in rep.union:
            wrapped = ComposedSymmetry((s,), s.det, k)
            for j in range(20):
                t0 = Fraction(2 * j - 19, 7)
                try:
                    res = wrapped.residual_enclosure(rep.working_curve, t0)
                except ZeroDivisionError:
                    continue
                assert all(r.contains_zero() and r.width < 1e-6 for r in res)


def test_orders_divide_the_group_order(pinned_reports):
    for rep in pinned_reports.values():
        group = group_closure(rep.union, rep.working_curve)
        size = len(group) + 1
        for el in elements(rep):
            assert size % el.order == 0, rep.curve.name


# -- composites --

def test_closure_rotations_of_a_space_curve():
    # z = cos(3 theta) over the deltoid: three mirror planes generate two 3-fold rotations.
    d3 = curve("(2*(1-t^2)/(1+t^2) + ((1-t^2)^2 - 4*t^2)/(1+t^2)^2, "
               "4*t/(1+t^2) - 4*t*(1-t^2)/(1+t^2)^2, "
               "4*((1-t^2)/(1+t^2))^3 - 3*(1-t^2)/(1+t^2))")
    rep = detect_all(d3, DetectOptions(closure=True))
    assert rep.rotations_complete is False
    assert rep.table_counts() == (None, 3)
    assert len(rep.closure_added) == 2
    deg = rep.working_curve.degree
    els = dedupe([classify(s, deg) for s in rep.union + rep.closure_added], deg)
    added = [el for el in els if isinstance(el.certificate, ComposedSymmetry)]
    assert [el.kind for el in added] == ["rotation_3d", "rotation_3d"]
    for el in added:
        assert el.order == 3 and el.certified is False
        assert abs(float(el.angle[0].mid) + 0.5) < 1e-9
        assert el.fixed["type"] == "line"
        d = [float(x.mid) for x in el.fixed["direction"]]
        assert d == pytest.approx([0, 0, 1], abs=1e-9)
