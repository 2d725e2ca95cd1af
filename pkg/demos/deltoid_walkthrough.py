"""The deltoid, step by step: family, candidate polynomial, roots, symmetries.

Run with ``python3 demos/deltoid_walkthrough.py``.
"""

from curvesym import DetectOptions, MoebiusMap, classify, dedupe, detect_all
from curvesym.cli import parse_curve_expression
from curvesym.detect import (
    build_isometry_family,
    candidate_polynomial,
    curvature_prefilter,
    derive_plane_rotation_family,
    solve_candidates,
)

DELTOID = ("((-t^4+4*t^3-12*t^2+16*t-4)/(t^4-4*t^3+8*t^2-8*t+4), "
           "(8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4))")


def main():
    curve = parse_curve_expression(DELTOID, name="deltoid")
    print("curve:", curve.format())

    fam = derive_plane_rotation_family(curve)
    print("\nrotation family, phi(t) = (a t + b)/(c t + 1):")
    print("  Delta(b) =", fam.delta_of_b.format("b"))
    print("  a(b)     =", fam.a_of_b.format("b"))
    print("  c(b)     =", fam.c_of_b.format("b"))

    iso = build_isometry_family(curve, fam)
    cands = candidate_polynomial(curve, fam, iso, curvature_prefilter(curve))
    print("\ncontent of the identity:", cands.raw_content.format("b"))
    print("after stripping bad parameters, P(b) =", cands.P.format("b"))

    syms = solve_candidates(curve, fam, iso, cands)
    print("real roots of P:", ", ".join("%.12f" % float(r) for r in cands.roots))
    print("nontrivial rotations:", len(syms), "(b = 0 is the identity)")
    for s in syms:
        el = classify(s, curve.degree)
        cos, sin = el.angle
        print("  b* root of %s near %.6f: cos %.9f, sin %+.9f, order %d" % (
            s.b_star.defining.format("b"), float(s.b_star), float(cos.mid), float(sin.mid),
            el.order))

    rep = detect_all(curve, DetectOptions(reparam=MoebiusMap.identity()))
    rot, inv = rep.table_counts()
    print("\nall branches: #rot %d, #inv %d" % (rot, inv))
    for el in dedupe([classify(s, curve.degree) for s in rep.union], curve.degree):
        fx = el.fixed_intervals()
        pt = ", ".join("%.6f" % float(x.mid) for x in fx["point"])
        extra = ""
        if "direction" in fx:
            extra = " direction (%s)" % ", ".join("%.6f" % float(x.mid) for x in fx["direction"])
        print("  %-12s point (%s)%s" % (el.kind, pt, extra))


if __name__ == "__main__":
    main()
