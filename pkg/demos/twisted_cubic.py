"""The twisted cubic (t, t^2, t^3) after the reparametrization u(t) = 1/(t+1).

The point at infinity of the original parametrization sits at t = -1 now,
which puts the curve in general position.  The involution branch finds one
axial symmetry; the opposite sub-branch and the d = 0 branch find nothing.
"""

from curvesym import DetectOptions, MoebiusMap, classify, detect_all
from curvesym.cli import parse_curve_expression


def main():
    curve = parse_curve_expression("(t, t^2, t^3)", name="twisted cubic")
    rep = detect_all(curve, DetectOptions(reparam=MoebiusMap(0, 1, 1, 1)))
    print("working curve:", rep.working_curve.format())
    for br in rep.branches:
        c = br.candidates
        raw = c.raw_content.format("b") if c.raw_content is not None else "(shortcut)"
        print("%-22s raw %s\n%22s P = %s, %d symmetr%s" % (
            br.label, raw, "", c.P.format("b"), len(br.symmetries),
            "y" if len(br.symmetries) == 1 else "ies"))
    (s,) = rep.union
    el = classify(s, curve.degree)
    print("\nphi(t) =", s.phi.format())
    print("Q =", [[str(x.exact) for x in row] for row in s.Q])
    print("kind:", el.kind, " axis direction:", [str(x) for x in el.fixed["direction"]])
    print("rotations_complete:", rep.rotations_complete,
          "(a non-PH space curve may hide rotations of order > 2)")


if __name__ == "__main__":
    main()
