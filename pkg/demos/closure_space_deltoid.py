"""Rotations that only the closure step can find.

Lifting the deltoid to z = cos(3 theta) gives a space curve with the
symmetry group of order 6.  The curve has no Pythagorean hodograph, so
the rotation branch does not run.  The involution branch finds three mirror
planes through the z-axis, and composing them yields the two rotations by
120 degrees about that axis.
"""

from curvesym import DetectOptions, classify, dedupe, detect_all
from curvesym.cli import parse_curve_expression

C, S = "(1-t^2)/(1+t^2)", "2*t/(1+t^2)"
TEXT = "(2*{c} + ({c})^2 - ({s})^2, 2*{s} - 2*{s}*{c}, 4*({c})^3 - 3*{c})".format(c=C, s=S)


def main():
    curve = parse_curve_expression(TEXT, name="space deltoid")
    rep = detect_all(curve, DetectOptions(closure=True))
    print("found directly: %d, added by closure: %d, rotations_complete: %s" % (
        len(rep.union), len(rep.closure_added), rep.rotations_complete))
    deg = rep.working_curve.degree
    for el in dedupe([classify(s, deg) for s in rep.union + rep.closure_added], deg):
        fx = el.fixed_intervals()
        key = "direction" if "direction" in fx else "normal"
        v = ", ".join("%+.6f" % float(x.mid) for x in fx[key])
        print("  %-13s order %d  %-9s (%s)%s" % (
            el.kind, el.order, key, v, "" if el.certified else "  [from composition]"))


if __name__ == "__main__":
    main()
