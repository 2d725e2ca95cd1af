"""Canonical JSON for symmetry reports (schema version 1).

Every exact value is written exactly: rationals as "p/q" strings, values in
Q(b*) as a rational function of b over the root's isolating data.  Each
decimal approximation carries the width it is certified to.  Keys are sorted
and timings are left out unless asked for, so identical inputs give
byte-identical output.
"""

import json
import math
from fractions import Fraction

from ..classify import classify, dedupe, iv_sqrt
from ..closure import ComposedSymmetry, Iv, enclose
from ..curve import MoebiusMap
from ..detect import VerifiedSymmetry
from ..exactnum import AlgValue, Interval, RationalFunction, RealAlgebraic, refine_root
from .schema import (
    SCHEMA, curve_doc, curve_from_doc, poly_doc, poly_from_doc, rat, rf_doc, rf_from_doc,
    unrat)

DEFAULT_WIDTH = Fraction(1, 10 ** 12)


def decimal(x, places):
    """``x`` rounded to ``places`` decimals, as text (exact integer rounding)."""
    n = round(Fraction(x) * 10 ** places)
    sign = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return "%s%s.%s" % (sign, digits[:-places], digits[-places:])


class _Fmt:
    def __init__(self, width):
        self.width = Fraction(width)
        self.places = max(1, math.ceil(-math.log10(self.width))) + 1
        self.bits = max(8, math.ceil(math.log2(2 / self.width)) + 1)

    def approx(self, iv):
        return {"approx": decimal(iv.mid, self.places), "width": rat(self.width)}

    def value(self, x):
        """Exact value doc: "p/q", or a rational function of b plus approximation."""
        if isinstance(x, (int, Fraction)):
            return rat(x)
        if isinstance(x, AlgValue):
            if x.is_rational():
                return rat(x.exact)
            doc = rf_doc(x.expr)
            doc.update(self.approx(enclose(x, self.bits)))
            return doc
        if isinstance(x, Iv):
            return self.approx(x)
        raise TypeError("cannot serialize %r" % (x,))

    def root(self, r):
        if r.is_rational():
            return {"rational": rat(r.exact_rational)}
        r = refine_root(r, self.width / 2)
        return {"defining": poly_doc(r.defining), "interval": [rat(r.lo), rat(r.hi)],
                "approx": decimal(r.isolating.mid, self.places), "width": rat(self.width)}

    def moebius(self, phi):
        n = phi.normalized()
        return {"text": phi.format("t"), "coefficients": [self.value(x) for x in n.coefficients()]}

    def certificate(self, sym):
        return {"branch": sym.branch, "label": sym.label, "det": sym.det,
                "b_star": self.root(sym.b_star), "phi": self.moebius(sym.phi),
                "Q": [[self.value(x) for x in row] for row in sym.Q],
                "t": [self.value(x) for x in sym.t]}


def _degrees(cos_iv, sin_iv):
    return "%.6f" % (math.degrees(math.atan2(float(sin_iv.mid), float(cos_iv.mid))) % 360.0)


def _element_doc(el, fmt, ids):
    sym = el.certificate
    doc = {"kind": el.kind, "order": el.order, "certified": el.certified}
    fixed = {"type": el.fixed["type"]}
    for k, v in el.fixed.items():
        if k != "type":
            fixed[k] = [fmt.value(x) for x in v]
    doc["fixed"] = fixed
    if el.angle is None:
        doc["angle"] = None
    elif el.exact:
        cos = el.exact["cos"]
        if len(sym.Q) == 2:
            sin_doc = fmt.value(sym.Q[1][0])
            sin_iv = enclose(sym.Q[1][0], fmt.bits)
        else:
            mag = iv_sqrt(enclose(el.exact["sin_sq"], fmt.bits + 2), fmt.bits + 2)
            sin_iv = mag if el.exact["sin_sign"] >= 0 else -mag
            sin_doc = fmt.approx(sin_iv)
        cos_iv = enclose(cos, fmt.bits)
        doc["angle"] = {"cos": fmt.value(cos), "sin": sin_doc,
                        "degrees": _degrees(cos_iv, sin_iv)}
    else:
        cos_iv, sin_iv = el.angle
        doc["angle"] = {"cos": fmt.approx(cos_iv), "sin": fmt.approx(sin_iv),
                        "degrees": _degrees(cos_iv, sin_iv)}
    if isinstance(sym, ComposedSymmetry):
        doc["certificate"] = {"composite_of": [ids[id(f)] for f in sym.factors]}
    else:
        doc["certificate"] = fmt.certificate(sym)
    return doc


def classify_report(report):
    """Classified, deduped and ordered elements of the union plus closure."""
    deg = report.working_curve.degree
    union = dedupe([classify(s, deg) for s in report.union], deg)
    added = [classify(s, deg) for s in report.closure_added]
    return union, added


def report_document(report, width=DEFAULT_WIDTH, include_timings=False, numeric=None):
    """The report as a JSON-ready dict.

    ``numeric`` optionally maps ``id(certificate)`` to a pass flag of the
    floating-point cross-check.
    """
    fmt = _Fmt(width)
    union, added = classify_report(report)
    ids = {id(el.certificate): i for i, el in enumerate(union)}
    branches = []
    for br in report.branches:
        c = br.candidates
        branches.append({
            "label": br.label, "branch": br.branch, "note": br.note,
            "excluded": poly_doc(c.excluded) if c.excluded is not None else None,
            "raw_content": poly_doc(c.raw_content) if c.raw_content is not None else None,
            "P": poly_doc(c.P),
            "roots": [fmt.root(r) for r in c.roots],
            "symmetries": [fmt.certificate(s) for s in br.symmetries],
        })
    rot, inv = report.table_counts()
    doc = {
        "schema": SCHEMA,
        "curve": curve_doc(report.curve),
        "reparam": fmt.moebius(report.reparam),
        "working_curve": curve_doc(report.working_curve),
        "properness": report.properness,
        "prefilter": poly_doc(report.prefilter),
        "ph": None if report.ph is None else {
            "c": rat(report.ph.c), "s_num": poly_doc(report.ph.s_num),
            "s_den": poly_doc(report.ph.s_den)},
        "branches": branches,
        "counts": {"per_branch": report.branch_counts(), "rot": rot, "inv": inv,
                   "distinct": len(union)},
        "union": [_element_doc(el, fmt, ids) for el in union],
        "closure": [_element_doc(el, fmt, ids) for el in added],
        "rotations_complete": report.rotations_complete,
        "interval_width": rat(fmt.width),
    }
    if numeric is not None:
        for el, d in zip(union + added, doc["union"] + doc["closure"]):
            d["numeric_check"] = "passed" if numeric.get(id(el.certificate)) else "failed"
    if include_timings:
        doc["timings"] = {k: round(v, 6) for k, v in report.timings.items()}
    return doc


def dumps(doc):
    return (json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=True) + "\n").encode("ascii")


def emit_report(report, width=DEFAULT_WIDTH, include_timings=False, numeric=None):
    return dumps(report_document(report, width, include_timings, numeric))


# -- reading reports back ------------------------------------------------------------------------


def _root_from_doc(doc):
    if "rational" in doc:
        return RealAlgebraic.from_rational(unrat(doc["rational"]))
    lo, hi = (unrat(x) for x in doc["interval"])
    return RealAlgebraic(poly_from_doc(doc["defining"]), Interval(lo, hi))


def _value_from_doc(doc, at):
    if isinstance(doc, str):
        return unrat(doc)
    return AlgValue(RationalFunction(poly_from_doc(doc["num"]), poly_from_doc(doc["den"])), at)


def certificate_from_doc(doc):
    at = _root_from_doc(doc["b_star"])
    val = lambda d: _value_from_doc(d, at)
    phi = MoebiusMap(*[val(x) for x in doc["phi"]["coefficients"]])
    q = [[val(x) for x in row] for row in doc["Q"]]
    t = [val(x) for x in doc["t"]]
    return VerifiedSymmetry(at, phi, q, t, doc["branch"], doc["label"], doc["det"], param=at)


def load_report(data):
    """Parse emitted bytes back into exact objects.

    Returns a dict with the curve, pinned working curve, the Möbius
    reparametrization, the union certificates (exact, re-verifiable) and the
    counts.
    """
    doc = json.loads(data)
    if doc.get("schema") != SCHEMA:
        raise ValueError("unsupported report schema %r" % doc.get("schema"))
    curve, _ = curve_from_doc(doc["curve"])
    work, _ = curve_from_doc(doc["working_curve"])
    reparam = MoebiusMap(*[unrat(x) for x in doc["reparam"]["coefficients"]])
    certs = [certificate_from_doc(el["certificate"]) for el in doc["union"]
             if "composite_of" not in el["certificate"]]
    return {"curve": curve, "working_curve": work, "reparam": reparam,
            "certificates": certs, "kinds": [el["kind"] for el in doc["union"]],
            "counts": doc["counts"], "rotations_complete": doc["rotations_complete"],
            "document": doc}
