"""JSON documents for curves (schema version 1).

A curve document::

    {"schema": 1, "name": "deltoid", "dim": 2,
     "components": ["(t^2 - 1)/(t^2 + 1)", {"num": ["0", "2"], "den": ["1", "0", "1"]}],
     "reparam": "(t - 1)/(t + 1)"}

Components are expression strings or ascending coefficient lists with
rationals written as "p/q" strings.  ``reparam`` is optional and pins the
general-position reparametrization u(t).
"""

from fractions import Fraction

from ..curve import CurveSpec, moebius_from_rf
from ..exactnum import Polynomial, RationalFunction
from .parse import ParseError, parse_expression

SCHEMA = 1


class SchemaError(ValueError):
    """A JSON document does not follow the schema."""


def rat(x):
    """A Fraction as a "p/q" (or "p") string."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def unrat(s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError("rational must be a string or integer, got %r" % (s,))
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise SchemaError("bad rational %r" % (s,)) from None


def poly_doc(p):
    return [rat(c) for c in p.coeffs]


def poly_from_doc(doc):
    if not isinstance(doc, list):
        raise SchemaError("polynomial must be a list of coefficients")
    return Polynomial([unrat(c) for c in doc])


def rf_doc(r):
    return {"num": poly_doc(r.num), "den": poly_doc(r.den)}


def rf_from_doc(doc):
    if isinstance(doc, str):
        return parse_expression(doc)
    if not isinstance(doc, dict) or "num" not in doc:
        raise SchemaError("component must be an expression or {num, den}")
    den = poly_from_doc(doc.get("den", ["1"]))
    if den.is_zero():
        raise SchemaError("zero denominator")
    return RationalFunction(poly_from_doc(doc["num"]), den)


def curve_doc(curve, reparam=None):
    doc = {"schema": SCHEMA, "dim": curve.dim,
           "components": [rf_doc(c) for c in curve.components]}
    if curve.name:
        doc["name"] = curve.name
    if reparam is not None:
        doc["reparam"] = reparam.as_rational_function().format("t")
    return doc


def curve_from_doc(doc):
    """``(CurveSpec, pinned MoebiusMap or None)`` from a curve document."""
    if not isinstance(doc, dict):
        raise SchemaError("curve document must be an object")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise SchemaError("unsupported schema %r" % doc.get("schema"))
    comps = doc.get("components")
    if not isinstance(comps, list):
        raise SchemaError("missing components")
    dim = doc.get("dim", len(comps))
    if dim not in (2, 3) or len(comps) != dim:
        raise SchemaError("dim %r does not match %d components" % (dim, len(comps)))
    try:
        rfs = [rf_from_doc(c) for c in comps]
        u = doc.get("reparam")
        pinned = None
        if u is not None:
            pinned = moebius_from_rf(rf_from_doc(u))
    except ParseError as e:
        raise SchemaError(str(e)) from None
    except ValueError as e:
        if isinstance(e, SchemaError):
            raise
        raise SchemaError(str(e)) from None
    return CurveSpec(rfs, doc.get("name")), pinned
