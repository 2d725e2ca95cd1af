import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesym import DetectOptions, classify, detect_all
from curvesym.classify import dedupe
from curvesym.cli import (
    ParseError,
    SchemaError,
    curve_doc,
    curve_from_doc,
    emit_report,
    emit_svg,
    format_curve_expression,
    load_report,
    main,
    numeric_residual,
    parse_curve_expression,
    parse_expression,
    run_corpus,
    verify_numeric,
)
from curvesym.cli.numeric import symmetry_floats
from curvesym.curve import CurveSpec
from curvesym.detect import same_symmetry, verify_identity
from curvesym.exactnum import Polynomial, RationalFunction

from .conftest import DELTOID, poly


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


# -- parser --

def test_parse_deltoid(deltoid):
    d = parse_curve_expression(DELTOID)
    den = poly(4, -8, 8, -4, 1)
    assert d.components[0] == RationalFunction(poly(-4, 16, -12, 4, -1), den)
    assert d.components[1] == RationalFunction(poly(-8, 24, -24, 8), den)


def test_parse_cusp():
    c = parse_curve_expression("(t^2, t^3, t^4)")
    assert c.dim == 3 and c.components[2] == RationalFunction(poly(0, 0, 0, 0, 1))


def test_zero_denominator_is_an_error():
    with pytest.raises(ParseError) as e:
        parse_expression("1/(t-t)")
    assert e.value.offset == 1


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as e:
        parse_curve_expression("(t, t^2 +)")
    assert e.value.offset == 9
    with pytest.raises(ParseError):
        parse_curve_expression("(t, t^-1)")
    with pytest.raises(ParseError):
        parse_curve_expression("(t, t^2)", dim=3)
    with pytest.raises(ParseError):
        parse_curve_expression("(t)")


def test_precedence_and_rationals():
    assert parse_expression("2^3^2") == RationalFunction(Polynomial([512]))
    assert parse_expression("-t^2") == RationalFunction(poly(0, 0, -1))
    assert parse_expression("22/7*t - (1 + t)/2") == RationalFunction(
        Polynomial([Fraction(-1, 2), Fraction(22, 7) - Fraction(1, 2)]))


small = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=20), min_size=1,
                 max_size=4)


@settings(max_examples=50, deadline=None)
@given(small, small, small, small)
def test_parse_print_round_trip(n1, d1, n2, d2):
    den1, den2 = Polynomial(d1), Polynomial(d2)
    if den1.is_zero() or den2.is_zero():
        return
    try:
        c = CurveSpec([RationalFunction(Polynomial(n1), den1),
                       RationalFunction(Polynomial(n2), den2)])
    except ValueError:
        return  # constant curve
    again = parse_curve_expression(format_curve_expression(c))
    assert again.components == c.components


# -- schema --

def test_curve_document_round_trip(twisted_cubic):
    from curvesym import MoebiusMap
    doc = curve_doc(twisted_cubic, MoebiusMap(0, 1, 1, 1))
    back, pinned = curve_from_doc(json.loads(json.dumps(doc)))
    assert back == twisted_cubic and pinned.same_as(MoebiusMap(0, 1, 1, 1))


def test_schema_accepts_coefficient_lists_and_rejects_nonsense():
    c, _ = curve_from_doc({"dim": 2, "components": [
        {"num": ["0", "1"]}, {"num": ["0", "0", "1"], "den": ["1", "0", "1/2"]}]})
    assert c.components[1].den == poly(2, 0, 1)
    for bad in ({"dim": 3, "components": ["t", "t^2"]}, {"components": ["t", {"num": []}, 1]},
                {"components": ["t", "1/(t-t)"]}, {"schema": 7, "components": ["t", "t^2"]}):
        with pytest.raises(SchemaError):
            curve_from_doc(bad)


# -- reports --

def test_twisted_cubic_report(pinned_reports):
    doc = json.loads(emit_report(pinned_reports["twisted cubic"]))
    (el,) = doc["union"]
    assert el["certificate"]["phi"]["text"] == "(-t - 2)/1"
    assert el["certificate"]["Q"] == [["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "-1"]]
    assert doc["schema"] == 1 and doc["rotations_complete"] is False


def test_deltoid_report_names_the_rotation_polynomial(deltoid):
    from curvesym import MoebiusMap
    rep = detect_all(deltoid, DetectOptions(reparam=MoebiusMap.identity()))
    doc = json.loads(emit_report(rep))
    rots = [el for el in doc["union"] if el["kind"] == "rotation_2d"]
    assert len(rots) == 2
    for el in rots:
        assert el["certificate"]["b_star"]["defining"] == ["6", "-6", "1"]
        assert el["certificate"]["b_star"]["width"]


def test_report_is_deterministic(corpus):
    c, pinned, _ = corpus["astroid"]
    a = emit_report(detect_all(c, DetectOptions(reparam=pinned)))
    b = emit_report(detect_all(c, DetectOptions(reparam=pinned)))
    assert a == b


def test_report_round_trip(pinned_reports):
    for name in ("deltoid", "crunode", "astroid"):
        rep = pinned_reports[name]
        back = load_report(emit_report(rep))
        assert back["working_curve"] == rep.working_curve
        assert back["reparam"].same_as(rep.reparam)
        assert len(back["certificates"]) == len(rep.union)
        for cert in back["certificates"]:
            assert verify_identity(back["working_curve"], cert)
            assert sum(same_symmetry(cert, s) for s in rep.union) == 1


def test_report_approximations_carry_widths(pinned_reports):
    doc = json.loads(emit_report(pinned_reports["deltoid"]))

    def walk(x):
        if isinstance(x, dict):
            if "approx" in x:
                assert "width" in x
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
    walk(doc)


# -- pictures --

def test_deltoid_svg(pinned_reports):
    rep = pinned_reports["deltoid"]
    deg = rep.working_curve.degree
    els = dedupe([classify(s, deg) for s in rep.union], deg)
    svg = emit_svg(rep.working_curve, els).decode()
    assert svg.count('class="mirror_line"') == 3
    assert svg.count("<circle") == 1
    assert emit_svg(rep.working_curve, els) == emit_svg(rep.working_curve, els)


def test_svg_curve_alone(deltoid):
    svg = emit_svg(deltoid).decode()
    assert "<polyline" in svg and "<line" not in svg and "<circle" not in svg


def test_svg_rejects_a_degenerate_window(deltoid):
    with pytest.raises(ValueError):
        emit_svg(deltoid, window=(0, 0, 1, 1))


# -- numeric oracle --

def test_numeric_residual_examples(pinned_reports):
    rep = pinned_reports["twisted cubic"]
    sym = rep.union[0]
    assert verify_numeric(rep.working_curve, sym, samples=100) < 1e-9
    q, t, phi = symmetry_floats(sym)
    q = [list(r) for r in q]
    q[0][1] += 1e-3
    assert numeric_residual(rep.working_curve, q, t, phi) > 1e-4
    assert verify_numeric(rep.working_curve, sym, samples=0) == 0


# -- corpus --

def test_empty_corpus(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("[]")
    assert run_corpus(str(path)) == []
    code, out, _ = run(["corpus", str(path)])
    assert code == 0


def test_corpus_mismatch_exits_two(tmp_path):
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps([{"name": "parabola", "components": ["t", "t^2"],
                                 "expected": {"rot": 0, "inv": 2}}]))
    code, out, _ = run(["corpus", str(path)])
    assert code == 2 and "MISMATCH" in out


# -- exit codes --

def test_exit_codes(tmp_path):
    assert run(["detect", "--expr", "(t^2, t^3, t^4)"])[0] == 0
    assert run(["detect", "--expr", "(t, 2*t + 1)"])[0] == 1
    assert run(["detect", "--expr", "(t^2, t^4)"])[0] == 1
    assert run(["detect", "--expr", "(t, 1/(t-t))"])[0] == 3
    assert run(["frobnicate"])[0] == 3
    assert run(["detect"])[0] == 3
    assert run(["detect", "--input", str(tmp_path / "missing.json")])[0] == 3
    assert run(["corpus", "--only", "deltoid"])[0] == 0


def test_detect_writes_json_and_svg(tmp_path):
    js, svg = tmp_path / "r.json", tmp_path / "r.svg"
    code, out, _ = run(["detect", "--expr", DELTOID, "--name", "deltoid",
                        "--json", str(js), "--svg", str(svg)])
    assert code == 0 and "#rot 2, #inv 3" in out
    doc = json.loads(js.read_text())
    assert doc["counts"]["rot"] == 2 and doc["counts"]["inv"] == 3
    assert [el["numeric_check"] for el in doc["union"]] == ["passed"] * 5
    assert svg.read_text().startswith("<?xml")


def test_detect_from_document(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"schema": 1, "dim": 3, "components": ["t", "t^2", "t^3"],
                                "reparam": "1/(t+1)"}))
    code, out, _ = run(["detect", "--input", str(path)])
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"]["inv"] == 1 and doc["reparam"]["text"] == "(1)/(t + 1)"
