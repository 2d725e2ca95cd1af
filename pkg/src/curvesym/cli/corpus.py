"""Running a corpus of curves with expected symmetry counts.

A corpus file is a JSON array of curve documents, each with an
``expected`` object holding ``inv`` and, for plane curves, ``rot``.  In
``pinned`` mode every entry's ``reparam`` is used as given; in ``auto`` mode
it is ignored and the automatic general-position search runs instead.
"""

import json
import time
from dataclasses import dataclass
from importlib import resources

from ..detect import DetectOptions, detect_all
from .schema import SchemaError, curve_from_doc


@dataclass
class CorpusRow:
    name: str
    rot: object
    inv: int
    expected: dict
    seconds: float
    report: object = None

    @property
    def ok(self):
        return self.inv == self.expected.get("inv") and \
            ("rot" not in self.expected or self.rot == self.expected["rot"])


def bundled_corpus_path():
    return resources.files("curvesym.data").joinpath("corpus.json")


def load_corpus(path=None):
    src = bundled_corpus_path() if path is None else path
    with open(src, encoding="utf-8") as fh:
        try:
            entries = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError("corpus is not valid JSON: %s" % e) from None
    if not isinstance(entries, list):
        raise SchemaError("corpus must be a JSON array")
    out = []
    for e in entries:
        curve, pinned = curve_from_doc(e)
        exp = e.get("expected")
        if not isinstance(exp, dict) or "inv" not in exp:
            raise SchemaError("entry %r lacks expected counts" % e.get("name"))
        out.append((curve, pinned, exp))
    return out


def run_corpus(path=None, mode="pinned", names=None, closure=False):
    rows = []
    for curve, pinned, exp in load_corpus(path):
        if names and curve.name not in names:
            continue
        opts = DetectOptions(reparam=pinned if mode == "pinned" else None, closure=closure)
        t0 = time.perf_counter()
        rep = detect_all(curve, opts)
        rot, inv = rep.table_counts()
        rows.append(CorpusRow(curve.name, rot, inv, exp, time.perf_counter() - t0, rep))
    return rows


def format_rows(rows):
    lines = ["%-16s %5s %5s %9s  %s" % ("curve", "#rot", "#inv", "seconds", "result")]
    for r in rows:
        exp = "%s/%s" % (r.expected.get("rot", "-"), r.expected["inv"])
        lines.append("%-16s %5s %5d %9.3f  %s" % (
            r.name, "-" if r.rot is None else r.rot, r.inv, r.seconds,
            "ok" if r.ok else "MISMATCH (expected %s)" % exp))
    return "\n".join(lines)
