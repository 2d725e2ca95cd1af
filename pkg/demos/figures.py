"""Draw the plane corpus curves with their mirror lines and centers.

Usage: ``python3 demos/figures.py [output-directory]`` (default: ./figures).
"""

import os
import sys

from curvesym import DetectOptions, classify, dedupe, detect_all
from curvesym.cli import emit_svg, load_corpus


def main(argv):
    out = argv[0] if argv else "figures"
    os.makedirs(out, exist_ok=True)
    for curve, pinned, _ in load_corpus():
        rep = detect_all(curve, DetectOptions(reparam=pinned))
        deg = rep.working_curve.degree
        els = dedupe([classify(s, deg) for s in rep.union], deg)
        proj = "xy" if curve.dim == 2 else "xz"
        path = os.path.join(out, curve.name.replace(" ", "_").replace(".", "") + ".svg")
        with open(path, "wb") as fh:
            fh.write(emit_svg(rep.working_curve, els, projection=proj))
        print("%-14s %d elements -> %s" % (curve.name, len(els), path))


if __name__ == "__main__":
    main(sys.argv[1:])
