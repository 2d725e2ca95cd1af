"""Reproduce the symmetry counts of the bundled plane and space corpus.

Pinned mode uses each entry's recorded reparametrization; ``--auto`` lets the
general-position search choose instead.  Counts should not change.
"""

import sys

from curvesym.cli.corpus import format_rows, run_corpus


def main(argv):
    mode = "auto" if "--auto" in argv else "pinned"
    rows = run_corpus(mode=mode)
    print("mode:", mode)
    print(format_rows(rows))
    print("total %.2f s" % sum(r.seconds for r in rows))
    return 0 if all(r.ok for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
