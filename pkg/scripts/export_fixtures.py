"""Write every catalog entry out as a readable fixture file.

The tables live in condlat.catalog as data; this dumps them in the text
format the CLI reads, so they can be inspected, diffed, and fed back in.
Run from the repository root:

    python3 scripts/export_fixtures.py [outdir]
"""

import pathlib
import sys

from condlat import catalog
from condlat.io import (
    FrameDocument,
    LatticeDocument,
    SelectionDocument,
    serialize_frame,
    serialize_lattice,
    serialize_selection,
)


def main() -> int:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    count = 0
    for e in catalog.ENTRIES:
        doc = LatticeDocument(e.name, e.lattice, e.conditional, e.unary)
        (outdir / f"{e.name}.lat").write_text(serialize_lattice(doc))
        count += 1
    for fe in catalog.FRAME_ENTRIES:
        doc = FrameDocument(fe.name, fe.frame)
        (outdir / f"{fe.name}.frame").write_text(serialize_frame(doc))
        count += 1
    for se in catalog.SELECTION_ENTRIES:
        doc = SelectionDocument(se.name, se.frame, ())
        (outdir / f"{se.name}.self").write_text(serialize_selection(doc))
        count += 1
    print(f"wrote {count} fixtures to {outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
