"""
Drawing rank-2 Shi arrangements
===============================

For rank 2 the arrangement can be drawn: the lines ``<x, a> = 0`` and
``<x, a> = 1``, the dominant chamber, and the alcove of each region's minimal
element labelled with its sign type.
"""
import sys
from pathlib import Path

from shilab import build
from shilab.plot import shi_svg

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
for name in ["A2", "B2", "G2"]:
    path = out_dir / f"shi_{name}.svg"
    path.write_text(shi_svg(build(name)), encoding="utf-8")
    print("wrote", path)
