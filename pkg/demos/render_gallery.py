"""Render a handful of colored singular tilings to SVG.

Run: python demos/render_gallery.py [outdir]
"""
from __future__ import annotations

import sys
from pathlib import Path

from singtile import eisen, gauss
from singtile.render import make_plan, select_tiles, write_svg

GALLERY = [
    ("square_4_beta2", "44", gauss(4), gauss(2), 0.2, 5.0),
    ("square_m5p5i_beta2pi", "44", gauss(-5, 5), gauss(2, 1), 0.3, 3.0),
    ("square_4p6i_beta2", "44", gauss(4, 6), gauss(2), 0.5, 2.0),
    ("hex_6_beta2", "63", eisen(6), eisen(2), 0.3, 3.0),
    ("tri_m5p5w_beta1p2w", "36", eisen(-5, 5), eisen(1, 2), 0.3, 3.0),
    ("tri_2p10w_beta2", "36", eisen(2, 10), eisen(2), 0.5, 2.0),
]


def main() -> None:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "gallery")
    out.mkdir(parents=True, exist_ok=True)
    for name, kind, alpha, beta, r0, r1 in GALLERY:
        plan = make_plan(kind, alpha, beta, r_min=r0, r_max=r1)
        path = out / f"{name}.svg"
        write_svg(plan, path)
        print(f"{path}: {len(select_tiles(plan))} tiles, {plan.coloring.color_count} colors")


if __name__ == "__main__":
    main()
