"""Walk through the square tiling with alpha = -5+5i.

Run: python demos/square_minus5_plus5i.py [--svg out.svg]
"""
from __future__ import annotations

import argparse

from singtile import check_admissible, compatible_ideal_report, curve_census, gauss, symmetry_group
from singtile.render import make_plan, write_svg
from singtile.verifier import conformance_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--svg", help="write a 5-colored picture here")
    args = ap.parse_args()

    adm = check_admissible("44", gauss(-5, 5))
    print(f"alpha = {adm.alpha}, N = {adm.norm}, (L,R) = ({adm.L},{adm.R}), n = {adm.n}")
    unit, L0 = adm.canonical_form
    print(f"class {adm.cls.value}; balanced: {adm.balanced}; alpha = ({unit}) * {L0} * (1-i)")

    sym = symmetry_group(adm)
    print(f"\nsymmetry group {sym.label}, generated upstairs by f1 = {sym.f1} and f2 = {sym.f2}")

    print("\nedge curves in the image:")
    for fam in curve_census(adm).families:
        print(f"  {fam.count} {fam.curve}s, orientation {fam.orientation:+d}")

    rep = compatible_ideal_report(adm)
    print(f"\n{len(rep.colorings)} compatible ideal colorings (at most {rep.max_colors} colors):")
    for col in rep.colorings:
        tag = "perfect" if rep.singular_perfect(col) else "chirally perfect"
        print(f"  beta = {str(col.generator):>6}  {col.color_count:>3} colors  {tag}")

    checks = conformance_report(adm)
    bad = [c for c in checks if not c.agree]
    print(f"\nexact oracle: {len(checks)} checks, {len(bad)} disagreements")

    if args.svg:
        write_svg(make_plan("44", adm.alpha, gauss(2, 1), r_min=0.3, r_max=3.0), args.svg)
        print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
