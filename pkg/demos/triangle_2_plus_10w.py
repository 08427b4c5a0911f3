"""The triangle tiling with alpha = 2+10w: an unbalanced, cyclic example.

Since alpha is not balanced there is no reflection, and every compatible coloring
ends up perfect on the singular tiling even when it is only chirally perfect flat.

Run: python demos/triangle_2_plus_10w.py
"""
from __future__ import annotations

from singtile import check_admissible, compatible_ideal_report, eisen, symmetry_group
from singtile.singular_tiling import alpha_from_LR
from singtile.lattice_coloring import perfectness_transfer_36


def main() -> None:
    adm = check_admissible("36", eisen(2, 10))
    print(f"alpha = {adm.alpha}, (L,R) = ({adm.L},{adm.R}), n = {adm.n}, balanced: {adm.balanced}")
    assert alpha_from_LR(adm.kind, adm.L, adm.R) == adm.alpha
    sym = symmetry_group(adm)
    print(f"symmetry group {sym.label} generated by f1 = {sym.f1}")

    rep = compatible_ideal_report(adm)
    print(f"\nmax colors 2N/3 = {rep.max_colors}")
    for col in rep.colorings:
        flat = col.perfectness.value if col.perfectness else "-"
        sing = "perfect" if rep.singular_perfect(col) else "chirally perfect"
        print(f"  beta = {str(col.generator):>6}  {col.color_count:>3} colors  flat: {flat:<7}  singular: {sing}")

    print("\nperfectness on the full lattice versus on the triangle centers alone:")
    for beta in (eisen(2), eisen(2, 1), eisen(1, 3), eisen(2, 4)):
        tr = perfectness_transfer_36(beta)
        print(f"  beta = {str(beta):>5}: lattice {tr.lattice_level.value}, centers {tr.centers_level.value}")


if __name__ == "__main__":
    main()
