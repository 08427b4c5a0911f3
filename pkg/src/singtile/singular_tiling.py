"""Tilings of the punctured plane obtained from ``z -> exp(2*pi*i*z/alpha)``.

Everything here is exact: admissibility, the integers (L, R) that determine
alpha, the three-way classification, the symmetry group C_n / D_n with the
flat symmetries that correspond to its generators, the bounding-curve census,
and which ideal colorings survive the map (and with which symmetries).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd as igcd
from typing import Optional, Union

import cmath

from .cyclotomic import (
    GAUSS,
    RingElement,
    conj,
    divides,
    divisors_up_to_associates,
    factorize,
    is_associate,
    is_balanced,
    norm,
    ramified_prime,
    units,
)
from .errors import DomainError, IncompatibleColoringError, InadmissibleAlphaError
from .lattice_coloring import (
    LatticeColoring,
    Perfectness,
    Sublattice,
    build_ideal_coloring,
)
from .tilings import P0_GENERATOR, FlatMap, TilingKind, parse_kind

__all__ = [
    "TilingKind",
    "FlatMap",
    "parse_kind",
    "TilingClass",
    "AdmissibleAlpha",
    "SymmetryDescriptor",
    "LineImage",
    "CurveFamily",
    "CurveCensus",
    "IdealReport",
    "ColorSymmetryVerdict",
    "determine_LR",
    "alpha_from_LR",
    "check_admissible",
    "classify",
    "symmetry_group",
    "classify_line_image",
    "curve_census",
    "associate_invariance",
    "compatibility",
    "compatible_ideal_report",
    "color_symmetry_transfer",
    "tiling_report",
]


class TilingClass(enum.IntEnum):
    CLASS1 = 1
    CLASS2 = 2
    CLASS3 = 3


def determine_LR(kind: TilingKind, alpha: RingElement) -> tuple[int, int]:
    kind = parse_kind(kind)
    if not kind.in_translation_lattice(alpha):
        raise InadmissibleAlphaError(f"inadmissible: {alpha} is not in (2+w)")
    if kind is TilingKind.TRI_36:
        q = divides(P0_GENERATOR, alpha)
        return q.a, q.b
    return alpha.a, alpha.b


def alpha_from_LR(kind: TilingKind, L: int, R: int) -> RingElement:
    kind = parse_kind(kind)
    z = RingElement(L, R, kind.tag)
    return z * P0_GENERATOR if kind is TilingKind.TRI_36 else z


@dataclass(frozen=True)
class AdmissibleAlpha:
    alpha: RingElement
    kind: TilingKind
    L: int
    R: int
    n: int
    balanced: bool
    cls: TilingClass
    # alpha = unit * L0 (Class 3) or unit * L0 * (1 - xi) (Class 2)
    canonical_form: Optional[tuple[RingElement, int]]

    @property
    def norm(self) -> int:
        return norm(self.alpha)


def _canonical_form(alpha: RingElement, cls: TilingClass) -> tuple[RingElement, int]:
    base = alpha
    if cls is TilingClass.CLASS2:
        base = divides(RingElement(1, -1, alpha.tag), alpha)
        assert base is not None
    for u in units(alpha.tag):
        w = u * base
        if w.b == 0 and w.a > 0:
            return conj(u), w.a
    raise AssertionError(f"{alpha} is balanced but has no canonical form")  # unreachable


def _classify_element(alpha: RingElement) -> tuple[TilingClass, Optional[tuple[RingElement, int]]]:
    if not is_balanced(alpha):
        return TilingClass.CLASS1, None
    e = factorize(alpha).exponent_of(ramified_prime(alpha.tag))
    cls = TilingClass.CLASS2 if e % 2 else TilingClass.CLASS3
    return cls, _canonical_form(alpha, cls)


def check_admissible(kind: TilingKind, alpha: RingElement) -> AdmissibleAlpha:
    kind = parse_kind(kind)
    L, R = determine_LR(kind, alpha)
    if norm(alpha) <= kind.diameter_sq:
        raise InadmissibleAlphaError(
            f"inadmissible: |α| ≤ {kind.diameter_text} (|{alpha}|² = {norm(alpha)})"
        )
    cls, form = _classify_element(alpha)
    return AdmissibleAlpha(
        alpha=alpha,
        kind=kind,
        L=L,
        R=R,
        n=igcd(L, R),
        balanced=cls is not TilingClass.CLASS1,
        cls=cls,
        canonical_form=form,
    )


def classify(adm: AdmissibleAlpha) -> tuple[TilingClass, Optional[tuple[RingElement, int]]]:
    return _classify_element(adm.alpha)


# ---------------------------------------------------------------------------
# symmetry group


@dataclass(frozen=True)
class SymmetryDescriptor:
    n: int
    dihedral: bool
    f1: FlatMap
    f2: Optional[FlatMap]

    @property
    def group_type(self) -> str:
        return "D" if self.dihedral else "C"

    @property
    def label(self) -> str:
        return f"{self.group_type}{self.n}"

    @property
    def epsilon(self) -> Optional[RingElement]:
        return self.f2.unit if self.f2 is not None else None

    @property
    def order(self) -> int:
        return 2 * self.n if self.dihedral else self.n

    def g1(self, w: complex, power: int = 1) -> complex:
        return cmath.exp(2j * cmath.pi * power / self.n) * w

    def g2(self, w: complex) -> complex:
        if not self.dihedral:
            raise DomainError("the tiling has no reflection symmetry")
        return w.conjugate()


def symmetry_group(adm: AdmissibleAlpha) -> SymmetryDescriptor:
    alpha, n = adm.alpha, adm.n
    shift = RingElement(alpha.a // n, alpha.b // n, alpha.tag)
    assert shift * n == alpha
    f2 = None
    if adm.balanced:
        # g2 o phi = phi o f2 forces f2(z) = eps * conj(z) with eps = -alpha / conj(alpha)
        eps = divides(conj(alpha), -alpha)
        assert eps is not None and norm(eps) == 1
        f2 = FlatMap(eps, True, alpha.zero())
    return SymmetryDescriptor(n, adm.balanced, FlatMap.translation(shift), f2)


# ---------------------------------------------------------------------------
# bounding curves


@dataclass(frozen=True)
class LineImage:
    curve: str  # "spiral" | "circle" | "ray"
    orientation: Optional[int]  # +1 counterclockwise inward, -1 clockwise, None otherwise


def classify_line_image(direction: RingElement, alpha: RingElement) -> LineImage:
    """Type of the image of the lines parallel to ``direction``.

    With ``w = 2*pi*i*direction/alpha = u + i*v``: ``u == 0`` gives circles,
    ``v == 0`` rays, anything else logarithmic spirals.
    """
    if direction.is_zero():
        raise DomainError("a line direction must be nonzero")
    e = direction * conj(alpha)
    # e = X + iY up to positive factors; u ~ -Y, v ~ X
    x2 = 2 * e.a if e.tag is GAUSS else 2 * e.a - e.b
    y = e.b
    if y == 0:
        return LineImage("circle", None)
    if x2 == 0:
        return LineImage("ray", None)
    return LineImage("spiral", 1 if (x2 > 0) == (y > 0) else -1)


@dataclass(frozen=True, order=True)
class CurveFamily:
    curve: str
    count: Optional[int]  # None: countably many (circles)
    orientation: Optional[int] = None

    def as_dict(self) -> dict:
        return {"type": self.curve, "count": self.count, "orientation": self.orientation}


@dataclass(frozen=True)
class CurveCensus:
    families: tuple[CurveFamily, ...]

    def normalized(self) -> tuple[tuple, ...]:
        """Order-free form used to compare censuses of associate parameters."""
        return tuple(sorted((f.curve, f.count or 0, f.orientation or 0) for f in self.families))


def _class1_counts(adm: AdmissibleAlpha) -> list[int]:
    L, R = adm.L, adm.R
    if adm.kind is TilingKind.SQUARE_44:
        return [abs(R), abs(L)]
    if adm.kind is TilingKind.HEX_63:
        return [abs(2 * L - R), abs(2 * R - L), abs(L + R)]
    return [abs(R), abs(L), abs(L - R)]


def curve_census(adm: AdmissibleAlpha) -> CurveCensus:
    kind = adm.kind
    if adm.cls is TilingClass.CLASS1:
        fams = []
        for d, count in zip(kind.edge_directions(), _class1_counts(adm)):
            img = classify_line_image(d, adm.alpha)
            assert img.curve == "spiral", (adm, d, img)
            fams.append(CurveFamily("spiral", count, img.orientation))
        return CurveCensus(tuple(fams))

    L0 = adm.canonical_form[1]

    def pair(k: int) -> list[CurveFamily]:
        return [CurveFamily("spiral", k, 1), CurveFamily("spiral", k, -1)]

    circles = CurveFamily("circle", None)
    if adm.cls is TilingClass.CLASS2:
        if kind is TilingKind.HEX_63:
            fams = pair(3 * L0) + [circles]
        elif kind is TilingKind.TRI_36:
            fams = pair(L0) + [circles]
        else:
            fams = pair(L0)
    else:
        if kind is TilingKind.SQUARE_44:
            fams = [CurveFamily("ray", L0), circles]
        elif kind is TilingKind.HEX_63:
            fams = pair(L0) + [CurveFamily("ray", 2 * L0)]
        else:
            assert L0 % 3 == 0
            fams = pair(L0 // 3) + [CurveFamily("ray", 2 * L0 // 3)]
    return CurveCensus(tuple(fams))


# ---------------------------------------------------------------------------
# colorings


def associate_invariance(alpha1: RingElement, alpha2: RingElement, kind: TilingKind) -> bool:
    """True iff the parameters are associates; then every derived descriptor must agree."""
    kind = parse_kind(kind)
    a1, a2 = check_admissible(kind, alpha1), check_admissible(kind, alpha2)
    if not is_associate(alpha1, alpha2):
        return False
    d1, d2 = _descriptor(a1), _descriptor(a2)
    if d1 != d2:
        raise AssertionError(f"associates {alpha1}, {alpha2} give different tilings: {d1} != {d2}")
    return True


def _descriptor(adm: AdmissibleAlpha) -> tuple:
    sym = symmetry_group(adm)
    rep = compatible_ideal_report(adm)
    return (
        adm.cls,
        adm.n,
        adm.balanced,
        sym.label,
        curve_census(adm).normalized(),
        rep.max_colors,
        tuple(sorted((c.color_count, c.perfectness.value) for c in rep.colorings)),
    )


ColoringLike = Union[RingElement, Sublattice, LatticeColoring]


def compatibility(source: ColoringLike, adm: AdmissibleAlpha) -> bool:
    """Whether the coloring induced by ``source`` is well defined after the map."""
    if isinstance(source, LatticeColoring):
        source = source.generator if source.generator is not None else source.sublattice
    if isinstance(source, RingElement):
        if source.is_zero():
            raise DomainError("the zero ideal does not induce a coloring")
        return divides(source, adm.alpha) is not None
    return adm.alpha in source


@dataclass(frozen=True)
class IdealReport:
    alpha: AdmissibleAlpha
    colorings: tuple[LatticeColoring, ...]
    max_colors: int

    def singular_perfect(self, coloring: LatticeColoring) -> bool:
        """Every symmetry of the singular tiling permutes the colors."""
        return (not self.alpha.balanced) or coloring.perfectness is Perfectness.FULL


def max_color_index(adm: AdmissibleAlpha) -> int:
    m = norm(adm.alpha)
    if adm.kind is TilingKind.TRI_36:
        # alpha lies in (2+w), so the (alpha)-coloring loses the cosets inside it
        return 2 * m // 3
    return m


def compatible_ideal_report(adm: AdmissibleAlpha) -> IdealReport:
    cols = tuple(build_ideal_coloring(d, adm.kind) for d in divisors_up_to_associates(adm.alpha))
    M = max_color_index(adm)
    assert max(c.color_count for c in cols) == M
    return IdealReport(adm, cols, M)


@dataclass(frozen=True)
class ColorSymmetryVerdict:
    element: str
    flat: FlatMap
    is_color_symmetry: bool


def color_symmetry_transfer(
    which: str, coloring: LatticeColoring, adm: AdmissibleAlpha, power: int = 1
) -> ColorSymmetryVerdict:
    """Is ``g1**power`` (``which="g1"``) or ``g2 o g1**power`` (``"g2"``) a color symmetry?"""
    if not compatibility(coloring, adm):
        raise IncompatibleColoringError(
            f"the coloring by {coloring.generator_text} is not compatible with α = {adm.alpha}"
        )
    sym = symmetry_group(adm)
    rot = FlatMap.translation(sym.f1.shift * power)
    if which == "g1":
        # rotations pull back to translations, which permute the cosets of any sublattice
        return ColorSymmetryVerdict(f"g1^{power}", rot, True)
    if which != "g2":
        raise ValueError(f"unknown symmetry {which!r}")
    if sym.f2 is None:
        raise DomainError(f"SG(S_α) of α = {adm.alpha} contains no reflections")
    flat = sym.f2.compose(rot)
    if coloring.generator is not None:
        ok = coloring.perfectness is Perfectness.FULL
    else:
        ok = coloring.sublattice.image(flat) == coloring.sublattice
    name = "g2" if power % sym.n == 0 else f"g2*g1^{power}"
    return ColorSymmetryVerdict(name, flat, ok)


def tiling_report(adm: AdmissibleAlpha) -> dict:
    """JSON-ready summary (schema v1)."""
    sym = symmetry_group(adm)
    rep = compatible_ideal_report(adm)
    form = None
    if adm.canonical_form is not None:
        form = {"unit": str(adm.canonical_form[0]), "L0": adm.canonical_form[1]}
    return {
        "schema": "v1",
        "alpha": str(adm.alpha),
        "kind": adm.kind.value,
        "L": adm.L,
        "R": adm.R,
        "n": adm.n,
        "balanced": adm.balanced,
        "class": int(adm.cls),
        "canonical_form": form,
        "symmetry": {
            "type": sym.group_type,
            "n": sym.n,
            "f1": str(sym.f1),
            "f2": str(sym.f2) if sym.f2 is not None else None,
        },
        "census": [f.as_dict() for f in curve_census(adm).families],
        "ideals": [
            {
                "generator": str(c.generator),
                "norm": norm(c.generator),
                "colors": c.color_count,
                "perfect": c.perfectness.value,
                "singular_perfect": rep.singular_perfect(c),
            }
            for c in rep.colorings
        ],
        "max_colors": rep.max_colors,
    }
