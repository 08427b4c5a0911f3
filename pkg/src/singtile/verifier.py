"""Brute-force oracles over finite patches of tile centers.

Nothing here trusts the algebra in :mod:`singtile.singular_tiling`.  Each
oracle enumerates lattice points and checks the defining property directly:
two centers have the same image under ``exp(2*pi*i*z/alpha)`` exactly when
they differ by an integer multiple of alpha, so "same image" is decided by
reducing the coordinate along alpha into ``[0, 1)``.

All arithmetic is on Python ints, Fractions or int64 arrays; floating point
is never used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

import numpy as np

from .cyclotomic import GAUSS, RingElement, RingTag, conj, norm, units
from .lattice_coloring import (
    LatticeColoring,
    Sublattice,
    build_ideal_coloring,
    build_sublattice_coloring,
)
from .singular_tiling import (
    AdmissibleAlpha,
    color_symmetry_transfer,
    compatibility,
    compatible_ideal_report,
    curve_census,
    symmetry_group,
)
from .tilings import FlatMap, TilingKind

__all__ = [
    "Patch",
    "QPoint",
    "OracleResult",
    "SymmetryMeasurement",
    "CensusMeasurement",
    "build_patch",
    "canonical_mod_alpha",
    "fiber_keys",
    "verify_compatibility",
    "verify_symmetry_order",
    "verify_color_permutation",
    "verify_census",
    "conformance_report",
]


def _mul(tag: RingTag, a, b, c, d):
    if tag is GAUSS:
        return a * c - b * d, a * d + b * c
    return a * c - b * d, a * d + b * c - b * d


def _conj(tag: RingTag, a, b):
    return (a, -b) if tag is GAUSS else (a - b, -b)


def _twice_re(tag: RingTag, a, b):
    return 2 * a if tag is GAUSS else 2 * a - b


@dataclass(frozen=True, eq=False)
class Patch:
    """All tile centers ``p`` of ``kind`` with ``norm(p) <= radius_sq``."""

    kind: TilingKind
    radius_sq: Fraction
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.a)

    @property
    def points(self) -> list[RingElement]:
        tag = self.kind.tag
        return [RingElement(int(x), int(y), tag) for x, y in zip(self.a, self.b)]


def build_patch(kind: TilingKind, radius_sq) -> Patch:
    radius_sq = Fraction(radius_sq)
    bound = isqrt(int(4 * radius_sq / 3) + 1) + 2
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    a, b = (m.ravel() for m in np.meshgrid(rng, rng, indexing="ij"))
    if kind.tag is GAUSS:
        nrm = a * a + b * b
    else:
        nrm = a * a - a * b + b * b
    # norm <= p/q  <=>  q*norm <= p
    keep = (radius_sq.denominator * nrm <= radius_sq.numerator) & kind.center_mask(a, b)
    return Patch(kind, radius_sq, a[keep], b[keep])


def default_radius_sq(alpha: RingElement) -> int:
    return 9 * norm(alpha)


@dataclass(frozen=True)
class QPoint:
    rep: RingElement
    s: int

    def restore(self, alpha: RingElement) -> RingElement:
        return self.rep + alpha * self.s


def canonical_mod_alpha(z: RingElement, alpha: RingElement) -> QPoint:
    """Representative of ``z`` modulo ``Z*alpha`` with alpha-coordinate in [0, 1)."""
    if alpha.is_zero():
        raise ZeroDivisionError("alpha must be nonzero")
    tag = alpha.tag
    ea, eb = _mul(tag, z.a, z.b, *_conj(tag, alpha.a, alpha.b))
    c1 = Fraction(_twice_re(tag, ea, eb), 2 * norm(alpha))
    s = c1.numerator // c1.denominator
    return QPoint(z - alpha * s, s)


def fiber_keys(a: np.ndarray, b: np.ndarray, alpha: RingElement) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized ``canonical_mod_alpha(...).rep`` as coordinate arrays."""
    tag = alpha.tag
    ea, eb = _mul(tag, a, b, *_conj(tag, alpha.a, alpha.b))
    s = _twice_re(tag, ea, eb) // (2 * norm(alpha))
    return a - s * alpha.a, b - s * alpha.b


def _group_ids(ka: np.ndarray, kb: np.ndarray) -> np.ndarray:
    keys = np.stack([ka, kb], axis=1)
    _, inv = np.unique(keys, axis=0, return_inverse=True)
    return inv.ravel()


@dataclass(frozen=True)
class OracleResult:
    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


ColoringLike = Union[RingElement, Sublattice, LatticeColoring]


def _as_coloring(source: ColoringLike, kind: TilingKind) -> LatticeColoring:
    if isinstance(source, LatticeColoring):
        return source
    if isinstance(source, Sublattice):
        return build_sublattice_coloring(source, kind)
    return build_ideal_coloring(source, kind)


def verify_compatibility(source: ColoringLike, alpha: RingElement, patch: Patch) -> OracleResult:
    """Every fiber of the map meets a single color class on the patch."""
    coloring = _as_coloring(source, patch.kind)
    colors = coloring.colors(patch.a, patch.b)
    gid = _group_ids(*fiber_keys(patch.a, patch.b, alpha))
    ngroups = gid.max() + 1
    lo = np.full(ngroups, np.iinfo(np.int64).max)
    hi = np.full(ngroups, -1)
    np.minimum.at(lo, gid, colors)
    np.maximum.at(hi, gid, colors)
    bad = np.nonzero(lo != hi)[0]
    if len(bad) == 0:
        return OracleResult(True)
    members = np.nonzero(gid == bad[0])[0]
    i = members[np.argmin(colors[members])]
    j = members[np.argmax(colors[members])]
    tag = patch.kind.tag
    z1 = RingElement(int(patch.a[i]), int(patch.b[i]), tag)
    z2 = RingElement(int(patch.a[j]), int(patch.b[j]), tag)
    return OracleResult(False, (z1, z2))


# ---------------------------------------------------------------------------
# symmetry order and reflection


@dataclass(frozen=True)
class SymmetryMeasurement:
    n: int
    reflection: bool
    epsilon: Optional[RingElement]
    rejected_reflections: tuple = ()


def _fraction_pair(alpha: RingElement, k: int) -> tuple[Fraction, Fraction]:
    return Fraction(alpha.a, k), Fraction(alpha.b, k)


def _translation_preserves_centers(shift: tuple[Fraction, Fraction], patch: Patch) -> bool:
    sa, sb = shift
    if sa.denominator != 1 or sb.denominator != 1:
        # the image of any lattice point has non-integral coordinates
        return False
    ta, tb = patch.a + int(sa), patch.b + int(sb)
    return bool(np.all(patch.kind.center_mask(ta, tb)))


def _reflection_is_pullback(
    c: tuple[int, int, int], alpha: RingElement, patch: Patch
) -> bool:
    """Does ``f(z) = (c0 + c1*xi)/D * conj(z)`` satisfy ``phi(f(z)) == conj(phi(z))`` on P?

    ``exp(2*pi*i*x) == 1`` iff x is a rational integer, so the identity holds
    at z iff ``(f(z)*conj(alpha) + conj(z)*alpha) / norm(alpha)`` is one.
    """
    tag = patch.kind.tag
    c0, c1, den = c
    za, zb = _conj(tag, patch.a, patch.b)
    na, nb = _mul(tag, c0, c1, za, zb)
    if np.any(na % den) or np.any(nb % den):
        return False
    fa, fb = na // den, nb // den
    if not np.all(patch.kind.center_mask(fa, fb)):
        return False
    xa, xb = _mul(tag, fa, fb, *_conj(tag, alpha.a, alpha.b))
    ya, yb = _mul(tag, za, zb, alpha.a, alpha.b)
    sa, sb = xa + ya, xb + yb
    return bool(np.all(sb == 0) and np.all(sa % norm(alpha) == 0))


def verify_symmetry_order(adm: AdmissibleAlpha, patch: Patch) -> SymmetryMeasurement:
    """Largest n whose rotation by 2*pi/n maps Q_alpha into itself, and whether z -> conj(z) does.

    A rotation by 2*pi/n pulls back to the translation by alpha/n; a candidate
    passes when that translation sends every patch center to a center.
    """
    alpha = adm.alpha
    best = 1
    for k in range(1, isqrt(norm(alpha)) + 2):
        if _translation_preserves_centers(_fraction_pair(alpha, k), patch):
            best = k
    tag = alpha.tag
    # candidates: every unit, and -alpha/conj(alpha) as an exact rational
    cands = [(u.a, u.b, 1) for u in units(tag)]
    ca, cb = _conj(tag, alpha.a, alpha.b)
    na, nb = _mul(tag, -alpha.a, -alpha.b, *_conj(tag, ca, cb))
    cands.append((na, nb, norm(alpha)))
    found = None
    rejected = []
    for c in cands:
        if _reflection_is_pullback(c, alpha, patch):
            if c[2] == 1:
                found = RingElement(c[0], c[1], tag)
            elif c[0] % c[2] == 0 and c[1] % c[2] == 0:
                found = RingElement(c[0] // c[2], c[1] // c[2], tag)
        else:
            rejected.append(c)
    return SymmetryMeasurement(best, found is not None, found, tuple(rejected))


# ---------------------------------------------------------------------------
# color permutations


@dataclass(frozen=True)
class PermutationResult:
    permutation: Optional[dict[int, int]]
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.permutation is not None


def verify_color_permutation(f: FlatMap, source: ColoringLike, patch: Patch) -> PermutationResult:
    """The color map ``color(z) -> color(f(z))`` over the patch, or a conflicting pair."""
    coloring = _as_coloring(source, patch.kind)
    tag = patch.kind.tag
    fa, fb = f.apply_arrays(patch.a, patch.b)
    inside = patch.kind.center_mask(fa, fb)
    if not np.all(inside):
        i = int(np.nonzero(~inside)[0][0])
        z = RingElement(int(patch.a[i]), int(patch.b[i]), tag)
        return PermutationResult(None, (z, f(z)))
    src = coloring.colors(patch.a, patch.b)
    dst = coloring.colors(fa, fb)
    pairs = np.unique(np.stack([src, dst], axis=1), axis=0)
    perm: dict[int, int] = {}
    for c, d in pairs.tolist():
        if c in perm:
            # two points of one color land in different colors
            i = int(np.nonzero((src == c) & (dst == perm[c]))[0][0])
            j = int(np.nonzero((src == c) & (dst == d))[0][0])
            z1 = RingElement(int(patch.a[i]), int(patch.b[i]), tag)
            z2 = RingElement(int(patch.a[j]), int(patch.b[j]), tag)
            return PermutationResult(None, (z1, z2))
        perm[c] = d
    inv: dict[int, int] = {}
    for c, d in perm.items():
        if d in inv:
            # two colors merge into one
            i = int(np.nonzero(src == inv[d])[0][0])
            j = int(np.nonzero(src == c)[0][0])
            z1 = RingElement(int(patch.a[i]), int(patch.b[i]), tag)
            z2 = RingElement(int(patch.a[j]), int(patch.b[j]), tag)
            return PermutationResult(None, (z1, z2))
        inv[d] = c
    if set(perm) != set(inv):
        return PermutationResult(None, None)
    return PermutationResult(perm)


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CensusMeasurement:
    direction: RingElement
    curve: str
    count: Optional[int]  # None: infinitely many distinct images
    orientation: Optional[int]


def _cross(d: RingElement, z_a, z_b) -> int:
    """Perpendicular offset of z from the line R*d, up to a fixed positive factor."""
    tag = d.tag
    _, eb = _mul(tag, *_conj(tag, d.a, d.b), z_a, z_b)
    return eb


def verify_census(adm: AdmissibleAlpha, direction: RingElement) -> CensusMeasurement:
    """Count the images of the lines parallel to ``direction``.

    The lines of a family are the translates of one line by the translation
    lattice, so each line is labelled by the perpendicular offset of its
    translation vector.  Two lines have the same image iff their labels differ
    by a multiple of alpha's label; the distinct residues are counted over a
    window of translations big enough to reach every residue.
    """
    alpha = adm.alpha
    kind = adm.kind
    t1, t2 = kind.translation_basis()
    step = abs(_cross(direction, alpha.a, alpha.b))
    tag = alpha.tag
    # d * conj(alpha), split exactly into real and imaginary parts (Im up to sqrt(3)/2)
    ea, eb = _mul(tag, direction.a, direction.b, *_conj(tag, alpha.a, alpha.b))
    re2, im = _twice_re(tag, ea, eb), eb
    if im == 0:
        return CensusMeasurement(direction, "circle", None, None)
    K = step + 1
    offsets = set()
    for s in range(-K, K + 1):
        for t in range(-K, K + 1):
            off = _cross(direction, s * t1.a + t * t2.a, s * t1.b + t * t2.b)
            offsets.add(off % step)
    if re2 == 0:
        return CensusMeasurement(direction, "ray", len(offsets), None)
    # along the line d(log r)/dt ~ -im and d(arg)/dt ~ re: moving inward turns
    # counterclockwise iff re and im share a sign
    inward_ccw = (im > 0) == (re2 > 0)
    return CensusMeasurement(direction, "spiral", len(offsets), 1 if inward_ccw else -1)


# ---------------------------------------------------------------------------
# conformance report


@dataclass(frozen=True)
class Check:
    name: str
    algebraic: object
    oracle: object
    witness: Optional[object] = None

    @property
    def agree(self) -> bool:
        return self.algebraic == self.oracle

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "algebraic": _jsonable(self.algebraic),
            "oracle": _jsonable(self.oracle),
            "agree": self.agree,
        }
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


def _jsonable(x):
    if isinstance(x, RingElement):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


def conformance_report(
    adm: AdmissibleAlpha,
    betas: Optional[list[ColoringLike]] = None,
    radius_sq=None,
    census: bool = True,
) -> list[Check]:
    """Algebraic verdicts next to oracle verdicts for one alpha.

    ``betas`` defaults to every divisor of alpha; non-divisors and general
    sublattices may be passed too (their compatibility must then fail or
    succeed according to membership of alpha).
    """
    alpha = adm.alpha
    patch = build_patch(adm.kind, radius_sq if radius_sq is not None else default_radius_sq(alpha))
    sym = symmetry_group(adm)
    meas = verify_symmetry_order(adm, patch)
    checks = [
        Check("symmetry_order", sym.n, meas.n),
        Check("reflection", sym.dihedral, meas.reflection),
    ]
    if sym.dihedral:
        checks.append(Check("reflection_unit", sym.epsilon, meas.epsilon))
    if census:
        fams = [verify_census(adm, d) for d in adm.kind.edge_directions()]
        measured = tuple(sorted((m.curve, m.count or 0, m.orientation or 0) for m in fams))
        checks.append(Check("census", curve_census(adm).normalized(), measured))

    if betas is None:
        betas = [c for c in compatible_ideal_report(adm).colorings]
    for source in betas:
        col = _as_coloring(source, adm.kind)
        label = col.generator_text
        compat = compatibility(col, adm)
        res = verify_compatibility(col, alpha, patch)
        checks.append(Check(f"compatible[{label}]", compat, res.ok, res.witness))
        if not compat:
            continue
        v1 = color_symmetry_transfer("g1", col, adm)
        p1 = verify_color_permutation(v1.flat, col, patch)
        checks.append(Check(f"color_symmetry[{label}][g1]", v1.is_color_symmetry, p1.ok, p1.witness))
        if sym.dihedral:
            v2 = color_symmetry_transfer("g2", col, adm)
            p2 = verify_color_permutation(v2.flat, col, patch)
            checks.append(
                Check(f"color_symmetry[{label}][g2]", v2.is_color_symmetry, p2.ok, p2.witness)
            )
    return checks
