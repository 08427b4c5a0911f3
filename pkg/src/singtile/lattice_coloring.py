"""Sublattice and ideal colorings of the tile-center set of a regular tiling.

A sublattice of Z[xi] is stored in Hermite normal form, rows
``(h11, h12)`` and ``(0, h22)`` in ``(a, b)`` coordinates, so two sublattices
are equal exactly when their dataclasses are.  The color of a point is the
index of its coset representative, after sorting those representatives by
``(norm, a, b)``.

For the triangle tiling the centers are Z[w] minus the ideal (2+w); cosets
that lie entirely inside (2+w) carry no center and are dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Union

import numpy as np

from .cyclotomic import RingElement, RingTag, is_balanced
from .errors import DomainError, RingMismatchError
from .tilings import P0_GENERATOR, FlatMap, TilingKind

__all__ = [
    "Sublattice",
    "Perfectness",
    "LatticeColoring",
    "PerfectnessTransfer",
    "coset_color",
    "build_ideal_coloring",
    "build_sublattice_coloring",
    "is_chirally_perfect_sublattice",
    "permutes_colors",
    "permutes_colors_arrays",
    "perfectness_transfer_36",
    "all_sublattices",
]


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    a0, a1, b0, b1 = 1, 0, 0, 1
    while y:
        q, r = divmod(x, y)
        x, y = y, r
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    return x, a0, b0


@dataclass(frozen=True)
class Sublattice:
    h11: int
    h12: int
    h22: int
    tag: RingTag

    def __post_init__(self):
        if self.h11 <= 0 or self.h22 <= 0 or not 0 <= self.h12 < self.h22:
            raise ValueError(f"not in Hermite normal form: {self}")

    @classmethod
    def from_basis(cls, v1: RingElement, v2: RingElement) -> Sublattice:
        if v1.tag is not v2.tag:
            raise RingMismatchError("sublattice basis vectors come from different rings")
        if v1.a * v2.b - v1.b * v2.a == 0:
            raise DomainError(f"{v1} and {v2} are linearly dependent")
        g, x, y = _ext_gcd(v1.a, v2.a)
        if g < 0:
            g, x, y = -g, -x, -y
        # row ops: first row gets a-coordinate g, second row a-coordinate 0
        r1 = (x * v1.a + y * v2.a, x * v1.b + y * v2.b)
        r2b = (v2.a // g) * v1.b - (v1.a // g) * v2.b
        h22 = abs(r2b)
        return cls(r1[0], r1[1] % h22, h22, v1.tag)

    @classmethod
    def ideal(cls, beta: RingElement) -> Sublattice:
        if beta.is_zero():
            raise DomainError("the zero ideal has infinite index")
        xi = RingElement(0, 1, beta.tag)
        return cls.from_basis(beta, beta * xi)

    @property
    def basis(self) -> tuple[RingElement, RingElement]:
        return RingElement(self.h11, self.h12, self.tag), RingElement(0, self.h22, self.tag)

    @property
    def index(self) -> int:
        return self.h11 * self.h22

    def reduce(self, z: RingElement) -> tuple[int, int]:
        """Coordinates of the representative of ``z`` in the HNF parallelogram."""
        if z.tag is not self.tag:
            raise RingMismatchError("point and sublattice come from different rings")
        ra = z.a % self.h11
        s = (z.a - ra) // self.h11
        return ra, (z.b - s * self.h12) % self.h22

    def reduce_arrays(self, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        ra = a % self.h11
        s = (a - ra) // self.h11
        return ra, (b - s * self.h12) % self.h22

    def __contains__(self, z: RingElement) -> bool:
        return self.reduce(z) == (0, 0)

    def issubset(self, other: Sublattice) -> bool:
        return all(v in other for v in self.basis)

    def image(self, f: FlatMap) -> Sublattice:
        """Image under the linear part of ``f``."""
        lin = FlatMap(f.unit, f.conjugate, f.shift.zero())
        v1, v2 = self.basis
        return Sublattice.from_basis(lin(v1), lin(v2))

    def __str__(self) -> str:
        v1, v2 = self.basis
        return f"span{{{v1}, {v2}}}"


def all_sublattices(tag: RingTag, index: int) -> list[Sublattice]:
    """Every sublattice of Z[xi] with the given index."""
    out = []
    for h11 in range(1, index + 1):
        if index % h11:
            continue
        h22 = index // h11
        out.extend(Sublattice(h11, h12, h22, tag) for h12 in range(h22))
    return out


class Perfectness(enum.Enum):
    CHIRAL = "chiral"
    FULL = "full"


@dataclass(frozen=True, eq=False)
class LatticeColoring:
    """Coloring of the centers of ``kind`` by the cosets of ``sublattice``.

    ``generator`` is set for ideal colorings; ``perfectness`` is only assigned
    for ideal colorings (None means "verify empirically").
    """

    sublattice: Sublattice
    kind: TilingKind
    generator: Optional[RingElement]
    cosets: tuple[RingElement, ...]
    perfectness: Optional[Perfectness]
    _table: np.ndarray = field(repr=False)

    @property
    def color_count(self) -> int:
        return len(self.cosets)

    def color(self, z: RingElement) -> int:
        if not self.kind.is_center(z):
            raise DomainError(f"{z} is not a tile center of {self.kind.label}")
        cid = int(self._table[self.sublattice.reduce(z)])
        assert cid >= 0
        return cid

    def colors(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorized colors; -1 marks points that are not tile centers."""
        ra, rb = self.sublattice.reduce_arrays(np.asarray(a), np.asarray(b))
        out = self._table[ra, rb]
        return np.where(self.kind.center_mask(a, b), out, -1)

    @cached_property
    def generator_text(self) -> str:
        return str(self.generator) if self.generator is not None else str(self.sublattice)


def _make_coloring(
    gamma: Sublattice, kind: TilingKind, generator: Optional[RingElement], perf
) -> LatticeColoring:
    if gamma.tag is not kind.tag:
        raise RingMismatchError(f"{kind.label} needs a Z[{kind.tag.symbol}] sublattice")
    reps = [
        RingElement(ra, rb, gamma.tag) for ra in range(gamma.h11) for rb in range(gamma.h22)
    ]
    if kind is TilingKind.TRI_36:
        p0 = Sublattice.ideal(P0_GENERATOR)
        if gamma.issubset(p0):
            reps = [r for r in reps if r not in p0]
    reps.sort(key=RingElement.sort_key)
    table = np.full((gamma.h11, gamma.h22), -1, dtype=np.int64)
    for cid, r in enumerate(reps):
        table[r.a, r.b] = cid
    return LatticeColoring(gamma, kind, generator, tuple(reps), perf, table)


def build_ideal_coloring(beta: RingElement, kind: TilingKind) -> LatticeColoring:
    if beta.is_zero():
        raise DomainError("the zero ideal does not induce a coloring")
    if beta.tag is not kind.tag:
        raise RingMismatchError(f"{kind.label} needs a Z[{kind.tag.symbol}] generator, got {beta}")
    perf = Perfectness.FULL if is_balanced(beta) else Perfectness.CHIRAL
    return _make_coloring(Sublattice.ideal(beta), kind, beta, perf)


def build_sublattice_coloring(gamma: Sublattice, kind: TilingKind) -> LatticeColoring:
    return _make_coloring(gamma, kind, None, None)


def coset_color(gamma: Union[Sublattice, RingElement], z: RingElement) -> int:
    """Color of ``z`` in the coloring of the whole ring Z[xi] by ``gamma``."""
    if isinstance(gamma, RingElement):
        gamma = Sublattice.ideal(gamma)
    kind = TilingKind.SQUARE_44 if gamma.tag is RingTag.GAUSS else TilingKind.HEX_63
    return _full_lattice_coloring(gamma, kind).color(z)


_CACHE: dict[Sublattice, LatticeColoring] = {}


def _full_lattice_coloring(gamma: Sublattice, kind: TilingKind) -> LatticeColoring:
    col = _CACHE.get(gamma)
    if col is None:
        col = _CACHE[gamma] = _make_coloring(gamma, kind, None, None)
    return col


def is_chirally_perfect_sublattice(gamma: Sublattice) -> bool:
    """True iff ``gamma`` is closed under multiplication by xi, i.e. is an ideal."""
    xi = RingElement(0, 1, gamma.tag)
    return all(xi * v in gamma for v in gamma.basis)


def permutes_colors(
    coloring: LatticeColoring, f: FlatMap, points: Iterable[RingElement]
) -> Optional[dict[int, int]]:
    """The color permutation induced by ``f`` on ``points``, or None if there is none."""
    pts = list(points)
    a = np.fromiter((z.a for z in pts), dtype=np.int64, count=len(pts))
    b = np.fromiter((z.b for z in pts), dtype=np.int64, count=len(pts))
    return permutes_colors_arrays(coloring, f, a, b)


def permutes_colors_arrays(
    coloring: LatticeColoring, f: FlatMap, a: np.ndarray, b: np.ndarray
) -> Optional[dict[int, int]]:
    """Vectorized :func:`permutes_colors` on coordinate arrays of tile centers."""
    src = coloring.colors(a, b)
    if np.any(src < 0):
        raise DomainError("points must be tile centers")
    fa, fb = f.apply_arrays(a, b)
    dst = coloring.colors(fa, fb)
    if np.any(dst < 0):
        return None
    pairs = np.unique(np.stack([src, dst], axis=1), axis=0)
    if len(np.unique(pairs[:, 0])) != len(pairs) or len(np.unique(pairs[:, 1])) != len(pairs):
        return None
    return {int(c): int(d) for c, d in pairs}


@dataclass(frozen=True)
class PerfectnessTransfer:
    generator: RingElement
    lattice_level: Optional[Perfectness]
    centers_level: Optional[Perfectness]

    @property
    def agree(self) -> bool:
        return self.lattice_level == self.centers_level


def _level(chiral: bool, full: bool) -> Optional[Perfectness]:
    if chiral and full:
        return Perfectness.FULL
    return Perfectness.CHIRAL if chiral else None


def perfectness_transfer_36(beta: RingElement) -> PerfectnessTransfer:
    """Perfectness of the (beta)-coloring on Z[w] and on the triangle centers.

    On the lattice an isometry fixing 0 permutes the cosets iff it maps the
    sublattice onto itself.  On the center set the generators h1..h4 are
    checked point by point over a window covering several periods.
    """
    if beta.tag is not RingTag.EISENSTEIN:
        raise RingMismatchError("the triangle tiling lives in Z[w]")
    kind = TilingKind.TRI_36
    h1, h2, h3, h4 = kind.generators()
    coloring = build_ideal_coloring(beta, kind)
    gamma = coloring.sublattice
    lat_chiral = gamma.image(h1) == gamma
    lat_full = lat_chiral and gamma.image(h2) == gamma

    r = 2 * (gamma.h11 + gamma.h22) + 3
    a, b = (m.ravel() for m in np.meshgrid(np.arange(-r, r + 1), np.arange(-r, r + 1)))
    keep = kind.center_mask(a, b)
    a, b = a[keep], b[keep]

    def ok(h: FlatMap) -> bool:
        return permutes_colors_arrays(coloring, h, a, b) is not None

    translations = ok(h3) and ok(h4)
    chiral = translations and ok(h1)
    full = chiral and ok(h2)
    return PerfectnessTransfer(beta, _level(lat_chiral, lat_full), _level(chiral, full))
