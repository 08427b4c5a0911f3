"""The three regular tilings, their center sets and their symmetry generators.

Tile centers: Z[i] for squares, Z[w] for hexagons, and Z[w] minus the ideal
(2+w) for triangles (the ideal itself is the vertex set).  Symmetries are
affine maps ``z -> u*z + t`` or ``z -> u*conj(z) + t`` with ``u`` a unit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import EISENSTEIN, GAUSS, RingElement, RingTag, conj, divides, eisen, gauss
from .errors import ParseError, RingMismatchError

__all__ = ["TilingKind", "FlatMap", "parse_kind", "P0_GENERATOR"]

P0_GENERATOR = eisen(2, 1)


@dataclass(frozen=True)
class FlatMap:
    """An isometry ``z -> unit * (conj(z) if conjugate else z) + shift`` of a lattice."""

    unit: RingElement
    conjugate: bool
    shift: RingElement

    def __call__(self, z: RingElement) -> RingElement:
        w = conj(z) if self.conjugate else z
        return self.unit * w + self.shift

    def apply_arrays(self, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized form on coordinate arrays (exact int64 arithmetic)."""
        if self.conjugate:
            if self.unit.tag is GAUSS:
                a, b = a, -b
            else:
                a, b = a - b, -b
        u, v = self.unit.a, self.unit.b
        if self.unit.tag is GAUSS:
            na, nb = u * a - v * b, u * b + v * a
        else:
            na, nb = u * a - v * b, u * b + v * a - v * b
        return na + self.shift.a, nb + self.shift.b

    def compose(self, other: FlatMap) -> FlatMap:
        """``self o other``."""
        unit = self.unit * (conj(other.unit) if self.conjugate else other.unit)
        return FlatMap(unit, self.conjugate != other.conjugate, self(other.shift))

    @property
    def is_translation(self) -> bool:
        return not self.conjugate and self.unit == self.unit.one()

    def __str__(self) -> str:
        arg = "conj(z)" if self.conjugate else "z"
        one = self.unit.one()
        if self.unit == one:
            lin = arg
        elif self.unit == -one:
            lin = f"-{arg}"
        else:
            lin = f"({self.unit})*{arg}"
        if self.shift.is_zero():
            return lin
        return f"{lin}+({self.shift})"

    @classmethod
    def translation(cls, t: RingElement) -> FlatMap:
        return cls(t.one(), False, t)

    @classmethod
    def identity(cls, tag: RingTag) -> FlatMap:
        one = RingElement(1, 0, tag)
        return cls(one, False, one.zero())


class TilingKind(enum.Enum):
    SQUARE_44 = "44"
    HEX_63 = "63"
    TRI_36 = "36"

    @property
    def tag(self) -> RingTag:
        return GAUSS if self is TilingKind.SQUARE_44 else EISENSTEIN

    @property
    def label(self) -> str:
        return {"44": "(4^4)", "63": "(6^3)", "36": "(3^6)"}[self.value]

    @property
    def diameter_sq(self) -> Fraction:
        """Squared maximal distance between two boundary points of one tile."""
        return {"44": Fraction(2), "63": Fraction(4, 3), "36": Fraction(3)}[self.value]

    @property
    def diameter_text(self) -> str:
        return {"44": "√2", "63": "2√3/3", "36": "√3"}[self.value]

    def generators(self) -> tuple[FlatMap, FlatMap, FlatMap, FlatMap]:
        """h1 (rotation), h2 (reflection), h3, h4 (translations) of the flat tiling."""
        tag = self.tag
        one = RingElement(1, 0, tag)
        zero = one.zero()
        if self is TilingKind.SQUARE_44:
            rot, t3, t4 = gauss(0, 1), gauss(1), gauss(0, 1)
        elif self is TilingKind.HEX_63:
            rot, t3, t4 = eisen(1, 1), eisen(1), eisen(0, 1)
        else:
            rot, t3, t4 = eisen(1, 1), eisen(2, 1), eisen(1, -1)
        return (
            FlatMap(rot, False, zero),
            FlatMap(one, True, zero),
            FlatMap.translation(t3),
            FlatMap.translation(t4),
        )

    def translation_basis(self) -> tuple[RingElement, RingElement]:
        """Generators of the translation orbit of the origin."""
        h = self.generators()
        return h[2].shift, h[3].shift

    def _check(self, z: RingElement) -> None:
        if z.tag is not self.tag:
            raise RingMismatchError(
                f"{self.label} lives in Z[{self.tag.symbol}], got a Z[{z.tag.symbol}] element"
            )

    def in_translation_lattice(self, z: RingElement) -> bool:
        self._check(z)
        if self is TilingKind.TRI_36:
            return divides(P0_GENERATOR, z) is not None
        return True

    def is_center(self, z: RingElement) -> bool:
        self._check(z)
        if self is TilingKind.TRI_36:
            return (z.a + z.b) % 3 != 0
        return True

    def center_mask(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self is TilingKind.TRI_36:
            return (a + b) % 3 != 0
        return np.ones(np.shape(a), dtype=bool)

    def edge_directions(self) -> tuple[RingElement, ...]:
        """One lattice direction per parallel class of tile edges."""
        if self is TilingKind.SQUARE_44:
            return (gauss(1), gauss(0, 1))
        if self is TilingKind.HEX_63:
            # perpendicular to the neighbour directions 1, w, w**2
            return (eisen(1, 2), eisen(2, 1), eisen(1, -1))
        # edges of triangles join vertices in (2+w)
        return (eisen(2, 1), eisen(-1, 1), eisen(-1, -2))


def coset36(a, b):
    """Index of ``a + b*w`` among P0 = (2+w), P2 = 1 + P0, P1 = -1 + P0 (0, 1, 2)."""
    return (a + b) % 3


_KIND_ALIASES = {
    "44": TilingKind.SQUARE_44,
    "4^4": TilingKind.SQUARE_44,
    "(4^4)": TilingKind.SQUARE_44,
    "square": TilingKind.SQUARE_44,
    "63": TilingKind.HEX_63,
    "6^3": TilingKind.HEX_63,
    "(6^3)": TilingKind.HEX_63,
    "hex": TilingKind.HEX_63,
    "36": TilingKind.TRI_36,
    "3^6": TilingKind.TRI_36,
    "(3^6)": TilingKind.TRI_36,
    "tri": TilingKind.TRI_36,
}


def parse_kind(text: str | TilingKind) -> TilingKind:
    if isinstance(text, TilingKind):
        return text
    try:
        return _KIND_ALIASES[text.strip().lower()]
    except KeyError:
        raise ParseError(f"unknown tiling {text!r} (use 44, 63 or 36)", text, 0) from None
