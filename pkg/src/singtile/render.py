"""Draw the singular tilings as SVG.

Flat tiles are rebuilt from their centers, their edges are sampled, pushed
through ``z -> exp(2*pi*i*z*conj(alpha)/|alpha|**2)`` in double precision and
written as closed paths.  Only one representative center per fiber is drawn
(alpha-coordinate in [0, 1)), restricted to the tiles that reach a chosen
annulus around the singular point.
"""

from __future__ import annotations

import colorsys
import logging
import math
import os
import warnings
import zlib
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cyclotomic import GAUSS, RingElement, conj, norm
from .errors import DomainError, IncompatibleColoringError
from .lattice_coloring import LatticeColoring, build_ideal_coloring
from .singular_tiling import (
    AdmissibleAlpha,
    LineImage,
    check_admissible,
    classify_line_image,
    compatibility,
    symmetry_group,
)
from .tilings import TilingKind, parse_kind

log = logging.getLogger(__name__)

__all__ = [
    "RenderPlan",
    "MappedTile",
    "PALETTE_ENV",
    "make_plan",
    "map_point",
    "classify_line_image",
    "tile_vertices",
    "radial_margin",
    "select_tiles",
    "mapped_tiles",
    "emit_svg",
    "write_svg",
    "rendered_curve_count",
    "default_palette",
]

PALETTE_ENV = "SINGTILE_PALETTE"
NEUTRAL_FILL = "#d9d9d9"
_SQRT3 = math.sqrt(3.0)


def map_point(z, alpha: RingElement):
    """``exp(2*pi*i*conj(alpha)*z/|alpha|**2)``; accepts scalars or numpy arrays."""
    a = complex(alpha)
    return np.exp(2j * np.pi * np.conj(a) * np.asarray(z) / norm(alpha))


def _sixth(k: int) -> complex:
    return complex(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3))


def _tile_offsets(kind: TilingKind, center: RingElement) -> list[complex]:
    if kind is TilingKind.SQUARE_44:
        return [0.5 - 0.5j, 0.5 + 0.5j, -0.5 + 0.5j, -0.5 - 0.5j]
    if kind is TilingKind.HEX_63:
        r = 1 / _SQRT3
        return [r * complex(math.cos(t), math.sin(t)) for t in np.pi / 6 + np.pi / 3 * np.arange(6)]
    # vertices in (2+w): c + {1, w, w**2} for centers in -1 + (2+w), the negatives otherwise
    sign = 1 if (center.a + center.b) % 3 == 2 else -1
    return [sign * _sixth(k) for k in (0, 2, 4)]


def tile_vertices(kind: TilingKind, center: RingElement) -> list[complex]:
    c = complex(center)
    return [c + v for v in _tile_offsets(kind, center)]


def radial_margin(adm: AdmissibleAlpha) -> float:
    """Factor by which the image of one tile can stretch radially around its center."""
    a = complex(adm.alpha)
    probe = adm.alpha.one() if adm.kind is not TilingKind.TRI_36 else RingElement(1, 0, adm.alpha.tag)
    offsets = _tile_offsets(adm.kind, probe) + _tile_offsets(adm.kind, -probe)
    delta = max(abs((v * a.conjugate()).imag) for v in offsets) / norm(adm.alpha)
    return math.exp(2 * math.pi * delta)


@dataclass(frozen=True)
class RenderPlan:
    alpha: AdmissibleAlpha
    coloring: Optional[LatticeColoring]
    r_min: float
    r_max: float
    samples: int = 24
    palette: Optional[tuple[str, ...]] = None
    size: int = 800
    stroke: str = "#202020"

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max):
            raise DomainError(f"empty annulus [{self.r_min}, {self.r_max}]")
        if self.samples < 2:
            raise ValueError("need at least 2 samples per edge")
        if self.coloring is not None and not compatibility(self.coloring, self.alpha):
            raise IncompatibleColoringError(
                f"the coloring by {self.coloring.generator_text} is not compatible with "
                f"α = {self.alpha.alpha}"
            )

    @property
    def margin(self) -> float:
        """Radial stretch between a tile's center and its farthest vertex."""
        return radial_margin(self.alpha)

    @property
    def sigma_margin(self) -> float:
        """Radial stretch across a whole tile; every drawn point lies within
        ``[r_min / sigma_margin, r_max * sigma_margin]``."""
        return self.margin**2


def make_plan(
    kind,
    alpha: RingElement,
    beta: Optional[RingElement] = None,
    r_min: float = 0.05,
    r_max: float = 1.0,
    **kwargs,
) -> RenderPlan:
    kind = parse_kind(kind)
    adm = check_admissible(kind, alpha)
    coloring = build_ideal_coloring(beta, kind) if beta is not None else None
    return RenderPlan(adm, coloring, r_min, r_max, **kwargs)


def select_tiles(plan: RenderPlan) -> list[RingElement]:
    """Centers, one per fiber, whose image lies in the margin-expanded annulus.

    Uses ``log|phi(z)| = -2*pi*Im(z*conj(alpha))/|alpha|**2``.
    """
    adm = plan.alpha
    alpha = adm.alpha
    tag = alpha.tag
    N = norm(alpha)
    sig = plan.margin
    lo = -math.log(plan.r_max * sig) / (2 * math.pi)
    hi = -math.log(plan.r_min / sig) / (2 * math.pi)
    a = complex(alpha)
    corners = [(c1 + 1j * c2) * a for c1 in (0.0, 1.0) for c2 in (lo, hi)]
    if tag is GAUSS:
        xs = [c.real for c in corners]
        ys = [c.imag for c in corners]
    else:
        ys = [2 * c.imag / _SQRT3 for c in corners]
        xs = [c.real + y / 2 for c, y in zip(corners, ys)]
    ra = np.arange(math.floor(min(xs)) - 1, math.ceil(max(xs)) + 2, dtype=np.int64)
    rb = np.arange(math.floor(min(ys)) - 1, math.ceil(max(ys)) + 2, dtype=np.int64)
    A, B = (m.ravel() for m in np.meshgrid(ra, rb, indexing="ij"))
    ca, cb = conj(alpha).a, conj(alpha).b
    if tag is GAUSS:
        ea, eb = A * ca - B * cb, A * cb + B * ca
        re2, im = 2 * ea, eb.astype(float)
    else:
        ea, eb = A * ca - B * cb, A * cb + B * ca - B * cb
        re2, im = 2 * ea - eb, eb * (_SQRT3 / 2)
    keep = (re2 >= 0) & (re2 < 2 * N)  # alpha-coordinate in [0, 1), exact
    c2 = im / N
    keep &= (c2 >= lo) & (c2 <= hi)
    keep &= adm.kind.center_mask(A, B)
    pts = [RingElement(int(x), int(y), tag) for x, y in zip(A[keep], B[keep])]
    return sorted(pts, key=RingElement.sort_key)


@dataclass(frozen=True)
class MappedTile:
    center: RingElement
    polyline: np.ndarray  # closed: first point repeated at the end
    color: Optional[int]


def _edge_samples(z0: complex, z1: complex, plan: RenderPlan, scale: float) -> int:
    r = float(np.mean(np.abs(map_point(np.array([z0, z1]), plan.alpha.alpha))))
    arc = 2 * math.pi / math.sqrt(plan.alpha.norm) * r * abs(z1 - z0) * scale
    return max(plan.samples, int(math.ceil(arc / 2.0)))


def mapped_tiles(plan: RenderPlan) -> list[MappedTile]:
    scale = plan.size / (2 * plan.r_max)
    out = []
    for c in select_tiles(plan):
        verts = tile_vertices(plan.alpha.kind, c)
        pieces = []
        for z0, z1 in zip(verts, verts[1:] + verts[:1]):
            k = _edge_samples(z0, z1, plan, scale)
            t = np.linspace(0.0, 1.0, k, endpoint=False)
            pieces.append(z0 + (z1 - z0) * t)
        flat = np.concatenate(pieces + [np.array([verts[0]])])
        poly = map_point(flat, plan.alpha.alpha)
        color = plan.coloring.color(c) if plan.coloring is not None else None
        out.append(MappedTile(c, poly, color))
    return out


def default_palette(n: int, seed_text: str = "") -> list[str]:
    """``n`` hues spaced evenly around the wheel, rotated by a hash of ``seed_text``."""
    env = os.environ.get(PALETTE_ENV)
    if env:
        return [c.strip() for c in env.split(",") if c.strip()]
    offset = (zlib.crc32(seed_text.encode()) % 360) / 360.0
    out = []
    for k in range(n):
        r, g, b = colorsys.hls_to_rgb((offset + k / max(n, 1)) % 1.0, 0.58, 0.62)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return out


def _resolve_palette(plan: RenderPlan) -> list[str]:
    if plan.coloring is None:
        return [NEUTRAL_FILL]
    n = plan.coloring.color_count
    pal = list(plan.palette) if plan.palette else default_palette(n, plan.coloring.generator_text)
    if len(pal) < n:
        warnings.warn(f"palette has {len(pal)} colors for {n} classes; cycling", stacklevel=3)
    return pal


def _metadata(plan: RenderPlan) -> str:
    adm = plan.alpha
    sym = symmetry_group(adm)
    beta = plan.coloring.generator_text if plan.coloring is not None else "none"
    lines = [
        f"alpha: {adm.alpha}",
        f"kind: {adm.kind.label}",
        f"beta: {beta}",
        f"class: {int(adm.cls)}",
        f"symmetry: {sym.label}",
        f"annulus: [{plan.r_min}, {plan.r_max}]",
    ]
    # "--" may not appear inside an XML comment
    return "\n".join(line.replace("--", "- -") for line in lines)


def emit_svg(plan: RenderPlan) -> str:
    tiles = mapped_tiles(plan)
    pal = _resolve_palette(plan)
    R, S = plan.r_max, plan.size
    scale = S / (2 * R)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!--\n{_metadata(plan)}\n-->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{S}" height="{S}" '
        f'viewBox="0 0 {S} {S}">',
        f'<rect x="0" y="0" width="{S}" height="{S}" fill="white"/>',
        f'<g stroke="{plan.stroke}" stroke-width="0.6" stroke-linejoin="round">',
    ]
    for t in tiles:
        x = (t.polyline.real + R) * scale
        y = (R - t.polyline.imag) * scale
        d = "M" + " L".join(f"{u:.3f},{v:.3f}" for u, v in zip(x, y)) + " Z"
        fill = pal[t.color % len(pal)] if t.color is not None else pal[0]
        parts.append(f'<path d="{d}" fill="{fill}" data-center="{t.center}"/>')
    parts += ["</g>", "</svg>", ""]
    return "\n".join(parts)


def write_svg(plan: RenderPlan, path) -> int:
    text = emit_svg(plan)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    log.info("wrote %s", path)
    return len(text)


def rendered_curve_count(adm: AdmissibleAlpha, direction: RingElement, window: int = 0) -> Optional[int]:
    """Distinct image curves of the edge lines parallel to ``direction``, measured numerically.

    Each spiral or ray image crosses the unit circle exactly once, so distinct
    crossing angles count distinct curves.  Circle families return None.
    """
    kind = adm.kind
    img: LineImage = classify_line_image(direction, adm.alpha)
    if img.curve == "circle":
        return None
    t1, t2 = (complex(t) for t in kind.translation_basis())
    d = complex(direction)
    a = complex(adm.alpha)
    N = adm.norm
    K = window or int(math.isqrt(N) * 2 + 2)
    angles = set()
    for s in range(-K, K + 1):
        for u in range(-K, K + 1):
            p = s * t1 + u * t2
            # solve Im((p + t*d)*conj(alpha)) = 0 for t
            t = -(p * a.conjugate()).imag / (d * a.conjugate()).imag
            z = p + t * d
            ang = (2 * math.pi * (z * a.conjugate()).real / N) % (2 * math.pi)
            angles.add(round(ang, 6) % round(2 * math.pi, 6))
    return len(angles)
