from __future__ import annotations

import math
import warnings
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from singtile.cyclotomic import eisen, gauss, norm
from singtile.errors import DomainError, IncompatibleColoringError
from singtile.lattice_coloring import Sublattice, build_sublattice_coloring
from singtile.render import (
    NEUTRAL_FILL,
    PALETTE_ENV,
    RenderPlan,
    classify_line_image,
    default_palette,
    emit_svg,
    make_plan,
    map_point,
    mapped_tiles,
    radial_margin,
    rendered_curve_count,
    select_tiles,
    write_svg,
)
from singtile.singular_tiling import check_admissible
from singtile.tilings import TilingKind
from singtile.verifier import build_patch, verify_census

SQ, HEX, TRI = TilingKind.SQUARE_44, TilingKind.HEX_63, TilingKind.TRI_36
NS = {"s": "http://www.w3.org/2000/svg"}


def _paths(svg: str):
    root = ET.fromstring(svg.split("?>", 1)[1])
    return root.findall(".//s:path", NS)


def test_map_point_examples():
    a = gauss(-5, 5)
    assert map_point(0, a) == pytest.approx(1 + 0j)
    assert abs(map_point(complex(a), a) - 1) < 1e-9
    assert abs(map_point(complex(a) / 2, a) + 1) < 1e-9


@pytest.mark.parametrize("alpha", [gauss(4, 6), gauss(-5, 5), eisen(6), eisen(2, 10)])
def test_conformal_consistency(alpha):
    rng = np.random.default_rng(7)
    a = complex(alpha)
    z = rng.uniform(0, 10, 10_000) * np.exp(2j * np.pi * rng.uniform(0, 1, 10_000)) * abs(a)
    lhs, rhs = map_point(z + a, alpha), map_point(z, alpha)
    # exact periodicity; relative error because |phi| spans exp(+-20*pi) on this disk
    assert (np.abs(lhs - rhs) / np.abs(rhs)).max() < 1e-9
    near = z[np.abs(rhs) < 1e3]
    assert np.abs(map_point(near + a, alpha) - map_point(near, alpha)).max() < 1e-9


def test_line_image_examples():
    assert classify_line_image(gauss(1), gauss(4)).curve == "circle"
    assert classify_line_image(gauss(0, 1), gauss(4)).curve == "ray"
    assert classify_line_image(gauss(1), gauss(4, 6)).curve == "spiral"


def test_select_tiles_ring_count():
    plan = make_plan("44", gauss(4), r_min=0.2, r_max=5.0)
    tiles = select_tiles(plan)
    levels = {z.b for z in tiles}
    assert len(tiles) == 4 * len(levels)
    # every level that can reach the annulus is present
    sig = plan.margin
    for b in range(-10, 11):
        r = math.exp(-2 * math.pi * b * 4 / 16)
        assert (b in levels) == (0.2 / sig <= r <= 5.0 * sig)


@pytest.mark.parametrize("kind,alpha", [(SQ, gauss(-5, 5)), (HEX, eisen(6)), (TRI, eisen(2, 10)), (SQ, gauss(4, 6))])
def test_select_tiles_matches_enumeration(kind, alpha):
    plan = make_plan(kind, alpha, r_min=0.3, r_max=1.5)
    got = set(select_tiles(plan))
    adm = plan.alpha
    N = norm(alpha)
    patch = build_patch(kind, 400 * N)
    want = set()
    sig = plan.margin
    for z in patch.points:
        e = z * alpha.conj()
        re2 = 2 * e.a if kind is SQ else 2 * e.a - e.b
        if 0 <= re2 < 2 * N:
            if 0.3 / sig <= abs(map_point(complex(z), alpha)) <= 1.5 * sig:
                want.add(z)
    assert got == want
    assert adm.kind is kind


def test_mapped_tiles_closed_and_within_margin():
    plan = make_plan("36", eisen(-5, 5), eisen(1, 2), r_min=0.2, r_max=2.0)
    sig = plan.sigma_margin
    for t in mapped_tiles(plan):
        assert t.polyline[0] == t.polyline[-1]
        r = np.abs(t.polyline)
        assert r.min() >= 0.2 / sig - 1e-12 and r.max() <= 2.0 * sig + 1e-12
        assert t.color is not None


def test_radial_margin_square():
    adm = check_admissible(SQ, gauss(4))
    assert radial_margin(adm) == pytest.approx(math.exp(math.pi / 4))


def test_plan_validation():
    with pytest.raises(DomainError):
        make_plan("44", gauss(4), r_min=1.0, r_max=1.0)
    with pytest.raises(DomainError):
        make_plan("44", gauss(4), r_min=0.0, r_max=1.0)
    with pytest.raises(ValueError):
        make_plan("44", gauss(4), samples=1)
    with pytest.raises(IncompatibleColoringError):
        make_plan("44", gauss(4), gauss(3))


def test_uncolored_plan_is_neutral():
    paths = _paths(emit_svg(make_plan("63", eisen(6), r_min=0.3, r_max=1.2)))
    assert paths and {p.get("fill") for p in paths} == {NEUTRAL_FILL}


def test_svg_metadata_and_determinism(tmp_path):
    plan = make_plan("44", gauss(-5, 5), gauss(5), r_min=0.3, r_max=1.5)
    a, b = emit_svg(plan), emit_svg(plan)
    assert a == b
    head = a.split("<svg", 1)[0]
    for key in ("alpha: -5+5i", "kind: (4^4)", "beta: 5", "class: 2", "symmetry: D5"):
        assert key in head
    out = tmp_path / "t.svg"
    write_svg(plan, out)
    assert out.read_text() == a
    fills = {p.get("fill") for p in _paths(a)}
    assert len(fills) <= 25


def test_svg_rotation_symmetric_by_construction():
    """For alpha=4, beta=2 a quarter turn of the image is the translation by 1 upstairs;
    that translation permutes the 4 colors, so the rotated figure is a recoloring."""
    plan = make_plan("44", gauss(4), gauss(2), r_min=0.2, r_max=5.0)
    tiles = select_tiles(plan)
    col = plan.coloring
    by_center = {z: col.color(z) for z in tiles}
    perm = {}
    for z in tiles:
        w = z + 1 if z.a + 1 < 4 else z + 1 - 4
        perm.setdefault(by_center[z], by_center[w])
        assert perm[by_center[z]] == by_center[w]
    assert sorted(perm.values()) == [0, 1, 2, 3]


def test_palette_env_and_cycling(monkeypatch):
    monkeypatch.setenv(PALETTE_ENV, "#111111,#222222")
    assert default_palette(5) == ["#111111", "#222222"]
    plan = make_plan("44", gauss(4), gauss(2), r_min=0.2, r_max=5.0)
    with pytest.warns(UserWarning, match="cycling"):
        svg = emit_svg(plan)
    assert {p.get("fill") for p in _paths(svg)} == {"#111111", "#222222"}
    monkeypatch.delenv(PALETTE_ENV)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        svg = emit_svg(plan)
    assert len({p.get("fill") for p in _paths(svg)}) == 4


def test_default_palette_seeded():
    assert default_palette(6, "2+w") == default_palette(6, "2+w")
    assert default_palette(6, "2+w") != default_palette(6, "3")
    assert len(set(default_palette(12, "x"))) == 12


@pytest.mark.parametrize(
    "kind,alpha", [(SQ, gauss(4, 6)), (SQ, gauss(-5, 5)), (SQ, gauss(4)), (HEX, eisen(6)), (HEX, eisen(10, 2)), (TRI, eisen(2, 10)), (TRI, eisen(-5, 5))]
)
def test_rendered_census_agrees(kind, alpha):
    adm = check_admissible(kind, alpha)
    for d in kind.edge_directions():
        m = verify_census(adm, d)
        assert rendered_curve_count(adm, d) == m.count


def test_circle_radii_geometric():
    """Class 3: horizontal edges y = k + 1/2 map to circles with a constant radius ratio."""
    alpha = gauss(4)
    radii = [abs(map_point(0.3 + 1j * (k + 0.5), alpha)) for k in range(-4, 5)]
    ratios = np.array(radii[:-1]) / np.array(radii[1:])
    assert np.ptp(ratios) < 1e-9
    assert ratios[0] == pytest.approx(math.exp(2 * math.pi * 4 / 16), rel=1e-12)
    # every point of one such line lands on the same circle
    xs = np.linspace(-3, 3, 50)
    assert np.ptp(np.abs(map_point(xs + 0.5j, alpha))) < 1e-12


def test_render_plan_accepts_sublattice_coloring():
    adm = check_admissible(SQ, gauss(4))
    col = build_sublattice_coloring(Sublattice.from_basis(gauss(2), gauss(0, 1)), SQ)
    plan = RenderPlan(adm, col, 0.2, 5.0)
    assert len({p.get("fill") for p in _paths(emit_svg(plan))}) == 2
