from __future__ import annotations

import numpy as np
import pytest

from singtile.cyclotomic import EISENSTEIN, GAUSS, RingElement, divides, eisen, enumerate_elements, gauss, norm
from singtile.errors import DomainError, RingMismatchError
from singtile.lattice_coloring import (
    Perfectness,
    Sublattice,
    all_sublattices,
    build_ideal_coloring,
    build_sublattice_coloring,
    coset_color,
    is_chirally_perfect_sublattice,
    permutes_colors,
    perfectness_transfer_36,
)
from singtile.tilings import FlatMap, TilingKind, coset36, parse_kind

SQ, HEX, TRI = TilingKind.SQUARE_44, TilingKind.HEX_63, TilingKind.TRI_36


def _window(tag, r):
    return [RingElement(a, b, tag) for a in range(-r, r + 1) for b in range(-r, r + 1)]


# ------------------------------------------------------------------ tilings


def test_generators_table():
    h1, h2, h3, h4 = SQ.generators()
    assert h1(gauss(1)) == gauss(0, 1) and h2(gauss(2, 3)) == gauss(2, -3)
    assert (h3.shift, h4.shift) == (gauss(1), gauss(0, 1))
    h1, h2, h3, h4 = HEX.generators()
    assert h1.unit == eisen(1, 1) and (h3.shift, h4.shift) == (eisen(1), eisen(0, 1))
    h1, h2, h3, h4 = TRI.generators()
    assert (h3.shift, h4.shift) == (eisen(2, 1), eisen(1, -1))
    assert h1.unit**6 == eisen(1) and h1.unit**3 == eisen(-1)


def test_diameter_bounds_exact():
    assert [k.diameter_sq for k in TilingKind] == [2, pytest.approx(4 / 3), 3]
    assert str(HEX.diameter_sq) == "4/3"


def test_triangle_center_decomposition():
    pts = _window(EISENSTEIN, 6)
    classes = {coset36(z.a, z.b) for z in pts}
    assert classes == {0, 1, 2}
    for z in pts:
        in_p0 = divides(eisen(2, 1), z) is not None
        assert in_p0 == (coset36(z.a, z.b) == 0) == (not TRI.is_center(z))
        if coset36(z.a, z.b) == 1:
            assert divides(eisen(2, 1), z - 1) is not None
        if coset36(z.a, z.b) == 2:
            assert divides(eisen(2, 1), z + 1) is not None


def test_flatmap_compose():
    h1, h2, h3, _ = HEX.generators()
    f = h3.compose(h2).compose(h1)
    for z in _window(EISENSTEIN, 3):
        assert f(z) == h3(h2(h1(z)))
    a = np.arange(-3, 4)
    b = np.arange(2, 9)
    na, nb = f.apply_arrays(a, b)
    assert all(f(RingElement(int(x), int(y), EISENSTEIN)) == RingElement(int(u), int(v), EISENSTEIN)
               for x, y, u, v in zip(a, b, na, nb))


def test_parse_kind():
    assert parse_kind("4^4") is SQ and parse_kind("(6^3)") is HEX and parse_kind("tri") is TRI


# ------------------------------------------------------------------ sublattices


def test_hnf_from_basis():
    g = Sublattice.from_basis(gauss(1, 1), gauss(2))
    assert g == Sublattice.ideal(gauss(1, 1)) and g.index == 2
    assert Sublattice.from_basis(gauss(2), gauss(0, 2)) == Sublattice.ideal(gauss(2))
    with pytest.raises(DomainError):
        Sublattice.from_basis(gauss(1, 1), gauss(2, 2))
    with pytest.raises(RingMismatchError):
        Sublattice.from_basis(gauss(1), eisen(0, 1))


def test_membership_exact():
    g = Sublattice.from_basis(gauss(3, 1), gauss(1, 4))
    assert g.index == 11
    for z in _window(GAUSS, 8):
        # z = s*v1 + t*v2 with integer s, t
        det = 3 * 4 - 1 * 1
        s_num = z.a * 4 - z.b * 1
        t_num = 3 * z.b - 1 * z.a
        assert (z in g) == (s_num % det == 0 and t_num % det == 0)


def test_coset_color_examples():
    assert coset_color(gauss(2), gauss(0)) == coset_color(gauss(2), gauss(2, 2))
    assert coset_color(gauss(2, 1), gauss(0)) != coset_color(gauss(2, 1), gauss(1))


def test_color_counts():
    assert build_ideal_coloring(eisen(2, 10), TRI).color_count == 56
    assert build_ideal_coloring(eisen(2), TRI).color_count == 4
    for kind in TilingKind:
        one = RingElement(1, 0, kind.tag)
        assert build_ideal_coloring(one, kind).color_count == 1


def test_chirally_perfect_sublattice_examples():
    assert is_chirally_perfect_sublattice(Sublattice.from_basis(gauss(2), gauss(0, 2)))
    assert is_chirally_perfect_sublattice(Sublattice.from_basis(gauss(1, 1), gauss(2)))
    assert not is_chirally_perfect_sublattice(Sublattice.from_basis(gauss(2), gauss(0, 1)))


def test_perfectness_labels():
    assert build_ideal_coloring(gauss(5), SQ).perfectness is Perfectness.FULL
    assert build_ideal_coloring(gauss(2, 1), SQ).perfectness is Perfectness.CHIRAL
    assert build_sublattice_coloring(Sublattice.from_basis(gauss(2), gauss(0, 1)), SQ).perfectness is None


def test_non_center_has_no_color():
    col = build_ideal_coloring(eisen(2), TRI)
    with pytest.raises(DomainError):
        col.color(eisen(2, 1))
    assert col.colors(np.array([2, 1]), np.array([1, 0]))[0] == -1


@pytest.mark.parametrize("tag", [GAUSS, EISENSTEIN])
def test_coset_count_matches_norm(tag):
    for beta in enumerate_elements(tag, 100):
        r = 3 * int(np.ceil(abs(complex(beta)))) + 1
        a, b = np.meshgrid(np.arange(-r, r + 1), np.arange(-r, r + 1))
        kind = SQ if tag is GAUSS else HEX
        ids = build_ideal_coloring(beta, kind).colors(a, b)
        assert len(np.unique(ids)) == norm(beta)


def test_triangle_coset_census():
    """Cosets meeting the center set: 2/3 of them when (2+w) | beta, all of them otherwise."""
    for beta in enumerate_elements(EISENSTEIN, 100):
        full = Sublattice.ideal(beta)
        r = 3 * int(np.ceil(abs(complex(beta)))) + 3
        a, b = np.meshgrid(np.arange(-r, r + 1), np.arange(-r, r + 1))
        mask = TRI.center_mask(a, b)
        ra, rb = full.reduce_arrays(a[mask], b[mask])
        met = len(set(zip(ra.tolist(), rb.tolist())))
        expected = 2 * norm(beta) // 3 if divides(eisen(2, 1), beta) is not None else norm(beta)
        assert met == expected == build_ideal_coloring(beta, TRI).color_count


@pytest.mark.parametrize("tag", [GAUSS, EISENSTEIN])
def test_translations_permute_colors(tag):
    kind = SQ if tag is GAUSS else HEX
    window = _window(tag, 7)
    for index in (2, 3, 4, 6):
        for gamma in all_sublattices(tag, index):
            col = build_sublattice_coloring(gamma, kind)
            for t in (RingElement(1, 0, tag), RingElement(0, 1, tag), RingElement(2, -3, tag)):
                assert permutes_colors(col, FlatMap.translation(t), window) is not None


@pytest.mark.parametrize("tag", [GAUSS, EISENSTEIN])
def test_rotation_criterion_small_index(tag):
    """Rotation by the generating unit permutes colors iff the sublattice is an ideal."""
    kind = SQ if tag is GAUSS else HEX
    h1 = kind.generators()[0]
    checked = 0
    for index in range(1, 26):
        for gamma in all_sublattices(tag, index):
            col = build_sublattice_coloring(gamma, kind)
            r = gamma.h11 + gamma.h22 + 1
            window = _window(tag, r)
            assert (permutes_colors(col, h1, window) is not None) == is_chirally_perfect_sublattice(gamma)
            checked += 1
    assert checked > 500


@pytest.mark.parametrize(
    "beta,level",
    [
        (eisen(1), Perfectness.FULL),
        (eisen(1, 2), Perfectness.FULL),
        (eisen(2, 3), Perfectness.CHIRAL),
        (eisen(2), Perfectness.FULL),
        (eisen(2, 1), Perfectness.FULL),
        (eisen(1, 3), Perfectness.CHIRAL),
    ],
)
def test_perfectness_transfer_36(beta, level):
    rep = perfectness_transfer_36(beta)
    assert rep.lattice_level is level
    assert rep.centers_level is level


def test_perfectness_transfer_36_sweep():
    for beta in enumerate_elements(EISENSTEIN, 49):
        assert perfectness_transfer_36(beta).agree, beta


def test_all_sublattices_count():
    # the number of index-n sublattices of Z^2 is sigma(n)
    for n in range(1, 13):
        sigma = sum(d for d in range(1, n + 1) if n % d == 0)
        assert len(all_sublattices(GAUSS, n)) == sigma
        assert len(set(all_sublattices(GAUSS, n))) == sigma
