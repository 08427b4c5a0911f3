"""Singular tilings of the punctured plane obtained from the regular tilings
by the map ``z -> exp(2*pi*i*z/alpha)``, with exact symmetry and coloring
analysis and an independent brute-force verifier."""

__version__ = "0.1.0"

from types import ModuleType as _ModuleType

from .cyclotomic import (
    EISENSTEIN,
    GAUSS,
    Factorization,
    RingElement,
    RingTag,
    canonical_associate,
    conj,
    divides,
    divisors_up_to_associates,
    eisen,
    factorize,
    gauss,
    gcd,
    is_associate,
    is_balanced,
    norm,
    parse_element,
    units,
)
from .errors import (
    DomainError,
    InadmissibleAlphaError,
    IncompatibleColoringError,
    ParseError,
    RingMismatchError,
    SingtileError,
)
from .lattice_coloring import (
    LatticeColoring,
    Perfectness,
    Sublattice,
    build_ideal_coloring,
    build_sublattice_coloring,
    coset_color,
)
from .singular_tiling import (
    AdmissibleAlpha,
    TilingClass,
    check_admissible,
    classify_line_image,
    color_symmetry_transfer,
    compatibility,
    compatible_ideal_report,
    curve_census,
    symmetry_group,
    tiling_report,
)
from .tilings import FlatMap, TilingKind, parse_kind

__all__ = sorted(
    n for n, v in list(globals().items()) if not n.startswith("_") and not isinstance(v, _ModuleType)
)
