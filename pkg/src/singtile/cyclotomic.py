"""Exact arithmetic in the Gaussian integers Z[i] and the Eisenstein integers Z[w].

Elements are stored as integer pairs ``(a, b)`` meaning ``a + b*xi`` where
``xi`` is ``i`` (``i**2 == -1``) or ``w = exp(2*pi*i/3)`` (``w**2 == -1 - w``).
Both rings are Euclidean, so gcds, factorizations and divisor lists are
computed with plain Euclidean division.

Textual syntax: ``a``, ``a+bi``, ``a-bi``, ``a+bw``, ``a-bw`` with optional
spaces; a bare symbol has coefficient one (``i``, ``-w``, ``3+w``).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, prod
from typing import Iterable, Optional

from sympy import factorint
from sympy.ntheory import sqrt_mod

from .errors import DomainError, ParseError, RingMismatchError

__all__ = [
    "RingTag",
    "RingElement",
    "Factorization",
    "GAUSS",
    "EISENSTEIN",
    "gauss",
    "eisen",
    "parse_element",
    "conj",
    "norm",
    "units",
    "divides",
    "divmod_nearest",
    "gcd",
    "is_associate",
    "canonical_associate",
    "is_balanced",
    "ramified_prime",
    "factorize",
    "divisors_up_to_associates",
]


class RingTag(enum.Enum):
    GAUSS = "i"
    EISENSTEIN = "w"

    @property
    def symbol(self) -> str:
        return self.value


GAUSS = RingTag.GAUSS
EISENSTEIN = RingTag.EISENSTEIN

_SQRT3_2 = 3**0.5 / 2


@dataclass(frozen=True, slots=True)
class RingElement:
    a: int
    b: int
    tag: RingTag

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError(f"coefficients must be integers, got {self.a!r}, {self.b!r}")

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.tag is not self.tag:
                raise RingMismatchError(
                    f"cannot combine Z[{self.tag.symbol}] and Z[{other.tag.symbol}] elements"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RingElement(other, 0, self.tag)
        return NotImplemented

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RingElement(self.a + o.a, self.b + o.b, self.tag)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RingElement(self.a - o.a, self.b - o.b, self.tag)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return RingElement(-self.a, -self.b, self.tag)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        if self.tag is GAUSS:
            return RingElement(a * c - b * d, a * d + b * c, self.tag)
        # w**2 = -1 - w
        return RingElement(a * c - b * d, a * d + b * c - b * d, self.tag)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not ring elements")
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- helpers ----------------------------------------------------------
    def one(self) -> RingElement:
        return RingElement(1, 0, self.tag)

    def zero(self) -> RingElement:
        return RingElement(0, 0, self.tag)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conj(self) -> RingElement:
        return conj(self)

    def norm(self) -> int:
        return norm(self)

    def __complex__(self) -> complex:
        if self.tag is GAUSS:
            return complex(self.a, self.b)
        return complex(self.a - self.b / 2, self.b * _SQRT3_2)

    def sort_key(self) -> tuple[int, int, int]:
        return (norm(self), self.a, self.b)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"RingElement({format_element(self)!r})"


def gauss(a: int, b: int = 0) -> RingElement:
    return RingElement(a, b, GAUSS)


def eisen(a: int, b: int = 0) -> RingElement:
    return RingElement(a, b, EISENSTEIN)


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(p**e for p, e in factors)``; primes canonical and pairwise non-associate."""

    unit: RingElement
    factors: tuple[tuple[RingElement, int], ...]

    def expand(self) -> RingElement:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out

    def exponent_of(self, prime: RingElement) -> int:
        for p, e in self.factors:
            if is_associate(p, prime):
                return e
        return 0


# ---------------------------------------------------------------------------
# text syntax


def format_element(z: RingElement) -> str:
    sym = z.tag.symbol
    a, b = z.a, z.b
    if b == 0:
        return str(a)
    coef = {1: "", -1: "-"}.get(b, str(b))
    if a == 0:
        return f"{coef}{sym}"
    sign = "-" if b < 0 else "+"
    mag = abs(b)
    return f"{a}{sign}{'' if mag == 1 else mag}{sym}"


_SYMBOLS = {"i": GAUSS, "w": EISENSTEIN}


def parse_element(text: str, tag: Optional[RingTag] = None) -> RingElement:
    """Parse ``a+bi`` / ``a+bw`` style text.

    A symbol-free integer needs ``tag`` to know its ring.  When ``tag`` is
    given, a symbol of the other ring is a RingMismatchError.
    """
    s = text
    n = len(s)
    pos = 0
    terms: list[tuple[int, Optional[str], int]] = []  # (coef, symbol, start)

    def skip_ws(p: int) -> int:
        while p < n and s[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty ring element", text, pos)
    first = True
    while True:
        pos = skip_ws(pos)
        if pos == n:
            break
        start = pos
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        dstart = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        digits = s[dstart:pos]
        pos = skip_ws(pos)
        if pos < n and s[pos] == "*" and digits:
            pos = skip_ws(pos + 1)
        symbol = None
        if pos < n and s[pos].isalpha():
            ch = s[pos]
            if ch not in _SYMBOLS:
                raise ParseError(f"unknown symbol {ch!r}", text, pos)
            symbol = ch
            pos += 1
        if not digits and symbol is None:
            raise ParseError("expected an integer or a ring symbol", text, pos)
        coef = sign * (int(digits) if digits else 1)
        terms.append((coef, symbol, start))
        first = False

    symbols = {sym for _, sym, _ in terms if sym is not None}
    if len(symbols) > 1:
        seen = [(sym, st) for _, sym, st in terms if sym is not None]
        bad = next(st for sym, st in seen if sym != seen[0][0])
        raise ParseError("mixed ring symbols 'i' and 'w'", text, bad)
    if symbols:
        found = _SYMBOLS[symbols.pop()]
        if tag is not None and found is not tag:
            raise RingMismatchError(
                f"{text!r} uses '{found.symbol}' but a Z[{tag.symbol}] element was expected"
            )
        tag = found
    if tag is None:
        raise ParseError("rational integer needs an explicit ring", text, 0)
    a = sum(c for c, sym, _ in terms if sym is None)
    b = sum(c for c, sym, _ in terms if sym is not None)
    return RingElement(a, b, tag)


# ---------------------------------------------------------------------------
# basic arithmetic


def conj(z: RingElement) -> RingElement:
    if z.tag is GAUSS:
        return RingElement(z.a, -z.b, z.tag)
    # conj(w) = w**2 = -1 - w
    return RingElement(z.a - z.b, -z.b, z.tag)


def norm(z: RingElement) -> int:
    a, b = z.a, z.b
    if z.tag is GAUSS:
        return a * a + b * b
    return a * a - a * b + b * b


def units(tag: RingTag) -> list[RingElement]:
    if tag is GAUSS:
        return [gauss(1), gauss(0, 1), gauss(-1), gauss(0, -1)]
    # powers of -w**2 = 1 + w, the primitive sixth root of unity
    u = eisen(1, 1)
    out = [eisen(1)]
    for _ in range(5):
        out.append(out[-1] * u)
    return out


def is_unit(z: RingElement) -> bool:
    return norm(z) == 1


def _check_same(z: RingElement, w: RingElement) -> None:
    if z.tag is not w.tag:
        raise RingMismatchError(f"cannot combine Z[{z.tag.symbol}] and Z[{w.tag.symbol}] elements")


def divides(d: RingElement, z: RingElement) -> Optional[RingElement]:
    """Return ``q`` with ``q * d == z`` when ``d | z``, else ``None``."""
    _check_same(d, z)
    n = norm(d)
    if n == 0:
        raise ZeroDivisionError("division by zero ring element")
    num = z * conj(d)
    if num.a % n or num.b % n:
        return None
    return RingElement(num.a // n, num.b // n, z.tag)


def divmod_nearest(z: RingElement, d: RingElement) -> tuple[RingElement, RingElement]:
    """Euclidean division; norm(remainder) < norm(d) in both rings."""
    _check_same(z, d)
    n = norm(d)
    if n == 0:
        raise ZeroDivisionError("division by zero ring element")
    num = z * conj(d)
    # round() on a Fraction rounds half to even
    q = RingElement(round(Fraction(num.a, n)), round(Fraction(num.b, n)), z.tag)
    return q, z - q * d


def in_canonical_sector(z: RingElement) -> bool:
    """Argument in [0, pi/2) for Z[i], [0, pi/3) for Z[w]."""
    if z.tag is GAUSS:
        return z.a > 0 and z.b >= 0
    # a + b*w = (a - b)*1 + b*(1 + w), and 1 + w = exp(i*pi/3)
    return z.b >= 0 and z.a > z.b


def canonical_associate(z: RingElement) -> RingElement:
    if z.is_zero():
        return z
    for u in units(z.tag):
        w = u * z
        if in_canonical_sector(w):
            return w
    raise AssertionError(f"no canonical associate for {z}")  # unreachable


def is_associate(z: RingElement, w: RingElement) -> bool:
    _check_same(z, w)
    return canonical_associate(z) == canonical_associate(w)


def gcd(z: RingElement, w: RingElement) -> RingElement:
    _check_same(z, w)
    if z.is_zero() and w.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not w.is_zero():
        _, r = divmod_nearest(z, w)
        z, w = w, r
    return canonical_associate(z)


def is_balanced(beta: RingElement) -> bool:
    """True iff ``beta`` and its conjugate are associates."""
    if beta.is_zero():
        raise DomainError("balancedness of 0 is undefined")
    return is_associate(beta, conj(beta))


def ramified_prime(tag: RingTag) -> RingElement:
    """Canonical prime above the ramified rational prime (2 in Z[i], 3 in Z[w])."""
    return gauss(1, 1) if tag is GAUSS else eisen(2, 1)


# ---------------------------------------------------------------------------
# factorization


def _primes_above(p: int, tag: RingTag) -> list[RingElement]:
    """Canonical primes of the ring lying over the rational prime ``p``."""
    if tag is GAUSS:
        if p == 2:
            return [gauss(1, 1)]
        if p % 4 == 3:
            return [gauss(p)]
        x = sqrt_mod(-1, p)
        pi = gcd(gauss(p), gauss(x, 1))
    else:
        if p == 3:
            return [eisen(2, 1)]
        if p % 3 == 2:
            return [eisen(p)]
        s = sqrt_mod(-3, p)
        x = (-1 + s) * pow(2, -1, p) % p  # root of x**2 + x + 1 mod p
        pi = gcd(eisen(p), eisen(-x, 1))
    assert norm(pi) == p, (p, pi)
    return sorted({pi, canonical_associate(conj(pi))}, key=RingElement.sort_key)


def factorize(z: RingElement) -> Factorization:
    if z.is_zero():
        raise DomainError("cannot factor 0")
    rest = z
    factors: list[tuple[RingElement, int]] = []
    for p in sorted(factorint(norm(z))):
        for pi in _primes_above(p, z.tag):
            e = 0
            while True:
                q = divides(pi, rest)
                if q is None:
                    break
                rest, e = q, e + 1
            if e:
                factors.append((pi, e))
    if not is_unit(rest):
        raise AssertionError(f"factorization of {z} left non-unit {rest}")  # unreachable
    factors.sort(key=lambda pe: pe[0].sort_key())
    return Factorization(rest, tuple(factors))


def divisors_up_to_associates(z: RingElement) -> list[RingElement]:
    """All divisors of ``z``, one canonical representative per associate class."""
    fac = factorize(z)
    choices: Iterable = itertools.product(
        *[[p**k for k in range(e + 1)] for p, e in fac.factors]
    )
    one = z.one()
    divs = {canonical_associate(prod(c, start=one)) for c in choices}
    return sorted(divs, key=RingElement.sort_key)


def enumerate_elements(tag: RingTag, max_norm: int) -> list[RingElement]:
    """Every element with ``0 < norm <= max_norm`` (brute-force helper)."""
    bound = isqrt(4 * max_norm // 3 + 1) + 1
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            z = RingElement(a, b, tag)
            if 0 < norm(z) <= max_norm:
                out.append(z)
    return out
