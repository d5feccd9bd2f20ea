"""Two-bridge links: continued fractions, signed vectors and braid indices.

A 2-bridge link ``B(alpha, beta)`` is drawn as the denominator closure of the
standard rational tangle of ``beta/alpha``.  Twist rows alternate between
vertical rows (odd positions, stacked downwards, the first one at the very
bottom) and horizontal rows (even positions, added on the right).  With all
crossings of the ``/`` type, a vertical row is positive exactly when its two
strands run parallel and a horizontal row is positive exactly when they run
antiparallel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "RationalLink",
    "SignedVector",
    "Orientation",
    "standard_cf",
    "evaluate_cf",
    "orient_and_sign",
    "braid_index_oriented",
    "braid_index_unoriented",
    "is_bb_2bridge",
    "mirror",
    "component_count",
    "signed_vectors",
]


class InvalidFraction(ValueError):
    pass


@dataclass(frozen=True)
class RationalLink:
    """Parameters ``0 < beta < alpha`` with ``gcd(alpha, beta) = 1``."""

    alpha: int
    beta: int

    def __post_init__(self):
        if not (0 < self.beta < self.alpha):
            raise InvalidFraction(f"need 0 < beta < alpha, got ({self.alpha}, {self.beta})")
        if gcd(self.alpha, self.beta) != 1:
            raise InvalidFraction(f"alpha={self.alpha} and beta={self.beta} are not coprime")

    @property
    def value(self) -> Fraction:
        return Fraction(self.beta, self.alpha)


def _as_link(f) -> RationalLink:
    if isinstance(f, RationalLink):
        return f
    alpha, beta = f
    return RationalLink(int(alpha), int(beta))


def mirror(f) -> RationalLink:
    """``B(alpha, beta)`` and ``B(alpha, alpha - beta)`` are mirror images."""
    f = _as_link(f)
    return RationalLink(f.alpha, f.alpha - f.beta)


class Orientation(enum.Enum):
    DEFAULT = "default"
    REVERSED = "reversed"


@dataclass(frozen=True)
class SignedVector:
    entries: tuple[int, ...]
    component_count: int

    def __post_init__(self):
        if len(self.entries) % 2 == 0:
            raise ValueError("signed vectors have odd length")
        if any(b == 0 for b in self.entries):
            raise ValueError("signed vector entries must be nonzero")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def standard_cf(f) -> tuple[int, ...]:
    """Odd-length, all-positive continued fraction of ``beta/alpha``.

    >>> standard_cf((17426, 5075))
    (3, 2, 3, 3, 1, 2, 3, 4, 4)
    """
    f = _as_link(f)
    out = []
    p, q = f.alpha, f.beta
    while q:
        out.append(p // q)
        p, q = q, p % q
    if len(out) % 2 == 0:
        out[-1] -= 1
        out.append(1)
    return tuple(out)


def evaluate_cf(entries) -> Fraction:
    """Value of ``1/(a1 + 1/(a2 + ... + 1/an))``; interior zeros are allowed."""
    entries = tuple(entries)
    if not entries:
        raise ValueError("empty continued fraction")
    # product of [[a, 1], [1, 0]] keeps numerator/denominator without division
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in entries:
        m00, m01, m10, m11 = m00 * a + m01, m00, m10 * a + m11, m10
    if m00 == 0:
        raise ZeroDivisionError(f"continued fraction {entries} is infinite")
    return Fraction(m10, m00)


def _connectivity(entries) -> list[str]:
    """Port connectivity of the inner tangle below each twist row.

    ``inner[k]`` describes the tangle made of rows ``k+1..n`` (0-based), as
    ``"inf"`` (NW-SW, NE-SE), ``"zero"`` (NW-NE, SW-SE) or ``"one"`` (NW-SE, NE-SW).
    """
    n = len(entries)
    inner = [""] * (n + 1)
    inner[n] = "inf"
    vertical_swap = {"inf": "one", "one": "inf", "zero": "zero"}
    horizontal_swap = {"zero": "one", "one": "zero", "inf": "inf"}
    for k in range(n - 1, -1, -1):
        t = inner[k + 1]
        if entries[k] % 2:
            t = (vertical_swap if k % 2 == 0 else horizontal_swap)[t]
        inner[k] = t
    return inner


def component_count(entries) -> int:
    """Components of the denominator closure: 2 iff the full tangle is of type ``inf``."""
    return 2 if _connectivity(tuple(entries))[0] == "inf" else 1


def _port_status(kind: str, orientation: Orientation) -> dict[str, bool]:
    # True marks a strand leaving the tangle.  The left closing arc is always
    # oriented from the NW port round to the SW port.
    if kind == "inf":
        same = orientation is Orientation.DEFAULT
        return {"NW": True, "SW": False, "NE": same, "SE": not same}
    if kind == "zero":
        return {"NW": True, "NE": False, "SW": False, "SE": True}
    return {"NW": True, "NE": True, "SW": False, "SE": False}


@lru_cache(maxsize=200_000)
def _signs(entries: tuple[int, ...], orientation: Orientation) -> tuple[int, ...]:
    inner = _connectivity(entries)
    ncomp = 2 if inner[0] == "inf" else 1
    if ncomp == 1 and orientation is Orientation.REVERSED:
        raise ValueError("a knot has no second component to reverse")
    st = _port_status(inner[0], orientation)
    signs = []
    for k, a in enumerate(entries):
        odd = a % 2 == 1
        if k % 2 == 0:
            parallel = st["SW"] == st["SE"]
            signs.append(1 if parallel else -1)
            if odd:
                st = {"NW": st["NW"], "NE": st["NE"], "SW": st["SE"], "SE": st["SW"]}
        else:
            parallel = st["NE"] == st["SE"]
            signs.append(-1 if parallel else 1)
            if odd:
                st = {"NW": st["NW"], "SW": st["SW"], "NE": st["SE"], "SE": st["NE"]}
    return tuple(signs)


def orient_and_sign(entries, orientation: Orientation = Orientation.DEFAULT) -> SignedVector:
    """Signed vector of the standard diagram under ``orientation``.

    ``DEFAULT`` orients a two-component link so that both closing arcs run the
    same way, which makes the bottom row positive.
    """
    entries = tuple(int(a) for a in entries)
    if any(a <= 0 for a in entries) or len(entries) % 2 == 0:
        raise ValueError(f"not a standard continued fraction: {entries}")
    signs = _signs(entries, orientation)
    return SignedVector(tuple(s * a for s, a in zip(signs, entries)), component_count(entries))


def orientations(entries) -> list[Orientation]:
    if component_count(entries) == 2:
        return [Orientation.DEFAULT, Orientation.REVERSED]
    return [Orientation.DEFAULT]


def signed_vectors(f) -> list[SignedVector]:
    cf = standard_cf(f)
    return [orient_and_sign(cf, o) for o in orientations(cf)]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def braid_index_fraction(entries) -> Fraction:
    """The braid-index expression evaluated exactly, without the integrality check."""
    b = tuple(entries)
    total = Fraction(2 + _sign(b[0]) + _sign(b[-1]), 4)
    # 1-based even positions sit at 0-based odd indices
    total += sum(Fraction(x, 2) for x in b[1::2] if x > 0)
    total += sum(Fraction(-x, 2) for x in b[0::2] if x < 0)
    return 1 + total


def braid_index_oriented(sv) -> int:
    entries = sv.entries if isinstance(sv, SignedVector) else tuple(sv)
    if len(entries) % 2 == 0 or any(x == 0 for x in entries):
        raise ValueError(f"malformed signed vector {entries}")
    value = braid_index_fraction(entries)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral braid index {value} for signed vector {entries}")
    return int(value)


def braid_index_unoriented(f) -> int:
    return min(braid_index_oriented(sv) for sv in signed_vectors(f))


def is_bb_2bridge(f) -> bool:
    """Bridge index equals braid index, i.e. the unoriented braid index is 2."""
    f = _as_link(f)
    by_formula = braid_index_unoriented(f) == 2
    torus = f.beta == 1 or mirror(f).beta == 1
    if by_formula != torus:
        raise AssertionError(f"braid-index test and torus criterion disagree on {f}")
    return by_formula
