"""Montesinos links: Seifert parity, braid index and BB characterizations.

``M(f_1, ..., f_s; delta)`` is drawn as the tangle sum of the standard
rational tangles of ``f_j`` (``0 < |f_j| < 1``) followed by ``|delta|``
horizontal half twists, closed by a top and a bottom long strand.  The top
long strand is always oriented from right to left; the remaining components
are oriented freely.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import floor

from .diagram import BACKSLASH, SLASH, Diagram, OrientedDiagram, integer_tangle, rational_tangle
from .rational import evaluate_cf, standard_cf

__all__ = [
    "MontesinosLink",
    "OrientationAssignment",
    "ParityAnalysis",
    "Verdict",
    "parse_tangles",
    "components",
    "orientations",
    "classify",
    "delta_contribution",
    "braid_index_oriented",
    "braid_index_unoriented",
    "bridge_index",
    "bb_conditions_hold",
    "shape_conditions_hold",
    "oriented_conditions_hold",
    "is_bb_alternating",
    "is_bb_nonalternating_sufficient",
    "seifert_circle_count",
    "conway_algebraic_bb",
    "is_vertical",
    "is_horizontal",
    "crossing_count",
    "canonical_key",
    "positive_tangles",
    "alternating_links",
    "seifert_witness",
    "MontesinosClass",
]


class MontesinosError(ValueError):
    pass


class ClassificationError(RuntimeError):
    """A tangle pattern the Seifert-parity analysis does not allow."""


def _tangle_cf(f: Fraction) -> tuple[int, ...]:
    a = abs(f)
    return standard_cf((a.denominator, a.numerator))


def is_vertical(f: Fraction) -> bool:
    """``1/s`` with ``s >= 2`` (continued fraction ``(s)``)."""
    return abs(f).numerator == 1 and abs(f).denominator >= 2


def is_horizontal(f: Fraction) -> bool:
    """``(s+1)/(s+2)`` with ``s >= 1`` (continued fraction ``(1, s, 1)``)."""
    a = abs(f)
    return a.denominator == a.numerator + 1 and a.numerator >= 2


@dataclass(frozen=True)
class MontesinosLink:
    tangles: tuple[Fraction, ...]
    delta: int = 0

    def __post_init__(self):
        tangles = tuple(Fraction(t) for t in self.tangles)
        object.__setattr__(self, "tangles", tangles)
        if len(tangles) < 3:
            raise MontesinosError(
                "a Montesinos link needs at least three tangles; two tangles give a 2-bridge link"
            )
        for t in tangles:
            if t == 0 or abs(t) >= 1:
                raise MontesinosError(f"tangle {t} must satisfy 0 < |t| < 1")

    @classmethod
    def from_fractions(cls, fractions, delta: int = 0) -> "MontesinosLink":
        """Fold integer parts of the tangles into ``delta`` first."""
        tangles = []
        for f in fractions:
            f = Fraction(f)
            n = floor(f) if f > 0 else -floor(-f)
            delta += n
            if f - n != 0:
                tangles.append(f - n)
        return cls(tuple(tangles), delta)

    @property
    def s(self) -> int:
        return len(self.tangles)

    @property
    def alternating(self) -> bool:
        signs = {t > 0 for t in self.tangles}
        if len(signs) > 1:
            return False
        if self.delta == 0:
            return True
        return (self.delta > 0) in signs

    @property
    def positive(self) -> bool:
        return all(t > 0 for t in self.tangles) and self.delta >= 0

    def mirror(self) -> "MontesinosLink":
        return MontesinosLink(tuple(-t for t in self.tangles), -self.delta)

    def cfs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_tangle_cf(t) for t in self.tangles)

    def __str__(self):
        body = ",".join(str(t) for t in self.tangles)
        return f"M({body}; delta={self.delta})"


_SPEC = re.compile(r"^\s*(?P<tangles>[^\s]+)(?:\s+delta\s*=\s*(?P<delta>-?\d+))?\s*$")


def parse_tangles(text: str, delta: int | None = None) -> MontesinosLink:
    """Parse ``"1/2,1/2,-2/3 delta=0"``; an explicit ``delta`` argument wins."""
    m = _SPEC.match(text)
    if not m:
        raise MontesinosError(f"cannot parse tangle list {text!r}")
    try:
        fracs = [Fraction(p) for p in m.group("tangles").split(",") if p]
    except (ValueError, ZeroDivisionError) as exc:
        raise MontesinosError(f"malformed fraction in {text!r}") from exc
    d = delta if delta is not None else int(m.group("delta") or 0)
    return MontesinosLink.from_fractions(fracs, d)


def crossing_count(m: MontesinosLink) -> int:
    """Crossings of the standard diagram (the crossing number when it is reduced alternating)."""
    return sum(sum(cf) for cf in m.cfs()) + abs(m.delta)


def canonical_key(m: MontesinosLink):
    """Representative of ``m`` up to cyclic rotation and reversal of the tangle list."""
    t = m.tangles
    variants = []
    for seq in (t, t[::-1]):
        for i in range(len(seq)):
            variants.append(seq[i:] + seq[:i])
    return (min(variants), m.delta)


# --- diagram construction -------------------------------------------------


@dataclass
class _Built:
    diagram: Diagram
    ports: list  # per tangle (delta twists last, if any): port name -> crossing slot
    tangle_regions: list  # per tangle: list of crossing indices for each cf position
    top: tuple
    bottom: tuple
    fixed: int  # component carrying the top long strand


@lru_cache(maxsize=4096)
def _build(m: MontesinosLink) -> _Built:
    pieces = []
    for j, f in enumerate(m.tangles):
        over = SLASH if f > 0 else BACKSLASH
        pieces.append(rational_tangle(_tangle_cf(f), over, j))
    if m.delta:
        pieces.append(integer_tangle(m.delta, m.s, 0))
    total = None
    ports = []
    offset = 0
    for t in pieces:
        ports.append({p: (t.port(p)[0] + offset, t.port(p)[1]) for p in ("NW", "NE", "SW", "SE")})
        offset += len(t.crossings)
        total = t if total is None else total.then(t)
    d = total.close([("NE", "NW"), ("SE", "SW")])
    regions = []
    cfs = m.cfs()
    for j in range(m.s):
        regions.append([[] for _ in cfs[j]])
    for c, x in enumerate(d.crossings):
        if 0 <= x.tangle < m.s:
            regions[x.tangle][x.region - 1].append(c)
    top = d.closure_arcs[("NE", "NW")]
    bottom = d.closure_arcs[("SE", "SW")]
    return _Built(d, ports, regions, top, bottom, d.component_of(top[1]))


def components(m: MontesinosLink) -> int:
    return len(_build(m).diagram.components())


@dataclass(frozen=True)
class OrientationAssignment:
    """Direction bits for the components other than the one carrying the top strand.

    Bit ``i`` reverses the ``i``-th free component (in traversal order) against
    its reference direction.
    """

    bits: tuple[bool, ...] = ()


def orientations(m: MontesinosLink) -> list[OrientationAssignment]:
    """All ``2**(c-1)`` assignments; reversing every component is quotiented out."""
    c = components(m)
    return [OrientationAssignment(tuple(b)) for b in product((False, True), repeat=c - 1)]


def _oriented(m: MontesinosLink, o: OrientationAssignment) -> OrientedDiagram:
    b = _build(m)
    ncomp = len(b.diagram.components())
    if len(o.bits) != ncomp - 1:
        raise MontesinosError(f"{m} has {ncomp} components; got {len(o.bits)} direction bits")
    free = iter(o.bits)
    rev = [False if i == b.fixed else next(free) for i in range(ncomp)]
    od = b.diagram.orient(rev)
    # top strand runs right to left: it flows into the NW-side slot
    if not od.entry[b.top[1]]:
        rev[b.fixed] = True
        od = b.diagram.orient(rev)
    return od


class MontesinosClass(enum.Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"


@dataclass(frozen=True)
class ParityAnalysis:
    cls: MontesinosClass
    parities: tuple[int, ...]
    signed: tuple[tuple[int, ...], ...]  # signed vector of each tangle, inherited from the link
    delta_signs: tuple[int, ...]
    bottom_right_to_left: bool
    long_strands_share_circle: bool

    @property
    def eta(self) -> int:
        return sum(1 for p in self.parities if p == 3)

    @property
    def omega2(self) -> tuple[int, ...]:
        return tuple(j for j, p in enumerate(self.parities) if p == 2)

    @property
    def omega3(self) -> tuple[int, ...]:
        return tuple(j for j, p in enumerate(self.parities) if p == 3)


def _seifert_pairing(od: OrientedDiagram, ports: dict) -> dict:
    """Map each incoming port of a tangle to the outgoing port its Seifert arc reaches."""
    by_slot = {v: k for k, v in ports.items()}
    link = od.diagram.link
    pairing = {}
    for name, slot in ports.items():
        if not od.entry[slot]:
            continue
        cur = slot
        while True:
            out = od.seifert_next(cur)
            if out in by_slot:
                pairing[name] = by_slot[out]
                break
            cur = link[out]
    return pairing


def _parity(pairing: dict) -> int:
    vertical = pairing.get("NW") == "SW" or pairing.get("SW") == "NW"
    if vertical:
        # both Seifert arcs must run the same way (both down or both up)
        if pairing.get("NW") == "SW" and pairing.get("NE") == "SE":
            return 3
        if pairing.get("SW") == "NW" and pairing.get("SE") == "NE":
            return 3
        raise ClassificationError("antiparallel vertical Seifert arcs inside a rational tangle")
    top_left_to_right = "NW" in pairing
    bottom_left_to_right = "SW" in pairing
    if top_left_to_right and bottom_left_to_right:
        return 1
    if top_left_to_right != bottom_left_to_right:
        return 2
    raise ClassificationError("both long-strand Seifert arcs run right to left through a tangle")


def classify(m: MontesinosLink, o: OrientationAssignment) -> ParityAnalysis:
    b = _build(m)
    od = _oriented(m, o)
    signs = od.signs()
    parities = []
    signed = []
    for j in range(m.s):
        parities.append(_parity(_seifert_pairing(od, b.ports[j])))
        vec = []
        for a, cs in zip(m.cfs()[j], b.tangle_regions[j]):
            ss = {signs[c] for c in cs}
            if len(ss) != 1:
                raise ClassificationError(f"twist region of tangle {j} has mixed crossing signs")
            vec.append(ss.pop() * a)
        signed.append(tuple(vec))
    delta_signs = tuple(sorted({signs[c] for c, x in enumerate(b.diagram.crossings) if x.tangle == m.s}))
    index = od.seifert_circle_index()
    same = index[od.arc_head(*b.top)] == index[od.arc_head(*b.bottom)]
    bottom_rl = bool(od.entry[b.bottom[1]])
    if same:
        cls = MontesinosClass.M3
    elif bottom_rl:
        cls = MontesinosClass.M1
    else:
        cls = MontesinosClass.M2
    pa = ParityAnalysis(cls, tuple(parities), tuple(signed), delta_signs, bottom_rl, same)
    _check_analysis(m, pa)
    return pa


def _check_analysis(m: MontesinosLink, pa: ParityAnalysis) -> None:
    if not m.alternating:
        return
    for p, vec in zip(pa.parities, pa.signed):
        # first twist row is negative for parities 1 and 2, positive for parity 3
        if (p == 3) != (vec[0] > 0):
            raise ClassificationError(f"sign law violated: parity {p} with signed vector {vec}")
    if pa.cls is MontesinosClass.M3 and 1 in pa.parities:
        raise ClassificationError("parity-1 tangle inside a class M3 diagram")
    if pa.cls is MontesinosClass.M1 and (set(pa.parities) != {1} or 1 in pa.delta_signs and m.delta):
        raise ClassificationError("class M1 needs parity 1 everywhere and negative delta crossings")
    if pa.cls is MontesinosClass.M2 and (set(pa.parities) != {2} or m.delta != 0):
        raise ClassificationError("class M2 needs parity 2 everywhere and delta = 0")


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _delta_core(b: tuple[int, ...]) -> Fraction:
    return sum((Fraction(x, 2) for x in b[1::2] if x > 0), Fraction(0)) + sum(
        (Fraction(-x, 2) for x in b[0::2] if x < 0), Fraction(0)
    )


def delta_contribution(signed_entries, parity: int) -> Fraction:
    """Per-tangle correction term for Seifert parity 1, 2 or 3."""
    b = tuple(signed_entries)
    if parity in (1, 3):
        return Fraction(-1 + _sign(b[-1]), 4) + _delta_core(b)
    if parity == 2:
        return Fraction(2 + _sign(b[0]) + _sign(b[-1]), 4) + _delta_core(b)
    raise ValueError(f"Seifert parity must be 1, 2 or 3, got {parity}")


def _formula(m: MontesinosLink, pa: ParityAnalysis) -> Fraction:
    if pa.cls is MontesinosClass.M1:
        return 2 + sum(delta_contribution(v, 1) for v in pa.signed)
    if pa.cls is MontesinosClass.M2:
        return 1 + sum(delta_contribution(v, 2) for v in pa.signed)
    eta, delta = pa.eta, abs(m.delta)
    # kept exact: (eta + delta)/2 - 1 may be a half-integer
    d0 = eta + delta - min(Fraction(eta + delta, 2) - 1, Fraction(delta))
    return (
        d0
        + sum(delta_contribution(pa.signed[j], 2) for j in pa.omega2)
        + sum(delta_contribution(pa.signed[j], 3) for j in pa.omega3)
    )


def braid_index_oriented(m: MontesinosLink, o: OrientationAssignment) -> int:
    if not m.alternating:
        raise MontesinosError(f"{m} is not alternating; the braid-index formula does not apply")
    if not m.positive:
        m = m.mirror()
    value = _formula(m, classify(m, o))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral braid index {value} for {m}, {o}")
    return int(value)


def braid_index_unoriented(m: MontesinosLink) -> int:
    return min(braid_index_oriented(m, o) for o in orientations(m))


def bridge_index(m: MontesinosLink) -> int:
    return m.s


def shape_conditions_hold(m: MontesinosLink) -> bool:
    """All tangles vertical or horizontal and at least ``|delta| + 2`` of them vertical.

    Necessary for an alternating ``m`` to be BB, but not sufficient: the
    components may force an orientation that makes some vertical tangles
    antiparallel.  ``M(1/3,1/3,1/3; 0)`` is a knot passing this test with
    braid index 5.
    """
    if not all(is_vertical(t) or is_horizontal(t) for t in m.tangles):
        return False
    return sum(1 for t in m.tangles if is_vertical(t)) >= abs(m.delta) + 2


def _bb_pattern(vec: tuple[int, ...], parity: int) -> bool:
    if parity == 3:
        return len(vec) == 1 and vec[0] > 0
    if parity == 2:
        # 1/2 also reads as (-1, 0, -1)
        return vec == (-2,) or (len(vec) == 3 and vec[0] == vec[2] == -1 and vec[1] < 0)
    return False


def oriented_conditions_hold(m: MontesinosLink, o: OrientationAssignment) -> bool:
    """Class M3, ``eta >= delta + 2``, parity-2 tangles ``(-1,-s,-1)`` and parity-3 tangles ``(s)``.

    Stated for alternating ``m``; a negative ``m`` is judged through its mirror.
    """
    if not m.alternating:
        raise MontesinosError(f"{m} is not alternating")
    if not m.positive:
        m = m.mirror()
    pa = classify(m, o)
    if pa.cls is not MontesinosClass.M3 or pa.eta < m.delta + 2:
        return False
    return all(_bb_pattern(v, p) for v, p in zip(pa.signed, pa.parities))


def bb_conditions_hold(m: MontesinosLink) -> OrientationAssignment | None:
    """Orientation meeting the oriented BB conditions, or ``None``; no braid-index arithmetic."""
    if not shape_conditions_hold(m if m.positive else m.mirror()):
        return None
    for o in orientations(m):
        if oriented_conditions_hold(m, o):
            return o
    return None


@dataclass(frozen=True)
class BBResult:
    bb: bool
    witness: OrientationAssignment | None = None


def is_bb_alternating(m: MontesinosLink) -> BBResult:
    """BB test by condition, checked against the braid-index minimum over orientations."""
    witness = bb_conditions_hold(m)
    by_formula = braid_index_unoriented(m) == m.s
    if by_formula != (witness is not None):
        raise AssertionError(f"condition test and braid-index formula disagree on {m}")
    return BBResult(by_formula, witness)


class Verdict(enum.Enum):
    PROVEN_BB = "ProvenBB"
    NO_VERDICT = "NoVerdict"
    PROVEN_BB3 = "ProvenBB3"
    NOT_APPLICABLE = "NotApplicable"


def is_bb_nonalternating_sufficient(m: MontesinosLink) -> Verdict:
    """Sufficient (not necessary) BB test for ``delta = 0``.

    Needs every tangle vertical or horizontal up to mirror, at least two
    vertical, and an orientation of class M3 in which the parity-3 tangles are
    the vertical ones and the parity-2 tangles are horizontal (or ``1/2``).
    Such a diagram has exactly ``s`` Seifert circles, which is checked.
    """
    if m.delta != 0:
        raise MontesinosError("the sufficient condition is only stated for delta = 0")
    if not shape_conditions_hold(m):
        return Verdict.NO_VERDICT
    for o in orientations(m):
        pa = classify(m, o)
        if pa.cls is not MontesinosClass.M3:
            continue
        ok = all(
            is_vertical(t) if p == 3 else (is_horizontal(t) or abs(t) == Fraction(1, 2))
            for t, p in zip(m.tangles, pa.parities)
        )
        if ok:
            if seifert_circle_count(m, o) != m.s:
                raise AssertionError(f"{m}: M3 orientation {o} does not have {m.s} Seifert circles")
            return Verdict.PROVEN_BB
    return Verdict.NO_VERDICT


def seifert_circle_count(m: MontesinosLink, o: OrientationAssignment) -> int:
    return len(_oriented(m, o).seifert_circles())


def seifert_witness(m: MontesinosLink) -> OrientationAssignment | None:
    """An orientation whose standard diagram has exactly ``s`` Seifert circles, if any.

    Such a diagram caps the braid index at ``s``, which equals the bridge index.
    """
    for o in orientations(m):
        if seifert_circle_count(m, o) == m.s:
            return o
    return None


CONWAY_VARIANTS = {
    "plain": "[(a1;b1)(a2;b2)]",
    "minus": "[(a1;b1)-(a2;b2)]",
    "shift2": "[(a1;b1)(a2-1,1;-b2)]",
    "shift1": "[(a1-1,1;-b1+1,-1)(a2;b2)]",
    "negshift1": "[(-a1+1,-1;b1-1,1)(a2;b2)]",
}


@dataclass(frozen=True)
class ConwayResult:
    verdict: Verdict
    notation: str
    braid_index: int | None
    bridge_index: int | None
    one_component: bool | None
    assumption: str = "multi-component links oriented so the a_i and b_i twists are parallel"


def conway_algebraic_bb(a1: int, b1: int, a2: int, b2: int, variant: str = "plain") -> ConwayResult:
    if variant not in CONWAY_VARIANTS:
        raise ValueError(f"unknown bracket form {variant!r}; choose from {sorted(CONWAY_VARIANTS)}")
    notation = CONWAY_VARIANTS[variant]
    for name, value in (("a1", a1), ("b1", b1), ("a2", a2), ("b2", b2)):
        notation = notation.replace(name, str(value))
    if min(abs(a1), abs(b1), abs(a2), abs(b2)) < 2:
        return ConwayResult(Verdict.NOT_APPLICABLE, notation, None, None, None)
    # even a_i with odd b_i gives a knot; other parities are left undetermined
    one = True if (a1 % 2 == 0 and a2 % 2 == 0 and b1 % 2 and b2 % 2) else None
    return ConwayResult(Verdict.PROVEN_BB3, notation, 3, 3, one)


def tangle_from_cf(entries, sign: int = 1) -> Fraction:
    return sign * evaluate_cf(entries)


@lru_cache(maxsize=None)
def _compositions(total: int) -> tuple[tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    return tuple((first, *rest) for first in range(1, total + 1) for rest in _compositions(total - first))


def positive_tangles(crossings: int) -> list[Fraction]:
    """Every fraction in ``(0, 1)`` whose standard tangle has ``crossings`` crossings."""
    out = []
    for cf in _compositions(crossings):
        if len(cf) % 2 == 1 and cf != (1,):
            out.append(evaluate_cf(cf))
    return out


def alternating_links(s_values=(3, 4, 5), max_crossings: int = 12):
    """Positive alternating Montesinos links up to rotation and reversal of the tangle list.

    Negative ones are their mirrors, so this covers every alternating link once
    up to mirror image.
    """
    pool = [(c, f) for c in range(2, max_crossings + 1) for f in positive_tangles(c)]
    seen = set()
    for s in s_values:
        stack = [((), 0)]
        while stack:
            chosen, used = stack.pop()
            if len(chosen) == s:
                for delta in range(0, max_crossings - used + 1):
                    m = MontesinosLink(chosen, delta)
                    key = canonical_key(m)
                    if key not in seen:
                        seen.add(key)
                        yield m
                continue
            for c, f in pool:
                if used + c + 2 * (s - len(chosen) - 1) <= max_crossings:
                    stack.append(((*chosen, f), used + c))
