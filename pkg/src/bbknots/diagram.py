"""Combinatorial planar diagrams built from 4-ended tangles.

Every crossing is drawn as an X with four slots, ``NW, NE, SW, SE``.  The two
strands through a crossing are ``NW-SE`` and ``NE-SW``; ``over`` records which
diagonal lies on top.  Tangles are glued port to port, so standard rational
tangles, 2-bridge diagrams and Montesinos diagrams are all built the same way
and share one implementation of orientation, crossing signs and Seifert
circles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

NW, NE, SW, SE = 0, 1, 2, 3
SLOT_NAMES = ("NW", "NE", "SW", "SE")
# unit vectors from the crossing centre towards each slot (y points up)
_SLOT_POS = {NW: (-1, 1), NE: (1, 1), SW: (-1, -1), SE: (1, -1)}

SLASH = "/"  # NE-SW strand is over
BACKSLASH = "\\"  # NW-SE strand is over


class DiagramError(ValueError):
    pass


def opposite(slot: int) -> int:
    """Slot at the other end of the strand entering at ``slot``."""
    return 3 - slot


@dataclass
class Crossing:
    over: str
    tangle: int = -1
    region: int = -1  # 1-based continued-fraction position, 0 for delta twists


@dataclass
class Tangle:
    """Open diagram with four boundary ports.

    ``link`` is a symmetric map between endpoints.  An endpoint is either a
    crossing slot ``(crossing_index, slot)`` or a port ``("port", name)``.
    """

    crossings: list[Crossing] = field(default_factory=list)
    link: dict = field(default_factory=dict)

    @classmethod
    def infinity(cls) -> "Tangle":
        t = cls()
        t._join(("port", "NW"), ("port", "SW"))
        t._join(("port", "NE"), ("port", "SE"))
        return t

    @classmethod
    def zero(cls) -> "Tangle":
        t = cls()
        t._join(("port", "NW"), ("port", "NE"))
        t._join(("port", "SW"), ("port", "SE"))
        return t

    def _join(self, a, b) -> None:
        if a == b:
            raise DiagramError("cannot join an endpoint to itself")
        self.link[a] = b
        self.link[b] = a

    def _new_crossing(self, over: str, tangle: int, region: int) -> int:
        self.crossings.append(Crossing(over, tangle, region))
        return len(self.crossings) - 1

    def glue(self, port_a: str, endpoint) -> None:
        """Attach ``endpoint`` to whatever currently sits behind ``port_a``."""
        pa = ("port", port_a)
        inner = self.link.pop(pa)
        del self.link[inner]
        if inner == endpoint:
            raise DiagramError("closing a crossingless loop")
        self._join(inner, endpoint)

    def port(self, name: str):
        """Inner endpoint currently attached to port ``name``."""
        return self.link[("port", name)]

    def twist_bottom(self, over: str, tangle: int = -1, region: int = -1) -> int:
        """Add one vertical half twist below the tangle."""
        c = self._new_crossing(over, tangle, region)
        self.glue("SW", (c, NW))
        self.glue("SE", (c, NE))
        self._join(("port", "SW"), (c, SW))
        self._join(("port", "SE"), (c, SE))
        return c

    def twist_right(self, over: str, tangle: int = -1, region: int = -1) -> int:
        """Add one horizontal half twist to the right of the tangle."""
        c = self._new_crossing(over, tangle, region)
        self.glue("NE", (c, NW))
        self.glue("SE", (c, SW))
        self._join(("port", "NE"), (c, NE))
        self._join(("port", "SE"), (c, SE))
        return c

    def then(self, other: "Tangle") -> "Tangle":
        """Tangle sum: ``other`` placed to the right of ``self``."""
        out = Tangle(list(self.crossings), dict(self.link))
        shift = len(self.crossings)
        out.crossings.extend(Crossing(c.over, c.tangle, c.region) for c in other.crossings)

        def moved(e):
            return e if e[0] == "port" else (e[0] + shift, e[1])

        renamed = {}
        for a, b in other.link.items():
            ra = ("port", "R" + a[1]) if a[0] == "port" else moved(a)
            rb = ("port", "R" + b[1]) if b[0] == "port" else moved(b)
            renamed[ra] = rb
        out.link.update(renamed)
        # NE of the left piece meets NW of the right piece, SE meets SW
        for left, right in (("NE", "RNW"), ("SE", "RSW")):
            x = out.link.pop(("port", left))
            y = out.link.pop(("port", right))
            del out.link[x]
            del out.link[y]
            if x == ("port", right) or y == ("port", left):
                raise DiagramError("closing a crossingless loop")
            out._join(x, y)
        for old, new in (("RNE", "NE"), ("RSE", "SE")):
            x = out.link.pop(("port", old))
            out.link[x] = ("port", new)
            out.link[("port", new)] = x
        return out

    def close(self, pairs) -> "Diagram":
        """Close the four ports pairwise, e.g. ``[("NW", "SW"), ("NE", "SE")]``."""
        link = dict(self.link)
        arcs = {}
        for a, b in pairs:
            x = link.pop(("port", a))
            y = link.pop(("port", b))
            if x[0] == "port" or y[0] == "port":
                raise DiagramError("closure produces a crossingless component")
            link[x] = y
            link[y] = x
            arcs[(a, b)] = (x, y)
        if any(k[0] == "port" for k in link):
            raise DiagramError("unclosed ports remain")
        return Diagram(list(self.crossings), link, arcs)


def rational_tangle(entries, over: str = SLASH, tangle: int = -1) -> Tangle:
    """Standard drawing of the tangle with continued fraction ``entries``.

    Odd positions are vertical twist rows stacked downwards, even positions
    horizontal rows added on the right; the first entry ends up as the bottom
    vertical row.
    """
    if len(entries) % 2 == 0:
        raise DiagramError("standard continued fractions have odd length")
    t = Tangle.infinity()
    for k in range(len(entries), 0, -1):
        a = entries[k - 1]
        if a < 0:
            raise DiagramError("continued fraction entries must be nonnegative")
        for _ in range(a):
            if k % 2:
                t.twist_bottom(over, tangle, k)
            else:
                t.twist_right(over, tangle, k)
    return t


def integer_tangle(n: int, tangle: int = -1, region: int = 0) -> Tangle:
    """``|n|`` horizontal half twists; the sign selects the crossing type."""
    t = Tangle.zero()
    over = SLASH if n > 0 else BACKSLASH
    for _ in range(abs(n)):
        t.twist_right(over, tangle, region)
    return t


@dataclass
class Diagram:
    """Closed link diagram.

    ``closure_arcs`` maps each closing pair of port names to the two crossing
    slots it joins (in the order given to :meth:`Tangle.close`).
    """

    crossings: list[Crossing]
    link: dict
    closure_arcs: dict = field(default_factory=dict)

    def __post_init__(self):
        self._components = None

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def components(self) -> list[list[tuple[int, int]]]:
        """Components as lists of ``(crossing, entry_slot)`` in traversal order.

        Each component is traversed from its smallest unused endpoint, which
        fixes a reference direction per component.
        """
        if self._components is not None:
            return self._components
        seen = set()
        comps = []
        for c in range(self.n_crossings):
            for s in (NW, NE, SW, SE):
                if (c, s) in seen:
                    continue
                comp = []
                cur = (c, s)
                while cur not in seen:
                    seen.add(cur)
                    out = (cur[0], opposite(cur[1]))
                    seen.add(out)
                    comp.append(cur)
                    cur = self.link[out]
                comps.append(comp)
        self._components = comps
        return comps

    def component_of(self, endpoint) -> int:
        for i, comp in enumerate(self.components()):
            for c, s in comp:
                if endpoint == (c, s) or endpoint == (c, opposite(s)):
                    return i
        raise DiagramError(f"endpoint {endpoint} not on any component")

    def orient(self, reverse) -> "OrientedDiagram":
        """Orient component ``i`` along its traversal, or against it if ``reverse[i]``."""
        comps = self.components()
        if len(reverse) != len(comps):
            raise DiagramError("one direction bit per component expected")
        entry = np.full((self.n_crossings, 4), False)
        for comp, rev in zip(comps, reverse):
            for c, s in comp:
                entry[c, opposite(s) if rev else s] = True
        return OrientedDiagram(self, entry)

    def is_alternating(self) -> bool:
        for comp in self.components():
            levels = [self._is_over(c, s) for c, s in comp]
            if any(levels[i] == levels[i - 1] for i in range(len(levels))):
                return False
        return True

    def _is_over(self, c: int, slot: int) -> bool:
        on_slash = slot in (NE, SW)
        return on_slash == (self.crossings[c].over == SLASH)

    def determinant(self) -> int:
        """Link determinant from the Fox colouring matrix."""
        n = self.n_crossings
        # over-arcs: glue edges that pass over a crossing
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def edge(e):
            return min(e, self.link[e])

        for c in range(n):
            for s in (NW, NE, SW, SE):
                find(edge((c, s)))
            for s in (NW, NE):
                if self._is_over(c, s):
                    a, b = find(edge((c, s))), find(edge((c, opposite(s))))
                    parent[a] = b
        labels = {}
        for e in list(parent):
            labels.setdefault(find(e), len(labels))
        m = np.zeros((n, len(labels)), dtype=float)
        for c in range(n):
            for s in (NW, NE, SW, SE):
                col = labels[find(edge((c, s)))]
                if self._is_over(c, s):
                    m[c, col] += 1.0
                else:
                    m[c, col] -= 1.0
        if n == 0:
            return 1
        minor = m[1:, 1:]
        if minor.size == 0:
            return 1
        return int(round(abs(np.linalg.det(minor))))


@dataclass
class OrientedDiagram:
    diagram: Diagram
    entry: np.ndarray  # entry[c, slot] is True when the strand enters crossing c at slot

    def strand_entries(self, c: int) -> tuple[int, int]:
        """Entry slots of the NW-SE strand and the NE-SW strand at crossing ``c``."""
        a = NW if self.entry[c, NW] else SE
        b = NE if self.entry[c, NE] else SW
        return a, b

    def sign(self, c: int) -> int:
        a_in, b_in = self.strand_entries(c)

        def direction(s):
            p, q = _SLOT_POS[s], _SLOT_POS[opposite(s)]
            return (q[0] - p[0], q[1] - p[1])

        da, db = direction(a_in), direction(b_in)
        if self.diagram.crossings[c].over == SLASH:
            over, under = db, da
        else:
            over, under = da, db
        z = over[0] * under[1] - over[1] * under[0]
        return 1 if z > 0 else -1

    def signs(self) -> list[int]:
        return [self.sign(c) for c in range(self.diagram.n_crossings)]

    def writhe(self) -> int:
        return sum(self.signs())

    def seifert_next(self, endpoint):
        """Follow a Seifert arc: entering at ``endpoint``, return the slot we leave from."""
        c, s = endpoint
        a_in, b_in = self.strand_entries(c)
        if s == a_in:
            return (c, opposite(b_in))
        if s == b_in:
            return (c, opposite(a_in))
        raise DiagramError("endpoint is not an entry slot")

    def seifert_circles(self) -> list[list[tuple[int, int]]]:
        """Seifert circles, each as the list of entry endpoints it passes."""
        link = self.diagram.link
        seen = set()
        circles = []
        for c in range(self.diagram.n_crossings):
            for s in (NW, NE, SW, SE):
                if not self.entry[c, s] or (c, s) in seen:
                    continue
                circle = []
                cur = (c, s)
                while cur not in seen:
                    seen.add(cur)
                    circle.append(cur)
                    cur = link[self.seifert_next(cur)]
                circles.append(circle)
        return circles

    def seifert_circle_index(self) -> dict:
        """Map every edge (identified by its entry endpoint) to its Seifert circle."""
        index = {}
        for i, circle in enumerate(self.seifert_circles()):
            for e in circle:
                index[e] = i
        return index

    def arc_head(self, x, y):
        """For the edge joining slots ``x`` and ``y``, return the one it flows into."""
        if self.entry[x]:
            return x
        if self.entry[y]:
            return y
        raise DiagramError("edge has no head")


def fraction_sign(f: Fraction) -> int:
    return (f > 0) - (f < 0)
