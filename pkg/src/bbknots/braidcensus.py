"""Alternating 3-braid census.

Words over the two letters ``a = sigma_1`` and ``B = sigma_2^{-1}`` are stored
as ``n``-bit integers, first letter in the most significant bit, ``a -> 0`` and
``B -> 1``.  Integer order is then lexicographic order, a rotation is a bit
rotation and the letter swap is the bitwise complement.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .rational import RationalLink, braid_index_unoriented, evaluate_cf

__all__ = [
    "BraidWord",
    "CensusReport",
    "CensusLimitError",
    "canonical_form",
    "closure_components",
    "is_reduced_alternating",
    "admits_flype",
    "two_bridge_braid3_count",
    "family_vectors",
    "census",
    "conway_polyhedron",
    "growth_fit",
    "burnside_class_count",
]

LETTERS = {"a": 0, "B": 1}
# sigma_1 swaps strands 1,2 and sigma_2^{-1} swaps strands 2,3
_TRANSPOSITIONS = ((1, 0, 2), (0, 2, 1))


class CensusLimitError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits} do not fit a word of length {self.n}")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Accept ``aaBB`` style strings; ``1``/``2`` are taken as ``a``/``B`` too."""
        text = text.strip().replace("1", "a").replace("2", "B")
        if any(ch not in LETTERS for ch in text):
            raise ValueError(f"braid word {text!r} uses letters outside 'a' (sigma_1) and 'B' (sigma_2^-1)")
        bits = 0
        for ch in text:
            bits = (bits << 1) | LETTERS[ch]
        return cls(bits, len(text))

    @classmethod
    def from_runs(cls, *runs: tuple[str, int]) -> "BraidWord":
        return cls.parse("".join(letter * k for letter, k in runs))

    def letters(self) -> str:
        return "".join("B" if (self.bits >> (self.n - 1 - i)) & 1 else "a" for i in range(self.n))

    def rotate(self, r: int) -> "BraidWord":
        return BraidWord(_rotl(self.bits, r % self.n, self.n), self.n) if self.n else self

    def swap(self) -> "BraidWord":
        return BraidWord(self.bits ^ ((1 << self.n) - 1), self.n)

    def __str__(self):
        return self.letters()


def _rotl(x, r: int, n: int):
    if r == 0:
        return x
    return ((x << r) | (x >> (n - r))) & ((1 << n) - 1)


def canonical_form(w: BraidWord) -> BraidWord:
    """Lexicographic minimum over the rotations of ``w`` and of its swap."""
    if w.n == 0:
        raise ValueError("canonical_form needs a nonempty word")
    mask = (1 << w.n) - 1
    best = min(_rotl(x, r, w.n) for x in (w.bits, w.bits ^ mask) for r in range(w.n))
    return BraidWord(best, w.n)


def closure_components(w: BraidWord) -> int:
    perm = (0, 1, 2)
    for ch in w.letters():
        t = _TRANSPOSITIONS[LETTERS[ch]]
        perm = tuple(t[p] for p in perm)
    seen, cycles = set(), 0
    for start in range(3):
        if start in seen:
            continue
        cycles += 1
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
    return cycles


def is_reduced_alternating(w: BraidWord) -> bool:
    ones = bin(w.bits).count("1")
    return ones >= 2 and w.n - ones >= 2


def _cyclic_runs(w: BraidWord) -> list[tuple[str, int]]:
    s = w.letters()
    if len(set(s)) < 2:
        return [(s[0], len(s))] if s else []
    # rotate so the word starts at a run boundary
    k = next(i for i in range(len(s)) if s[i] != s[i - 1])
    s = s[k:] + s[:k]
    runs = []
    for ch in s:
        if runs and runs[-1][0] == ch:
            runs[-1][1] += 1
        else:
            runs.append([ch, 1])
    return [(ch, k) for ch, k in runs]


def admits_flype(w: BraidWord) -> bool:
    """Cyclically ``a^u B a^z B^v`` up to rotation and swap: two runs of each
    letter with one run of length one."""
    if not is_reduced_alternating(w):
        raise ValueError(f"{w} is not reduced alternating")
    runs = _cyclic_runs(w)
    return len(runs) == 4 and any(k == 1 for _, k in runs)


def flype_partner(w: BraidWord) -> list[BraidWord]:
    """Words reached by one flype: ``a^u B a^z B^v`` and ``a^z B a^u B^v`` are identified."""
    runs = _cyclic_runs(w)
    if len(runs) != 4:
        return []
    out = []
    for i in range(4):
        rot = runs[i:] + runs[:i]
        # pattern x^u y x^z y^v with the single y between the two x runs
        if rot[1][1] == 1:
            (x, u), (y, _), (_, z), (_, v) = rot
            out.append(BraidWord.from_runs((x, z), (y, 1), (x, u), (y, v)))
    return out


def conway_polyhedron(k: int) -> dict:
    """``(sigma_1 sigma_2^{-1})^k`` with its crossing and component counts."""
    if k < 3:
        raise ValueError("Conway polyhedra from this family need k >= 3")
    w = BraidWord.parse("aB" * k)
    comps = closure_components(w)
    expected = 3 if (2 * k) % 3 == 0 else 1
    if comps != expected:
        raise AssertionError(f"k={k}: permutation gives {comps} components, expected {expected}")
    return {"word": w, "crossings": 2 * k, "components": comps, "braid_index": 3, "bridge_index": 3, "bb": True}


# 2-bridge links of braid index three --------------------------------------


def family_vectors(n: int) -> dict[str, list[tuple[int, ...]]]:
    """Vectors of crossing number ``n`` in the six listed families (``a, b >= 1``)."""
    fams: dict[str, list[tuple[int, ...]]] = {k: [] for k in ("211", "a12", "a2b", "3a1", "a11b1", "1a3b1")}
    if n == 4:
        fams["211"].append((2, 1, 1))
    if n - 3 >= 1:
        fams["a12"].append((n - 3, 1, 2))
    if n - 4 >= 1:
        fams["3a1"].append((3, n - 4, 1))
    for a in range(1, n):
        if n - 2 - a >= 1:
            fams["a2b"].append((a, 2, n - 2 - a))
        if n - 3 - a >= 1:
            fams["a11b1"].append((a, 1, 1, n - 3 - a, 1))
        if n - 5 - a >= 1:
            fams["1a3b1"].append((1, a, 3, n - 5 - a, 1))
    return fams


def _vector_link(v: tuple[int, ...]) -> RationalLink | None:
    f = evaluate_cf(v)
    if f.numerator == f.denominator:
        return None
    return RationalLink(f.denominator, f.numerator)


def vector_braid_index(v: tuple[int, ...]) -> int | None:
    link = _vector_link(tuple(v))
    return None if link is None else braid_index_unoriented(link)


def _reversal_class(link: RationalLink) -> tuple[int, int]:
    # reading the vector backwards replaces beta by its inverse mod alpha
    return link.alpha, min(link.beta, pow(link.beta, -1, link.alpha))


@dataclass(frozen=True)
class TwoBridgeCount:
    n: int
    count: int
    rejected: tuple[tuple[int, ...], ...]  # family vectors whose braid index is not 3


def two_bridge_braid3(n: int) -> TwoBridgeCount:
    if n < 4:
        raise ValueError("crossing number must be at least 4")
    classes, rejected = set(), []
    for vectors in family_vectors(n).values():
        for v in vectors:
            link = _vector_link(v)
            if link is None or braid_index_unoriented(link) != 3:
                rejected.append(v)
                continue
            classes.add(_reversal_class(link))
    return TwoBridgeCount(n, len(classes), tuple(sorted(rejected)))


def two_bridge_braid3_count(n: int) -> int:
    """Distinct 2-bridge links from the families, crossing number ``n``, braid index 3.

    Family members that fail the braid-index check are left out.
    """
    return two_bridge_braid3(n).count


# census -------------------------------------------------------------------


def burnside_class_count(n: int) -> int:
    """Orbits of ``n``-letter words under rotation and letter swap (Burnside)."""
    total = 0
    for r in range(n):
        g = math.gcd(n, r)
        total += 2**g
        # rotation by r composed with swap: cycles of length n/g must be even
        if (n // g) % 2 == 0:
            total += 2**g
    return total // (2 * n)


@dataclass
class CensusReport:
    n: int
    raw_words: int
    classes: int
    reduced_classes: int
    flype_free_classes: int
    two_bridge_count: int
    bb_lower_bound_ok: bool
    components: dict[int, int] = field(default_factory=dict)

    @property
    def lower_bound(self) -> float:
        return 2 ** (self.n - 5) / self.n - self.n**3

    @property
    def bb_candidates(self) -> int:
        return self.flype_free_classes - self.two_bridge_count

    def to_json(self) -> str:
        d = asdict(self)
        d["components"] = {str(k): v for k, v in sorted(self.components.items())}
        return json.dumps(d)

    @classmethod
    def from_json(cls, line: str) -> "CensusReport":
        d = json.loads(line)
        d["components"] = {int(k): v for k, v in d["components"].items()}
        return cls(**d)


_CHUNK_BITS = 20
# S3 elements as index tuples and their product table with the two generators
_S3 = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
_S3_STEP = np.array(
    [[_S3.index(tuple(t[p] for p in perm)) for t in _TRANSPOSITIONS] for perm in _S3], dtype=np.int8
)
_S3_CYCLES = np.array([3, 2, 2, 1, 1, 2], dtype=np.int8)


def _chunk_counts(args: tuple[int, int, int]) -> tuple[int, int, int, list[int], list[int]]:
    n, start, stop = args
    mask = np.uint64((1 << n) - 1)
    x = np.arange(start, stop, dtype=np.uint64)
    comp = x ^ mask
    canonical = x <= comp
    for r in range(1, n):
        if not canonical.any():
            break
        rr, ll = np.uint64(r), np.uint64(n - r)
        canonical &= x <= (((x << rr) | (x >> ll)) & mask)
        canonical &= x <= (((comp << rr) | (comp >> ll)) & mask)
    w = x[canonical]
    classes = int(w.size)
    ones = np.bitwise_count(w).astype(np.int64)
    reduced = (ones >= 2) & (n - ones >= 2)
    w = w[reduced]
    one, nm1 = np.uint64(1), np.uint64(n - 1)
    rot1 = ((w << one) | (w >> nm1)) & mask
    rotr = ((w >> one) | (w << nm1)) & mask
    transitions = np.bitwise_count(w ^ rot1)
    isolated = ((w ^ rot1) & (w ^ rotr)) != 0
    flype = (transitions == 4) & isolated
    free = w[~flype]
    perm = np.zeros(free.size, dtype=np.int8)
    for i in range(n - 1, -1, -1):
        bit = ((free >> np.uint64(i)) & one).astype(np.int8)
        perm = _S3_STEP[perm, bit]
    comps = np.bincount(_S3_CYCLES[perm], minlength=4).tolist()
    flype_words = [int(v) for v in w[flype]]
    return classes, int(w.size), int(free.size), comps, flype_words


def census(n: int, max_n: int = 24, workers: int | None = None) -> CensusReport:
    """Count canonical classes, reduced ones and flype-free ones for length ``n``."""
    if n < 4:
        raise ValueError("census needs n >= 4")
    if n > max_n:
        raise CensusLimitError(f"n={n} exceeds the configured maximum {max_n}; raise max_n to allow it")
    size = 1 << n
    step = min(size, 1 << _CHUNK_BITS)
    jobs = [(n, s, min(s + step, size)) for s in range(0, size, step)]
    workers = workers or os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            parts = list(pool.map(_chunk_counts, jobs))
    else:
        parts = [_chunk_counts(j) for j in jobs]
    classes = sum(p[0] for p in parts)
    reduced = sum(p[1] for p in parts)
    free = sum(p[2] for p in parts)
    comps = {k: sum(p[3][k] for p in parts) for k in (1, 2, 3)}
    tb = two_bridge_braid3_count(n)
    ok = free - tb >= 2 ** (n - 5) / n - n**3
    return CensusReport(n, size, classes, reduced, free, tb, ok, comps)


def flype_orbits(n: int) -> int:
    """Classes of flype-admitting reduced words after merging by flypes."""
    words = set()
    # every flype-admitting class has a representative a^u B a^z B^v
    for u in range(1, n):
        for z in range(1, n - u):
            v = n - 1 - u - z
            if v >= 1:
                words.add(canonical_form(BraidWord.from_runs(("a", u), ("B", 1), ("a", z), ("B", v))).bits)
    parent = {w: w for w in words}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for wb in words:
        for p in flype_partner(BraidWord(wb, n)):
            a, b = find(wb), find(canonical_form(p).bits)
            parent[a] = b
    return len({find(w) for w in words})


def growth_fit(reports: list[CensusReport]) -> float:
    """Least-squares slope of ``log2(flype_free - two_bridge)`` against ``n``."""
    if len(reports) < 5:
        raise ValueError("growth_fit needs at least 5 census reports")
    ns = np.array([r.n for r in reports], dtype=float)
    counts = np.array([r.bb_candidates for r in reports], dtype=float)
    if np.any(counts <= 0):
        raise ValueError("growth_fit needs positive counts")
    slope, _ = np.polyfit(ns, np.log2(counts), 1)
    return float(slope)


def one_component_fraction(report: CensusReport) -> Fraction:
    total = sum(report.components.values())
    return Fraction(report.components.get(1, 0), total) if total else Fraction(0)
