"""Discrete elastic knots: bending energy, thickness, ropelength and their descent.

Curves are closed polygons ``x_0, ..., x_{n-1}`` in 3-space, edge ``e_i`` running
from ``x_i`` to ``x_{i+1}``.  At vertex ``i`` the turning angle ``phi_i`` is the
angle between ``e_{i-1}`` and ``e_i`` and ``l_i`` is the mean of their lengths, so
the discrete curvature is ``phi_i / l_i`` and the bending energy is
``sum phi_i**2 / l_i``.  A regular n-gon of unit length gets exactly ``(2 pi)**2``.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Callable

import numpy as np

__all__ = [
    "PolygonalCurve",
    "EnergyBreakdown",
    "SimParams",
    "TorusBraidInit",
    "GuardError",
    "bending_energy",
    "total_curvature",
    "thickness",
    "ropelength",
    "total_energy",
    "gradient",
    "minimize",
    "braid_torus_init",
    "regular_polygon",
    "meridian_crossings",
    "write_obj",
    "read_obj",
    "write_csv",
    "write_energy_log",
]

TOUCHING = math.inf  # ropelength sentinel for strands that meet
_TOUCH_TOL = 1e-12


class GuardError(RuntimeError):
    """A descent run left the knot class guards (thickness floor or Fary-Milnor)."""


@dataclass(frozen=True, eq=False)
class PolygonalCurve:
    vertices: np.ndarray

    def __post_init__(self):
        x = np.array(self.vertices, dtype=float)
        if x.ndim != 2 or x.shape[1] != 3:
            raise ValueError(f"vertices must have shape (n, 3), got {x.shape}")
        if len(x) < 8:
            raise ValueError(f"a closed polygon needs at least 8 vertices, got {len(x)}")
        if not np.all(np.isfinite(x)):
            raise ValueError("vertices must be finite")
        if np.any(np.linalg.norm(np.roll(x, -1, axis=0) - x, axis=1) == 0):
            raise ValueError("consecutive vertices coincide (degenerate edge)")
        x.setflags(write=False)
        object.__setattr__(self, "vertices", x)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> np.ndarray:
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    def edge_lengths(self) -> np.ndarray:
        return np.linalg.norm(self.edges(), axis=1)

    def length(self) -> float:
        return float(self.edge_lengths().sum())

    def scaled(self, factor: float) -> "PolygonalCurve":
        return PolygonalCurve(self.vertices * factor)

    def normalized(self) -> "PolygonalCurve":
        """Unit length, centred at the vertex mean."""
        x = self.vertices - self.vertices.mean(axis=0)
        return PolygonalCurve(x / self.length())

    def resampled(self, n: int | None = None) -> "PolygonalCurve":
        """Equal edge lengths by arclength interpolation, starting at vertex 0."""
        n = n or self.n
        x = self.vertices
        seg = self.edge_lengths()
        s = np.concatenate([[0.0], np.cumsum(seg)])
        target = np.linspace(0.0, s[-1], n, endpoint=False)
        closed = np.vstack([x, x[:1]])
        out = np.column_stack([np.interp(target, s, closed[:, k]) for k in range(3)])
        return PolygonalCurve(out)


def regular_polygon(n: int, radius: float = 1.0, cover: int = 1) -> PolygonalCurve:
    t = 2 * np.pi * cover * np.arange(n) / n
    return PolygonalCurve(np.column_stack([radius * np.cos(t), radius * np.sin(t), np.zeros(n)]))


def _angles(x: np.ndarray):
    a = x - np.roll(x, 1, axis=0)  # incoming edge at each vertex
    b = np.roll(x, -1, axis=0) - x  # outgoing edge
    la = np.linalg.norm(a, axis=1)
    lb = np.linalg.norm(b, axis=1)
    cross = np.linalg.norm(np.cross(a, b), axis=1)
    phi = np.arctan2(cross, np.einsum("ij,ij->i", a, b))
    return a, b, la, lb, phi


def bending_energy(c: PolygonalCurve) -> float:
    _, _, la, lb, phi = _angles(c.vertices)
    return float(np.sum(phi**2 / ((la + lb) / 2)))


def total_curvature(c: PolygonalCurve) -> float:
    return float(_angles(c.vertices)[4].sum())


# thickness ------------------------------------------------------------------


def _pair_index(n: int):
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))  # edges 0 and n-1 share vertex 0
    return i[keep], j[keep]


def _segment_closest(p0, u, q0, v):
    """Closest points ``p0 + s u`` and ``q0 + t v`` with ``s, t`` in ``[0, 1]`` (vectorized)."""
    w = p0 - q0
    a = np.einsum("ij,ij->i", u, u)
    b = np.einsum("ij,ij->i", u, v)
    c = np.einsum("ij,ij->i", v, v)
    d = np.einsum("ij,ij->i", u, w)
    e = np.einsum("ij,ij->i", v, w)
    denom = a * c - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 1e-14 * a * c, (b * e - c * d) / denom, 0.0)
    s = np.clip(s, 0.0, 1.0)
    t = (b * s + e) / c
    t_clipped = np.clip(t, 0.0, 1.0)
    # re-solve s where t hit its bounds
    s = np.where(t != t_clipped, np.clip((b * t_clipped - d) / a, 0.0, 1.0), s)
    return s, t_clipped


@dataclass(frozen=True)
class Thickness:
    value: float
    kind: str  # "minrad", "pair" or "touching"
    where: tuple
    min_pair_distance: float


def thickness(c: PolygonalCurve) -> Thickness:
    """``min(MinRad, dcsd / 2)``.

    MinRad at a vertex is ``min(|e_in|, |e_out|) / (2 tan(phi / 2))``.  dcsd is
    the smallest distance between closest points of non-adjacent edges that are
    critical for the distance function seen from both sides.
    """
    x = c.vertices
    n = len(x)
    a, b, la, lb, phi = _angles(x)
    with np.errstate(divide="ignore"):
        minrad = np.minimum(la, lb) / (2 * np.tan(phi / 2))
    k = int(np.argmin(minrad))
    best = Thickness(float(minrad[k]), "minrad", (k,), math.inf)

    i, j = _pair_index(n)
    e = b  # e[i] runs from x[i] to x[i+1]
    s, t = _segment_closest(x[i], e[i], x[j], e[j])
    p = x[i] + s[:, None] * e[i]
    q = x[j] + t[:, None] * e[j]
    d = q - p
    dist = np.linalg.norm(d, axis=1)
    dmin = float(dist.min())
    if dmin <= _TOUCH_TOL * c.length():
        m = int(np.argmin(dist))
        return Thickness(0.0, "touching", (int(i[m]), int(j[m])), dmin)
    crit = _critical(s, d, e[(i - 1) % n], e[(i + 1) % n]) & _critical(t, -d, e[(j - 1) % n], e[(j + 1) % n])
    if crit.any():
        m = int(np.flatnonzero(crit)[np.argmin(dist[crit])])
        if dist[m] / 2 < best.value:
            best = Thickness(float(dist[m] / 2), "pair", (int(i[m]), int(j[m]), float(s[m]), float(t[m])), dmin)
    return Thickness(best.value, best.kind, best.where, dmin)


def _critical(s, d, e_prev, e_next):
    # at an interior point the segment minimum is already critical; at a
    # vertex the neighbouring edge must not bring the curve closer
    ok = np.ones(len(s), dtype=bool)
    at0 = s <= 0.0
    at1 = s >= 1.0
    ok[at0] = np.einsum("ij,ij->i", d[at0], e_prev[at0]) >= 0
    ok[at1] = np.einsum("ij,ij->i", d[at1], e_next[at1]) <= 0
    return ok


def ropelength(c: PolygonalCurve) -> float:
    """Length over thickness; ``inf`` when strands touch."""
    th = thickness(c)
    if th.kind == "touching" or th.value <= 0:
        return TOUCHING
    return c.length() / th.value


@dataclass(frozen=True)
class EnergyBreakdown:
    e_bend: float
    total_curvature: float
    ropelength: float
    e_theta: float
    theta: float
    min_thickness: float

    def as_row(self) -> dict:
        return {
            "theta": self.theta,
            "e_bend": self.e_bend,
            "total_curvature": self.total_curvature,
            "ropelength": self.ropelength,
            "e_theta": self.e_theta,
            "min_thickness": self.min_thickness,
        }


def total_energy(c: PolygonalCurve, theta: float) -> EnergyBreakdown:
    if not theta > 0:
        raise ValueError(f"theta must be positive, got {theta}")
    eb = bending_energy(c)
    th = thickness(c)
    rope = TOUCHING if th.kind == "touching" else c.length() / th.value
    return EnergyBreakdown(eb, total_curvature(c), rope, eb + theta * rope, theta, th.value)


# gradient -------------------------------------------------------------------


def _bending_gradient(x: np.ndarray) -> np.ndarray:
    a, b, la, lb, phi = _angles(x)
    ah = a / la[:, None]
    bh = b / lb[:, None]
    cosp = np.cos(phi)
    sinp = np.sin(phi)
    # phi / sin(phi) stays bounded as phi -> 0
    ratio = np.where(sinp > 1e-8, phi / np.where(sinp > 1e-8, sinp, 1.0), 1.0 + phi**2 / 6)
    ell = (la + lb) / 2
    # d(phi^2)/da and d(phi^2)/db
    dphi2_da = -2 * ratio[:, None] * (bh - cosp[:, None] * ah) / la[:, None]
    dphi2_db = -2 * ratio[:, None] * (ah - cosp[:, None] * bh) / lb[:, None]
    w = (phi**2 / ell**2 / 2)[:, None]
    ga = dphi2_da / ell[:, None] - w * ah
    gb = dphi2_db / ell[:, None] - w * bh
    # a = x_i - x_{i-1}, b = x_{i+1} - x_i
    g = ga - gb
    g -= np.roll(ga, -1, axis=0)
    g += np.roll(gb, 1, axis=0)
    return g


def _length_gradient(x: np.ndarray) -> np.ndarray:
    e = np.roll(x, -1, axis=0) - x
    eh = e / np.linalg.norm(e, axis=1)[:, None]
    return np.roll(eh, 1, axis=0) - eh


def _thickness_gradient(x: np.ndarray, th: Thickness) -> np.ndarray:
    n = len(x)
    g = np.zeros_like(x)
    if th.kind == "minrad":
        (k,) = th.where
        a, b, la, lb, phi = _angles(x[[(k - 1) % n, k, (k + 1) % n]])
        a, b, la, lb, phi = a[1], b[1], la[1], lb[1], phi[1]
        m = min(la, lb)
        half = phi / 2
        dr_dm = 1 / (2 * math.tan(half))
        dr_dphi = -m / (4 * math.sin(half) ** 2)
        ah, bh = a / la, b / lb
        cosp, sinp = math.cos(phi), math.sin(phi)
        dphi_da = -(bh - cosp * ah) / (la * sinp)
        dphi_db = -(ah - cosp * bh) / (lb * sinp)
        ga = dr_dphi * dphi_da + (dr_dm * ah if la <= lb else 0)
        gb = dr_dphi * dphi_db + (dr_dm * bh if lb < la else 0)
        g[k] += ga - gb
        g[(k - 1) % n] -= ga
        g[(k + 1) % n] += gb
        return g
    i, j, s, t = th.where
    p = x[i] + s * (x[(i + 1) % n] - x[i])
    q = x[j] + t * (x[(j + 1) % n] - x[j])
    u = (q - p) / np.linalg.norm(q - p)
    # envelope: only the endpoints' weights move the distance; halve for dcsd / 2
    g[i] -= (1 - s) * u / 2
    g[(i + 1) % n] -= s * u / 2
    g[j] += (1 - t) * u / 2
    g[(j + 1) % n] += t * u / 2
    return g


def gradient(c: PolygonalCurve, theta: float) -> np.ndarray:
    """Gradient of ``e_bend + theta * ropelength`` with respect to the vertices."""
    x = c.vertices
    th = thickness(c)
    if th.kind == "touching":
        raise GuardError("touching strands: ropelength is infinite and has no gradient")
    L = c.length()
    g_rope = _length_gradient(x) / th.value - L / th.value**2 * _thickness_gradient(x, th)
    return _bending_gradient(x) + theta * g_rope


# initial curves -------------------------------------------------------------


@dataclass(frozen=True)
class TorusBraidInit:
    """Either a torus knot ``(p, q)`` or a braid word on ``strands`` strands.

    Braid words use ``a`` for sigma_1 and ``B`` for sigma_2^{-1}; a general word
    may list generators as signed integers instead (``(1, -2, 1, -2)``).
    """

    rho: float = 0.3
    torus: tuple[int, int] | None = None
    word: str | tuple[int, ...] | None = None
    strands: int | None = None
    n: int = 128

    def letters(self) -> tuple[int, ...]:
        if isinstance(self.word, str):
            table = {"a": 1, "A": -1, "b": 2, "B": -2}
            try:
                return tuple(table[ch] for ch in self.word)
            except KeyError as exc:
                raise ValueError(f"unknown braid letter {exc.args[0]!r}") from None
        return tuple(int(g) for g in self.word or ())


def _smoothstep(u):
    return u * u * (3 - 2 * u)


def _braid_strands(letters: tuple[int, ...], k: int, rho: float, samples: int):
    """Disk coordinates of each strand position along one turn of the core circle."""
    m = len(letters)
    phase = np.linspace(0, 1, samples, endpoint=False)
    slot = np.linspace(-1, 1, k) * rho * 0.8 if k > 1 else np.zeros(1)
    # pos[j] follows whichever strand starts at slot j
    uv = np.zeros((k, samples, 2))
    where = list(range(k))  # where[j] = current slot of strand j
    for idx, ph in enumerate(phase):
        seg = min(int(ph * m), m - 1)
        local = ph * m - seg
        for j in range(k):
            uv[j, idx] = (slot[where[j]], 0.0)
        g = letters[seg]
        i = abs(g) - 1
        movers = [j for j in range(k) if where[j] in (i, i + 1)]
        ang = np.pi * _smoothstep(local) * (1 if g > 0 else -1)
        mid = (slot[i] + slot[i + 1]) / 2
        half = (slot[i + 1] - slot[i]) / 2
        for j in movers:
            side = -1 if where[j] == i else 1
            uv[j, idx] = (mid + side * half * np.cos(ang), side * half * np.sin(ang))
        # after the last sample of a segment the swap is complete
        nxt = phase[idx + 1] if idx + 1 < samples else 1.0
        if min(int(nxt * m), m) != seg:
            for j in movers:
                where[j] = i + 1 if where[j] == i else i
    return uv, where


def braid_torus_init(spec: TorusBraidInit) -> PolygonalCurve:
    """A knot inside the rho-torus meeting every meridian disk ``strands`` times."""
    if not 0 < spec.rho < 1:
        raise ValueError(f"rho must lie in (0, 1), got {spec.rho}")
    n = spec.n
    if spec.torus is not None:
        p, q = spec.torus
        k, m = min(abs(p), abs(q)), max(abs(p), abs(q))
        if k < 1 or math.gcd(k, m) != 1:
            raise ValueError(f"torus ({p}, {q}) is not a knot; use coprime values")
        t = np.arange(n) / n
        # k turns round the core and m turns round the tube
        r = 1 + spec.rho * np.cos(2 * np.pi * m * t)
        x = np.column_stack(
            [r * np.cos(2 * np.pi * k * t), r * np.sin(2 * np.pi * k * t), spec.rho * np.sin(2 * np.pi * m * t)]
        )
    else:
        letters = spec.letters()
        if not letters:
            raise ValueError("braid init needs a torus pair or a nonempty word")
        k = spec.strands or (max(abs(g) for g in letters) + 1)
        if k < 2:
            raise ValueError("braid inits need at least 2 strands")
        per_turn = max(n // k, 8)
        uv, where = _braid_strands(letters, k, spec.rho, per_turn)
        # strands are named by their starting slot; follow strand 0 round the closure
        pts, strand, turns = [], 0, 0
        while True:
            az = 2 * np.pi * (turns + np.arange(per_turn) / per_turn)
            u, v = uv[strand, :, 0], uv[strand, :, 1]
            pts.append(np.column_stack([(1 + u) * np.cos(az), (1 + u) * np.sin(az), v]))
            turns += 1
            strand = where[strand]
            if strand == 0:
                break
        if turns != k:
            raise ValueError("the braid closes to a link; only knots are supported")
        x = np.vstack(pts)
    c = PolygonalCurve(x)
    crossings = meridian_crossings(c)
    if crossings != k:
        raise AssertionError(f"meridian disk met {crossings} times, expected {k}")
    return c.resampled().normalized()


def meridian_crossings(c: PolygonalCurve, azimuth: float = 0.0) -> int:
    """Signed count of passes through the half plane at ``azimuth`` about the z-axis."""
    x = c.vertices - c.vertices.mean(axis=0)
    ang = np.unwrap(np.append(np.arctan2(x[:, 1], x[:, 0]), math.atan2(x[0, 1], x[0, 0])))
    return int(round((ang[-1] - ang[0]) / (2 * np.pi)))


# descent --------------------------------------------------------------------


@dataclass
class SimParams:
    theta_schedule: tuple[float, ...] = (1e-2, 1e-3, 1e-4)
    max_steps: int = 2000
    grad_tol: float = 1e-6
    n: int = 128
    step_init: float = 1e-5
    step_grow: float = 1.5
    backtrack: float = 0.5
    armijo: float = 1e-4
    max_backtracks: int = 40
    thickness_floor: float = 1e-4
    curvature_slack: float = 1e-3
    time_limit: float = 240.0
    memory: int = 10
    record_every: int = 10

    def __post_init__(self):
        self.theta_schedule = tuple(float(t) for t in self.theta_schedule)
        if not self.theta_schedule or any(t <= 0 for t in self.theta_schedule):
            raise ValueError("theta schedule must be nonempty and positive")
        if any(b >= a for a, b in zip(self.theta_schedule, self.theta_schedule[1:])):
            raise ValueError("theta schedule must be strictly decreasing")

    @classmethod
    def from_file(cls, path) -> "SimParams":
        """Read ``key = value`` lines; ``#`` starts a comment; unknown keys are errors."""
        known = {f.name: f for f in fields(cls)}
        kwargs = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            if key == "theta_schedule":
                kwargs[key] = tuple(float(v) for v in value.replace(",", " ").split())
            else:
                kwargs[key] = type(getattr(cls(), key))(value)
        return cls(**kwargs)


@dataclass
class MinimizeResult:
    curve: PolygonalCurve
    history: list[dict] = field(default_factory=list)
    final: EnergyBreakdown | None = None
    stages: list[dict] = field(default_factory=list)
    elapsed: float = 0.0


def _project(x: np.ndarray, n: int) -> PolygonalCurve:
    return PolygonalCurve(x).resampled(n).normalized()


def minimize(
    c0: PolygonalCurve,
    p: SimParams | None = None,
    bridge: int | None = None,
    callback: Callable[[int, EnergyBreakdown], None] | None = None,
) -> MinimizeResult:
    """Projected gradient descent on ``e_bend + theta * ropelength`` with theta continuation.

    Every accepted step is reprojected to unit length and equal edges, must not
    raise ``e_theta``, must keep thickness above the floor and, when ``bridge``
    is given, total curvature above ``2 pi bridge``.
    """
    p = p or SimParams()
    start = time.perf_counter()
    curve = _project(c0.vertices, p.n)
    if thickness(curve).kind == "touching":
        raise GuardError("initial curve is not embedded")
    result = MinimizeResult(curve)
    step_count = 0
    for theta in p.theta_schedule:
        energy = total_energy(curve, theta)
        _guard(energy, p, bridge)
        alpha = p.step_init
        memory: list[tuple[np.ndarray, np.ndarray, float]] = []
        prev = None
        reason = "max_steps"
        for _ in range(p.max_steps):
            if time.perf_counter() - start > p.time_limit:
                reason = "time_limit"
                break
            g = gradient(curve, theta)
            gnorm = float(np.linalg.norm(g))
            if gnorm < p.grad_tol:
                reason = "converged"
                break
            if prev is not None and p.memory:
                s_vec = (curve.vertices - prev[0]).ravel()
                y_vec = (g - prev[1]).ravel()
                sy = float(s_vec @ y_vec)
                if sy > 1e-10 * np.linalg.norm(s_vec) * np.linalg.norm(y_vec):
                    memory.append((s_vec, y_vec, 1 / sy))
                    del memory[: -p.memory]
            direction = _lbfgs_direction(g.ravel(), memory).reshape(g.shape)
            if float(np.sum(direction * g)) >= 0:
                memory.clear()
                direction = -g
            step = 1.0 if memory else alpha
            accepted = None
            for _ in range(p.max_backtracks):
                try:
                    trial = _project(curve.vertices + step * direction, p.n)
                    e_trial = total_energy(trial, theta)
                except ValueError:
                    step *= p.backtrack
                    continue
                drop = float(np.sum(g * (curve.vertices - trial.vertices)))
                if (
                    e_trial.e_theta < energy.e_theta - p.armijo * max(drop, 0.0)
                    and e_trial.min_thickness > p.thickness_floor
                ):
                    accepted = (trial, e_trial)
                    break
                step *= p.backtrack
            if accepted is None:
                if memory:
                    # a stale quasi-Newton model; retry from plain descent
                    memory.clear()
                    prev = None
                    continue
                reason = "line_search_exhausted"
                break
            if not memory:
                alpha = step * p.step_grow
            prev = (curve.vertices, g)
            curve, energy = accepted
            step_count += 1
            _guard(energy, p, bridge)
            if step_count % p.record_every == 0:
                result.history.append({"step": step_count, **energy.as_row()})
                if callback:
                    callback(step_count, energy)
        result.stages.append({"theta": theta, "stop": reason, "steps": step_count, "e_theta": energy.e_theta})
        result.history.append({"step": step_count, **energy.as_row()})
    result.curve = curve
    result.final = total_energy(curve, p.theta_schedule[-1])
    result.elapsed = time.perf_counter() - start
    return result


def _lbfgs_direction(g: np.ndarray, memory) -> np.ndarray:
    """Two-loop recursion; plain steepest descent when the memory is empty."""
    if not memory:
        return -g
    q = g.copy()
    coeffs = []
    for s, y, rho in reversed(memory):
        a = rho * float(s @ q)
        coeffs.append(a)
        q -= a * y
    s, y, _ = memory[-1]
    q *= float(s @ y) / float(y @ y)
    for (s, y, rho), a in zip(memory, reversed(coeffs)):
        b = rho * float(y @ q)
        q += (a - b) * s
    return -q


def _guard(e: EnergyBreakdown, p: SimParams, bridge: int | None) -> None:
    if e.min_thickness <= p.thickness_floor:
        raise GuardError(f"thickness {e.min_thickness:.3g} fell below the floor {p.thickness_floor}")
    if bridge is not None and e.total_curvature <= 2 * math.pi * bridge - p.curvature_slack:
        raise GuardError(f"total curvature {e.total_curvature:.6f} is below 2 pi * {bridge}")
    if e.total_curvature**2 > e.e_bend * (1 + 1e-9):
        raise GuardError("discrete Cauchy-Schwarz bound violated")


# export ---------------------------------------------------------------------


def write_obj(c: PolygonalCurve, path) -> None:
    lines = [f"v {x:.12g} {y:.12g} {z:.12g}" for x, y, z in c.vertices]
    lines.append("l " + " ".join(str(i + 1) for i in range(c.n)) + " 1")
    Path(path).write_text("\n".join(lines) + "\n")


def read_obj(path) -> PolygonalCurve:
    verts = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("v "):
            verts.append([float(v) for v in line.split()[1:4]])
    return PolygonalCurve(np.array(verts))


def write_csv(c: PolygonalCurve, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "y", "z"])
        for row in c.vertices:
            w.writerow([f"{v:.12g}" for v in row])


ENERGY_COLUMNS = ["step", "theta", "e_bend", "total_curvature", "ropelength", "e_theta", "min_thickness"]


def write_energy_log(history: list[dict], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=ENERGY_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in history:
            w.writerow({k: row[k] for k in ENERGY_COLUMNS})
