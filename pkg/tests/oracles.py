"""Shared test helpers: seeded random curves and a finite-difference gradient."""

import numpy as np

from bbknots.elastic import PolygonalCurve, thickness, total_energy


def random_curve(rng: np.random.Generator, n: int = 32, min_thickness: float = 0.01) -> PolygonalCurve:
    """Unit-length circle with a few random Fourier modes added in every coordinate."""
    t = 2 * np.pi * np.arange(n) / n
    while True:
        x = np.column_stack([np.cos(t), np.sin(t), np.zeros(n)])
        for k in (2, 3):
            coeffs = rng.normal(scale=0.15 / k, size=(3, 2))
            x += np.column_stack([a * np.cos(k * t) + b * np.sin(k * t) for a, b in coeffs])
        c = PolygonalCurve(x).normalized()
        if thickness(c).value >= min_thickness:
            return c


def fd_gradient(c: PolygonalCurve, theta: float, h: float = 1e-6) -> np.ndarray:
    x = c.vertices
    g = np.zeros_like(x)
    for i in range(x.shape[0]):
        for k in range(3):
            xp, xm = x.copy(), x.copy()
            xp[i, k] += h
            xm[i, k] -= h
            ep = total_energy(PolygonalCurve(xp), theta).e_theta
            em = total_energy(PolygonalCurve(xm), theta).e_theta
            g[i, k] = (ep - em) / (2 * h)
    return g


def relative_error(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))
