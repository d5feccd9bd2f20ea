"""Braid index versus bridge index: 2-bridge and Montesinos formulas, a 3-braid
census and a discrete elastic-knot simulator."""

from . import braidcensus, elastic, montesinos, rational

__version__ = "0.1.0"

__all__ = ["rational", "montesinos", "braidcensus", "elastic", "__version__"]
