"""
Outerplanar Incidence Coloring - (Δ+2, 2)-incidence colorings of outerplanar graphs,
with exact oracles and generators for checking them.
"""

__version__ = "0.1.0"
