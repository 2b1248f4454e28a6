"""
Exact oracles for small graphs.
"""

from .enumeration import EnumerationStream, enumerate_connected_graphs
from .minors import is_outerplanar_exact
from .search import exists_kl_coloring, min_incidence_k

__all__ = [
    'EnumerationStream',
    'enumerate_connected_graphs',
    'exists_kl_coloring',
    'is_outerplanar_exact',
    'min_incidence_k',
]
