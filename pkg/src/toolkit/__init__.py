"""
Instance generators, named families, file formats and acceptance suites.
"""

from .families import GraphFamily, family
from .formats import emit_coloring, emit_graph, parse_coloring, parse_edge_list
from .generators import GENERATOR_ID, GeneratorParams, gen_maximal_outerplanar, gen_outerplanar

__all__ = [
    'GraphFamily',
    'family',
    'emit_coloring',
    'emit_graph',
    'parse_coloring',
    'parse_edge_list',
    'GENERATOR_ID',
    'GeneratorParams',
    'gen_maximal_outerplanar',
    'gen_outerplanar',
]
