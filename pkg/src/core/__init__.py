"""
Core graph model, incidence colorings and the constructive solver.
"""

from .config import Config, MetricsConfig, SuiteConfig
from .extension import IncidenceSolver, SolveResult, solve
from .graph import Graph, build_graph
from .incidence import Incidence, IncidenceColoring, verify_coloring
from .reduction import Configuration, ConfigurationCase, find_configuration

__all__ = [
    'Config',
    'MetricsConfig',
    'SuiteConfig',
    'IncidenceSolver',
    'SolveResult',
    'solve',
    'Graph',
    'build_graph',
    'Incidence',
    'IncidenceColoring',
    'verify_coloring',
    'Configuration',
    'ConfigurationCase',
    'find_configuration',
]
