"""Knot types of the Hamiltonian cycles of straight-line K6 and K7 drawings in space."""
from .census import CensusReport, hamiltonian_cycles, run_census, verify_bounds, verify_lemma_bounds
from .diagram import Cycle, Diagram, KnotClass, classify, generic_direction, knot_determinant, project
from .geometry import Configuration, GeneralPositionError, epsilon, orient3d, side_of_plane
from .reduction import reduce_along, trivial_triples
from .search import random_configuration, search_max_fig8, verify_witness
from .tables import build_table, is_figure8_by_table

__all__ = [
    "CensusReport", "Configuration", "Cycle", "Diagram", "GeneralPositionError", "KnotClass",
    "build_table", "classify", "epsilon", "generic_direction", "hamiltonian_cycles",
    "is_figure8_by_table", "knot_determinant", "orient3d", "project", "random_configuration",
    "reduce_along", "run_census", "search_max_fig8", "side_of_plane", "trivial_triples",
    "verify_bounds", "verify_lemma_bounds", "verify_witness",
]
