"""Exact cycle spectra and exhaustive weak-pancyclicity checks for small graphs."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_graph
from .constructions import b_threshold, bt, complete_bipartite, cycle_graph, gn
from .enumeration import EnumFilter, count_by_size, enumerate_graphs, iter_graphs
from .graph import Bipartition, Graph, VertexClass, bipartition, classify_vertices
from .harness import (
    ExtremalRecord,
    VerificationReport,
    compute_f,
    scan_conjecture1,
    verify_lemma5,
    verify_lemma7,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
)
from .spectrum import (
    CycleSpectrum,
    PancyclicityReport,
    classify_pancyclicity,
    cycle_spectrum,
    edge_cycle_lengths,
    path_length_spectrum,
    vertex_cycle_lengths,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CanonicalForm",
    "CycleSpectrum",
    "EnumFilter",
    "ExtremalRecord",
    "Graph",
    "PancyclicityReport",
    "VerificationReport",
    "VertexClass",
    "are_isomorphic",
    "b_threshold",
    "bipartition",
    "bt",
    "canonical_form",
    "canonical_graph",
    "classify_pancyclicity",
    "classify_vertices",
    "complete_bipartite",
    "compute_f",
    "count_by_size",
    "cycle_graph",
    "cycle_spectrum",
    "edge_cycle_lengths",
    "enumerate_graphs",
    "gn",
    "iter_graphs",
    "path_length_spectrum",
    "scan_conjecture1",
    "verify_lemma5",
    "verify_lemma7",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
    "vertex_cycle_lengths",
]
