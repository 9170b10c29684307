"""Berge-K_{3,t}-free linear hypergraphs: constructions, bounds, spectra and certificates."""

from .berge import BergeWitness, SkeletonGraph, contains_berge, is_berge_k3t_free, k3t_skeleton, validate_witness
from .bounds import (
    bound_report,
    eval_f,
    spectral_lower_bound,
    spectral_upper_bound,
    tait_bound,
    turan_upper_bound,
)
from .constructions import build_F, lattice, reference_graph, sample_G, sample_H
from .errors import BergeError
from .hypergraph import (
    LinearHypergraph,
    build_linear,
    co_edge,
    common_neighborhood,
    degree,
    edge_profile,
    is_connected,
    max_degree,
    partition_neighborhood,
)
from .spectral import apply_adjacency, closed_form_rho_F, reduced_system_rho_F, spectral_radius, verify_eigenpair
from .stability import (
    StabilityContext,
    check_lemma32,
    check_lemma33,
    extract_witness,
    matching_witness,
    plant_context,
    scan_contexts,
)

__version__ = "0.1.0"
