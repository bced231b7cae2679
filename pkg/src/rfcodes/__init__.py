"""Connected receptive-field codes: connectivity, minimal embedding dimension,
and grid realizations with independent verification."""

from .admissible import (AdmissibleGraph, SearchOutcome, canonical_graph,
                         search_planar_admissible, validate)
from .codes import (Code, CodeParseError, NotConnectedError, is_connected_code,
                    neuron_graph, parse_code, word)
from .dimension import DimensionVerdict, SearchBudgetExceeded, d_star
from .grid import (GridRealization, atoms_from_fields, check_admissible,
                   extract_code, field_connected, fields_from_atoms,
                   realization_graph, verify_grid)
from .planarity import Embedding, KuratowskiWitness, is_planar, planar_coordinates
from .realize1d import search_word, universal_grid, verify_word, word_to_grid
from .realize2d import fatten_embedding
from .realize3d import build_3d

__all__ = [
    "AdmissibleGraph", "Code", "CodeParseError", "DimensionVerdict", "Embedding",
    "GridRealization", "KuratowskiWitness", "NotConnectedError", "SearchBudgetExceeded",
    "SearchOutcome", "atoms_from_fields", "build_3d", "canonical_graph", "check_admissible",
    "d_star", "extract_code", "fatten_embedding", "field_connected", "fields_from_atoms",
    "is_connected_code", "is_planar", "neuron_graph", "parse_code", "planar_coordinates",
    "realization_graph", "search_planar_admissible", "search_word", "universal_grid", "validate",
    "verify_grid", "verify_word", "word", "word_to_grid",
]
