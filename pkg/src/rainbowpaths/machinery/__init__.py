from .constants import ConstantsTable, constants_table
from .grading import (
    Grading,
    GradingWitness,
    LemmaRun,
    grading_from_sets,
    grading_lemma_constructive,
    grading_lemma_search,
    refine_classes,
    validate_grading_witness,
)
from .grs import BicliqueWitness, find_biclique, grs_dichotomy, validate_biclique
from .orientation import CyclicOrientation, Orientation, longest_directed_path, orient_by_colour
from .sets import compute_a_set, compute_b_set, extension_candidates, proof_guided_search

# GRS thresholds known without the general theorem: an edge is an induced
# 2-path, and a 1-vertex path is trivially induced.
DEFAULT_R_TABLE = {1: 1, 2: 2}
