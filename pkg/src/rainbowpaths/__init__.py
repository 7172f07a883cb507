"""Rainbow induced paths in coloured graphs: searches, proof machinery and conjecture checks."""

__version__ = "0.1.0"

from .generators import (
    TripleVertex,
    middle_element_colouring,
    mycielski,
    random_triangle_free,
    shift_graph_triples,
    standard_family,
)
from .graph import (
    BudgetExhausted,
    Colouring,
    ColourPartition,
    Graph,
    HoleWitness,
    PathWitness,
    induced_subgraph,
    is_proper,
    is_rainbow,
)
from .invariants import chromatic_number, clique_number, girth
from .paths import find_hole_with_rainbow_run, find_rainbow_hole, find_rainbow_induced_path
