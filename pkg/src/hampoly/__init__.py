"""Facets and separation for the hamiltonian circuit polytope.

Exact-rational machinery for circuits in successor representation: brute-force
oracles, greedy generation of undominated J-circuits, facet family
constructors with certification, and polynomial-time separation.
"""

from .caps import Caps
from .core import (
    Circuit,
    Domain,
    JCircuit,
    SignPartition,
    circuit_from_permutation,
    is_circuit,
    is_j_circuit,
    permutation_from_circuit,
    rational,
)
from .enumeration import (
    complete_j_circuit,
    dimension_witnesses,
    enumerate_circuits,
    enumerate_j_circuits,
    polytope_dimension,
)
from .errors import InputError, ResourceLimitError
from .facets import (
    FacetCertificate,
    FamilyId,
    LinearInequality,
    affine_rank,
    certify_facet,
    check_validity,
    is_facet_bruteforce,
    make_hierarchy_inequality,
    make_permutation_inequality,
    make_two_term_inequalities,
    map_to_arc_model,
)
from .greedy import (
    dominates,
    greedy_j_circuit,
    implied_ordering,
    undominated_bruteforce,
    undominated_j_circuits,
)
from .kernels import BACKEND
from .separation import (
    Cut,
    QueryPoint,
    SeparationResult,
    separate_all,
    separate_hierarchy,
    separate_permutation,
    separate_two_term,
)

__version__ = "0.1.0"
