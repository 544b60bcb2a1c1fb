"""Symmetra: permutation symmetries of Pauli-string Hamiltonians.

A Hamiltonian given as a set of (coefficient, Pauli string) terms is mapped
to a coloured bipartite graph whose automorphism group, restricted to the
qubit vertices, is exactly the group of qubit relabelings that leave the
term set invariant. The same construction decides, via canonical forms,
whether two Hamiltonians differ only by a relabelling of qubits.
"""

from .automorphism import (
    AutomorphismResult,
    OrderedPartition,
    automorphism_generators,
    canonical_form,
    canonical_labelling,
    find_symmetry_group,
    refine,
    restrict_to_qubits,
    satisfies_automorphism_conditions,
)
from .equivalence import permutation_equivalent, verify_witness
from .errors import HamiltonianParseError, InternalInvariantError
from .graph import (
    ColouredBipartiteGraph,
    DegreeReport,
    EdgeColor,
    VertexColor,
    build_graph,
    coefficient_classes,
    degree_report,
    export_dot,
    export_json,
    hamiltonian_from_graph,
    subdivide,
)
from .oracle import brute_force_equivalent, brute_force_group
from .pauli import (
    EXACT,
    Coefficient,
    CoefficientPolicy,
    Hamiltonian,
    PauliOp,
    PauliString,
    Term,
    apply_permutation,
    interaction_degree,
    is_symmetry,
    locality,
    parse_hamiltonian,
    permute_hamiltonian,
    quantized,
    serialize_hamiltonian,
)
from .perms import (
    GroupBuilder,
    Permutation,
    PermutationGroup,
    build_group,
    compose,
    contains,
    format_cycles,
    groups_equal,
    inverse,
    orbits,
    parse_cycles,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismResult",
    "Coefficient",
    "CoefficientPolicy",
    "ColouredBipartiteGraph",
    "DegreeReport",
    "EXACT",
    "EdgeColor",
    "GroupBuilder",
    "Hamiltonian",
    "HamiltonianParseError",
    "InternalInvariantError",
    "OrderedPartition",
    "PauliOp",
    "PauliString",
    "Permutation",
    "PermutationGroup",
    "Term",
    "VertexColor",
    "apply_permutation",
    "automorphism_generators",
    "brute_force_equivalent",
    "brute_force_group",
    "build_graph",
    "build_group",
    "canonical_form",
    "canonical_labelling",
    "coefficient_classes",
    "compose",
    "contains",
    "degree_report",
    "export_dot",
    "export_json",
    "find_symmetry_group",
    "format_cycles",
    "groups_equal",
    "hamiltonian_from_graph",
    "interaction_degree",
    "inverse",
    "is_symmetry",
    "locality",
    "orbits",
    "parse_cycles",
    "parse_hamiltonian",
    "permutation_equivalent",
    "permute_hamiltonian",
    "quantized",
    "refine",
    "restrict_to_qubits",
    "satisfies_automorphism_conditions",
    "serialize_hamiltonian",
    "subdivide",
    "verify_witness",
]
