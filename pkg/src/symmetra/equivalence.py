"""Deciding whether two Hamiltonians differ only by a relabelling of qubits.

Both Hamiltonians are mapped to coloured graphs under one shared
coefficient-class assignment (per-graph ordinals would make the colours
incomparable), their canonical labellings are computed, and a witness
permutation is read off by composing the two canonical orderings.
"""

from __future__ import annotations

from .automorphism import canonical_labelling
from .errors import InternalInvariantError
from .graph import build_graph, coefficient_classes
from .pauli import CoefficientPolicy, EXACT, Hamiltonian, is_symmetry, permute_hamiltonian
from .perms import Permutation


def verify_witness(
    sigma: Permutation,
    h1: Hamiltonian,
    h2: Hamiltonian,
    policy: CoefficientPolicy | None = None,
) -> bool:
    """True iff applying sigma to h1 reproduces h2's term set."""
    if sigma.degree != h1.n or h1.n != h2.n:
        raise ValueError("degree mismatch")
    moved = permute_hamiltonian(sigma, h1)
    if policy is None or policy.mode == "exact":
        return moved.term_map == h2.term_map
    key = policy.key
    return {p: key(c) for p, c in moved.term_map.items()} == {
        p: key(c) for p, c in h2.term_map.items()
    }


def permutation_equivalent(
    h1: Hamiltonian, h2: Hamiltonian, policy: CoefficientPolicy = EXACT
) -> Permutation | None:
    """A witness permutation mapping h1's terms onto h2's, or None.

    None is returned exactly when the canonical certificates differ; any
    returned witness is replay-verified before being handed out.
    """
    if h1.n != h2.n:
        raise ValueError(f"size mismatch: {h1.n} != {h2.n}")
    shared = coefficient_classes(
        [t.coeff for t in h1.terms] + [t.coeff for t in h2.terms], policy
    )
    g1 = build_graph(h1, policy, shared)
    g2 = build_graph(h2, policy, shared)
    cert1, lam1 = canonical_labelling(g1)
    cert2, lam2 = canonical_labelling(g2)
    if cert1 != cert2:
        return None
    image = [0] * h1.n
    for a, b in zip(lam1, lam2):
        if a < h1.n:
            if b >= h1.n:
                raise InternalInvariantError("canonical map mixes qubit and term vertices")
            image[a] = b
    sigma = Permutation(tuple(image))
    if not verify_witness(sigma, h1, h2, policy):
        raise InternalInvariantError("canonical witness failed replay verification")
    return sigma
