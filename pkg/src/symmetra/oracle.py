"""Brute-force ground truth by enumerating the full symmetric group.

Deliberately naive: this module must stay an independent check on the graph
solver, so it tests the invariance definition directly, permutation by
permutation, in lexicographic image order.
"""

from __future__ import annotations

from itertools import permutations as _all_permutations

from .pauli import CoefficientPolicy, Hamiltonian, is_symmetry, permute_hamiltonian
from .perms import Permutation, PermutationGroup, build_group

DEFAULT_N_MAX = 8


def brute_force_group(
    h: Hamiltonian, n_max: int = DEFAULT_N_MAX, policy: CoefficientPolicy | None = None
) -> PermutationGroup:
    """Group of exactly the permutations that leave the term set invariant."""
    if h.n > n_max:
        raise ValueError(f"n={h.n} exceeds the brute-force limit {n_max}")
    symmetries = [
        Permutation(img)
        for img in _all_permutations(range(h.n))
        if is_symmetry(Permutation(img), h, policy)
    ]
    return build_group(symmetries, degree=h.n)


def brute_force_equivalent(
    h1: Hamiltonian,
    h2: Hamiltonian,
    n_max: int = DEFAULT_N_MAX,
    policy: CoefficientPolicy | None = None,
) -> Permutation | None:
    """First permutation (lexicographic image order) mapping h1's terms onto
    h2's, or None."""
    if h1.n != h2.n:
        raise ValueError(f"size mismatch: {h1.n} != {h2.n}")
    if h1.n > n_max:
        raise ValueError(f"n={h1.n} exceeds the brute-force limit {n_max}")
    if policy is None:
        target = h2.term_map
        for img in _all_permutations(range(h1.n)):
            sigma = Permutation(img)
            if permute_hamiltonian(sigma, h1).term_map == target:
                return sigma
        return None
    target_q = {p: policy.key(c) for p, c in h2.term_map.items()}
    for img in _all_permutations(range(h1.n)):
        sigma = Permutation(img)
        mapped = {
            p: policy.key(c) for p, c in permute_hamiltonian(sigma, h1).term_map.items()
        }
        if mapped == target_q:
            return sigma
    return None
