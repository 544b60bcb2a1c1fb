"""Benchmark model Hamiltonians with analytically known symmetry groups.

Couplings enter terms negated (ferromagnetic convention): bond terms carry
-J and field terms -Omega. Sites are numbered 1..n in text output; the 2x2
square lattice is numbered cyclically around the plaquette so that its bond
set is Z1Z2, Z2Z3, Z3Z4, Z4Z1, while larger lattices are numbered row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Literal, Sequence

from .pauli import Coefficient, Hamiltonian
from .perms import Permutation

Boundary = Literal["periodic", "open"]

FAMILIES = ("tfim1d", "tfim1d_inhom", "tfim2d", "heisenberg_mf")


def _site_string(n: int, letters: dict[int, str]) -> str:
    return "".join(letters.get(i, "I") for i in range(n))


def _check_boundary(boundary: str) -> None:
    if boundary not in ("periodic", "open"):
        raise ValueError(f"boundary must be 'periodic' or 'open', got {boundary!r}")


def tfim_1d(n: int, J=1, Omega=1, boundary: Boundary = "periodic") -> Hamiltonian:
    """Homogeneous chain: ZZ bonds with -J plus an X field with -Omega.

    Periodic chains need n >= 3 (n = 2 would duplicate the wrap-around
    bond); open chains need n >= 2.
    """
    _check_boundary(boundary)
    if boundary == "periodic" and n < 3:
        raise ValueError("periodic chains need n >= 3")
    if boundary == "open" and n < 2:
        raise ValueError("open chains need n >= 2")
    mJ, mOmega = -Coefficient.of(J), -Coefficient.of(Omega)
    terms: list[tuple] = []
    bonds = n if boundary == "periodic" else n - 1
    for i in range(bonds):
        terms.append((mJ, _site_string(n, {i: "Z", (i + 1) % n: "Z"})))
    for i in range(n):
        terms.append((mOmega, _site_string(n, {i: "X"})))
    return Hamiltonian.from_terms(terms)


def tfim_1d_inhomogeneous(
    n: int,
    J_list: Sequence,
    Omega_list: Sequence,
    boundary: Boundary = "periodic",
) -> Hamiltonian:
    """Chain with one coupling per bond and one field per site.

    The couplings must be pairwise distinct; identical couplings would
    reintroduce bond symmetries that this family is meant to exclude.
    """
    _check_boundary(boundary)
    if boundary == "periodic" and n < 3:
        raise ValueError("periodic chains need n >= 3")
    if boundary == "open" and n < 2:
        raise ValueError("open chains need n >= 2")
    bonds = n if boundary == "periodic" else n - 1
    if len(J_list) != bonds:
        raise ValueError(f"expected {bonds} couplings, got {len(J_list)}")
    if len(Omega_list) != n:
        raise ValueError(f"expected {n} fields, got {len(Omega_list)}")
    Js = [Coefficient.of(j) for j in J_list]
    if len(set(Js)) != len(Js):
        raise ValueError("couplings must be pairwise distinct")
    terms: list[tuple] = []
    for i, j_val in enumerate(Js):
        terms.append((-j_val, _site_string(n, {i: "Z", (i + 1) % n: "Z"})))
    for i, om in enumerate(Omega_list):
        terms.append((-Coefficient.of(om), _site_string(n, {i: "X"})))
    return Hamiltonian.from_terms(terms)


def tfim_2d_square(
    lx: int, ly: int, J=1, Omega=1, boundary: Boundary = "open"
) -> Hamiltonian:
    """Open square lattice with nearest-neighbour ZZ bonds and X fields."""
    if boundary != "open":
        raise ValueError("only open boundaries are supported on the square lattice")
    if lx < 2 or ly < 2:
        raise ValueError("lattice dimensions must be at least 2x2")
    n = lx * ly
    mJ, mOmega = -Coefficient.of(J), -Coefficient.of(Omega)
    if lx == 2 and ly == 2:
        # Plaquette numbering: bonds ring around the square.
        bonds = [(0, 1), (1, 2), (2, 3), (3, 0)]
    else:
        bonds = []
        for r in range(ly):
            for c in range(lx):
                site = r * lx + c
                if c + 1 < lx:
                    bonds.append((site, site + 1))
                if r + 1 < ly:
                    bonds.append((site, site + lx))
    terms: list[tuple] = []
    for a, b in bonds:
        terms.append((mJ, _site_string(n, {a: "Z", b: "Z"})))
    for i in range(n):
        terms.append((mOmega, _site_string(n, {i: "X"})))
    return Hamiltonian.from_terms(terms)


def heisenberg_mean_field(n: int, J=1) -> Hamiltonian:
    """All-to-all XX + YY + ZZ couplings with -J; 3*n*(n-1)/2 terms."""
    if n < 2:
        raise ValueError("the mean-field model needs n >= 2")
    mJ = -Coefficient.of(J)
    terms: list[tuple] = []
    for i in range(n):
        for j in range(i + 1, n):
            for letter in "XYZ":
                terms.append((mJ, _site_string(n, {i: letter, j: letter})))
    return Hamiltonian.from_terms(terms)


@dataclass(frozen=True)
class ModelSpec:
    family: str
    n: int | None = None
    lx: int | None = None
    ly: int | None = None
    J: object = 1
    Omega: object = 1
    boundary: Boundary = "periodic"
    J_list: tuple | None = None
    Omega_list: tuple | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")


def build_model(spec: ModelSpec) -> Hamiltonian:
    if spec.family == "tfim1d":
        return tfim_1d(spec.n, spec.J, spec.Omega, spec.boundary)
    if spec.family == "tfim1d_inhom":
        return tfim_1d_inhomogeneous(spec.n, spec.J_list, spec.Omega_list, spec.boundary)
    if spec.family == "tfim2d":
        return tfim_2d_square(spec.lx, spec.ly, spec.J, spec.Omega)
    return heisenberg_mean_field(spec.n, spec.J)


@dataclass(frozen=True)
class KnownGroup:
    expected_generators: tuple[Permutation, ...]
    expected_order: int


def _rotation(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)))


def _reflection_through_first(n: int) -> Permutation:
    # Ring reflection fixing site 1: site k maps to 2 - k modulo n.
    return Permutation(tuple((n - i) % n for i in range(n)))


def _chain_reflection(n: int) -> Permutation:
    # Open-chain reflection: site k maps to n + 1 - k.
    return Permutation(tuple(n - 1 - i for i in range(n)))


def known_group(spec: ModelSpec) -> KnownGroup:
    """Generators and exact order of the analytically known symmetry group.

    Raises for families without one (square lattices other than 2x2).
    """
    if spec.family == "tfim1d":
        n = spec.n
        if spec.boundary == "periodic":
            return KnownGroup((_rotation(n), _reflection_through_first(n)), 2 * n)
        return KnownGroup((_chain_reflection(n),), 2)
    if spec.family == "tfim1d_inhom":
        return KnownGroup((), 1)
    if spec.family == "tfim2d":
        if spec.lx == 2 and spec.ly == 2:
            # Full square symmetry: a diagonal reflection and an edge
            # reflection generate all eight plaquette symmetries.
            diagonal = Permutation((0, 3, 2, 1))  # (2 4)
            edge = Permutation((1, 0, 3, 2))  # (1 2)(3 4)
            return KnownGroup((diagonal, edge), 8)
        raise ValueError("no analytically known group for this lattice size")
    if spec.family == "heisenberg_mf":
        n = spec.n
        gens = tuple(
            Permutation(tuple(range(i)) + (i + 1, i) + tuple(range(i + 2, n)))
            for i in range(n - 1)
        )
        return KnownGroup(gens, factorial(n))
    raise ValueError(f"unknown family {spec.family!r}")
