"""Automorphism groups of coloured graphs by individualisation-refinement.

The search alternates equitable colour refinement with individualising one
vertex from a deterministic target cell. The leftmost ("spine") leaf fixes a
reference ordering; every later leaf with a matching refinement trace is
compared against it, and verified matches become automorphism generators.
Pruning uses (a) orbits of the generators found so far that fix the current
individualised prefix and (b) the cell-size signature of refined partitions
as a node invariant. The best leaf under the (invariant trace, encoding)
order yields a canonical certificate, so certificate equality decides
coloured-graph isomorphism.

Everything is deterministic; repeated runs give identical generators and
certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError
from .graph import ColouredBipartiteGraph, build_graph
from .pauli import EXACT, CoefficientPolicy, Hamiltonian, is_symmetry
from .perms import GroupBuilder, Permutation, PermutationGroup, build_group


@dataclass(frozen=True)
class OrderedPartition:
    """Disjoint vertex cells in a fixed order; refinement only splits cells."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for cell in self.cells:
            if not cell:
                raise ValueError("empty cell")
            for v in cell:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two cells")
                seen.add(v)

    @classmethod
    def unit(cls, num_vertices: int) -> "OrderedPartition":
        return cls((tuple(range(num_vertices)),))

    @classmethod
    def discrete(cls, num_vertices: int) -> "OrderedPartition":
        return cls(tuple((v,) for v in range(num_vertices)))

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def vertex_count(self) -> int:
        return sum(len(c) for c in self.cells)


@dataclass(frozen=True)
class AutomorphismResult:
    """Full automorphism group of a Hamiltonian graph, restricted to qubits."""

    generators_on_vertices: tuple[Permutation, ...]
    qubit_generators: tuple[Permutation, ...]
    group: PermutationGroup
    canonical_certificate: bytes


def _refine_cells(
    colors: tuple[int, ...] | list[int],
    adj,
    cells: list[list[int]],
) -> list[list[int]]:
    """Split cells until the partition is equitable for every edge colour.

    A vertex's key is its colour plus the multiset of (neighbour cell,
    edge colour) pairs; sub-cells are ordered by key, which depends only on
    isomorphism-invariant data. Between rounds only cells adjacent to a
    just-split cell are re-keyed: cells whose neighbourhood kept its cell
    structure see all their members' keys shift by one monotone index map,
    so they cannot split.
    """
    split_vertices: list[int] | None = None  # None: first round, everything dirty
    while True:
        index_of: dict[int, int] = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                index_of[v] = ci
        if split_vertices is None:
            dirty = set(range(len(cells)))
        else:
            dirty = {index_of[u] for v in split_vertices for u, _ in adj[v]}
        new_cells: list[list[int]] = []
        split_vertices = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1 or ci not in dirty:
                new_cells.append(cell)
                continue
            keyed: dict[tuple, list[int]] = {}
            for v in cell:
                key = (
                    colors[v],
                    tuple(sorted((index_of[u], letter) for u, letter in adj[v])),
                )
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                for key in sorted(keyed):
                    new_cells.append(sorted(keyed[key]))
                split_vertices.extend(cell)
        cells = new_cells
        if not split_vertices:
            return cells


def refine(g: ColouredBipartiteGraph, p: OrderedPartition) -> OrderedPartition:
    """Equitable refinement of `p` over the graph's vertex and edge colours."""
    if p.vertex_count() != g.num_vertices or any(
        not 0 <= v < g.num_vertices for cell in p.cells for v in cell
    ):
        raise ValueError("partition does not cover the graph's vertices")
    cells = _refine_cells(g.color_ids(), g.adjacency, [list(c) for c in p.cells])
    return OrderedPartition(tuple(tuple(c) for c in cells))


def _check_conditions(colors, adj, adj_sets, adj_colored, img) -> tuple[bool, bool, bool]:
    """(adjacency, vertex colour, edge colour) preservation of a vertex map."""
    n = len(colors)
    vertex_ok = all(colors[img[v]] == colors[v] for v in range(n))
    adjacency_ok = all(
        {img[u] for u in adj_sets[v]} == adj_sets[img[v]] for v in range(n)
    )
    edge_ok = all(
        {(img[u], c) for u, c in adj[v]} == adj_colored[img[v]] for v in range(n)
    )
    return adjacency_ok, vertex_ok, edge_ok


class _AutomorphismSearch:
    """One individualisation-refinement run over a coloured graph."""

    def __init__(self, colors, adj, restrict_prefix: int | None, header: bytes):
        self.colors = tuple(colors)
        self.adj = tuple(tuple(a) for a in adj)
        self.n = len(self.colors)
        self.restrict = restrict_prefix
        self.header = header
        self._adj_sets = [frozenset(u for u, _ in a) for a in self.adj]
        self._adj_colored = [frozenset(a) for a in self.adj]
        self.found: list[tuple[int, ...]] = []  # vertex maps that grew the group
        self.builder = GroupBuilder(restrict_prefix if restrict_prefix else self.n)
        self.spine_trace: list[tuple[int, ...]] = []
        self.spine_leaf: list[int] | None = None
        self.best_key: tuple | None = None
        self.best_leaf: list[int] | None = None
        self.path_trace: list[tuple[int, ...]] = []
        self.path_fixed: list[int] = []
        self.leaf_count = 0

    def run(self) -> "_AutomorphismSearch":
        by_color: dict[int, list[int]] = {}
        for v in range(self.n):
            by_color.setdefault(self.colors[v], []).append(v)
        initial = [by_color[c] for c in sorted(by_color)]
        cells = _refine_cells(self.colors, self.adj, initial)
        self._node(cells, 0, None, True, 0)
        return self

    # -- tree traversal ------------------------------------------------

    def _node(self, cells, depth, fork, spine_ok, best_state):
        inv = tuple(len(c) for c in cells)
        if self.spine_leaf is None:
            self.spine_trace.append(inv)
        else:
            spine_ok = spine_ok and depth < len(self.spine_trace) and (
                inv == self.spine_trace[depth]
            )
        if best_state == 0 and self.best_key is not None:
            best_trace = self.best_key[0]
            if depth >= len(best_trace):
                best_state = 1
            elif inv > best_trace[depth]:
                best_state = 1
            elif inv < best_trace[depth]:
                best_state = -1
        if self.spine_leaf is not None and not spine_ok and best_state < 0:
            return None
        self.path_trace.append(inv)
        try:
            if all(len(c) == 1 for c in cells):
                return self._leaf(cells, depth, fork, spine_ok, best_state)
            t = self._target_cell(cells)
            tried: list[int] = []
            for v in cells[t]:
                if tried and self._orbit_pruned(v, tried):
                    continue
                child_fork = fork
                if fork is None and self.spine_leaf is not None:
                    child_fork = depth
                child = _refine_cells(
                    self.colors, self.adj, self._individualized(cells, t, v)
                )
                self.path_fixed.append(v)
                r = self._node(child, depth + 1, child_fork, spine_ok, best_state)
                self.path_fixed.pop()
                tried.append(v)
                if r is not None and r < depth:
                    return r
            return None
        finally:
            self.path_trace.pop()

    @staticmethod
    def _target_cell(cells) -> int:
        best = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (best < 0 or len(cell) < len(cells[best])):
                best = i
        return best

    @staticmethod
    def _individualized(cells, t, v):
        rest = [x for x in cells[t] if x != v]
        return [list(c) for c in cells[:t]] + [[v], rest] + [list(c) for c in cells[t + 1 :]]

    def _leaf(self, cells, depth, fork, spine_ok, best_state):
        lam = [c[0] for c in cells]
        self.leaf_count += 1
        if self.spine_leaf is None:
            self.spine_leaf = lam
            self.best_key = (tuple(self.path_trace), self._certificate(lam))
            self.best_leaf = lam
            return None
        if spine_ok and depth == len(self.spine_trace) - 1:
            img = self._matching_map(self.spine_leaf, lam)
            if img is not None:
                self._record(img)
                return fork
        if best_state >= 0:
            key = (tuple(self.path_trace), self._certificate(lam))
            if best_state == 1 or key > self.best_key:
                self.best_key = key
                self.best_leaf = lam
            elif key == self.best_key and lam != self.best_leaf:
                img = self._matching_map(self.best_leaf, lam)
                if img is not None:
                    self._record(img)
        return None

    # -- automorphism bookkeeping ---------------------------------------

    def _matching_map(self, src, dst) -> tuple[int, ...] | None:
        """Vertex map sending position i of `src` to position i of `dst`,
        kept only if it preserves adjacency and both colourings."""
        img = [0] * self.n
        for a, b in zip(src, dst):
            img[a] = b
        img_t = tuple(img)
        if all(
            _check_conditions(self.colors, self.adj, self._adj_sets, self._adj_colored, img_t)
        ):
            return img_t
        return None

    def _record(self, img: tuple[int, ...]) -> None:
        if self.restrict is not None:
            prefix = img[: self.restrict]
            if any(x >= self.restrict for x in prefix):
                raise InternalInvariantError("vertex colours were not preserved")
            candidate = Permutation(prefix)
        else:
            candidate = Permutation(img)
        if self.builder.add(candidate):
            self.found.append(img)

    def _orbit_pruned(self, v: int, tried: list[int]) -> bool:
        fixed = self.path_fixed
        gens = [g for g in self.found if all(g[x] == x for x in fixed)]
        if not gens:
            return False
        orbit = set(tried)
        frontier = list(tried)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y == v:
                    return True
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return False

    # -- canonical certificate -------------------------------------------

    def _certificate(self, lam) -> bytes:
        pos = [0] * self.n
        for i, v in enumerate(lam):
            pos[v] = i
        colors_part = ",".join(str(self.colors[v]) for v in lam)
        edges = []
        for v in range(self.n):
            pv = pos[v]
            for u, letter in self.adj[v]:
                if v < u:
                    a, b = (pv, pos[u]) if pv < pos[u] else (pos[u], pv)
                    edges.append((a, b, letter))
        edges.sort()
        edge_part = ";".join(f"{a},{b},{c}" for a, b, c in edges)
        return self.header + b"|" + colors_part.encode() + b"|" + edge_part.encode()

    @property
    def certificate(self) -> bytes:
        assert self.best_key is not None
        return self.best_key[1]


def _graph_header(g: ColouredBipartiteGraph) -> bytes:
    policy = g.policy
    eps = f";eps={policy.epsilon}" if policy.mode == "quantized" else ""
    table = ",".join(g.class_table)
    return f"CBG1;n={g.n_qubits};m={g.n_terms};policy={policy.mode}{eps};classes=[{table}]".encode()


def _search_graph(g: ColouredBipartiteGraph) -> _AutomorphismSearch:
    return _AutomorphismSearch(
        g.color_ids(), g.adjacency, restrict_prefix=g.n_qubits, header=_graph_header(g)
    ).run()


def satisfies_automorphism_conditions(
    g: ColouredBipartiteGraph, perm_on_vertices: Permutation
) -> tuple[bool, bool, bool]:
    """Check (adjacency, vertex colour, edge colour) preservation separately."""
    if perm_on_vertices.degree != g.num_vertices:
        raise ValueError("permutation degree must equal the vertex count")
    colors = g.color_ids()
    adj = g.adjacency
    adj_sets = [frozenset(u for u, _ in a) for a in adj]
    adj_colored = [frozenset(a) for a in adj]
    return _check_conditions(colors, adj, adj_sets, adj_colored, perm_on_vertices.image)


def restrict_to_qubits(perm_on_vertices: Permutation, n_qubits: int) -> Permutation:
    """Restrict a vertex permutation to the qubit block.

    The vertex colouring forbids mixing qubit and term vertices, so an input
    that moves a qubit vertex out of the block signals a solver bug.
    """
    prefix = perm_on_vertices.image[:n_qubits]
    if any(x >= n_qubits for x in prefix):
        raise InternalInvariantError(
            "vertex permutation does not stabilise the qubit block"
        )
    return Permutation(prefix)


def automorphism_generators(g: ColouredBipartiteGraph) -> AutomorphismResult:
    """Generators of the full automorphism group, restricted to qubits.

    Every returned generator has been verified against the three
    preservation conditions. The generator list is deduplicated against the
    group built so far but is not guaranteed minimal.
    """
    search = _search_graph(g)
    gens_v = tuple(Permutation(img) for img in search.found)
    qubit_gens = tuple(restrict_to_qubits(p, g.n_qubits) for p in gens_v)
    group = build_group(qubit_gens, degree=g.n_qubits)
    return AutomorphismResult(gens_v, qubit_gens, group, search.certificate)


def canonical_form(g: ColouredBipartiteGraph) -> bytes:
    """Certificate equal for two graphs iff they are isomorphic as coloured
    bipartite graphs (under one coefficient-class assignment)."""
    return _search_graph(g).certificate


def canonical_labelling(g: ColouredBipartiteGraph) -> tuple[bytes, tuple[int, ...]]:
    """Certificate plus the vertex ordering of the canonical leaf."""
    search = _search_graph(g)
    assert search.best_leaf is not None
    return search.certificate, tuple(search.best_leaf)


def find_symmetry_group(
    h: Hamiltonian, policy: CoefficientPolicy = EXACT
) -> AutomorphismResult:
    """Build the graph, solve automorphisms, and return the qubit symmetry
    group; every generator is re-checked against the Hamiltonian."""
    g = build_graph(h, policy)
    result = automorphism_generators(g)
    for sigma in result.qubit_generators:
        if not is_symmetry(sigma, h, policy):
            raise InternalInvariantError(
                f"solver produced a non-symmetry generator {sigma!r}"
            )
    return result
