"""Coloured bipartite graph built from a Hamiltonian.

Vertices 0..n-1 are qubit vertices, n..n+m-1 are term vertices (terms in
serialized order). A qubit and a term are adjacent iff the term acts
non-trivially on the qubit, and the edge carries the acting letter as its
colour. Term vertices are coloured by coefficient class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Literal

from .pauli import (
    EXACT,
    Coefficient,
    CoefficientPolicy,
    Hamiltonian,
    serialize_hamiltonian,
)

EDGE_LETTERS = "XYZ"


@dataclass(frozen=True)
class VertexColor:
    kind: Literal["qubit", "term"]
    coeff_class: int | None = None

    def __post_init__(self):
        if self.kind == "qubit" and self.coeff_class is not None:
            raise ValueError("qubit vertices carry no coefficient class")
        if self.kind == "term" and self.coeff_class is None:
            raise ValueError("term vertices need a coefficient class")


@dataclass(frozen=True)
class EdgeColor:
    letter: Literal["X", "Y", "Z"]

    def __post_init__(self):
        if self.letter not in EDGE_LETTERS:
            raise ValueError("edge colours are X, Y, or Z; identity makes no edge")


@dataclass(frozen=True)
class CoefficientClasses:
    """Shared coefficient-class assignment: policy key -> ordinal colour."""

    policy: CoefficientPolicy
    by_key: dict
    table: tuple[str, ...]  # representative text per ordinal

    @classmethod
    def over(
        cls, coefficients: Iterable[Coefficient], policy: CoefficientPolicy
    ) -> "CoefficientClasses":
        keys = sorted({policy.key(c) for c in coefficients})
        return cls(
            policy,
            {k: i for i, k in enumerate(keys)},
            tuple(policy.representative_text(k) for k in keys),
        )


def coefficient_classes(
    coefficients: Iterable[Coefficient], policy: CoefficientPolicy = EXACT
) -> CoefficientClasses:
    """Ordinal colour classes for a coefficient collection under a policy."""
    return CoefficientClasses.over(coefficients, policy)


@dataclass(frozen=True)
class ColouredBipartiteGraph:
    n_qubits: int
    n_terms: int
    # adjacency[v] = ((neighbour, letter), ...) sorted, for every vertex
    adjacency: tuple[tuple[tuple[int, str], ...], ...]
    vertex_colors: tuple[VertexColor, ...]
    terms: tuple  # Term per term vertex, in serialized order
    policy: CoefficientPolicy
    class_table: tuple[str, ...]

    @property
    def num_vertices(self) -> int:
        return self.n_qubits + self.n_terms

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def term_vertex(self, r: int) -> int:
        """Vertex id of term index r (0-based)."""
        return self.n_qubits + r

    def color_ids(self) -> tuple[int, ...]:
        """Integer colour per vertex: 0 for qubits, 1 + class for terms."""
        out = [0] * self.n_qubits
        for c in self.vertex_colors[self.n_qubits :]:
            out.append(1 + c.coeff_class)
        return tuple(out)

    def edge_color(self, qubit: int, term_vertex: int) -> EdgeColor:
        for u, letter in self.adjacency[qubit]:
            if u == term_vertex:
                return EdgeColor(letter)
        raise KeyError(f"no edge between {qubit} and {term_vertex}")


def build_graph(
    h: Hamiltonian,
    policy: CoefficientPolicy = EXACT,
    classes: CoefficientClasses | None = None,
) -> ColouredBipartiteGraph:
    """Construct the graph; vertex numbering is deterministic (qubits first,
    then terms in serialized order).

    Pass a shared `classes` assignment to make colours comparable across two
    graphs; it must cover every coefficient of `h`.
    """
    if classes is None:
        classes = CoefficientClasses.over((t.coeff for t in h.terms), policy)
    elif classes.policy != policy:
        raise ValueError("class assignment was computed under a different policy")
    terms = h.sorted_terms
    n, m = h.n, len(terms)
    adj: list[list[tuple[int, str]]] = [[] for _ in range(n + m)]
    colors: list[VertexColor] = [VertexColor("qubit")] * n
    for r, term in enumerate(terms):
        key = policy.key(term.coeff)
        if key not in classes.by_key:
            raise ValueError(f"coefficient {term.coeff} missing from class assignment")
        colors.append(VertexColor("term", classes.by_key[key]))
        tv = n + r
        for i in term.pauli.support:
            letter = term.pauli[i]
            adj[i].append((tv, letter))
            adj[tv].append((i, letter))
    return ColouredBipartiteGraph(
        n_qubits=n,
        n_terms=m,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        vertex_colors=tuple(colors),
        terms=terms,
        policy=policy,
        class_table=classes.table,
    )


def hamiltonian_from_graph(g: ColouredBipartiteGraph) -> Hamiltonian:
    """Recover the Hamiltonian (exact-policy graphs recover it fully)."""
    return Hamiltonian(g.n_qubits, frozenset(g.terms))


@dataclass(frozen=True)
class DegreeReport:
    k: int
    d: int
    max_term_degree: int
    max_qubit_degree: int
    term_bound: int
    qubit_bound: int

    @property
    def within_bounds(self) -> bool:
        return self.max_term_degree <= self.term_bound and (
            self.max_qubit_degree <= self.qubit_bound
        )


def degree_report(h: Hamiltonian, g: ColouredBipartiteGraph) -> DegreeReport:
    """Observed vertex degrees against the analytic bounds k and C(d, k-1)·3^k.

    A violation would indicate a construction bug, not a property of the
    input.
    """
    from .pauli import interaction_degree, locality

    k = locality(h)
    d = interaction_degree(h)
    max_q = max((len(g.adjacency[v]) for v in range(g.n_qubits)), default=0)
    max_t = max(
        (len(g.adjacency[v]) for v in range(g.n_qubits, g.num_vertices)), default=0
    )
    qubit_bound = comb(d, k - 1) * 3**k if k >= 1 else 0
    return DegreeReport(
        k=k,
        d=d,
        max_term_degree=max_t,
        max_qubit_degree=max_q,
        term_bound=k,
        qubit_bound=qubit_bound,
    )


_DOT_EDGE_COLORS = {"X": "crimson", "Y": "seagreen", "Z": "steelblue"}


def export_dot(
    g: ColouredBipartiteGraph, encoding: Literal["native", "subdivided"] = "native"
) -> str:
    """Deterministic DOT rendering with colours as attributes.

    The subdivided encoding replaces each coloured edge by a midpoint vertex
    coloured by the letter, for cross-checks against vertex-colour-only
    tools.
    """
    lines = ["graph hamiltonian {", "  rankdir=LR;", "  node [style=filled];"]
    for i in range(g.n_qubits):
        lines.append(f'  q{i + 1} [shape=circle, fillcolor=white, label="q{i + 1}"];')
    for r, term in enumerate(g.terms):
        cls = g.vertex_colors[g.term_vertex(r)].coeff_class
        lines.append(
            f'  t{r + 1} [shape=box, fillcolor=lightgoldenrod, '
            f'label="t{r + 1}: {term.coeff} {term.pauli}", colorclass={cls}];'
        )
    edge_id = 0
    for i in range(g.n_qubits):
        for tv, letter in g.adjacency[i]:
            r = tv - g.n_qubits
            if encoding == "native":
                lines.append(
                    f'  q{i + 1} -- t{r + 1} '
                    f'[color={_DOT_EDGE_COLORS[letter]}, label="{letter}"];'
                )
            else:
                edge_id += 1
                mid = f"e{edge_id}"
                lines.append(
                    f'  {mid} [shape=point, fillcolor={_DOT_EDGE_COLORS[letter]}, '
                    f'label="{letter}"];'
                )
                lines.append(f"  q{i + 1} -- {mid};")
                lines.append(f"  {mid} -- t{r + 1};")
    lines.append("}")
    return "\n".join(lines)


def export_json(
    g: ColouredBipartiteGraph, encoding: Literal["native", "subdivided"] = "native"
) -> str:
    """JSON dump of vertices with colours and edges with colours."""
    vertices = [{"id": f"q{i + 1}", "kind": "qubit"} for i in range(g.n_qubits)]
    for r, term in enumerate(g.terms):
        vertices.append(
            {
                "id": f"t{r + 1}",
                "kind": "term",
                "coeff": str(term.coeff),
                "coeff_class": g.vertex_colors[g.term_vertex(r)].coeff_class,
                "pauli": term.pauli.label,
            }
        )
    edges = []
    edge_id = 0
    for i in range(g.n_qubits):
        for tv, letter in g.adjacency[i]:
            r = tv - g.n_qubits
            if encoding == "native":
                edges.append({"source": f"q{i + 1}", "target": f"t{r + 1}", "letter": letter})
            else:
                edge_id += 1
                mid = f"e{edge_id}"
                vertices.append({"id": mid, "kind": "edge", "letter": letter})
                edges.append({"source": f"q{i + 1}", "target": mid})
                edges.append({"source": mid, "target": f"t{r + 1}"})
    doc = {
        "n_qubits": g.n_qubits,
        "n_terms": g.n_terms,
        "encoding": encoding,
        "coeff_classes": list(g.class_table),
        "vertices": vertices,
        "edges": edges,
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def subdivide(
    g: ColouredBipartiteGraph,
) -> tuple[tuple[int, ...], tuple[tuple[tuple[int, str], ...], ...]]:
    """Vertex-colour-only encoding: one midpoint vertex per edge, coloured by
    the edge letter; all edges share a single blank colour.

    Returns (colour ids, adjacency) over qubits, terms, then midpoints, in a
    deterministic order. Used to cross-validate the native edge-coloured
    solver path.
    """
    base = g.num_vertices
    colors = list(g.color_ids())
    letter_color = {
        letter: 1 + len(g.class_table) + i for i, letter in enumerate(EDGE_LETTERS)
    }
    adj: list[list[tuple[int, str]]] = [[] for _ in range(base)]
    for i in range(g.n_qubits):
        for tv, letter in g.adjacency[i]:
            mid = len(colors)
            colors.append(letter_color[letter])
            adj.append([(i, "-"), (tv, "-")])
            adj[i].append((mid, "-"))
            adj[tv].append((mid, "-"))
    return tuple(colors), tuple(tuple(sorted(a)) for a in adj)
