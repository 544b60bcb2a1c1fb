"""Command-line interface.

Exit codes: 0 success (or "equivalent"), 1 internal invariant failure,
2 input error, 3 not equivalent. Set SYMMETRA_COEFF_EPS to group
coefficients by rounding to multiples of the given epsilon instead of
exact equality.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .automorphism import find_symmetry_group
from .equivalence import permutation_equivalent, verify_witness
from .errors import HamiltonianParseError, InternalInvariantError
from .graph import build_graph, export_dot, export_json
from .models import ModelSpec, build_model
from .oracle import DEFAULT_N_MAX, brute_force_group
from .pauli import (
    EXACT,
    CoefficientPolicy,
    parse_hamiltonian,
    quantized,
    serialize_hamiltonian,
)
from .perms import format_cycles, groups_equal, orbits

ENV_EPS = "SYMMETRA_COEFF_EPS"


def _policy_from_env() -> CoefficientPolicy:
    eps = os.environ.get(ENV_EPS)
    if eps is None or eps == "":
        return EXACT
    try:
        return quantized(eps)
    except (ValueError, ZeroDivisionError) as exc:
        raise HamiltonianParseError(f"bad {ENV_EPS} value {eps!r}: {exc}") from exc


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise HamiltonianParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_hamiltonian(text)


def _format_orbits(orbit_sets) -> str:
    return " ".join("{" + " ".join(str(p + 1) for p in orb) + "}" for orb in orbit_sets)


def _generators_text(gens) -> str:
    return ", ".join(format_cycles(g) for g in gens) if gens else "(none)"


def cmd_find(args) -> int:
    h = _load(args.input)
    policy = _policy_from_env()
    start = time.perf_counter()
    result = find_symmetry_group(h, policy)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    orbit_sets = orbits(result.group)
    if args.json:
        doc = {
            "n": h.n,
            "num_terms": h.num_terms,
            "generators": [format_cycles(g) for g in result.qubit_generators],
            "group_order": str(result.group.order),
            "orbits": [[p + 1 for p in orb] for orb in orbit_sets],
            "elapsed_ms": round(elapsed_ms, 3),
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"n: {h.n}")
        print(f"terms: {h.num_terms}")
        print(f"generators: {_generators_text(result.qubit_generators)}")
        print(f"group order: {result.group.order}")
        print(f"orbits: {_format_orbits(orbit_sets)}")
    return 0


def cmd_equiv(args) -> int:
    h1 = _load(args.a)
    h2 = _load(args.b)
    policy = _policy_from_env()
    if h1.n != h2.n:
        raise HamiltonianParseError(f"qubit counts differ: {h1.n} vs {h2.n}")
    start = time.perf_counter()
    witness = permutation_equivalent(h1, h2, policy)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    equivalent = witness is not None
    if args.json:
        doc = {
            "equivalent": equivalent,
            "witness": format_cycles(witness) if witness else None,
            "elapsed_ms": round(elapsed_ms, 3),
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif equivalent:
        print("equivalent: yes")
        print(f"witness: {format_cycles(witness)}")
    else:
        print("equivalent: no")
    if equivalent and not verify_witness(witness, h1, h2, policy):
        raise InternalInvariantError("witness failed verification")
    return 0 if equivalent else 3


def _parse_list(text: str) -> tuple[str, ...]:
    return tuple(tok for tok in text.split(",") if tok.strip())


def cmd_model(args) -> int:
    try:
        if args.family == "tfim1d-inhom":
            if args.j_list is None or args.omega_list is None:
                raise ValueError("tfim1d-inhom needs --j-list and --omega-list")
            spec = ModelSpec(
                "tfim1d_inhom",
                n=args.n,
                boundary=args.boundary,
                J_list=_parse_list(args.j_list),
                Omega_list=_parse_list(args.omega_list),
            )
        elif args.family == "tfim2d":
            if args.lx is None or args.ly is None:
                raise ValueError("tfim2d needs --lx and --ly")
            spec = ModelSpec("tfim2d", lx=args.lx, ly=args.ly, J=args.J, Omega=args.Omega)
        else:
            family = "heisenberg_mf" if args.family == "heisenberg-mf" else "tfim1d"
            if args.n is None:
                raise ValueError(f"{args.family} needs --n")
            spec = ModelSpec(
                family, n=args.n, J=args.J, Omega=args.Omega, boundary=args.boundary
            )
        h = build_model(spec)
    except (ValueError, TypeError) as exc:
        raise HamiltonianParseError(str(exc)) from exc
    print(serialize_hamiltonian(h))
    return 0


def cmd_verify(args) -> int:
    h = _load(args.input)
    policy = _policy_from_env()
    n_max = args.n_max
    if h.n > n_max and not args.force:
        raise HamiltonianParseError(
            f"n={h.n} exceeds the brute-force limit {n_max}; pass --force to override"
        )
    solver_group = find_symmetry_group(h, policy).group
    oracle_group = brute_force_group(
        h, n_max=max(n_max, h.n), policy=policy if policy.mode != "exact" else None
    )
    solver_in_oracle = all(oracle_group._builder.contains(g) for g in solver_group.generators)
    oracle_in_solver = all(solver_group._builder.contains(g) for g in oracle_group.generators)
    equal = groups_equal(solver_group, oracle_group)
    print(f"n: {h.n}")
    print(f"solver order: {solver_group.order}")
    print(f"oracle order: {oracle_group.order}")
    print(f"solver generators in oracle group: {'yes' if solver_in_oracle else 'NO'}")
    print(f"oracle generators in solver group: {'yes' if oracle_in_solver else 'NO'}")
    print(f"groups equal: {'yes' if equal else 'NO'}")
    if not equal:
        print("error: solver disagrees with the brute-force oracle", file=sys.stderr)
        return 1
    return 0


def cmd_graph(args) -> int:
    h = _load(args.input)
    policy = _policy_from_env()
    g = build_graph(h, policy)
    if args.format == "dot":
        print(export_dot(g, encoding=args.encoding))
    else:
        print(export_json(g, encoding=args.encoding))
    if args.render:
        from .render import render_graph

        render_graph(g, args.render)
        print(f"figure written to {args.render}", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symmetra",
        description="Qubit-permutation symmetries of Pauli-string Hamiltonians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_find = sub.add_parser("find", help="compute the symmetry group of a Hamiltonian file")
    p_find.add_argument("input", help="Hamiltonian text file")
    p_find.add_argument("--json", action="store_true", help="emit a JSON report")
    p_find.set_defaults(func=cmd_find)

    p_equiv = sub.add_parser("equiv", help="decide permutation equivalence of two files")
    p_equiv.add_argument("a")
    p_equiv.add_argument("b")
    p_equiv.add_argument("--json", action="store_true")
    p_equiv.set_defaults(func=cmd_equiv)

    p_model = sub.add_parser("model", help="emit a benchmark model Hamiltonian")
    p_model.add_argument(
        "--family",
        required=True,
        choices=["tfim1d", "tfim1d-inhom", "tfim2d", "heisenberg-mf"],
    )
    p_model.add_argument("--n", type=int)
    p_model.add_argument("--lx", type=int)
    p_model.add_argument("--ly", type=int)
    p_model.add_argument("--J", default="1", help="coupling strength (decimal)")
    p_model.add_argument("--Omega", default="1", help="field strength (decimal)")
    p_model.add_argument("--boundary", choices=["periodic", "open"], default="periodic")
    p_model.add_argument("--j-list", help="comma-separated per-bond couplings")
    p_model.add_argument("--omega-list", help="comma-separated per-site fields")
    p_model.set_defaults(func=cmd_model)

    p_verify = sub.add_parser(
        "verify", help="cross-check the solver against brute-force enumeration"
    )
    p_verify.add_argument("input")
    p_verify.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p_verify.add_argument("--force", action="store_true", help="ignore the size limit")
    p_verify.set_defaults(func=cmd_verify)

    p_graph = sub.add_parser("graph", help="export the coloured bipartite graph")
    p_graph.add_argument("input")
    p_graph.add_argument("--format", choices=["dot", "json"], default="dot")
    p_graph.add_argument(
        "--encoding",
        choices=["native", "subdivided"],
        default="native",
        help="subdivided replaces coloured edges by coloured midpoint vertices",
    )
    p_graph.add_argument("--render", metavar="FILE", help="also draw the graph to FILE")
    p_graph.set_defaults(func=cmd_graph)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HamiltonianParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
