"""Pauli strings, Hamiltonian term sets, and the qubit-permutation action.

Coefficients are exact rational pairs (re, im) parsed from decimal text, so
coefficient equality is exact and transitive. Qubit positions are 0-based in
the library API; all text I/O (cycle notation) is 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Literal

from .errors import HamiltonianParseError
from .perms import Permutation

PAULI_LETTERS = "IXYZ"


class PauliOp(str, Enum):
    """Single-site operator; the order I < X < Y < Z is fixed."""

    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def rank(self) -> int:
        return PAULI_LETTERS.index(self.value)


def _decimal_str(x: Fraction) -> str:
    """Exact finite-decimal rendering of a rational with 2,5-smooth denominator."""
    if x < 0:
        return "-" + _decimal_str(-x)
    den = x.denominator
    k2 = k5 = 0
    while den % 2 == 0:
        den //= 2
        k2 += 1
    while den % 5 == 0:
        den //= 5
        k5 += 1
    if den != 1:
        raise ValueError(f"{x} has no finite decimal representation")
    k = max(k2, k5)
    scaled = x.numerator * 2 ** (k - k2) * 5 ** (k - k5)
    digits = str(scaled).rjust(k + 1, "0")
    if k == 0:
        return digits
    frac = digits[-k:].rstrip("0")
    whole = digits[:-k]
    return f"{whole}.{frac}" if frac else whole


_COEFF_RE = re.compile(r"([+-]?\d+(?:\.\d+)?)(?:([+-]\d+(?:\.\d+)?)i)?$")


@dataclass(frozen=True, order=True)
class Coefficient:
    """Exact complex scalar; (0, 0) is excluded."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction) or not isinstance(self.im, Fraction):
            raise TypeError("coefficient parts must be Fractions; use Coefficient.of")
        if self.re == 0 and self.im == 0:
            raise ValueError("zero coefficients are not allowed")

    @classmethod
    def of(cls, value) -> "Coefficient":
        """Coerce int, Fraction, float, complex, str, or Coefficient.

        Floats go through their shortest decimal repr, so 0.1 means 1/10.
        """
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, float):
            return cls(Fraction(str(value)))
        if isinstance(value, complex):
            return cls(Fraction(str(value.real)), Fraction(str(value.imag)))
        if isinstance(value, str):
            m = _COEFF_RE.fullmatch(value.strip())
            if m and m.group(2) is not None:
                return cls(Fraction(m.group(1)), Fraction(m.group(2)))
            return cls(Fraction(value))
        raise TypeError(f"cannot build a coefficient from {type(value).__name__}")

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.re, -self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return _decimal_str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{_decimal_str(self.re)}{sign}{_decimal_str(abs(self.im))}i"


@dataclass(frozen=True, order=True)
class PauliString:
    """A fixed-length word over {I, X, Y, Z}, one letter per qubit.

    Stored as the validated label string: equality, hashing, and the
    I < X < Y < Z lexicographic order are then native string operations.
    """

    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("empty Pauli string")
        bad = set(self.label) - set(PAULI_LETTERS)
        if bad:
            raise ValueError(f"illegal character(s) {sorted(bad)} in {self.label!r}")

    @property
    def n(self) -> int:
        return len(self.label)

    def __getitem__(self, i: int) -> str:
        return self.label[i]

    def __iter__(self):
        return iter(self.label)

    @property
    def support(self) -> tuple[int, ...]:
        """0-based positions where the string acts non-trivially."""
        return tuple(i for i, ch in enumerate(self.label) if ch != "I")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Term:
    coeff: Coefficient
    pauli: PauliString


@dataclass(frozen=True)
class Hamiltonian:
    """A finite set of (coefficient, Pauli string) terms with unique strings."""

    n: int
    terms: frozenset[Term]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a Hamiltonian needs at least one term")
        labels = set()
        for t in self.terms:
            if t.pauli.n != self.n:
                raise ValueError(
                    f"string {t.pauli.label!r} has length {t.pauli.n}, expected {self.n}"
                )
            if t.pauli.label in labels:
                raise ValueError(f"duplicate Pauli string {t.pauli.label!r}")
            labels.add(t.pauli.label)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "Hamiltonian":
        """Build from (coefficient, label) pairs; exact duplicates collapse,
        conflicting duplicates raise."""
        seen: dict[str, Coefficient] = {}
        for coeff, label in terms:
            c = Coefficient.of(coeff)
            p = str(label)
            if p in seen:
                if seen[p] != c:
                    raise ValueError(f"conflicting coefficients for {p!r}")
                continue
            seen[p] = c
        if not seen:
            raise ValueError("a Hamiltonian needs at least one term")
        n = len(next(iter(seen)))
        return cls(n, frozenset(Term(c, PauliString(p)) for p, c in seen.items()))

    @cached_property
    def sorted_terms(self) -> tuple[Term, ...]:
        """Terms in the I < X < Y < Z lexicographic order of their strings."""
        return tuple(sorted(self.terms, key=lambda t: t.pauli.label))

    @cached_property
    def term_map(self) -> dict[PauliString, Coefficient]:
        return {t.pauli: t.coeff for t in self.terms}

    @property
    def num_terms(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class CoefficientPolicy:
    """How coefficients are grouped into colour classes.

    "exact" groups by exact value. "quantized" rounds re and im to the
    nearest multiple of epsilon before comparing, which is transitive.
    """

    mode: Literal["exact", "quantized"] = "exact"
    epsilon: Fraction | None = None

    def __post_init__(self):
        if self.mode == "quantized":
            if self.epsilon is None or self.epsilon <= 0:
                raise ValueError("quantized mode needs a positive epsilon")
        elif self.mode == "exact":
            if self.epsilon is not None:
                raise ValueError("exact mode takes no epsilon")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    def key(self, c: Coefficient) -> tuple:
        if self.mode == "exact":
            return (c.re, c.im)
        eps = self.epsilon
        return (round(c.re / eps), round(c.im / eps))

    def representative_text(self, key: tuple) -> str:
        """Canonical text of the class representative, for certificates."""
        if self.mode == "exact":
            re_v, im_v = key
        else:
            re_v, im_v = key[0] * self.epsilon, key[1] * self.epsilon
        if im_v == 0:
            return _decimal_str(Fraction(re_v))
        sign = "+" if im_v > 0 else "-"
        return f"{_decimal_str(Fraction(re_v))}{sign}{_decimal_str(abs(Fraction(im_v)))}i"


EXACT = CoefficientPolicy()


def quantized(epsilon) -> CoefficientPolicy:
    return CoefficientPolicy("quantized", Fraction(str(epsilon)))


def parse_hamiltonian(text: str) -> Hamiltonian:
    """Parse the line format `<coefficient> <pauli-string>`.

    `#` starts a comment, blank lines are ignored, all strings must have the
    same length; duplicate lines with equal coefficients collapse while
    conflicting coefficients are an error.
    """
    n: int | None = None
    seen: dict[str, tuple[Coefficient, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise HamiltonianParseError(
                f"expected `<coefficient> <pauli-string>`, got {line!r}", lineno
            )
        coeff_text, label = fields
        m = _COEFF_RE.fullmatch(coeff_text)
        if not m:
            raise HamiltonianParseError(f"malformed coefficient {coeff_text!r}", lineno)
        re_part = Fraction(m.group(1))
        im_part = Fraction(m.group(2)) if m.group(2) else Fraction(0)
        if re_part == 0 and im_part == 0:
            raise HamiltonianParseError("zero coefficient", lineno)
        coeff = Coefficient(re_part, im_part)
        bad = set(label) - set(PAULI_LETTERS)
        if bad:
            raise HamiltonianParseError(
                f"illegal character(s) {sorted(bad)} in string {label!r}", lineno
            )
        if n is None:
            n = len(label)
        elif len(label) != n:
            raise HamiltonianParseError(
                f"string length {len(label)} inconsistent with {n}", lineno
            )
        if label in seen:
            prev, prev_line = seen[label]
            if prev != coeff:
                raise HamiltonianParseError(
                    f"string {label!r} already given with a different coefficient "
                    f"on line {prev_line}",
                    lineno,
                )
            continue
        seen[label] = (coeff, lineno)
    if not seen:
        raise HamiltonianParseError("empty input: no terms found")
    assert n is not None
    return Hamiltonian(n, frozenset(Term(c, PauliString(p)) for p, (c, _) in seen.items()))


def serialize_hamiltonian(h: Hamiltonian) -> str:
    """One line per term, sorted by Pauli string; parse∘serialize is identity."""
    return "\n".join(f"{t.coeff} {t.pauli}" for t in h.sorted_terms)


def apply_permutation(perm: Permutation, p: PauliString) -> PauliString:
    """Move the letter at position j to position perm(j)."""
    if perm.degree != p.n:
        raise ValueError(f"degree mismatch: permutation {perm.degree}, string {p.n}")
    out = [""] * p.n
    for j, ch in enumerate(p.label):
        out[perm.image[j]] = ch
    return PauliString("".join(out))


def permute_hamiltonian(perm: Permutation, h: Hamiltonian) -> Hamiltonian:
    """Apply the permutation to every term's string; coefficients ride along."""
    if perm.degree != h.n:
        raise ValueError(f"degree mismatch: permutation {perm.degree}, system {h.n}")
    return Hamiltonian(
        h.n, frozenset(Term(t.coeff, apply_permutation(perm, t.pauli)) for t in h.terms)
    )


def is_symmetry(
    perm: Permutation, h: Hamiltonian, policy: CoefficientPolicy | None = None
) -> bool:
    """True iff the permuted term set equals the original.

    Coefficients compare exactly by default, or by class under `policy`.
    """
    if perm.degree != h.n:
        raise ValueError(f"degree mismatch: permutation {perm.degree}, system {h.n}")
    if policy is None or policy.mode == "exact":
        mapped = {apply_permutation(perm, t.pauli): t.coeff for t in h.terms}
        return mapped == h.term_map
    mapped_q = {apply_permutation(perm, t.pauli): policy.key(t.coeff) for t in h.terms}
    return mapped_q == {p: policy.key(c) for p, c in h.term_map.items()}


def locality(h: Hamiltonian) -> int:
    """Largest number of sites any single term acts on non-trivially."""
    return max(len(t.pauli.support) for t in h.terms)


def interaction_degree(h: Hamiltonian) -> int:
    """Max degree of the site-interaction graph (sites co-occurring in a term)."""
    neighbours: dict[int, set[int]] = {i: set() for i in range(h.n)}
    for t in h.terms:
        supp = t.pauli.support
        for a in supp:
            for b in supp:
                if a != b:
                    neighbours[a].add(b)
    return max((len(s) for s in neighbours.values()), default=0)
