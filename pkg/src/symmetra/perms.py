"""Permutations, cycle-notation I/O, and exact permutation-group orders.

Groups are represented by a base and strong generating set built with a
deterministic (non-randomised) Schreier-Sims procedure, so orders are exact
unbounded integers and membership is decided by sifting.

Points are 0-based internally; cycle notation reads and writes 1-based
points.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from math import factorial


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1} stored as its image tuple: image[i] = sigma(i)."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if n == 0:
            raise ValueError("permutation degree must be at least 1")
        if sorted(self.image) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {self.image}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Composition a∘b: the result maps i to a(b(i))."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    bi = b.image
    ai = a.image
    return Permutation(tuple(ai[bi[i]] for i in range(len(ai))))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, j in enumerate(a.image):
        inv[j] = i
    return Permutation(tuple(inv))


_CYCLES_RE = re.compile(r"^(?:\s*\((?:\s*\d+(?:\s+\d+)*\s*)?\)\s*)*$")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles over 1-based points, e.g. "(1 3)(2 5 4)".

    Fixed points are implicit; the empty string and "()" denote the identity.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if not _CYCLES_RE.match(text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    image = list(range(degree))
    seen: set[int] = set()
    for body in re.findall(r"\(([^()]*)\)", text):
        points = [int(tok) for tok in body.split()]
        if not points:
            continue
        if len(points) == 1:
            raise ValueError(f"cycle needs at least two points: ({body.strip()})")
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            if p in seen:
                raise ValueError(f"point {p} repeated")
            seen.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            image[a - 1] = b - 1
    return Permutation(tuple(image))


def format_cycles(p: Permutation) -> str:
    """Canonical cycle string: each cycle starts at its smallest point,
    cycles ordered by smallest point, fixed points omitted, identity "()"."""
    img = p.image
    seen = [False] * p.degree
    parts: list[str] = []
    for i in range(p.degree):
        if seen[i] or img[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = img[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = img[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[x] for x in b)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


class GroupBuilder:
    """Incremental deterministic Schreier-Sims construction.

    Maintains a base, per-level strong generators, and orbit transversals.
    The level-l stabiliser is generated by all strong generators stored at
    levels >= l (each fixes the base prefix below its level).
    """

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self.base: list[int] = []
        self._gens_at: list[list[tuple[int, ...]]] = []
        self._transversals: list[dict[int, tuple[int, ...]]] = []
        self._identity = tuple(range(degree))

    @property
    def order(self) -> int:
        order = 1
        for trans in self._transversals:
            order *= len(trans)
        return order

    def strong_generators(self) -> list[tuple[int, ...]]:
        return [g for level in self._gens_at for g in level]

    def contains(self, p: "Permutation") -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} != {self.degree}")
        residue, _ = self._sift(tuple(p.image))
        return residue == self._identity

    def add(self, p: "Permutation") -> bool:
        """Add a generator; returns True iff the group grew."""
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} != {self.degree}")
        residue, level = self._sift(tuple(p.image))
        if residue == self._identity:
            return False
        self._place(residue, level)
        for m in range(level, -1, -1):
            self._complete(m)
        return True

    def _level_gens(self, l: int) -> list[tuple[int, ...]]:
        return [g for lv in range(l, len(self.base)) for g in self._gens_at[lv]]

    def _sift(self, img: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for l in range(start, len(self.base)):
            target = img[self.base[l]]
            u = self._transversals[l].get(target)
            if u is None:
                return img, l
            img = _mul(_inv(u), img)
        return img, len(self.base)

    def _place(self, img: tuple[int, ...], level: int) -> None:
        if level == len(self.base):
            b = min(i for i in range(self.degree) if img[i] != i)
            self.base.append(b)
            self._gens_at.append([])
            self._transversals.append({b: self._identity})
        self._gens_at[level].append(img)

    def _rebuild_transversal(self, l: int) -> None:
        gens = self._level_gens(l)
        b = self.base[l]
        trans = {b: self._identity}
        queue = deque([b])
        while queue:
            pt = queue.popleft()
            u = trans[pt]
            for g in gens:
                npt = g[pt]
                if npt not in trans:
                    trans[npt] = _mul(g, u)
                    queue.append(npt)
        self._transversals[l] = trans

    def _complete(self, l: int) -> None:
        """Close level l: every Schreier generator must sift to the identity."""
        while True:
            self._rebuild_transversal(l)
            gens = self._level_gens(l)
            trans = self._transversals[l]
            pending: tuple[tuple[int, ...], int] | None = None
            for pt in sorted(trans):
                u = trans[pt]
                for g in gens:
                    rep = trans[g[pt]]
                    schreier = _mul(_inv(rep), _mul(g, u))
                    if schreier == self._identity:
                        continue
                    residue, level = self._sift(schreier, l + 1)
                    if residue != self._identity:
                        pending = (residue, level)
                        break
                if pending:
                    break
            if pending is None:
                return
            residue, level = pending
            self._place(residue, level)
            for m in range(level, l, -1):
                self._complete(m)


@dataclass(frozen=True)
class PermutationGroup:
    """A permutation group with exact order and sifting-based membership."""

    degree: int
    generators: tuple[Permutation, ...]
    base: tuple[int, ...]
    strong_generators: tuple[Permutation, ...]
    order: int
    _builder: GroupBuilder = field(repr=False, compare=False)

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)


def build_group(generators, degree: int | None = None) -> PermutationGroup:
    """Build a base and strong generating set; the order is exact.

    `degree` is required when `generators` is empty.
    """
    gens = tuple(generators)
    if gens:
        if degree is None:
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"degree mismatch: {g.degree} != {degree}")
    elif degree is None:
        raise ValueError("degree required for an empty generating set")
    builder = GroupBuilder(degree)
    for g in gens:
        builder.add(g)
    order = builder.order
    if factorial(degree) % order != 0:
        raise AssertionError("computed order does not divide degree factorial")
    strong = tuple(Permutation(img) for img in builder.strong_generators())
    return PermutationGroup(degree, gens, tuple(builder.base), strong, order, builder)


def contains(group: PermutationGroup, p: Permutation) -> bool:
    """Membership by sifting against the strong generating set."""
    if p.degree != group.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {group.degree}")
    return group._builder.contains(p)


def groups_equal(a: PermutationGroup, b: PermutationGroup) -> bool:
    """Equal orders and every generator of `a` sifts into `b`."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    if a.order != b.order:
        return False
    return all(contains(b, g) for g in a.generators)


def orbits(group: PermutationGroup) -> tuple[tuple[int, ...], ...]:
    """Finest partition of {0..n-1} closed under the generators."""
    n = group.degree
    images = [g.image for g in group.generators]
    seen = [False] * n
    out: list[tuple[int, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for img in images:
                y = img[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    queue.append(y)
        out.append(tuple(sorted(orbit)))
    return tuple(out)
