"""The symmetric group on four points.

Exhaustive subgroup enumeration, point stabilizers and the permutation
matrix representation whose point-4 stabilizer realizes exactly the swap
and cycle observables of the restricted two-qubit family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import Mat4

POINTS = (1, 2, 3, 4)


@dataclass(frozen=True, order=True)
class Perm4:
    """A permutation of {1, 2, 3, 4}, stored as the image tuple.

    Composition is left-to-right: ``(p * q)(i) == q(p(i))``, which makes
    ``perm_matrix`` a homomorphism under ordinary matrix multiplication.
    """

    images: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != list(POINTS):
            raise ValueError(f"not a permutation of 1..4: {self.images}")

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm4") -> "Perm4":
        return Perm4(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Perm4":
        inv = [0, 0, 0, 0]
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Perm4(tuple(inv))

    def order(self) -> int:
        k, p = 1, self
        while p != IDENTITY:
            p = p * self
            k += 1
        return k


IDENTITY = Perm4((1, 2, 3, 4))


def all_elements() -> tuple[Perm4, ...]:
    """All 24 permutations in canonical (lexicographic) order."""
    return tuple(Perm4(images) for images in itertools.permutations(POINTS))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element tuple (canonical identity)."""

    elements: tuple[Perm4, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm4) -> bool:
        return p in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def generate(generators) -> Subgroup:
    """Closure of a set of permutations under composition."""
    elements = {IDENTITY}
    frontier = [IDENTITY]
    gens = tuple(generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(tuple(sorted(elements)))


@lru_cache(maxsize=1)
def enumerate_subgroups() -> tuple[Subgroup, ...]:
    """All subgroups, by closing every generator set of size at most two.

    Every subgroup of the group is generated by at most two elements, so
    the sweep is exhaustive; the expected count (30) is asserted by tests.
    Deterministic order: by subgroup order, then element tuple.
    """
    elements = all_elements()
    found = {generate(())}
    for g in elements:
        found.add(generate((g,)))
    for g, h in itertools.combinations(elements, 2):
        found.add(generate((g, h)))
    return tuple(sorted(found, key=lambda s: (s.order, s.elements)))


def stabilizer(point: int) -> Subgroup:
    """The six permutations fixing one point."""
    if point not in POINTS:
        raise ValueError(f"point must be in 1..4, got {point}")
    return Subgroup(
        tuple(sorted(p for p in all_elements() if p(point) == point))
    )


def perm_matrix(p: Perm4) -> Mat4:
    """0/1 matrix with a one at (i, p(i)); multiplicative in composition."""
    m = np.zeros((4, 4), dtype=complex)
    for i in POINTS:
        m[i - 1, p(i) - 1] = 1.0
    return m


def classify(subgroup: Subgroup) -> str:
    """Isomorphism label from the order and the element orders.

    Order 4 splits into cyclic C4 versus the Klein group V4; order 6 is S3
    whenever no element of order 6 exists (always the case here). Larger
    orders are unambiguous inside this group: D4, A4 and the full group.
    """
    n = subgroup.order
    if n in (1, 2, 3):
        return f"C{n}"
    orders = {p.order() for p in subgroup}
    if n == 4:
        return "C4" if 4 in orders else "V4"
    if n == 6:
        return "C6" if 6 in orders else "S3"
    return {8: "D4", 12: "A4", 24: "S4"}[n]
