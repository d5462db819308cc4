"""Exact facet descriptions of integer zonotopes.

The zonotope of vectors v_1..v_m is {sum x_i v_i : 0 <= x_i <= 1}.  A
rational point w lies inside iff <u, w> <= h(u) for every outer normal u
of a facet, where h(u) = sum_i max(0, <u, v_i>), together with the
equalities pinning w to the linear span.  Every facet is parallel to a
rank-(r-1) subset of the generators (r = rank of the family), so the
normals can be enumerated from those subsets; the span equalities come
from an integer basis of the orthogonal complement.  Everything stays in
exact integer arithmetic.

Membership through this description agrees with the rational feasibility
of {sum x_i v_i == w, 0 <= x <= 1}; the test suite checks the two routes
against each other.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from .errors import LimitExceeded
from .lattice import (
    IntVector,
    LatticeData,
    as_family,
    dot,
    make_primitive,
    nullspace_basis,
)

_MAX_SUBSET_SUMS = 1 << 22


class ZonotopeProfile:
    """Facet normals, span equalities, lattice data and 0/1 sums of a family."""

    def __init__(self, family):
        fam = as_family(family)
        self.vectors = fam.vectors
        self.m = fam.size
        self.n = fam.ambient_dim
        self.lattice = LatticeData(self.vectors, self.n)
        self.normals, self.rhs = self._facet_system()
        self.coord_lo = tuple(
            sum(min(0, v[j]) for v in self.vectors) for j in range(self.n)
        )
        self.coord_hi = tuple(
            sum(max(0, v[j]) for v in self.vectors) for j in range(self.n)
        )
        self._sums_sorted: Optional[list[IntVector]] = None

    def _facet_system(self) -> tuple[list[IntVector], list[int]]:
        span = self.lattice.basis
        r = len(span)
        directions: set[IntVector] = set()
        # Span equalities: +-u for an integer basis u of the orthogonal complement.
        for u in nullspace_basis(span, self.n):
            directions.add(u)
            directions.add(tuple(-x for x in u))
        # Facet normals: one direction per rank-(r-1) subset of the generators,
        # found inside the span as the vector orthogonal to the whole subset.
        if r >= 1:
            gram = [
                [dot(v, b) for b in span] for v in self.vectors
            ]  # coordinates of each generator against the span basis
            for subset in combinations(range(self.m), r - 1):
                kernel = nullspace_basis([gram[i] for i in subset], r)
                if len(kernel) != 1:
                    continue
                u = [0] * self.n
                for c, b in zip(kernel[0], span):
                    if c:
                        u = [x + c * y for x, y in zip(u, b)]
                u = make_primitive(u)
                directions.add(u)
                directions.add(tuple(-x for x in u))
        normals = sorted(directions)
        rhs = [sum(max(0, dot(u, v)) for v in self.vectors) for u in normals]
        return normals, rhs

    def contains(self, w: Sequence[int]) -> bool:
        """Whether w admits rational coefficients in the unit box."""
        return all(dot(u, w) <= h for u, h in zip(self.normals, self.rhs))

    def subset_sums(self) -> list[IntVector]:
        """All 0/1 combinations of the generators, lexicographically sorted."""
        if self._sums_sorted is None:
            if 1 << self.m > _MAX_SUBSET_SUMS:
                raise LimitExceeded(
                    f"2^{self.m} subset sums exceed the internal cap"
                )
            sums = {(0,) * self.n}
            for v in self.vectors:
                sums |= {tuple(a + b for a, b in zip(s, v)) for s in sums}
            self._sums_sorted = sorted(sums)
        return self._sums_sorted

    def grid_size(self) -> int:
        size = 1
        for lo, hi in zip(self.coord_lo, self.coord_hi):
            size *= hi - lo + 1
        return size
