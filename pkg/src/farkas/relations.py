"""Elementary integral relations (circuits) of a vector family.

A circuit is an integer relation sum(c_i * v_i) == 0 whose support is
minimal (every proper subset of the involved vectors is linearly
independent) and whose coefficients are coprime.  Per support the relation
is unique up to sign; the canonical representative has a positive
coefficient at the smallest support index.  A zero vector contributes the
one-element circuit with coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import IntVector, as_family, int_rank, primitive_kernel


@dataclass(frozen=True)
class Circuit:
    """Minimal-support primitive relation; `coeffs` is parallel to `support`."""

    support: tuple[int, ...]
    coeffs: tuple[int, ...]

    def coeff_map(self) -> dict[int, int]:
        return dict(zip(self.support, self.coeffs))

    def dense(self, size: int) -> IntVector:
        out = [0] * size
        for i, c in zip(self.support, self.coeffs):
            out[i] = c
        return tuple(out)


def circuit_stats(circuit: Circuit) -> tuple[int, int]:
    """(largest absolute coefficient, number of coefficients of size >= 2)."""
    max_abs = max(abs(c) for c in circuit.coeffs)
    count_ge2 = sum(1 for c in circuit.coeffs if abs(c) >= 2)
    return max_abs, count_ge2


def enumerate_circuits(family) -> list[Circuit]:
    """All circuits, ordered by support size then lexicographic support.

    Iterates supports by increasing size, pruning supersets of supports
    already found: any candidate with a dependent proper subset contains an
    earlier circuit and is skipped, so the rank test below certifies both
    the corank-one condition and minimality.
    """
    fam = as_family(family)
    m = fam.size
    max_size = min(m, int_rank(fam.vectors) + 1)
    circuits: list[Circuit] = []
    supports: list[frozenset[int]] = []
    for size in range(1, max_size + 1):
        for support in combinations(range(m), size):
            sset = frozenset(support)
            if any(known <= sset for known in supports):
                continue
            sub = [fam.vectors[i] for i in support]
            if int_rank(sub) != size - 1:
                continue
            coeffs = primitive_kernel(sub)
            assert all(coeffs), "pruning guarantees full support"
            circuits.append(Circuit(support=support, coeffs=coeffs))
            supports.append(sset)
    return circuits
