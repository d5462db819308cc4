"""Deciders for the two rounding classes of integer vector families.

A family is almost-Farkas-related (a.f.r.) when, for every integer box and
every target in the matching shifted span, rational representability
inside the box implies integer representability.  It is weakly
Farkas-related (w.f.r.) under the same upgrade restricted to strictly
proper boxes and targets in the full integer span.

`is_afr` decides the first class through its circuit criterion: every
circuit may carry at most one coefficient of absolute value 2 and none
larger.  `is_wfr` decides the second by scanning unit-width shift
patterns.  Both come with definitional brute-force oracles
(`is_afr_oracle`, `is_wfr_oracle`) that re-derive the answer from the
definitions; classifier and oracle agreeing on small instances is the
package's central self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from . import kernels
from .errors import DimensionMismatch, InternalInconsistency, LimitExceeded
from .lattice import RationalCoeffs, VectorFamily, as_family, shifted_member
from .limits import DEFAULT_LIMITS, Limits
from .linprog import feasible_box_system
from .relations import Circuit, circuit_stats, enumerate_circuits
from .zonotope import ZonotopeProfile


@dataclass(frozen=True)
class AfrVerdict:
    is_afr: bool
    violating_circuit: Optional[Circuit] = None


@dataclass(frozen=True)
class SignPattern:
    """Shift pattern with exactly one +1 entry; the rest are -1 or 0."""

    values: tuple[int, ...]
    special_index: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if values.count(1) != 1 or values[self.special_index] != 1:
            raise ValueError("exactly one entry must be +1, at special_index")
        if any(v not in (-1, 0, 1) for v in values):
            raise ValueError("entries must lie in {-1, 0, 1}")

    def lower(self) -> tuple[int, ...]:
        return self.values

    def upper(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.values)


@dataclass(frozen=True)
class WfrVerdict:
    is_wfr: bool
    counterexample: Optional[tuple[SignPattern, RationalCoeffs]] = None


def is_afr(family) -> AfrVerdict:
    """Circuit-criterion decision; a false verdict carries the first bad circuit."""
    for circuit in enumerate_circuits(family):
        max_abs, count_ge2 = circuit_stats(circuit)
        if max_abs > 2 or count_ge2 > 1:
            return AfrVerdict(False, circuit)
    return AfrVerdict(True)


def _afr_subset_ok(sub: VectorFamily, limits: Limits) -> bool:
    profile = ZonotopeProfile(sub)
    if profile.grid_size() > limits.box_enumeration:
        raise LimitExceeded(
            f"oracle grid of {profile.grid_size()} points exceeds "
            f"the enumeration limit {limits.box_enumeration}"
        )
    bad = kernels.afr_subset_scan(
        profile.coord_lo,
        profile.coord_hi,
        profile.normals,
        profile.rhs,
        profile.lattice.pivots,
        profile.lattice.basis,
        profile.subset_sums(),
    )
    return bad is None


def is_afr_oracle(family, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Definitional check over every subfamily.

    For each nonempty subset of the family, every lattice point of the
    subset's span that lies in its zonotope (candidates bounded
    coordinatewise by the zonotope's extremes, then filtered by exact
    rational feasibility) must be a 0/1 combination of the subset.
    """
    fam = as_family(family)
    if fam.size > limits.afr_oracle_max_size:
        raise LimitExceeded(
            f"family size {fam.size} exceeds the oracle limit "
            f"{limits.afr_oracle_max_size}"
        )
    for size in range(1, fam.size + 1):
        for subset in combinations(range(fam.size), size):
            if not _afr_subset_ok(fam.subfamily(subset), limits):
                return False
    return True


def _box_bounds(box, size: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if hasattr(box, "lower") and hasattr(box, "upper"):
        lower, upper = tuple(box.lower), tuple(box.upper)
    else:
        lower, upper = (tuple(int(x) for x in side) for side in box)
    if len(lower) != size or len(upper) != size:
        raise DimensionMismatch("box must have one bound pair per vector")
    return lower, upper


def is_afr_oracle_boxed(family, box, w: Sequence[int],
                        limits: Limits = DEFAULT_LIMITS) -> bool:
    """One definitional instance: shifted-span + rational in box => integer in box."""
    fam = as_family(family)
    lower, upper = _box_bounds(box, fam.size)
    w = tuple(int(x) for x in w)
    if len(w) != fam.ambient_dim:
        raise DimensionMismatch(
            f"target has dimension {len(w)}, family has {fam.ambient_dim}"
        )
    fixed = {i: lower[i] for i in range(fam.size) if lower[i] == upper[i]}
    free = [i for i in range(fam.size) if lower[i] != upper[i]]
    if shifted_member(fam, fixed, free, w) is None:
        return True
    if feasible_box_system(fam, lower, upper, w) is None:
        return True
    points = 1
    for lo, hi in zip(lower, upper):
        points *= hi - lo + 1
    if points > limits.box_enumeration:
        raise LimitExceeded(f"{points} box points exceed the enumeration limit")
    return kernels.box_search_lex(fam.vectors, lower, upper, w) is not None


def _wfr_scan(fam: VectorFamily, restricted: bool) -> Optional[tuple[int, ...]]:
    profile = ZonotopeProfile(fam)
    return kernels.wfr_pattern_scan(
        fam.vectors, profile.normals, profile.rhs, profile.subset_sums(), restricted
    )


def is_wfr(family, limits: Limits = DEFAULT_LIMITS) -> WfrVerdict:
    """Scan all one-plus-one shift patterns; false verdicts carry a witness.

    Patterns are visited ordered by the position of their +1 entry, then
    lexicographically in the remaining entries (-1 before 0); the witness
    is the first failure in that order.  The rational coefficients in the
    witness solve sum(x_i v_i) == 0 inside the pattern's unit box while no
    integer point of that box does.
    """
    fam = as_family(family)
    if fam.size > limits.wfr_max_size:
        raise LimitExceeded(
            f"family size {fam.size} exceeds the pattern-scan limit "
            f"{limits.wfr_max_size}"
        )
    bad = _wfr_scan(fam, restricted=True)
    if bad is None:
        return WfrVerdict(True)
    pattern = SignPattern(bad, bad.index(1))
    witness = feasible_box_system(
        fam, pattern.lower(), pattern.upper(), (0,) * fam.ambient_dim
    )
    if witness is None:
        raise InternalInconsistency(
            "pattern scan found a rationally feasible box the exact LP rejects"
        )
    return WfrVerdict(False, (pattern, witness))


def is_wfr_oracle(family, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Same check over all of {-1,0,1}^m, a strict superset of the patterns."""
    fam = as_family(family)
    if fam.size > limits.wfr_oracle_max_size:
        raise LimitExceeded(
            f"family size {fam.size} exceeds the oracle limit "
            f"{limits.wfr_oracle_max_size}"
        )
    return _wfr_scan(fam, restricted=False) is None


def afr_implies_wfr_check(family, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Standing property: a.f.r. families must also be w.f.r."""
    fam = as_family(family)
    return (not is_afr(fam).is_afr) or is_wfr(fam, limits).is_wfr
