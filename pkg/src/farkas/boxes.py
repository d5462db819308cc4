"""Box-constrained integer representability and dual certificates.

For an a.f.r. family, a target is integer-representable inside a box iff
it passes the shifted-span test and the box system is rationally
feasible; for a w.f.r. family and a strictly proper box, iff it lies in
the integer span and the box system is rationally feasible.  The decision
procedures implement exactly that, then produce and re-verify an integer
witness by exhaustive search.

A certificate is a rational direction u: when <u, w> exceeds the box
maximum of <u, sum x_i v_i> (computed by the split-sign formula in
`certificate_rhs`), no rational point of the box reaches w, which
soundly explains any "not representable" answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels
from .classify import is_afr, is_wfr
from .errors import (
    ClassCheckError,
    DimensionMismatch,
    InternalInconsistency,
    LimitExceeded,
)
from .lattice import (
    IntegerCoeffs,
    RationalCoeffs,
    as_family,
    dot,
    lattice_member,
    shifted_member,
)
from .limits import DEFAULT_LIMITS, Limits
from .linprog import feasible_box_system


@dataclass(frozen=True)
class Box:
    """Componentwise integer bounds lower_i <= x_i <= upper_i."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        lower = tuple(int(x) for x in self.lower)
        upper = tuple(int(x) for x in self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if len(lower) != len(upper):
            raise DimensionMismatch("lower and upper must have equal length")
        for a, b in zip(lower, upper):
            if a > b:
                raise ValueError(f"empty interval [{a}, {b}]")

    @property
    def size(self) -> int:
        return len(self.lower)

    @property
    def is_strict(self) -> bool:
        return all(a < b for a, b in zip(self.lower, self.upper))

    def point_count(self) -> int:
        count = 1
        for a, b in zip(self.lower, self.upper):
            count *= b - a + 1
        return count


def as_box(obj) -> Box:
    if isinstance(obj, Box):
        return obj
    lower, upper = obj
    return Box(tuple(lower), tuple(upper))


@dataclass(frozen=True)
class Certificate:
    """A nonzero rational direction separating a target from a box image."""

    u: tuple[Fraction, ...]

    def __post_init__(self):
        u = tuple(Fraction(x) for x in self.u)
        object.__setattr__(self, "u", u)
        if not any(u):
            raise ValueError("certificate direction must be nonzero")


def as_certificate(obj) -> Certificate:
    if isinstance(obj, Certificate):
        return obj
    return Certificate(tuple(obj))


class Reason(Enum):
    LATTICE_FAIL = "lattice_fail"
    RATIONAL_INFEASIBLE = "rational_infeasible"
    FOUND = "found"


@dataclass(frozen=True)
class Decision:
    representable: bool
    solution: Optional[IntegerCoeffs]
    reason: Reason


def _check_dims(fam, box: Box, w) -> tuple[Box, tuple[int, ...]]:
    if box.size != fam.size:
        raise DimensionMismatch(
            f"box has {box.size} bound pairs, family has {fam.size} vectors"
        )
    w = tuple(int(x) for x in w)
    if len(w) != fam.ambient_dim:
        raise DimensionMismatch(
            f"target has dimension {len(w)}, family has {fam.ambient_dim}"
        )
    return box, w


def rational_feasible(family, box, w) -> Optional[RationalCoeffs]:
    """A rational point of the box mapping to w, or None."""
    fam = as_family(family)
    box, w = _check_dims(fam, as_box(box), w)
    return feasible_box_system(fam, box.lower, box.upper, w)


def integer_solve(family, box, w, limits: Limits = DEFAULT_LIMITS) -> Optional[IntegerCoeffs]:
    """Exhaustive search for the lexicographically first integer solution."""
    fam = as_family(family)
    box, w = _check_dims(fam, as_box(box), w)
    if box.point_count() > limits.box_enumeration:
        raise LimitExceeded(
            f"{box.point_count()} box points exceed the enumeration limit "
            f"{limits.box_enumeration}"
        )
    return kernels.box_search_lex(fam.vectors, box.lower, box.upper, w)


def _verified(fam, box: Box, w, solution: IntegerCoeffs) -> IntegerCoeffs:
    inside = all(a <= y <= b for a, y, b in zip(box.lower, solution, box.upper))
    total = [0] * fam.ambient_dim
    for y, v in zip(solution, fam.vectors):
        total = [t + y * x for t, x in zip(total, v)]
    if not inside or tuple(total) != w:
        raise InternalInconsistency("produced solution failed re-verification")
    return solution


def decide_afr(family, box, w, *, check_class: bool = True,
               limits: Limits = DEFAULT_LIMITS) -> Decision:
    """Box representability under the a.f.r. decision rule.

    Representable iff w passes the shifted-span test for the pinned
    coordinates (lower == upper) and the box system is rationally
    feasible.  The integer witness is then found by search and re-verified;
    the rule is only sound for a.f.r. families, which is checked by
    default (pass check_class=False to skip).
    """
    fam = as_family(family)
    box, w = _check_dims(fam, as_box(box), w)
    if check_class and not is_afr(fam).is_afr:
        raise ClassCheckError(
            "family is not almost-Farkas-related; the decision rule is unsound"
        )
    fixed = {i: box.lower[i] for i in range(fam.size) if box.lower[i] == box.upper[i]}
    free = [i for i in range(fam.size) if box.lower[i] != box.upper[i]]
    if shifted_member(fam, fixed, free, w) is None:
        return Decision(False, None, Reason.LATTICE_FAIL)
    if feasible_box_system(fam, box.lower, box.upper, w) is None:
        return Decision(False, None, Reason.RATIONAL_INFEASIBLE)
    solution = integer_solve(fam, box, w, limits)
    if solution is None:
        raise InternalInconsistency(
            "decision rule says representable but the box search found nothing"
        )
    return Decision(True, _verified(fam, box, w, solution), Reason.FOUND)


def decide_wfr(family, box, w, *, check_class: bool = True,
               limits: Limits = DEFAULT_LIMITS) -> Decision:
    """Box representability under the w.f.r. decision rule (strict boxes only)."""
    fam = as_family(family)
    box, w = _check_dims(fam, as_box(box), w)
    if not box.is_strict:
        raise ValueError("the w.f.r. rule requires strict bounds lower < upper")
    if check_class and not is_wfr(fam, limits).is_wfr:
        raise ClassCheckError(
            "family is not weakly-Farkas-related; the decision rule is unsound"
        )
    if lattice_member(fam, w) is None:
        return Decision(False, None, Reason.LATTICE_FAIL)
    if feasible_box_system(fam, box.lower, box.upper, w) is None:
        return Decision(False, None, Reason.RATIONAL_INFEASIBLE)
    solution = integer_solve(fam, box, w, limits)
    if solution is None:
        raise InternalInconsistency(
            "decision rule says representable but the box search found nothing"
        )
    return Decision(True, _verified(fam, box, w, solution), Reason.FOUND)


def certificate_rhs(u, family, box) -> Fraction:
    """Box maximum of <u, sum x_i v_i>, via the split-sign evaluation.

    Each inner product c_i = <u, v_i> contributes lower_i * (c_i - |c_i|)/2
    + upper_i * (c_i + |c_i|)/2, the negative part paired with the lower
    bound and the positive part with the upper bound.
    """
    cert = as_certificate(u)
    fam = as_family(family)
    box = as_box(box)
    if box.size != fam.size:
        raise DimensionMismatch(
            f"box has {box.size} bound pairs, family has {fam.size} vectors"
        )
    if len(cert.u) != fam.ambient_dim:
        raise DimensionMismatch(
            f"direction has dimension {len(cert.u)}, family has {fam.ambient_dim}"
        )
    total = Fraction(0)
    for a, b, v in zip(box.lower, box.upper, fam.vectors):
        c = dot(cert.u, v)
        total += a * (c - abs(c)) / 2 + b * (c + abs(c)) / 2
    return total


def verify_certificate(u, family, box, w) -> bool:
    """True iff <u, w> strictly exceeds the box maximum.

    A true answer soundly certifies that no rational (hence no integer)
    point of the box maps to w, for any nonzero u.
    """
    cert = as_certificate(u)
    fam = as_family(family)
    box, w = _check_dims(fam, as_box(box), w)
    return dot(cert.u, w) > certificate_rhs(cert, fam, box)
