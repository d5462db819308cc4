"""Exact rational feasibility of box-constrained linear systems.

Decides whether {sum_i x_i v_i == target, lower_i <= x_i <= upper_i} has a
rational solution and, when it does, returns one.  The equality part is
solved by Gaussian elimination; the box is then projected by
Fourier-Motzkin elimination on the remaining free parameters, which stay
few at the scale this package targets.  Witnesses are recovered by
back-substitution, picking an extreme feasible value at every level, so
the returned point sits on the boundary of the feasible region.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch
from .lattice import RationalCoeffs, _rref, as_family, nullspace_basis

# A constraint row is (coeffs, bound) meaning  sum_j coeffs[j] * t_j <= bound.
_Row = tuple[tuple[Fraction, ...], Fraction]


def _canonical(row: _Row) -> _Row:
    coeffs, bound = row
    scale = None
    for c in coeffs:
        if c:
            scale = abs(c)
            break
    if scale is None:
        return row
    return tuple(c / scale for c in coeffs), bound / scale


def _dedupe(rows: list[_Row]) -> Optional[list[_Row]]:
    """Keep the tightest bound per direction; None signals an infeasible constant."""
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for row in rows:
        coeffs, bound = _canonical(row)
        if not any(coeffs):
            if bound < 0:
                return None
            continue
        if coeffs not in best or bound < best[coeffs]:
            best[coeffs] = bound
    return [(c, b) for c, b in best.items()]


def _eliminate(
    rows: list[_Row], var: int
) -> tuple[Optional[list[_Row]], list[_Row], list[_Row]]:
    """Project away variable `var`.

    Returns (projected rows, upper rows, lower rows).  Upper rows are
    normalized to coefficient +1 on `var`, lower rows to -1, so that after
    the earlier variables are fixed they evaluate to numeric bounds.
    """
    kept: list[_Row] = []
    uppers: list[_Row] = []
    lowers: list[_Row] = []
    for coeffs, bound in rows:
        c = coeffs[var]
        if c == 0:
            kept.append((coeffs, bound))
        elif c > 0:
            uppers.append((tuple(x / c for x in coeffs), bound / c))
        else:
            lowers.append((tuple(x / -c for x in coeffs), bound / -c))
    for ucoef, ubound in uppers:
        for lcoef, lbound in lowers:
            coeffs = tuple(u + l for u, l in zip(ucoef, lcoef))
            kept.append((coeffs, ubound + lbound))
    return _dedupe(kept), uppers, lowers


def feasible_box_system(
    family,
    lower: Sequence,
    upper: Sequence,
    target: Sequence,
) -> Optional[RationalCoeffs]:
    """A rational x with sum(x_i v_i) == target and lower <= x <= upper, or None."""
    fam = as_family(family)
    m, n = fam.size, fam.ambient_dim
    if len(lower) != m or len(upper) != m:
        raise DimensionMismatch("bounds must have one entry per family vector")
    if len(target) != n:
        raise DimensionMismatch(
            f"target has dimension {len(target)}, family has {n}"
        )
    lower = [Fraction(b) for b in lower]
    upper = [Fraction(b) for b in upper]
    if any(lo > up for lo, up in zip(lower, upper)):
        return None

    rows = [[fam.vectors[i][j] for i in range(m)] for j in range(n)]
    aug = [r + [target[j]] for j, r in enumerate(rows)]
    rref, pivots = _rref(aug)
    if m in pivots:
        return None  # target outside the rational span
    x0 = [Fraction(0)] * m
    for row, p in zip(rref, pivots):
        x0[p] = row[m]
    basis = nullspace_basis(rows, m)
    k = len(basis)

    if k == 0:
        if all(lo <= x <= up for lo, x, up in zip(lower, x0, upper)):
            return tuple(x0)
        return None

    # Box constraints on the free parameters t:  lower <= x0 + B t <= upper.
    constraints: list[_Row] = []
    for i in range(m):
        coeffs = tuple(Fraction(basis[j][i]) for j in range(k))
        if any(coeffs):
            constraints.append((coeffs, upper[i] - x0[i]))
            constraints.append((tuple(-c for c in coeffs), x0[i] - lower[i]))
        elif not lower[i] <= x0[i] <= upper[i]:
            return None
    constraints = _dedupe(constraints)
    if constraints is None:
        return None

    bound_stack: dict[int, tuple[list[_Row], list[_Row]]] = {}
    for var in range(k - 1, -1, -1):
        constraints, uppers, lowers = _eliminate(constraints, var)
        bound_stack[var] = (uppers, lowers)
        if constraints is None:
            return None

    # Fix t_0, then t_1, ...: the bounds on t_var involve earlier variables only.
    t = [Fraction(0)] * k
    for var in range(k):
        uppers, lowers = bound_stack[var]
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, bound in uppers:
            value = bound - sum(c * tv for c, tv in zip(coeffs, t) if c)
            hi = value if hi is None or value < hi else hi
        for coeffs, bound in lowers:
            value = sum(c * tv for c, tv in zip(coeffs, t) if c) - bound
            lo = value if lo is None or value > lo else lo
        if lo is not None:
            t[var] = lo
        elif hi is not None:
            t[var] = hi

    x = list(x0)
    for j in range(k):
        if t[j]:
            x = [xi + t[j] * bij for xi, bij in zip(x, basis[j])]
    return tuple(x)
