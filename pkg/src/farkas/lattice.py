"""Exact integer linear algebra: spans, membership, primitive kernels.

All arithmetic is done with Python's arbitrary-precision integers and
`fractions.Fraction`; nothing in this package ever touches floating point.
Vectors are plain tuples of ints, families are thin immutable wrappers
around a tuple of equal-length vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DimensionMismatch, KernelRankError

IntVector = tuple[int, ...]
IntegerCoeffs = tuple[int, ...]
RationalCoeffs = tuple[Fraction, ...]


@dataclass(frozen=True)
class VectorFamily:
    """An ordered, non-empty list of integer vectors sharing one dimension."""

    vectors: tuple[IntVector, ...]

    def __post_init__(self):
        if not self.vectors:
            raise ValueError("a vector family must contain at least one vector")
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        dim = len(vecs[0])
        for v in vecs:
            if len(v) != dim:
                raise DimensionMismatch(
                    f"vector {v} has length {len(v)}, expected {dim}"
                )
        object.__setattr__(self, "vectors", vecs)

    @property
    def ambient_dim(self) -> int:
        return len(self.vectors[0])

    @property
    def size(self) -> int:
        return len(self.vectors)

    def subfamily(self, indices: Sequence[int]) -> "VectorFamily":
        return VectorFamily(tuple(self.vectors[i] for i in indices))

    def __iter__(self):
        return iter(self.vectors)


def as_family(obj) -> VectorFamily:
    """Coerce a VectorFamily or a raw sequence of vectors into a family."""
    if isinstance(obj, VectorFamily):
        return obj
    return VectorFamily(tuple(tuple(v) for v in obj))


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of lengths {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_gcd(entries: Iterable[int]) -> int:
    return reduce(gcd, (abs(e) for e in entries), 0)


def make_primitive(entries: Sequence[int]) -> IntVector:
    """Divide by the gcd and flip sign so the first nonzero entry is positive."""
    g = vec_gcd(entries)
    if g == 0:
        return tuple(entries)
    vec = [e // g for e in entries]
    lead = next(e for e in vec if e)
    if lead < 0:
        vec = [-e for e in vec]
    return tuple(vec)


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        for i in range(rank + 1, len(work)):
            q = work[i][col]
            if q:
                row = [p * a - q * b for a, b in zip(work[i], work[rank])]
                g = vec_gcd(row)
                work[i] = [e // g for e in row] if g > 1 else row
        rank += 1
        if rank == len(work):
            break
    return rank


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    work = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][col]
        work[r] = [x / inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def nullspace_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVector]:
    """Primitive integer basis of {x : rows @ x = 0}, one vector per free column."""
    if not rows:
        return [tuple(1 if j == k else 0 for j in range(ncols)) for k in range(ncols)]
    rref, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(rref, pivots):
            vec[p] = -row[f]
        denom = reduce(lambda a, b: a * b.denominator // gcd(a, b.denominator), vec, 1)
        basis.append(make_primitive([int(x * denom) for x in vec]))
    return basis


class LatticeData:
    """Triangular generating set of an integer span, with bookkeeping.

    `basis[k]` is an integer vector with a pivot at row `pivots[k]`; every
    later basis vector vanishes on the earlier pivot rows, so membership is
    a sequence of exact divisions.  `transform[k]` expresses `basis[k]` as
    an integer combination of the original vectors.
    """

    def __init__(self, vectors: Sequence[IntVector], dim: int):
        m = len(vectors)
        cols = [list(v) for v in vectors]
        trans = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
        done = 0
        pivots: list[int] = []
        for row in range(dim):
            active = [j for j in range(done, m) if cols[j][row]]
            if not active:
                continue
            while len(active) > 1:
                active.sort(key=lambda j: abs(cols[j][row]))
                j0 = active[0]
                e0 = cols[j0][row]
                for j in active[1:]:
                    q = cols[j][row] // e0
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[j0])]
                    trans[j] = [a - q * b for a, b in zip(trans[j], trans[j0])]
                active = [j for j in active if cols[j][row]]
            j0 = active[0]
            if cols[j0][row] < 0:
                cols[j0] = [-a for a in cols[j0]]
                trans[j0] = [-a for a in trans[j0]]
            cols[done], cols[j0] = cols[j0], cols[done]
            trans[done], trans[j0] = trans[j0], trans[done]
            pivots.append(row)
            done += 1
            if done == m:
                break
        self.dim = dim
        self.nvec = m
        self.basis = [tuple(c) for c in cols[:done]]
        self.pivots = pivots
        self.transform = [tuple(t) for t in trans[:done]]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_coefficients(self, w: Sequence[int]) -> Optional[list[int]]:
        """Coefficients of w on the triangular basis, or None if w is outside."""
        residual = list(w)
        coeffs = []
        for vec, prow in zip(self.basis, self.pivots):
            e = residual[prow]
            p = vec[prow]
            if e % p:
                return None
            t = e // p
            coeffs.append(t)
            if t:
                residual = [a - t * b for a, b in zip(residual, vec)]
        if any(residual):
            return None
        return coeffs

    def member(self, w: Sequence[int]) -> Optional[IntegerCoeffs]:
        """Integer coefficients on the *original* vectors, or None."""
        coeffs = self.basis_coefficients(w)
        if coeffs is None:
            return None
        out = [0] * self.nvec
        for t, combo in zip(coeffs, self.transform):
            if t:
                out = [a + t * b for a, b in zip(out, combo)]
        return tuple(out)


def lattice_basis(family) -> list[IntVector]:
    """A basis of the integer span of the family (empty for all-zero input)."""
    fam = as_family(family)
    return list(LatticeData(fam.vectors, fam.ambient_dim).basis)


def lattice_member(family, w: Sequence[int]) -> Optional[IntegerCoeffs]:
    """Integer coefficients c with sum(c_i * v_i) == w, or None.

    Coefficients always verify exactly; which representative is returned is
    an implementation detail.
    """
    fam = as_family(family)
    w = tuple(int(x) for x in w)
    if len(w) != fam.ambient_dim:
        raise DimensionMismatch(
            f"target has dimension {len(w)}, family has {fam.ambient_dim}"
        )
    return LatticeData(fam.vectors, fam.ambient_dim).member(w)


def shifted_member(
    family,
    fixed: Mapping[int, int],
    free: Iterable[int],
    w: Sequence[int],
) -> Optional[IntegerCoeffs]:
    """Membership of w in (sum of fixed multiples) + integer span of the free part.

    `fixed` maps indices to their pinned coefficients; `free` lists the
    remaining indices.  Together they must partition the family's index set.
    Returns full-length coefficients (pinned values filled in) or None.
    """
    fam = as_family(family)
    w = tuple(int(x) for x in w)
    if len(w) != fam.ambient_dim:
        raise DimensionMismatch(
            f"target has dimension {len(w)}, family has {fam.ambient_dim}"
        )
    free = sorted(free)
    fixed_keys = set(fixed)
    if fixed_keys & set(free):
        raise ValueError("fixed and free index sets overlap")
    if fixed_keys | set(free) != set(range(fam.size)):
        raise ValueError("fixed and free must partition the index set")
    residual = list(w)
    for i, coeff in fixed.items():
        residual = [a - coeff * b for a, b in zip(residual, fam.vectors[i])]
    if not free:
        return tuple(fixed[i] for i in range(fam.size)) if not any(residual) else None
    data = LatticeData([fam.vectors[i] for i in free], fam.ambient_dim)
    part = data.member(residual)
    if part is None:
        return None
    out = [0] * fam.size
    for i, coeff in fixed.items():
        out[i] = int(coeff)
    for i, coeff in zip(free, part):
        out[i] = coeff
    return tuple(out)


def primitive_kernel(family) -> IntVector:
    """The primitive generator of a rank-one integer kernel.

    The family must satisfy rank == size - 1.  The generator has coprime
    entries and its first nonzero entry is positive.
    """
    fam = as_family(family)
    rows = [[v[j] for v in fam.vectors] for j in range(fam.ambient_dim)]
    basis = nullspace_basis(rows, fam.size)
    if len(basis) != 1:
        raise KernelRankError(
            f"kernel has rank {len(basis)}, expected 1 (family rank {fam.size - len(basis)})"
        )
    return make_primitive(basis[0])
