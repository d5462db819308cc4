"""Pure-Python scan kernels.

These are the reference implementations of the three brute-force inner
loops; `farkas._ckernels` mirrors them in C for speed.  Both backends must
produce bit-identical results, including which witness is found first, so
the iteration orders defined here are part of the kernel contract:

* grid scans walk the integer box in lexicographic order;
* sign patterns are ordered by the position of the +1 entry (restricted
  mode), then lexicographically in the remaining entries with -1 before 0;
  unrestricted mode is plain lexicographic order over {-1,0,1}^m;
* box searches return the lexicographically first solution.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import product
from typing import Optional, Sequence

IntVec = tuple[int, ...]


def _in_polytope(w, normals, rhs) -> bool:
    for u, h in zip(normals, rhs):
        s = 0
        for a, b in zip(u, w):
            s += a * b
        if s > h:
            return False
    return True


def _in_lattice(w, pivots, basis) -> bool:
    residual = list(w)
    for prow, vec in zip(pivots, basis):
        e = residual[prow]
        if e % vec[prow]:
            return False
        t = e // vec[prow]
        if t:
            for j in range(len(residual)):
                residual[j] -= t * vec[j]
    return not any(residual)


def _in_sorted(w, sums_sorted) -> bool:
    i = bisect_left(sums_sorted, w)
    return i < len(sums_sorted) and sums_sorted[i] == w


def afr_subset_scan(
    lo: Sequence[int],
    hi: Sequence[int],
    normals: Sequence[IntVec],
    rhs: Sequence[int],
    pivots: Sequence[int],
    basis: Sequence[IntVec],
    sums_sorted: Sequence[IntVec],
) -> Optional[IntVec]:
    """First grid point inside span-lattice and zonotope but not a 0/1 sum."""
    for w in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not _in_polytope(w, normals, rhs):
            continue
        if not _in_lattice(w, pivots, basis):
            continue
        if not _in_sorted(w, sums_sorted):
            return w
    return None


def _pattern_fails(pattern, vectors, n, normals, rhs, sums_sorted) -> bool:
    w = [0] * n
    for a, v in zip(pattern, vectors):
        if a:
            for j in range(n):
                w[j] -= a * v[j]
    w = tuple(w)
    return _in_polytope(w, normals, rhs) and not _in_sorted(w, sums_sorted)


def wfr_pattern_scan(
    vectors: Sequence[IntVec],
    normals: Sequence[IntVec],
    rhs: Sequence[int],
    sums_sorted: Sequence[IntVec],
    restricted: bool,
) -> Optional[IntVec]:
    """First integer-shift pattern whose box is rationally but not integrally solvable.

    A pattern a gives the box [a_i, a_i + 1]; zero is rationally reachable
    there iff -sum(a_i v_i) lies in the zonotope, and integrally reachable
    iff it is a 0/1 sum.  Restricted mode only scans patterns with exactly
    one +1 entry, the rest in {-1, 0}.
    """
    m = len(vectors)
    n = len(vectors[0]) if vectors else 0
    if restricted:
        for s in range(m):
            others = [i for i in range(m) if i != s]
            for rest in product((-1, 0), repeat=m - 1):
                pattern = [0] * m
                pattern[s] = 1
                for i, a in zip(others, rest):
                    pattern[i] = a
                pattern = tuple(pattern)
                if _pattern_fails(pattern, vectors, n, normals, rhs, sums_sorted):
                    return pattern
    else:
        for pattern in product((-1, 0, 1), repeat=m):
            if _pattern_fails(pattern, vectors, n, normals, rhs, sums_sorted):
                return pattern
    return None


def box_search_lex(
    vectors: Sequence[IntVec],
    lower: Sequence[int],
    upper: Sequence[int],
    target: Sequence[int],
) -> Optional[IntVec]:
    """Lexicographically first integer point y in the box with sum(y_i v_i) == target.

    Prunes on per-coordinate interval bounds of the remaining suffix, which
    never skips the first solution.
    """
    m = len(vectors)
    n = len(target)
    # smin[i][j] / smax[i][j]: extreme contribution of vectors i.. to coordinate j.
    smin = [[0] * n for _ in range(m + 1)]
    smax = [[0] * n for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        for j in range(n):
            a = lower[i] * vectors[i][j]
            b = upper[i] * vectors[i][j]
            smin[i][j] = smin[i + 1][j] + min(a, b)
            smax[i][j] = smax[i + 1][j] + max(a, b)
    for j in range(n):
        if not smin[0][j] <= target[j] <= smax[0][j]:
            return None

    chosen = [0] * m

    def descend(i: int, partial: list[int]) -> bool:
        if i == m:
            return partial == list(target)
        v = vectors[i]
        for y in range(lower[i], upper[i] + 1):
            nxt = [p + y * vj for p, vj in zip(partial, v)]
            ok = True
            for j in range(n):
                if not nxt[j] + smin[i + 1][j] <= target[j] <= nxt[j] + smax[i + 1][j]:
                    ok = False
                    break
            if ok:
                chosen[i] = y
                if descend(i + 1, nxt):
                    return True
        return False

    if descend(0, [0] * n):
        return tuple(chosen)
    return None
