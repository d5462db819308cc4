# cython: boundscheck=False, wraparound=False, cdivision=True
"""C twins of the scan kernels in _kernels_py.

Same functions, same iteration orders, same results.  Arithmetic is done
in 64-bit integers; callers (farkas.kernels) guard input magnitudes so
that dot products cannot overflow, and the one place where intermediate
values can grow (the triangular lattice solve) checks its own bounds and
raises OverflowError, which the caller treats as "use the pure kernels".
"""

from array import array

from libc.stdlib cimport llabs

ctypedef long long i64

cdef i64 _T_BIG = (<i64>1) << 60
cdef i64 _T_QUO = (<i64>1) << 30


cdef inline int _in_poly(i64* w, i64* norms, i64* rhs,
                         Py_ssize_t nnorm, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    cdef i64 s
    for i in range(nnorm):
        s = 0
        for j in range(n):
            s += norms[i * n + j] * w[j]
        if s > rhs[i]:
            return 0
    return 1


cdef int _in_lattice(i64* w, i64* pivots, i64* basis, i64* scratch,
                     Py_ssize_t r, Py_ssize_t n) except -1:
    cdef Py_ssize_t k, j
    cdef i64 e, p, t
    for j in range(n):
        scratch[j] = w[j]
    for k in range(r):
        e = scratch[pivots[k]]
        p = basis[k * n + pivots[k]]
        if e % p:
            return 0
        t = e / p
        if t:
            if llabs(t) > _T_QUO:
                raise OverflowError("lattice solve quotient too large")
            for j in range(n):
                scratch[j] -= t * basis[k * n + j]
                if llabs(scratch[j]) > _T_BIG:
                    raise OverflowError("lattice solve residual too large")
    for j in range(n):
        if scratch[j]:
            return 0
    return 1


cdef inline int _in_sums(i64* w, i64* sums, Py_ssize_t nsums, Py_ssize_t n) nogil:
    cdef Py_ssize_t lo = 0, hi = nsums, mid, j
    cdef int c
    while lo < hi:
        mid = (lo + hi) >> 1
        c = 0
        for j in range(n):
            if sums[mid * n + j] < w[j]:
                c = -1
                break
            if sums[mid * n + j] > w[j]:
                c = 1
                break
        if c < 0:
            lo = mid + 1
        elif c > 0:
            hi = mid
        else:
            return 1
    return 0


cdef class _Buf:
    """Keeps the array.array backing stores alive for the raw pointers."""
    cdef list keep

    def __cinit__(self):
        self.keep = []

    cdef i64* grab(self, values):
        arr = array('q', values)
        self.keep.append(arr)
        cdef i64[::1] mv
        if len(arr) == 0:
            return NULL
        mv = arr
        return &mv[0]


def afr_subset_scan(lo, hi, normals, rhs, pivots, basis, sums_sorted):
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t nnorm = len(normals)
    cdef Py_ssize_t r = len(pivots)
    cdef Py_ssize_t nsums = len(sums_sorted)
    if n == 0:
        return None
    buf = _Buf()
    cdef i64* clo = buf.grab(lo)
    cdef i64* chi = buf.grab(hi)
    cdef i64* cnorm = buf.grab([val for row in normals for val in row])
    cdef i64* crhs = buf.grab(rhs)
    cdef i64* cpiv = buf.grab(pivots)
    cdef i64* cbasis = buf.grab([val for row in basis for val in row])
    cdef i64* csums = buf.grab([val for row in sums_sorted for val in row])
    cdef i64* w = buf.grab(list(lo))
    cdef i64* scratch = buf.grab([0] * n)
    cdef Py_ssize_t k
    cdef list out
    while True:
        if _in_poly(w, cnorm, crhs, nnorm, n):
            if _in_lattice(w, cpiv, cbasis, scratch, r, n):
                if not _in_sums(w, csums, nsums, n):
                    out = []
                    for k in range(n):
                        out.append(w[k])
                    return tuple(out)
        k = n - 1
        while k >= 0:
            if w[k] < chi[k]:
                w[k] += 1
                break
            w[k] = clo[k]
            k -= 1
        if k < 0:
            return None


cdef inline int _pattern_fails(i64* pat, i64* vecs, i64* wp, i64* norms,
                               i64* rhs, i64* sums, Py_ssize_t m,
                               Py_ssize_t n, Py_ssize_t nnorm,
                               Py_ssize_t nsums) nogil:
    cdef Py_ssize_t i, j
    for j in range(n):
        wp[j] = 0
    for i in range(m):
        if pat[i]:
            for j in range(n):
                wp[j] -= pat[i] * vecs[i * n + j]
    if not _in_poly(wp, norms, rhs, nnorm, n):
        return 0
    return not _in_sums(wp, sums, nsums, n)


def wfr_pattern_scan(vectors, normals, rhs, sums_sorted, restricted):
    cdef Py_ssize_t m = len(vectors)
    cdef Py_ssize_t n = len(vectors[0]) if m else 0
    cdef Py_ssize_t nnorm = len(normals)
    cdef Py_ssize_t nsums = len(sums_sorted)
    buf = _Buf()
    cdef i64* cvecs = buf.grab([val for row in vectors for val in row])
    cdef i64* cnorm = buf.grab([val for row in normals for val in row])
    cdef i64* crhs = buf.grab(rhs)
    cdef i64* csums = buf.grab([val for row in sums_sorted for val in row])
    cdef i64* pat = buf.grab([0] * m)
    cdef i64* wp = buf.grab([0] * max(n, 1))
    cdef Py_ssize_t s, k, j
    cdef int rflag = 1 if restricted else 0
    cdef list out

    if rflag:
        for s in range(m):
            for j in range(m):
                pat[j] = -1
            pat[s] = 1
            while True:
                if _pattern_fails(pat, cvecs, wp, cnorm, crhs, csums,
                                  m, n, nnorm, nsums):
                    out = []
                    for k in range(m):
                        out.append(pat[k])
                    return tuple(out)
                # next rest assignment: rightmost non-s digit -1 -> 0
                k = m - 1
                while k >= 0:
                    if k == s:
                        k -= 1
                        continue
                    if pat[k] < 0:
                        pat[k] = 0
                        break
                    pat[k] = -1
                    k -= 1
                if k < 0:
                    break
        return None

    for j in range(m):
        pat[j] = -1
    while True:
        if _pattern_fails(pat, cvecs, wp, cnorm, crhs, csums,
                          m, n, nnorm, nsums):
            out = []
            for k in range(m):
                out.append(pat[k])
            return tuple(out)
        k = m - 1
        while k >= 0:
            if pat[k] < 1:
                pat[k] += 1
                break
            pat[k] = -1
            k -= 1
        if k < 0:
            return None


def box_search_lex(vectors, lower, upper, target):
    cdef Py_ssize_t m = len(vectors)
    cdef Py_ssize_t n = len(target)
    buf = _Buf()
    cdef i64* cvecs = buf.grab([val for row in vectors for val in row])
    cdef i64* clo = buf.grab(lower)
    cdef i64* chi = buf.grab(upper)
    cdef i64* ctar = buf.grab(target)
    cdef i64* smin = buf.grab([0] * ((m + 1) * n))
    cdef i64* smax = buf.grab([0] * ((m + 1) * n))
    cdef i64* partial = buf.grab([0] * ((m + 1) * n))
    cdef i64* chosen = buf.grab([0] * max(m, 1))
    cdef Py_ssize_t i, j
    cdef i64 a, b
    cdef int found
    cdef list out
    for i in range(m - 1, -1, -1):
        for j in range(n):
            a = clo[i] * cvecs[i * n + j]
            b = chi[i] * cvecs[i * n + j]
            smin[i * n + j] = smin[(i + 1) * n + j] + (a if a < b else b)
            smax[i * n + j] = smax[(i + 1) * n + j] + (b if a < b else a)
    with nogil:
        found = _dfs(0, cvecs, clo, chi, ctar, smin, smax, partial, chosen, m, n)
    if found:
        out = []
        for i in range(m):
            out.append(chosen[i])
        return tuple(out)
    return None


cdef int _dfs(Py_ssize_t i, i64* vecs, i64* lo, i64* hi, i64* target,
              i64* smin, i64* smax, i64* partial, i64* chosen,
              Py_ssize_t m, Py_ssize_t n) nogil:
    cdef Py_ssize_t j
    cdef i64 y, p
    cdef int ok
    if i == m:
        for j in range(n):
            if partial[i * n + j] != target[j]:
                return 0
        return 1
    for y in range(lo[i], hi[i] + 1):
        ok = 1
        for j in range(n):
            p = partial[i * n + j] + y * vecs[i * n + j]
            partial[(i + 1) * n + j] = p
            if p + smin[(i + 1) * n + j] > target[j] or p + smax[(i + 1) * n + j] < target[j]:
                ok = 0
                break
        if ok:
            chosen[i] = y
            if _dfs(i + 1, vecs, lo, hi, target, smin, smax, partial, chosen, m, n):
                return 1
    return 0
