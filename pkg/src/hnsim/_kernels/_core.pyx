# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit-basis kernels: sector enumeration, Hamiltonian assembly,
one-particle density matrix, and single-site annihilation.

Mirrors the numpy fallback in ``_python.py``; see there for conventions.
Target states are located through a direct pattern -> ordinal table when
L <= 20 (2^L int64 slots), falling back to binary search above that.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t

cnp.import_array()

BACKEND = "cython"

DEF TABLE_MAX_BITS = 20

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int64_t _bisect(const uint64_t* states, int64_t n, uint64_t target) nogil:
    cdef int64_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if states[mid] < target:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline int64_t _locate(const uint64_t* states, int64_t n,
                            const int64_t* table, uint64_t target) nogil:
    if table != NULL:
        return table[target]
    return _bisect(states, n, target)


cdef inline uint64_t _between_mask(int a, int b) nogil:
    cdef int lo = a if a < b else b
    cdef int hi = b if a < b else a
    return (((<uint64_t>1) << hi) - 1) ^ (((<uint64_t>1) << (lo + 1)) - 1)


def enumerate_states(int L, int N):
    """All length-L patterns with popcount N, ascending by integer value."""
    cdef int64_t count = 1
    cdef int i
    for i in range(N):
        count = count * (L - i) // (i + 1)
    out_arr = np.empty(count, dtype=np.uint64)
    cdef uint64_t[::1] out = out_arr
    cdef uint64_t v, c, r
    cdef int64_t pos = 0
    if N == 0:
        out[0] = 0
        return out_arr
    v = ((<uint64_t>1) << N) - 1
    cdef uint64_t limit = (<uint64_t>1) << L
    while v < limit:
        out[pos] = v
        pos += 1
        # Gosper's hack: next pattern with the same popcount
        c = v & (~v + 1)
        r = v + c
        v = (((v ^ r) >> 2) // c) | r
    return out_arr


cdef object _make_table(cnp.ndarray[uint64_t, ndim=1] states, int L):
    if L > TABLE_MAX_BITS:
        return None
    table_arr = np.full(1 << L, -1, dtype=np.int64)
    cdef int64_t[::1] tv = table_arr
    cdef const uint64_t* sp = <const uint64_t*>cnp.PyArray_DATA(states)
    cdef int64_t c, D = states.shape[0]
    with nogil:
        for c in range(D):
            tv[sp[c]] = c
    return table_arr


def hamiltonian_coo(cnp.ndarray[uint64_t, ndim=1] states, int L,
                    double gamma_l, double gamma_r, double V,
                    cnp.ndarray[double, ndim=1] W, bint pbc):
    """COO triplets (rows, cols, vals); same contract as the fallback."""
    cdef int64_t D = states.shape[0]
    cdef int nbond = L if pbc else L - 1
    cdef int64_t cap = D * (2 * nbond + 1)
    rows_arr = np.empty(cap, dtype=np.int64)
    cols_arr = np.empty(cap, dtype=np.int64)
    vals_arr = np.empty(cap, dtype=np.float64)
    cdef int64_t[::1] rows = rows_arr
    cdef int64_t[::1] cols = cols_arr
    cdef double[::1] vals = vals_arr
    cdef const uint64_t* sp = <const uint64_t*>cnp.PyArray_DATA(states)
    cdef double[::1] Wv = W
    table_obj = _make_table(states, L)
    cdef const int64_t* tp = NULL
    if table_obj is not None:
        tp = <const int64_t*>cnp.PyArray_DATA(table_obj)

    cdef int64_t c, pos = 0, r
    cdef int j, jp
    cdef uint64_t s, mj, mjp, flip, btw
    cdef double diag, sign
    with nogil:
        for c in range(D):
            s = sp[c]
            diag = 0.0
            for j in range(L):
                if s & ((<uint64_t>1) << j):
                    diag += Wv[j]
            for j in range(nbond):
                jp = (j + 1) % L
                if (s & ((<uint64_t>1) << j)) and (s & ((<uint64_t>1) << jp)):
                    diag += V
            rows[pos] = c
            cols[pos] = c
            vals[pos] = diag
            pos += 1
            for j in range(nbond):
                jp = (j + 1) % L
                mj = (<uint64_t>1) << j
                mjp = (<uint64_t>1) << jp
                flip = mj | mjp
                btw = _between_mask(j, jp)
                sign = -1.0 if (_popcount(s & btw) & 1) else 1.0
                if (s & mjp) and not (s & mj):
                    r = _locate(sp, D, tp, s ^ flip)
                    rows[pos] = r
                    cols[pos] = c
                    vals[pos] = -gamma_l * sign
                    pos += 1
                elif (s & mj) and not (s & mjp):
                    r = _locate(sp, D, tp, s ^ flip)
                    rows[pos] = r
                    cols[pos] = c
                    vals[pos] = -gamma_r * sign
                    pos += 1
    return rows_arr[:pos], cols_arr[:pos], vals_arr[:pos]


def opdm(cnp.ndarray[uint64_t, ndim=1] states,
         cnp.ndarray[cnp.complex128_t, ndim=1] amps, int L):
    """One-particle density matrix G[i,j] = <psi| c_i^+ c_j |psi>."""
    cdef int64_t D = states.shape[0]
    G_arr = np.zeros((L, L), dtype=np.complex128)
    cdef cnp.complex128_t[:, ::1] G = G_arr
    cdef const uint64_t* sp = <const uint64_t*>cnp.PyArray_DATA(states)
    cdef cnp.complex128_t[::1] av = amps
    table_obj = _make_table(states, L)
    cdef const int64_t* tp = NULL
    if table_obj is not None:
        tp = <const int64_t*>cnp.PyArray_DATA(table_obj)

    cdef int64_t c, r
    cdef int i, j
    cdef uint64_t s, mi, mj, btw
    cdef double sign, p
    with nogil:
        for c in range(D):
            s = sp[c]
            p = av[c].real * av[c].real + av[c].imag * av[c].imag
            for j in range(L):
                mj = (<uint64_t>1) << j
                if not (s & mj):
                    continue
                G[j, j].real += p
                for i in range(L):
                    if i == j:
                        continue
                    mi = (<uint64_t>1) << i
                    if s & mi:
                        continue
                    btw = _between_mask(i, j)
                    sign = -1.0 if (_popcount(s & btw) & 1) else 1.0
                    r = _locate(sp, D, tp, s ^ (mi | mj))
                    G[i, j] = G[i, j] + sign * av[r].conjugate() * av[c]
    return G_arr


def annihilate(cnp.ndarray[uint64_t, ndim=1] states,
               cnp.ndarray[cnp.complex128_t, ndim=1] amps, int j,
               cnp.ndarray[uint64_t, ndim=1] out_states):
    """Apply c_j: amplitudes over `out_states` (popcount one less)."""
    cdef int64_t D = states.shape[0]
    cdef int64_t Do = out_states.shape[0]
    out_arr = np.zeros(Do, dtype=np.complex128)
    cdef cnp.complex128_t[::1] out = out_arr
    cdef cnp.complex128_t[::1] av = amps
    cdef const uint64_t* sp = <const uint64_t*>cnp.PyArray_DATA(states)
    cdef const uint64_t* op = <const uint64_t*>cnp.PyArray_DATA(out_states)
    cdef uint64_t mj = (<uint64_t>1) << j
    cdef uint64_t below = mj - 1
    cdef int64_t c, r
    cdef double sign
    with nogil:
        for c in range(D):
            if not (sp[c] & mj):
                continue
            sign = -1.0 if (_popcount(sp[c] & below) & 1) else 1.0
            r = _bisect(op, Do, sp[c] ^ mj)
            out[r] = sign * av[c]
    return out_arr
