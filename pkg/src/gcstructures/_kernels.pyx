# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closed-subset enumeration; same contract as ``_kernels_py``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free


cdef struct Tables:
    int n
    int *ps
    int *pj
    int *pk
    int *ss
    int *si
    int *sj
    uint64_t fin
    uint64_t fout


cdef int *_copy(object seq) except NULL:
    cdef Py_ssize_t m = len(seq)
    cdef int *buf = <int *> malloc((m + 1) * sizeof(int))
    cdef Py_ssize_t t
    if buf == NULL:
        raise MemoryError()
    for t in range(m):
        buf[t] = seq[t]
    return buf


cdef void _dfs(int pos, uint64_t inm, uint64_t outm, Tables *tb, list out):
    cdef uint64_t bit
    cdef int t
    cdef bint ok
    if pos == tb.n:
        out.append(inm)
        return
    bit = (<uint64_t> 1) << pos
    if not (tb.fout & bit):
        ok = True
        for t in range(tb.ps[pos], tb.ps[pos + 1]):
            if ((inm >> tb.pj[t]) & 1) and ((outm >> tb.pk[t]) & 1):
                ok = False
                break
        if ok:
            _dfs(pos + 1, inm | bit, outm, tb, out)
    if not (tb.fin & bit):
        ok = True
        for t in range(tb.ss[pos], tb.ss[pos + 1]):
            if ((inm >> tb.si[t]) & 1) and ((inm >> tb.sj[t]) & 1):
                ok = False
                break
        if ok:
            _dfs(pos + 1, inm, outm | bit, tb, out)


def closed_masks(int n, pair_start, pair_j, pair_k, sum_start, sum_i, sum_j, force_in, force_out):
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 roots")
    cdef Tables tb
    cdef list out = []
    tb.n = n
    tb.fin = <uint64_t> force_in
    tb.fout = <uint64_t> force_out
    tb.ps = tb.pj = tb.pk = tb.ss = tb.si = tb.sj = NULL
    try:
        tb.ps = _copy(pair_start)
        tb.pj = _copy(pair_j)
        tb.pk = _copy(pair_k)
        tb.ss = _copy(sum_start)
        tb.si = _copy(sum_i)
        tb.sj = _copy(sum_j)
        _dfs(0, 0, 0, &tb, out)
    finally:
        free(tb.ps); free(tb.pj); free(tb.pk)
        free(tb.ss); free(tb.si); free(tb.sj)
    out.sort()
    return out


def is_closed_mask(uint64_t mask, int n, pair_start, pair_j, pair_k):
    cdef int r, t
    for r in range(n):
        if not ((mask >> r) & 1):
            continue
        for t in range(pair_start[r], pair_start[r + 1]):
            if ((mask >> <int> pair_j[t]) & 1) and not ((mask >> <int> pair_k[t]) & 1):
                return False
    return True
