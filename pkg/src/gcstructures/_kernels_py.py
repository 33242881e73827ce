"""Pure-Python closed-subset enumeration (fallback for the Cython kernel).

Roots are indexed ``0..n-1``.  Two CSR tables describe root addition:

* ``pair_start/pair_j/pair_k``: for root ``r`` the pairs ``(j, k)`` with
  ``root_r + root_j == root_k``;
* ``sum_start/sum_i/sum_j``: for root ``k`` the pairs ``(i, j)`` with
  ``root_i + root_j == root_k``.

A depth-first search decides roots in index order and rejects a branch as
soon as a triple ``i + j = k`` has ``i, j`` in and ``k`` out.
"""


def closed_masks(n, pair_start, pair_j, pair_k, sum_start, sum_i, sum_j, force_in, force_out):
    out = []
    _dfs(0, 0, 0, n, pair_start, pair_j, pair_k, sum_start, sum_i, sum_j, force_in, force_out, out)
    out.sort()
    return out


def _dfs(pos, inm, outm, n, ps, pj, pk, ss, si, sj, fin, fout, out):
    if pos == n:
        out.append(inm)
        return
    bit = 1 << pos
    if not fout & bit:
        ok = True
        for t in range(ps[pos], ps[pos + 1]):
            if (inm >> pj[t]) & 1 and (outm >> pk[t]) & 1:
                ok = False
                break
        if ok:
            _dfs(pos + 1, inm | bit, outm, n, ps, pj, pk, ss, si, sj, fin, fout, out)
    if not fin & bit:
        ok = True
        for t in range(ss[pos], ss[pos + 1]):
            if (inm >> si[t]) & 1 and (inm >> sj[t]) & 1:
                ok = False
                break
        if ok:
            _dfs(pos + 1, inm, outm | bit, n, ps, pj, pk, ss, si, sj, fin, fout, out)


def is_closed_mask(mask, n, pair_start, pair_j, pair_k):
    for r in range(n):
        if not (mask >> r) & 1:
            continue
        for t in range(pair_start[r], pair_start[r + 1]):
            if (mask >> pair_j[t]) & 1 and not (mask >> pair_k[t]) & 1:
                return False
    return True
