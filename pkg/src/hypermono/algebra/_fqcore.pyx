# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled finite-field matrix kernel (hot loops of the enumeration oracles).

Same contract as the pure-Python twin ``_fqcore_py``; selected by
``hypermono.algebra.fq`` at import when available.
"""

IMPLEMENTATION = "cython"


def mat_mul(a, b, int n, int q, mul, add):
    cdef int i, j, k, aik, bkj, row, kn, acc
    cdef list out = [0] * (n * n)
    cdef list al = list(a), bl = list(b), ml = list(mul), adl = list(add)
    for i in range(n):
        row = i * n
        for k in range(n):
            aik = al[row + k]
            if aik:
                kn = k * n
                for j in range(n):
                    bkj = bl[kn + j]
                    if bkj:
                        acc = out[row + j]
                        out[row + j] = adl[acc * q + ml[aik * q + bkj]]
    return tuple(out)


def mat_rank(a, int n, int q, mul, add, neg, inv):
    cdef int rank = 0, col, r, piv, pivinv, f, j, v
    cdef list ml = list(mul), adl = list(add), ngl = list(neg), ivl = list(inv)
    cdef list m = []
    for r in range(n):
        m.append(list(a[r * n : (r + 1) * n]))
    for col in range(n):
        piv = -1
        for r in range(rank, n):
            if m[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivinv = ivl[m[rank][col]]
        if pivinv != 1:
            m[rank] = [ml[pivinv * q + v] for v in m[rank]]
        for r in range(n):
            if r != rank and m[r][col]:
                f = ngl[m[r][col]]
                for j in range(col, n):
                    if m[rank][j]:
                        m[r][j] = adl[<int>m[r][j] * q + ml[f * q + <int>m[rank][j]]]
        rank += 1
        if rank == n:
            break
    return rank


def mat_vec(a, v, int n, int q, mul, add):
    cdef int i, j, acc, aij
    cdef list out = [0] * n
    cdef list al = list(a), vl = list(v), ml = list(mul), adl = list(add)
    for i in range(n):
        acc = 0
        for j in range(n):
            aij = al[i * n + j]
            if aij and vl[j]:
                acc = adl[acc * q + ml[aij * q + vl[j]]]
        out[i] = acc
    return tuple(out)
