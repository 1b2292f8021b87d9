# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p row-reduction kernel.

Behaviourally identical to the pure-Python fallback in ``_modp_py``:
Gauss-Jordan, leftmost pivot column, first nonzero row.  Entries are kept
in ``[0, p)``; p is restricted to 31 bits so products fit in 64 bits.
"""


cdef long long _inv_mod(long long x, long long p):
    # extended Euclid, x in (0, p), p prime
    cdef long long a = x, b = p, u = 1, v = 0, q, t
    while b != 0:
        q = a // b
        t = a - q * b
        a = b
        b = t
        t = u - q * v
        u = v
        v = t
    if u < 0:
        u += p
    return u


def rref_mod_p_inplace(long long[:, ::1] a, long long p):
    """Reduce ``a`` in place; returns the pivot column list."""
    cdef Py_ssize_t nr = a.shape[0]
    cdef Py_ssize_t nc = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long pv, inv, f, pj, tmp
    pivots = []
    for c in range(nc):
        pr = -1
        for i in range(r, nr):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(nc):
                tmp = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = tmp
        pv = a[r, c]
        if pv != 1:
            inv = _inv_mod(pv, p)
            for j in range(c, nc):
                if a[r, j] != 0:
                    a[r, j] = a[r, j] * inv % p
        for i in range(nr):
            if i == r:
                continue
            f = a[i, c]
            if f != 0:
                for j in range(c, nc):
                    pj = a[r, j]
                    if pj != 0:
                        tmp = (a[i, j] - f * pj) % p
                        if tmp < 0:
                            tmp += p
                        a[i, j] = tmp
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return pivots
