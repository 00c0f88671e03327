# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for brute-force sweeps over M2(Z/p^k).

Same packed-integer interface as _sweeps_py; the pure module is the
reference, this one is the fast path picked at import time by the oracle.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

PREDICATES = ("clean", "rad_clean", "j_clean", "quasipolar")


cdef inline int _mod(int x, int m) nogil:
    x %= m
    return x + m if x < 0 else x


cdef struct Cell:
    int a
    int b
    int c
    int d


cdef Cell* _make_cells(int m, int total) except NULL:
    cdef Cell* cells = <Cell*> PyMem_Malloc(total * sizeof(Cell))
    if cells == NULL:
        raise MemoryError()
    cdef int i, m2 = m * m, m3 = m * m * m
    for i in range(total):
        cells[i].a = i % m
        cells[i].b = (i // m) % m
        cells[i].c = (i // m2) % m
        cells[i].d = i // m3
    return cells


cdef inline bint _is_idempotent(Cell* e, int m) nogil:
    return (
        (e.a * e.a + e.b * e.c) % m == e.a
        and (e.a * e.b + e.b * e.d) % m == e.b
        and (e.c * e.a + e.d * e.c) % m == e.c
        and (e.c * e.b + e.d * e.d) % m == e.d
    )


cdef inline bint _commutes(Cell* x, Cell* y, int m) nogil:
    return (
        (x.a * y.a + x.b * y.c) % m == (y.a * x.a + y.b * x.c) % m
        and (x.a * y.b + x.b * y.d) % m == (y.a * x.b + y.b * x.d) % m
        and (x.c * y.a + x.d * y.c) % m == (y.c * x.a + y.d * x.c) % m
        and (x.c * y.b + x.d * y.d) % m == (y.c * x.b + y.d * x.d) % m
    )


cdef bint _qnil(Cell* cells, int total, int m, int p, int q) nogil:
    cdef Cell* Q = &cells[q]
    cdef Cell* X
    cdef int i, ta, tb, tc, td
    for i in range(total):
        X = &cells[i]
        ta = Q.a * X.a + Q.b * X.c
        tb = Q.a * X.b + Q.b * X.d
        tc = Q.c * X.a + Q.d * X.c
        td = Q.c * X.b + Q.d * X.d
        if (
            ta % m != (X.a * Q.a + X.b * Q.c) % m
            or tb % m != (X.a * Q.b + X.b * Q.d) % m
            or tc % m != (X.c * Q.a + X.d * Q.c) % m
            or td % m != (X.c * Q.b + X.d * Q.d) % m
        ):
            continue
        if _mod((ta + 1) * (td + 1) - tb * tc, p) == 0:
            return 0
    return 1


cdef bint _one(
    Cell* cells,
    int* idem,
    int n_idem,
    unsigned char* qnil_memo,
    int total,
    int m,
    int p,
    int idx,
    int which,
) nogil:
    # which: 0 = clean, 1 = rad_clean, 2 = j_clean, 3 = quasipolar
    cdef Cell* A = &cells[idx]
    cdef Cell* E
    cdef int i, q, fa, fb, fc, fd, qa, qb, qc, qd
    for i in range(n_idem):
        E = &cells[idem[i]]
        if which == 2:
            if (
                _mod(A.a - E.a, p)
                or _mod(A.b - E.b, p)
                or _mod(A.c - E.c, p)
                or _mod(A.d - E.d, p)
            ):
                continue
            if _commutes(E, A, m):
                return 1
            continue
        if not _commutes(E, A, m):
            continue
        if which == 3:
            if _mod((A.a + E.a) * (A.d + E.d) - (A.b + E.b) * (A.c + E.c), p) == 0:
                continue
            qa = (A.a * E.a + A.b * E.c) % m
            qb = (A.a * E.b + A.b * E.d) % m
            qc = (A.c * E.a + A.d * E.c) % m
            qd = (A.c * E.b + A.d * E.d) % m
            q = qa + m * (qb + m * (qc + m * qd))
            if qnil_memo[q] == 0:
                qnil_memo[q] = 1 if _qnil(cells, total, m, p, q) else 2
            if qnil_memo[q] == 1:
                return 1
            continue
        if _mod((A.a - E.a) * (A.d - E.d) - (A.b - E.b) * (A.c - E.c), p) == 0:
            continue
        if which == 0:
            return 1
        fa = (E.a * A.a + E.b * A.c) % m
        fb = (E.a * A.b + E.b * A.d) % m
        fc = (E.c * A.a + E.d * A.c) % m
        fd = (E.c * A.b + E.d * A.d) % m
        if (
            (fa * E.a + fb * E.c) % p == 0
            and (fa * E.b + fb * E.d) % p == 0
            and (fc * E.a + fd * E.c) % p == 0
            and (fc * E.b + fd * E.d) % p == 0
        ):
            return 1
    return 0


cdef int _which_code(str which) except -1:
    try:
        return PREDICATES.index(which)
    except ValueError:
        raise ValueError(f"unknown predicate {which!r}")


def idempotents(int m):
    """All packed E with E*E == E, ascending."""
    cdef int total = m * m * m * m
    cdef Cell* cells = _make_cells(m, total)
    cdef int i
    out = []
    try:
        for i in range(total):
            if _is_idempotent(&cells[i], m):
                out.append(i)
    finally:
        PyMem_Free(cells)
    return tuple(out)


def quasinilpotent(int m, int p, int q):
    """I + Q*X invertible for every X commuting with Q, by full scan."""
    cdef int total = m * m * m * m
    cdef Cell* cells = _make_cells(m, total)
    try:
        return bool(_qnil(cells, total, m, p, q))
    finally:
        PyMem_Free(cells)


def brute_one(int m, int p, int idx, str which):
    """Definitional check of one predicate for one packed matrix."""
    cdef int code = _which_code(which)
    cdef int total = m * m * m * m
    cdef Cell* cells = _make_cells(m, total)
    cdef int* idem = NULL
    cdef unsigned char* memo = NULL
    cdef int i, n_idem = 0
    try:
        idem = <int*> PyMem_Malloc(total * sizeof(int))
        memo = <unsigned char*> PyMem_Malloc(total)
        if idem == NULL or memo == NULL:
            raise MemoryError()
        for i in range(total):
            memo[i] = 0
            if _is_idempotent(&cells[i], m):
                idem[n_idem] = i
                n_idem += 1
        return bool(_one(cells, idem, n_idem, memo, total, m, p, idx, code))
    finally:
        PyMem_Free(memo)
        PyMem_Free(idem)
        PyMem_Free(cells)


def sweep(int m, int p, which):
    """Predicate tables over all m**4 packed matrices."""
    codes = [_which_code(name) for name in which]
    cdef int total = m * m * m * m
    cdef Cell* cells = _make_cells(m, total)
    cdef int* idem = NULL
    cdef unsigned char* memo = NULL
    cdef unsigned char[:] view
    cdef int i, idx, code, n_idem = 0
    out = {}
    try:
        idem = <int*> PyMem_Malloc(total * sizeof(int))
        memo = <unsigned char*> PyMem_Malloc(total)
        if idem == NULL or memo == NULL:
            raise MemoryError()
        for i in range(total):
            memo[i] = 0
            if _is_idempotent(&cells[i], m):
                idem[n_idem] = i
                n_idem += 1
        for name, code_obj in zip(which, codes):
            code = code_obj
            table = bytearray(total)
            view = table
            with nogil:
                for idx in range(total):
                    view[idx] = _one(
                        cells, idem, n_idem, memo, total, m, p, idx, code
                    )
            out[name] = bytes(table)
        return out
    finally:
        PyMem_Free(memo)
        PyMem_Free(idem)
        PyMem_Free(cells)
