# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementation of the hot kernels (see pure.py for the contract)."""

BACKEND = "cython"


cpdef tuple compose(tuple a, tuple b, tuple mulflat, int ng):
    cdef Py_ssize_t dim = len(a)
    cdef Py_ssize_t r
    cdef long e, f
    out = [0] * dim
    for r in range(dim):
        e = a[r]
        if e < 0:
            out[r] = -1
            continue
        f = b[e // ng]
        if f < 0:
            out[r] = -1
        else:
            out[r] = (f // ng) * ng + <long>mulflat[(e % ng) * ng + (f % ng)]
    return tuple(out)


def closure(gens, mulflat, ng, cap):
    cdef Py_ssize_t n_gens = len(gens)
    cdef Py_ssize_t ei, gi
    cdef tuple mf = tuple(mulflat)
    cdef int cng = ng
    cdef Py_ssize_t ccap = cap
    elements = []
    links = []
    index = {}
    for gi in range(n_gens):
        g = gens[gi]
        if g not in index:
            if len(elements) >= ccap:
                raise ValueError("cap")
            index[g] = len(elements)
            elements.append(g)
            links.append((-1, gi))
    frontier = list(range(len(elements)))
    while frontier:
        new = []
        for ei in frontier:
            a = elements[ei]
            for gi in range(n_gens):
                p = compose(a, gens[gi], mf, cng)
                if p not in index:
                    if len(elements) >= ccap:
                        raise ValueError("cap")
                    index[p] = len(elements)
                    elements.append(p)
                    links.append((ei, gi))
                    new.append(index[p])
        frontier = new
    return elements, links


def mult_table(elements, mulflat, ng):
    cdef Py_ssize_t n = len(elements)
    cdef Py_ssize_t i, j
    cdef tuple mf = tuple(mulflat)
    cdef int cng = ng
    index = {e: k for k, e in enumerate(elements)}
    table = [0] * (n * n)
    for i in range(n):
        a = elements[i]
        for j in range(n):
            table[i * n + j] = index[compose(a, elements[j], mf, cng)]
    return table
