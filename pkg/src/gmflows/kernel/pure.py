"""Pure-Python reference implementation of the hot kernels.

A row-monomial matrix over a group of order ``ng`` acting on ``dim`` rows is
encoded as a tuple of length ``dim`` whose entries are ``-1`` (row undefined)
or ``col * ng + g`` with ``g`` a group element id.  ``mulflat`` is the group's
multiplication table flattened row-major.
"""

BACKEND = "pure"


def compose(a, b, mulflat, ng):
    """Entry tuple of the product a*b (apply a, then b)."""
    out = []
    for e in a:
        if e < 0:
            out.append(-1)
            continue
        f = b[e // ng]
        if f < 0:
            out.append(-1)
        else:
            out.append((f // ng) * ng + mulflat[(e % ng) * ng + (f % ng)])
    return tuple(out)


def closure(gens, mulflat, ng, cap):
    """Multiplicative closure of entry tuples, breadth-first by word length.

    Returns (elements, links) where links[i] = (parent_id, gen_id) and a
    parent_id of -1 marks a generator.  Raises ValueError("cap") when the
    closure would exceed ``cap`` elements.
    """
    elements = []
    links = []
    index = {}
    for gi, g in enumerate(gens):
        if g not in index:
            if len(elements) >= cap:
                raise ValueError("cap")
            index[g] = len(elements)
            elements.append(g)
            links.append((-1, gi))
    frontier = list(range(len(elements)))
    while frontier:
        new = []
        for ei in frontier:
            a = elements[ei]
            for gi, g in enumerate(gens):
                p = compose(a, g, mulflat, ng)
                if p not in index:
                    if len(elements) >= cap:
                        raise ValueError("cap")
                    index[p] = len(elements)
                    elements.append(p)
                    links.append((ei, gi))
                    new.append(index[p])
        frontier = new
    return elements, links


def mult_table(elements, mulflat, ng):
    """Flat n*n id table for a closed list of entry tuples."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    table = [0] * (n * n)
    for i, a in enumerate(elements):
        row = i * n
        for j, b in enumerate(elements):
            table[row + j] = index[compose(a, b, mulflat, ng)]
    return table
