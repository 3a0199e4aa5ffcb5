"""Finite semigroups generated by closure, with Green's relations.

Elements are row-monomial matrices (fast path through the kernel) or any
hashable values with an explicit product function.  Element ids follow the
canonical order: breadth-first by generator-word length, then lexicographic
by word, so ids are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .rowmono import DimMismatch, RowMonomialMatrix


class CapExceeded(RuntimeError):
    pass


class NotClosed(ValueError):
    pass


DEFAULT_CAP = 500_000


class FinSemigroup:
    """A finite semigroup with canonical element order and witness words."""

    def __init__(self, elements, links, gen_ids, mul=None, group=None):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.links = list(links)  # id -> (parent_id, gen_position); parent -1 = generator
        self.gen_ids = list(gen_ids)  # generator position -> element id
        self._mul = mul
        self.group = group  # set on the matrix fast path
        self._table = None
        self._right = None
        self._left = None
        self._green = None
        self._idempotents = None

    # -- construction -----------------------------------------------------

    @classmethod
    def generate(cls, gens, cap=DEFAULT_CAP, mul=None):
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        if mul is None and isinstance(gens[0], RowMonomialMatrix):
            group = gens[0].group
            dim = gens[0].dim
            for g in gens:
                if g.group != group or g.dim != dim:
                    raise DimMismatch("generators must share group and dimension")
            try:
                rows, links = kernel.closure(
                    [g.rows for g in gens], group.mulflat, group.order, cap
                )
            except ValueError:
                raise CapExceeded("closure exceeds cap=%d" % cap) from None
            elements = [RowMonomialMatrix(group, r) for r in rows]
            s = cls(elements, links, [], group=group)
        else:
            if mul is None:
                raise ValueError("non-matrix generators need an explicit product")
            elements, links = [], []
            index = {}
            for gi, g in enumerate(gens):
                if g not in index:
                    if len(elements) >= cap:
                        raise CapExceeded("closure exceeds cap=%d" % cap)
                    index[g] = len(elements)
                    elements.append(g)
                    links.append((-1, gi))
            frontier = list(range(len(elements)))
            while frontier:
                new = []
                for ei in frontier:
                    a = elements[ei]
                    for gi, g in enumerate(gens):
                        p = mul(a, g)
                        if p not in index:
                            if len(elements) >= cap:
                                raise CapExceeded("closure exceeds cap=%d" % cap)
                            index[p] = len(elements)
                            elements.append(p)
                            links.append((ei, gi))
                            new.append(index[p])
                frontier = new
            s = cls(elements, links, [], mul=mul)
        s.gen_ids = [s.index[g] for g in gens]
        return s

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def generators(self):
        out, seen = [], set()
        for eid in self.gen_ids:
            if eid not in seen:
                seen.add(eid)
                out.append(eid)
        return out

    # -- products ----------------------------------------------------------

    def mul_elem(self, a, b):
        if self._mul is not None:
            return self._mul(a, b)
        return a.compose(b)

    def product(self, i, j):
        if self._table is not None:
            return int(self._table[i, j])
        return self.index[self.mul_elem(self.elements[i], self.elements[j])]

    def table(self):
        """Full n*n id table (numpy int32), cached."""
        if self._table is None:
            n = len(self.elements)
            if self.group is not None and self._mul is None:
                flat = kernel.mult_table(
                    [e.rows for e in self.elements], self.group.mulflat, self.group.order
                )
                self._table = np.asarray(flat, dtype=np.int32).reshape(n, n)
            else:
                t = np.empty((n, n), dtype=np.int32)
                for i, a in enumerate(self.elements):
                    for j, b in enumerate(self.elements):
                        t[i, j] = self.index[self.mul_elem(a, b)]
                self._table = t
        return self._table

    def right_cayley(self):
        """n x n_gens table of x * gen products."""
        if self._right is None:
            gens = self.generators()
            self._right = [
                [self.index[self.mul_elem(a, self.elements[g])] for g in gens]
                for a in self.elements
            ]
        return self._right

    def left_cayley(self):
        if self._left is None:
            gens = self.generators()
            self._left = [
                [self.index[self.mul_elem(self.elements[g], a)] for g in gens]
                for a in self.elements
            ]
        return self._left

    # -- inventory ---------------------------------------------------------

    def word(self, i):
        """Witness word (tuple of generator positions) evaluating to element i."""
        out = []
        while i >= 0:
            parent, gi = self.links[i]
            out.append(gi)
            i = parent
        out.reverse()
        return tuple(out)

    def idempotent_ids(self):
        if self._idempotents is None:
            self._idempotents = [
                i for i in range(len(self.elements)) if self.product(i, i) == i
            ]
        return self._idempotents

    def identity_id(self):
        n = len(self.elements)
        for e in self.idempotent_ids():
            if all(self.product(e, x) == x == self.product(x, e) for x in range(n)):
                return e
        return None

    def zero_id(self):
        n = len(self.elements)
        for e in self.idempotent_ids():
            if all(self.product(e, x) == e == self.product(x, e) for x in range(n)):
                return e
        return None

    def subset_closed(self, ids):
        ids = set(ids)
        return all(self.product(i, j) in ids for i in ids for j in ids)

    def green(self):
        if self._green is None:
            self._green = green_relations(self)
        return self._green


def generate_semigroup(gens, cap=DEFAULT_CAP, mul=None):
    """Multiplicative closure of the generators with witness words."""
    return FinSemigroup.generate(gens, cap=cap, mul=mul)


# -- Green's relations -----------------------------------------------------


@dataclass
class GreenData:
    r_class_of: list
    l_class_of: list
    j_class_of: list
    h_class_of: list
    r_classes: list
    l_classes: list
    j_classes: list
    h_classes: list
    j_regular: list
    j_subgroup_order: list
    j_strictly_below: list  # j index -> set of j indices strictly below


def _tarjan_scc(n, adj):
    """Iterative Tarjan; returns (component_of, components in reverse topological order)."""
    comp = [-1] * n
    low = [0] * n
    num = [-1] * n
    stack_s = []
    on_stack = [False] * n
    comps = []
    counter = 0
    for root in range(n):
        if num[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                num[v] = low[v] = counter
                counter += 1
                stack_s.append(v)
                on_stack[v] = True
            recurse = False
            edges = adj[v]
            while pi < len(edges):
                w = edges[pi]
                pi += 1
                if num[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    recurse = True
                    break
                elif on_stack[w]:
                    if num[w] < low[v]:
                        low[v] = num[w]
            if recurse:
                continue
            if low[v] == num[v]:
                c = []
                while True:
                    w = stack_s.pop()
                    on_stack[w] = False
                    comp[w] = len(comps)
                    c.append(w)
                    if w == v:
                        break
                comps.append(c)
            work.pop()
            if work:
                u, _ = work[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp, comps


def green_relations(s):
    """R/L/J/H class partitions via Cayley-graph reachability on s^1."""
    n = len(s.elements)
    if n == 0:
        raise ValueError("empty semigroup")
    right = s.right_cayley()
    left = s.left_cayley()
    r_comp, r_classes = _tarjan_scc(n, right)
    l_comp, l_classes = _tarjan_scc(n, left)
    both = [right[i] + left[i] for i in range(n)]
    j_comp, j_classes = _tarjan_scc(n, both)

    h_key = {}
    h_class_of = [0] * n
    h_classes = []
    for i in range(n):
        k = (r_comp[i], l_comp[i])
        if k not in h_key:
            h_key[k] = len(h_classes)
            h_classes.append([])
        h_class_of[i] = h_key[k]
        h_classes[h_key[k]].append(i)

    idem = set(s.idempotent_ids())
    j_regular = []
    j_subgroup = []
    for c in j_classes:
        es = [i for i in c if i in idem]
        j_regular.append(bool(es))
        j_subgroup.append(len(h_classes[h_class_of[es[0]]]) if es else None)

    # strict reachability between J-classes (condensation closure)
    nj = len(j_classes)
    succ = [set() for _ in range(nj)]
    for i in range(n):
        for t in both[i]:
            if j_comp[t] != j_comp[i]:
                succ[j_comp[i]].add(j_comp[t])
    below = [None] * nj
    # j_classes from Tarjan are in reverse topological order: successors first
    for c in range(nj):
        acc = set()
        for d in succ[c]:
            acc.add(d)
            acc |= below[d]
        below[c] = acc

    return GreenData(
        r_class_of=r_comp,
        l_class_of=l_comp,
        j_class_of=j_comp,
        h_class_of=h_class_of,
        r_classes=r_classes,
        l_classes=l_classes,
        j_classes=j_classes,
        h_classes=h_classes,
        j_regular=j_regular,
        j_subgroup_order=j_subgroup,
        j_strictly_below=below,
    )


# -- aperiodicity and the idempotent-generated subsemigroup ----------------


def aperiodicity_witness(s, ids=None):
    """First element lying in a nontrivial cycle of the power sequence, or None."""
    if ids is None:
        ids = range(len(s.elements))
    else:
        ids = sorted(set(ids))
        if not s.subset_closed(ids):
            raise NotClosed("subset is not closed under multiplication")
    for x in ids:
        seen = {x: 0}
        y, k = x, 0
        while True:
            y = s.product(y, x)
            k += 1
            if y in seen:
                if k - seen[y] > 1:
                    return y
                break
            seen[y] = k
    return None


def is_aperiodic(s, ids=None):
    """True iff every element satisfies e^n = e^(n+1) for some n."""
    return aperiodicity_witness(s, ids) is None


def ig_subsemigroup(s):
    """Subsemigroup generated by the idempotents, witnesses over idempotents."""
    es = s.idempotent_ids()
    if not es:
        raise ValueError("no idempotents")
    gens = [s.elements[i] for i in es]
    if s._mul is None and s.group is not None:
        return FinSemigroup.generate(gens)
    return FinSemigroup.generate(gens, mul=s._mul)
