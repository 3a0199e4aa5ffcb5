"""Rees matrix semigroups M^0(G, A, B, C) and 0-1 normalizability.

The structure matrix C is B x A over G union {0}; elements are triples
(a, g, b) multiplying by (a,g,b)(a',g',b') = (a, g*C(b,a')*g', b'), zero when
C(b,a') = 0.  ZERO is the adjoined zero for M^0; plain M (no zero) is used
for completely simple semigroups such as S(H,k).
"""

from __future__ import annotations

import itertools

from .rowmono import RowMonomialMatrix
from .semigroups import FinSemigroup, ig_subsemigroup, aperiodicity_witness

ZERO = "0"


class ReesMatrixSemigroup:
    """M^0(G,A,B,C) (or M(G,A,B,C) without zero when C has no zero entry)."""

    def __init__(self, group, c, has_zero=None):
        self.group = group
        self.c = tuple(tuple(row) for row in c)  # c[b][a] is a gid or None
        self.n_b = len(self.c)
        self.n_a = len(self.c[0]) if self.c else 0
        if any(len(row) != self.n_a for row in self.c):
            raise ValueError("structure matrix must be rectangular")
        any_zero = any(e is None for row in self.c for e in row)
        self.has_zero = any_zero if has_zero is None else has_zero
        if any_zero and not self.has_zero:
            raise ValueError("a structure matrix with zero entries needs the zero element")

    def is_regular(self):
        rows_ok = all(any(e is not None for e in row) for row in self.c)
        cols_ok = all(any(self.c[b][a] is not None for b in range(self.n_b)) for a in range(self.n_a))
        return rows_ok and cols_ok

    def elements(self):
        out = [
            (a, g, b)
            for a in range(self.n_a)
            for g in range(self.group.order)
            for b in range(self.n_b)
        ]
        if self.has_zero:
            out.append(ZERO)
        return out

    @property
    def order(self):
        return self.n_a * self.group.order * self.n_b + (1 if self.has_zero else 0)

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        a, g, b = x
        a2, g2, b2 = y
        w = self.c[b][a2]
        if w is None:
            return ZERO
        m = self.group.mul
        return (a, m[m[g][w]][g2], b2)

    def idempotents(self):
        """Triples (a, C(b,a)^-1, b) over the nonzero entries of C."""
        out = []
        for b in range((self.n_b)):
            for a in range(self.n_a):
                w = self.c[b][a]
                if w is not None:
                    out.append((a, self.group.inv[w], b))
        if self.has_zero:
            out.append(ZERO)
        return out

    def fin_semigroup(self):
        """The full element list as a FinSemigroup (triple representation)."""
        return FinSemigroup.generate(self.elements(), mul=self.mul)

    # -- the action on G x B ----------------------------------------------

    def element_matrix(self, a, g, b):
        """Row-monomial action of (a,g,b) on G x B: row b' -> (b, C(b',a)*g)."""
        pairs = {}
        for b2 in range(self.n_b):
            w = self.c[b2][a]
            if w is not None:
                pairs[b2] = (b, self.group.mul[w][g])
        return RowMonomialMatrix.from_pairs(self.group, self.n_b, pairs)

    def all_matrices(self):
        out = [
            self.element_matrix(a, g, b)
            for a in range(self.n_a)
            for g in range(self.group.order)
            for b in range(self.n_b)
        ]
        if self.has_zero:
            out.append(RowMonomialMatrix.zero(self.group, self.n_b))
        return out

    @classmethod
    def from_words(cls, group, rows, word_parser):
        """Rows of group words / '0', e.g. ["1 1 0", "0 x 1"]."""
        c = []
        for row in rows:
            entries = []
            for tok in row.split():
                entries.append(None if tok == "0" else word_parser(group, tok))
            c.append(entries)
        return cls(group, c)


def normalizable_01(rees):
    """Whether C is normalizable to {0,1}, decided via IG aperiodicity.

    Returns (True, None) or (False, witness) with witness a nontrivial group
    element of the idempotent-generated subsemigroup: the first non-identity
    member of the first idempotent's IG maximal subgroup, in canonical order.
    """
    if not rees.is_regular():
        raise ValueError("normalizability is defined for regular Rees matrices")
    s = rees.fin_semigroup()
    ig = ig_subsemigroup(s)
    if aperiodicity_witness(ig) is None:
        return True, None
    for e in ig.elements:
        if e == ZERO or ig.mul_elem(e, e) != e:
            continue
        a, _, b = e
        block = [
            x
            for x in ig.elements
            if x != ZERO and x[0] == a and x[2] == b and x != e
        ]
        if block:
            block.sort(key=lambda t: t[1])
            return False, block[0]
    raise AssertionError("non-aperiodic IG must have a nontrivial subgroup element")


def all_ones_matrix(group, n_b, n_a):
    ident = group.id
    return ReesMatrixSemigroup(group, [[ident] * n_a for _ in range(n_b)])


def cyclic_01_example(group, values):
    """Build M^0 from rows of 0/1/gid entries (test helper)."""
    return ReesMatrixSemigroup(group, values)


def iter_triples(rees):
    return itertools.product(
        range(rees.n_a), range(rees.group.order), range(rees.n_b)
    )
