"""Row-monomial matrices over a group: at most one weighted entry per row.

These act on the right of pairs (g, b): (g, b) * m = (g*w, b') when row b of
m holds the entry (b', w), undefined otherwise.  The zero of a GM action is
the matrix with every row undefined.
"""

from __future__ import annotations

from . import kernel
from .groups import TRIVIAL, GroupTable


class DimMismatch(ValueError):
    pass


class RowMonomialMatrix:
    """Immutable row-monomial matrix; `rows[r]` is -1 or col*|G| + g."""

    __slots__ = ("group", "rows", "_hash")

    def __init__(self, group, rows):
        self.group = group
        self.rows = tuple(rows)
        self._hash = hash((group, self.rows))

    @classmethod
    def from_pairs(cls, group, dim, pairs):
        """Build from {row: (col, gid)} with 0-based indices."""
        ng = group.order
        rows = [-1] * dim
        for r, (c, g) in pairs.items():
            if not (0 <= r < dim and 0 <= c < dim and 0 <= g < ng):
                raise ValueError("entry out of range: %r -> (%r, %r)" % (r, c, g))
            rows[r] = c * ng + g
        return cls(group, rows)

    @classmethod
    def identity(cls, group, dim):
        ng = group.order
        return cls(group, [c * ng + group.id for c in range(dim)])

    @classmethod
    def zero(cls, group, dim):
        return cls(group, [-1] * dim)

    @classmethod
    def from_permutation(cls, group, perm, weights=None):
        """Total matrix from a permutation list, optionally weighted."""
        ng = group.order
        if weights is None:
            weights = [group.id] * len(perm)
        return cls(group, [perm[r] * ng + weights[r] for r in range(len(perm))])

    @property
    def dim(self):
        return len(self.rows)

    def entry(self, r):
        """(col, gid) for row r, or None."""
        e = self.rows[r]
        if e < 0:
            return None
        ng = self.group.order
        return (e // ng, e % ng)

    def act(self, g, b):
        """Image of the pair (g, b), or None."""
        e = self.rows[b]
        if e < 0:
            return None
        ng = self.group.order
        return (self.group.mul[g][e % ng], e // ng)

    def act_b(self, b):
        e = self.rows[b]
        return None if e < 0 else e // self.group.order

    def domain(self):
        return frozenset(r for r, e in enumerate(self.rows) if e >= 0)

    def range_set(self):
        ng = self.group.order
        return frozenset(e // ng for e in self.rows if e >= 0)

    def is_column_monomial(self):
        """At most one defined row per target column."""
        return len(self.range_set()) == sum(1 for e in self.rows if e >= 0)

    def is_column_constant(self):
        """All defined rows share one target column (ideal-element shape)."""
        return len(self.range_set()) <= 1

    def weights(self):
        ng = self.group.order
        return tuple(e % ng for e in self.rows if e >= 0)

    def is_zero_constant(self):
        """All nonzero weights equal (single group element per matrix)."""
        return len(set(self.weights())) <= 1

    @property
    def is_zero(self):
        return all(e < 0 for e in self.rows)

    def compose(self, other):
        """self then other, as right actions."""
        if other.dim != self.dim or other.group != self.group:
            raise DimMismatch("cannot compose %r with %r" % (self, other))
        return RowMonomialMatrix(
            self.group, kernel.compose(self.rows, other.rows, self.group.mulflat, self.group.order)
        )

    __mul__ = compose

    def is_idempotent(self):
        return self.compose(self) == self

    def erase_weights(self):
        """Image in the trivial-group action on B (the RLM direction)."""
        return RowMonomialMatrix(TRIVIAL, tuple(-1 if e < 0 else e // self.group.order for e in self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, RowMonomialMatrix)
            and self.rows == other.rows
            and self.group == other.group
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "<rowmono %s>" % (format_matrix(self),)


def format_matrix(m):
    """Paper-style transition list: "1 -> 3, 2 -> x*4" (1-based)."""
    parts = []
    for r in range(m.dim):
        e = m.entry(r)
        if e is None:
            continue
        c, g = e
        w = "" if g == m.group.id else m.group.label(g) + "*"
        parts.append("%d -> %s%d" % (r + 1, w, c + 1))
    return ", ".join(parts) if parts else "0"
