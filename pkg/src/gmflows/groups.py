"""Finite groups given by explicit Cayley tables on ids 0..order-1."""

from __future__ import annotations

import itertools


class GroupError(ValueError):
    pass


class GroupTable:
    """A finite group: total multiplication table, identity, inverses.

    Element ids are 0..order-1.  Equality and hashing are by table value so
    that two independently built copies of the same group interoperate.
    """

    __slots__ = ("order", "mul", "id", "inv", "labels", "mulflat", "_hash")

    def __init__(self, mul, labels=None, validate=True):
        mul = tuple(tuple(row) for row in mul)
        n = len(mul)
        if n == 0 or any(len(row) != n for row in mul):
            raise GroupError("multiplication table must be square and nonempty")
        ident = None
        for e in range(n):
            if all(mul[e][x] == x == mul[x][e] for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupError("no two-sided identity")
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if mul[x][y] == ident == mul[y][x]:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise GroupError("element %d has no two-sided inverse" % x)
        if validate:
            for a in range(n):
                for b in range(n):
                    mab = mul[a][b]
                    for c in range(n):
                        if mul[mab][c] != mul[a][mul[b][c]]:
                            raise GroupError("table is not associative")
        self.order = n
        self.mul = mul
        self.id = ident
        self.inv = tuple(inv)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        self.labels = tuple(labels)
        self.mulflat = tuple(x for row in mul for x in row)
        self._hash = hash(self.mul)

    def op(self, a, b):
        return self.mul[a][b]

    def inverse(self, a):
        return self.inv[a]

    def power(self, a, k):
        k %= self.element_order(a)
        r = self.id
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def element_order(self, a):
        r, n = a, 1
        while r != self.id:
            r = self.mul[r][a]
            n += 1
        return n

    def label(self, a):
        return self.labels[a]

    @property
    def is_trivial(self):
        return self.order == 1

    def elements(self):
        return range(self.order)

    def __eq__(self, other):
        return isinstance(other, GroupTable) and self.mul == other.mul

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "GroupTable(order=%d)" % self.order

    @classmethod
    def trivial(cls):
        return cls(((0,),), labels=("1",), validate=False)

    @classmethod
    def cyclic(cls, n, symbol="x"):
        """Z_n written multiplicatively with generator `symbol`."""
        if n < 1:
            raise GroupError("order must be positive")
        mul = [[(i + j) % n for j in range(n)] for i in range(n)]
        labels = ["1"]
        for k in range(1, n):
            labels.append(symbol if k == 1 else "%s^%d" % (symbol, k))
        return cls(mul, labels=labels, validate=False)

    @classmethod
    def direct_product(cls, *factors):
        """Direct product; ids enumerate factor tuples in row-major order."""
        if not factors:
            return cls.trivial()
        orders = [g.order for g in factors]
        tuples = list(itertools.product(*[range(o) for o in orders]))
        index = {t: i for i, t in enumerate(tuples)}
        mul = [
            [index[tuple(g.mul[a[k]][b[k]] for k, g in enumerate(factors))] for b in tuples]
            for a in tuples
        ]
        labels = [
            "(" + ",".join(g.label(t[k]) for k, g in enumerate(factors)) + ")" for t in tuples
        ]
        prod = cls(mul, labels=labels, validate=False)
        return prod


TRIVIAL = GroupTable.trivial()
