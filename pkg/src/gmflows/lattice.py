"""The set-partition lattice SP(G x B) and the Rhodes lattice Rh_B(G).

SP elements are partitions of a subset of G x B; points are encoded as
g * b_size + b.  Rhodes-lattice elements are SPCs: a subset of B, a
partition of it, and one cross-section to G per block taken modulo global
left multiplication; the top is the distinguished Contradiction value.
"""

from __future__ import annotations

from dataclasses import dataclass


class UniverseMismatch(ValueError):
    pass


class NotInvariant(ValueError):
    pass


class _Contradiction:
    """Unique top of Rh_B(G); the join of incompatible cross-sections."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "=><="


CONTRADICTION = _Contradiction()


def is_contradiction(x):
    return x is CONTRADICTION


# -- SP(G x B) ----------------------------------------------------------------


@dataclass(frozen=True)
class SPElement:
    """(Y, Pi): blocks are frozensets of points g*b_size+b, pairwise disjoint."""

    group: object
    b_size: int
    blocks: frozenset

    def __post_init__(self):
        pts = [p for blk in self.blocks for p in blk]
        if len(pts) != len(set(pts)) or any(not blk for blk in self.blocks):
            raise ValueError("blocks must be disjoint and nonempty")

    @property
    def points(self):
        return frozenset(p for blk in self.blocks for p in blk)

    def same_universe(self, other):
        return self.group == other.group and self.b_size == other.b_size

    def block_of(self):
        """point -> block (dict view for repeated lookups)."""
        out = {}
        for blk in self.blocks:
            for p in blk:
                out[p] = blk
        return out

    def __repr__(self):
        return "SP(%s)" % format_sp(self)


def sp_bottom(group, b_size):
    return SPElement(group, b_size, frozenset())


def sp_element(group, b_size, blocks):
    return SPElement(group, b_size, frozenset(frozenset(b) for b in blocks))


def sp_leq(a, b):
    if not a.same_universe(b):
        raise UniverseMismatch("elements live in different lattices")
    bo = b.block_of()
    for blk in a.blocks:
        it = iter(blk)
        first = next(it)
        target = bo.get(first)
        if target is None:
            return False
        if any(p not in target for p in it):
            return False
    return True


def sp_meet(a, b):
    if not a.same_universe(b):
        raise UniverseMismatch("elements live in different lattices")
    blocks = []
    for x in a.blocks:
        for y in b.blocks:
            z = x & y
            if z:
                blocks.append(z)
    return SPElement(a.group, a.b_size, frozenset(blocks))


def sp_join(a, b):
    if not a.same_universe(b):
        raise UniverseMismatch("elements live in different lattices")
    parent = {}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[rp] = rq

    for blk in list(a.blocks) + list(b.blocks):
        it = iter(blk)
        first = next(it)
        parent.setdefault(first, first)
        for p in it:
            parent.setdefault(p, p)
            union(first, p)
    groups = {}
    for p in parent:
        groups.setdefault(find(p), set()).add(p)
    return SPElement(a.group, a.b_size, frozenset(frozenset(v) for v in groups.values()))


def is_cross_section_sp(e):
    """Every block holds at most one point per b-coordinate."""
    for blk in e.blocks:
        bs = [p % e.b_size for p in blk]
        if len(bs) != len(set(bs)):
            return False
    return True


def g_action(g, e):
    """Left translation by g; an order automorphism of SP."""
    mul = e.group.mul
    nb = e.b_size
    blocks = frozenset(
        frozenset(mul[g][p // nb] * nb + p % nb for p in blk) for blk in e.blocks
    )
    return SPElement(e.group, nb, blocks)


def is_invariant(e):
    return all(g_action(g, e) == e for g in range(e.group.order))


# -- SPCs and Rh_B(G) ---------------------------------------------------------


@dataclass(frozen=True)
class SPCElement:
    """(I, Theta, [f]): blocks are tuples of (b, gid) sorted by b, with the
    least b of each block normalized to the identity weight."""

    group: object
    b_size: int
    blocks: frozenset  # frozenset of tuples ((b1,g1), (b2,g2), ...)

    @property
    def subset(self):
        return frozenset(b for blk in self.blocks for b, _ in blk)

    @property
    def partition(self):
        return frozenset(frozenset(b for b, _ in blk) for blk in self.blocks)

    @property
    def is_bottom(self):
        return not self.blocks

    def __repr__(self):
        return "SPC(%s)" % format_spc(self)


def spc_element(group, b_size, blocks):
    """Normalize raw blocks given as {b: gid} mappings (or pair iterables)."""
    normed = []
    for blk in blocks:
        items = sorted(dict(blk).items())
        if not items:
            continue
        if any(not (0 <= b < b_size) for b, _ in items):
            raise ValueError("b index out of range")
        base = group.inv[items[0][1]]
        normed.append(tuple((b, group.mul[base][g]) for b, g in items))
    out = frozenset(normed)
    total = sum(len(blk) for blk in out)
    if total != len({b for blk in out for b, _ in blk}):
        raise ValueError("blocks must be disjoint")
    return SPCElement(group, b_size, out)


def spc_bottom(group, b_size):
    return SPCElement(group, b_size, frozenset())


def spc_point(group, b_size, b):
    """The Rhodes-lattice point b/<1>."""
    return spc_element(group, b_size, [{b: group.id}])


def cs_embedding(a):
    """The invariant cross-section of SP(G x B) carrying the SPC a."""
    nb = a.b_size
    mul = a.group.mul
    blocks = []
    for blk in a.blocks:
        for g in range(a.group.order):
            blocks.append(frozenset(mul[g][w] * nb + b for b, w in blk))
    return SPElement(a.group, nb, frozenset(blocks))


def cs_extract(e):
    """Back from an invariant cross-section; CONTRADICTION when some block
    fails the cross-section condition.  Raises NotInvariant otherwise."""
    if not is_invariant(e):
        raise NotInvariant("element is not G-invariant")
    if not is_cross_section_sp(e):
        return CONTRADICTION
    nb = e.b_size
    seen = set()
    raw = []
    for blk in e.blocks:
        if blk in seen:
            continue
        for g in range(e.group.order):
            seen.add(frozenset(e.group.mul[g][p // nb] * nb + p % nb for p in blk))
        raw.append({p % nb: p // nb for p in blk})
    return spc_element(e.group, nb, raw)


def rh_leq(a, b):
    if is_contradiction(b):
        return True
    if is_contradiction(a):
        return False
    return sp_leq(cs_embedding(a), cs_embedding(b))


def rh_meet(a, b):
    if is_contradiction(a):
        return b
    if is_contradiction(b):
        return a
    met = sp_meet(cs_embedding(a), cs_embedding(b))
    out = cs_extract(met)
    assert not is_contradiction(out)
    return out


def rh_join(a, b):
    if is_contradiction(a) or is_contradiction(b):
        return CONTRADICTION
    return cs_extract(sp_join(cs_embedding(a), cs_embedding(b)))


# -- text literals ------------------------------------------------------------
#
# Grammar: "{2,4|6,8}/<1 x | 1 x^2>" -- blocks split by "|" in both halves,
# b-indices 1-based ascending within a block.  When the set part has no "|",
# the weight blocks split the ascending set into runs (this covers the
# paper-style contiguous literals like "{2,4,6,8}/<1 x x^2 x^3>").


def format_spc(a, one_based=True):
    if is_contradiction(a):
        return "=><="
    off = 1 if one_based else 0
    blocks = sorted(a.blocks, key=lambda blk: blk[0][0])
    left = "|".join(",".join(str(b + off) for b, _ in blk) for blk in blocks)
    right = " | ".join(" ".join(a.group.label(g) for _, g in blk) for blk in blocks)
    return "{%s}/<%s>" % (left, right)


def parse_spc(text, group, b_size, word_parser=None, one_based=True):
    text = text.strip()
    if text in ("=><=", "contradiction"):
        return CONTRADICTION
    if "/" not in text:
        raise ValueError("SPC literal needs set/<weights>: %r" % text)
    left, right = text.split("/", 1)
    left = left.strip()
    right = right.strip()
    if left.startswith("{") and left.endswith("}"):
        left = left[1:-1]
    if not (right.startswith("<") and right.endswith(">")):
        raise ValueError("weights must be wrapped in <...>: %r" % text)
    right = right[1:-1]
    off = 1 if one_based else 0
    if word_parser is None:
        word_parser = _default_word_parser
    weight_blocks = [w.split() for w in right.split("|")]
    if "|" in left:
        b_blocks = [
            [int(tok) - off for tok in part.split(",") if tok.strip()]
            for part in left.split("|")
        ]
    else:
        bs = [int(tok) - off for tok in left.split(",") if tok.strip()]
        b_blocks = []
        pos = 0
        for wb in weight_blocks:
            b_blocks.append(bs[pos : pos + len(wb)])
            pos += len(wb)
        if pos != len(bs):
            raise ValueError("weights do not cover the set: %r" % text)
    if len(b_blocks) != len(weight_blocks):
        raise ValueError("set blocks and weight blocks differ: %r" % text)
    raw = []
    for bs_, ws in zip(b_blocks, weight_blocks):
        if len(bs_) != len(ws):
            raise ValueError("block size mismatch in %r" % text)
        raw.append({b: word_parser(group, w) for b, w in zip(bs_, ws)})
    return spc_element(group, b_size, raw)


def _default_word_parser(group, token):
    for g in range(group.order):
        if group.label(g) == token:
            return g
    raise ValueError("unknown group label %r" % token)


def format_sp(e, one_based=True):
    off = 1 if one_based else 0
    nb = e.b_size
    parts = []
    for blk in sorted(e.blocks, key=lambda blk: sorted(blk)):
        parts.append(
            "{"
            + ",".join(
                "(%s,%d)" % (e.group.label(p // nb), p % nb + off) for p in sorted(blk)
            )
            + "}"
        )
    return " ".join(parts) if parts else "{}"
