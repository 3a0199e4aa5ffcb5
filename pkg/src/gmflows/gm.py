"""Group-mapping systems: validation, Rees coordinates, RLM, covers.

A GM system is handed to us as the faithful action (G x B, S): generators
are row-monomial B x B matrices over G.  Validation locates the unique
0-minimal regular ideal, identifies its distinguished R-class with G x B,
extracts the Rees structure matrix and builds the RLM image by erasing
weights.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .groups import GroupTable
from .rees import ReesMatrixSemigroup, ZERO
from .rowmono import RowMonomialMatrix
from .semigroups import FinSemigroup, generate_semigroup


class NotGM(ValueError):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class NotInverse(ValueError):
    pass


@dataclass
class GMSystem:
    """A validated GM transformation semigroup (G x B, S)."""

    group: GroupTable
    b_size: int
    semigroup: FinSemigroup
    ideal: ReesMatrixSemigroup
    ideal_ids: list  # nonzero ideal element ids, canonical order
    zero_id: object  # element id or None (zero conceptually adjoined)
    rees_of_id: dict  # nonzero ideal id -> (a, g, b)
    id_of_rees: dict
    rlm: FinSemigroup
    rlm_map: list  # element id -> rlm element id
    certificates: dict = field(default_factory=dict)

    @property
    def n_points(self):
        return self.group.order * self.b_size

    def point(self, g, b):
        return g * self.b_size + b

    def point_pair(self, p):
        return divmod(p, self.b_size)

    def act_point(self, elem_id, p):
        """Image point of p under element elem_id, or -1."""
        m = self.semigroup.elements[elem_id]
        g, b = divmod(p, self.b_size)
        out = m.act(g, b)
        if out is None:
            return -1
        return out[0] * self.b_size + out[1]

    def matrix(self, elem_id):
        return self.semigroup.elements[elem_id]

    def letter_names(self):
        return self.certificates.get("letter_names")


def _ideal_j_class(s, green):
    """(j_index, zero_id) of the unique 0-minimal J-class; NotGM otherwise."""
    zero_id = s.zero_id()
    nj = len(green.j_classes)
    if zero_id is not None:
        zj = green.j_class_of[zero_id]
        minimal = [
            c for c in range(nj) if c != zj and green.j_strictly_below[c] == {zj}
        ]
    else:
        minimal = [c for c in range(nj) if not green.j_strictly_below[c]]
    if len(minimal) != 1:
        raise NotGM("no unique 0-minimal ideal (found %d minimal J-classes)" % len(minimal))
    return minimal[0], zero_id


def gm_from_generators(group, b_size, gens, cap=None, letter_names=None):
    """Validate (G x B, S) generated by row-monomial matrices as a GM system."""
    if group.is_trivial:
        raise NotGM("the group of the 0-minimal ideal is trivial")
    for m in gens:
        if m.group != group or m.dim != b_size:
            raise NotGM("generators must act on G x B for the given group and B")
    kwargs = {} if cap is None else {"cap": cap}
    s = generate_semigroup(gens, **kwargs)
    return _classify(group, b_size, s, letter_names)


def _classify(group, b_size, s, letter_names=None):
    green = s.green()
    jc, zero_id = _ideal_j_class(s, green)
    if not green.j_regular[jc]:
        raise NotGM("0-minimal ideal is not regular")
    ideal_ids = sorted(green.j_classes[jc])

    cols_seen = set()
    for i in ideal_ids:
        m = s.elements[i]
        rng = m.range_set()
        if len(rng) != 1:
            raise NotGM("ideal elements must act by column-constant matrices")
        cols_seen |= rng
    if cols_seen != set(range(b_size)):
        raise NotGM("ideal columns do not cover B")

    idem_in_j = [i for i in ideal_ids if s.product(i, i) == i]
    e = min(idem_in_j)
    b0 = next(iter(s.elements[e].range_set()))

    # distinguished R-class of e must biject with G x B via the b0-row
    r0 = [i for i in ideal_ids if green.r_class_of[i] == green.r_class_of[e]]
    seen_pairs = {}
    for i in r0:
        ent = s.elements[i].entry(b0)
        if ent is None:
            raise NotGM("distinguished R-class does not match G x B (undefined b0-row)")
        col, w = ent
        if (w, col) in seen_pairs:
            raise NotGM("distinguished R-class does not match G x B (collision)")
        seen_pairs[(w, col)] = i
    if len(seen_pairs) != group.order * b_size:
        raise NotGM(
            "distinguished R-class has %d elements, expected |G x B| = %d"
            % (len(seen_pairs), group.order * b_size)
        )

    # left Schuetzenberger representation on L(e) must be faithful
    l0 = [i for i in ideal_ids if green.l_class_of[i] == green.l_class_of[e]]
    l0_set = set(l0)
    sigs = {}
    for x in range(len(s.elements)):
        v = tuple(
            (p if (p := s.product(x, l)) in l0_set else -1) for l in l0
        )
        if v in sigs:
            raise NotGM("left Schuetzenberger representation is not faithful")
        sigs[v] = x

    # Rees coordinates: R-classes -> A (by minimal id), columns -> B
    r_reps = {}
    for i in ideal_ids:
        rc = green.r_class_of[i]
        r_reps.setdefault(rc, []).append(i)
    r_order = sorted(r_reps, key=lambda rc: min(r_reps[rc]))
    a_of_rclass = {rc: a for a, rc in enumerate(r_order)}
    u = []  # per A-index: the minimal idempotent of that R-class
    for rc in r_order:
        es = [i for i in r_reps[rc] if s.product(i, i) == i]
        if not es:
            raise NotGM("regular ideal has an R-class without idempotent")
        u.append(min(es))
    c_mat = []
    for b in range(b_size):
        row = []
        for a in range(len(u)):
            ent = s.elements[u[a]].entry(b)
            row.append(None if ent is None else ent[1])
        c_mat.append(row)
    ideal = ReesMatrixSemigroup(group, c_mat, has_zero=zero_id is not None)

    rees_of_id, id_of_rees = {}, {}
    for i in ideal_ids:
        m = s.elements[i]
        a = a_of_rclass[green.r_class_of[i]]
        c_a = next(iter(s.elements[u[a]].range_set()))
        ent = m.entry(c_a)
        if ent is None:
            raise NotGM("ideal element undefined on its R-class row")
        b, g = ent
        rees_of_id[i] = (a, g, b)
        id_of_rees[(a, g, b)] = i
    if len(id_of_rees) != len(ideal_ids):
        raise NotGM("Rees coordinates are not injective")

    # RLM image: erase weights (a homomorphism since supports compose)
    gens_idx = s.generators()
    erased = [s.elements[g].erase_weights() for g in gens_idx]
    rlm = generate_semigroup(erased)
    rlm_map = [rlm.index[el.erase_weights()] for el in s.elements]
    if len(rlm.elements) >= len(s.elements):
        raise NotGM("RLM image does not shrink the semigroup")

    certs = {
        "faithful_right": "elements are their own action matrices",
        "faithful_left_class_size": len(l0),
        "distinguished_idempotent": e,
        "b0": b0,
        "ideal_j_regular": True,
    }
    if letter_names:
        certs["letter_names"] = dict(letter_names)
    return GMSystem(
        group=group,
        b_size=b_size,
        semigroup=s,
        ideal=ideal,
        ideal_ids=ideal_ids,
        zero_id=zero_id,
        rees_of_id=rees_of_id,
        id_of_rees=id_of_rees,
        rlm=rlm,
        rlm_map=rlm_map,
        certificates=certs,
    )


def rlm_image(gm):
    """The RLM quotient and the element-id map onto it."""
    return gm.rlm, list(gm.rlm_map)


# -- G wr SIM(B) ------------------------------------------------------------


def gwr_sim_generators(group, b_size):
    """Generators for all row-and-column monomial matrices over G on B."""
    gens = []
    n = b_size
    if n >= 2:
        cycle = list(range(1, n)) + [0]
        gens.append(RowMonomialMatrix.from_permutation(group, cycle))
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        gens.append(RowMonomialMatrix.from_permutation(group, swap))
    for g in range(group.order):
        if g != group.id:
            weights = [group.id] * n
            weights[0] = g
            gens.append(RowMonomialMatrix.from_permutation(group, list(range(n)), weights))
    # rank n-1 partial identity; its conjugates step the rank down to zero
    pairs = {r: (r, group.id) for r in range(n - 1)}
    gens.append(RowMonomialMatrix.from_pairs(group, n, pairs))
    gens.append(RowMonomialMatrix.identity(group, n))
    return gens


def gwr_sim(group, b_size, cap=None):
    """The GM system of G wr SIM(B) acting on G x B."""
    if group.is_trivial:
        raise NotGM("the group of the 0-minimal ideal is trivial")
    return gm_from_generators(group, b_size, gwr_sim_generators(group, b_size), cap=cap)


def count_gwr_sim(group_order, b_size):
    """Independent count of weighted partial injections on B."""
    import math

    total = 0
    for k in range(b_size + 1):
        total += math.comb(b_size, k) ** 2 * math.factorial(k) * group_order**k
    return total


# -- E-unitary covers --------------------------------------------------------


def is_inverse(s):
    """Regular with commuting idempotents."""
    green = s.green()
    if not all(green.j_regular):
        return False
    es = s.idempotent_ids()
    return all(s.product(e, f) == s.product(f, e) for e in es for f in es)


@dataclass
class EUnitaryCover:
    gm: GMSystem
    pairs: list  # (m_id, completion RowMonomialMatrix)
    semigroup: FinSemigroup  # on pair elements (M, N)
    projection_1: dict  # pair -> m_id
    group_image: FinSemigroup  # pi_2 image, a subgroup of G wr Sym(B)
    certificates: dict


def _completions(m):
    """All total monomial matrices agreeing with m on its domain."""
    group = m.group
    n = m.dim
    dom = sorted(m.domain())
    used = m.range_set()
    free_rows = [r for r in range(n) if r not in set(dom)]
    free_cols = [c for c in range(n) if c not in used]
    base = {r: m.entry(r) for r in dom}
    out = []
    for perm in itertools.permutations(free_cols):
        for ws in itertools.product(range(group.order), repeat=len(free_rows)):
            pairs = dict(base)
            for r, c, w in zip(free_rows, perm, ws):
                pairs[r] = (c, w)
            out.append(RowMonomialMatrix.from_pairs(group, n, pairs))
    return out


def e_unitary_cover(gm, cap=200_000):
    """The cover {(M, N): N in G wr Sym(B), N agrees with M on Dom(M)}."""
    s = gm.semigroup
    if not is_inverse(s):
        raise NotInverse("semigroup is not inverse")
    for m in s.elements:
        if not m.is_column_monomial():
            raise NotInverse("inverse GM system must act by partial injections")
    pairs = []
    for i, m in enumerate(s.elements):
        for nmat in _completions(m):
            pairs.append((m, nmat))
            if len(pairs) > cap:
                raise CapError("cover enumeration exceeds cap")

    def mul(p, q):
        return (p[0].compose(q[0]), p[1].compose(q[1]))

    cover = FinSemigroup.generate(pairs, mul=mul)
    if len(cover.elements) != len(pairs):
        raise AssertionError("cover pair set is not closed")

    proj1 = {p: s.index[p[0]] for p in cover.elements}
    images = sorted({p[1] for p in cover.elements}, key=lambda m: m.rows)
    himage = FinSemigroup.generate(images, mul=lambda a, b: a.compose(b))
    if len(himage.elements) != len(images):
        raise AssertionError("second projection image is not closed")

    # idempotent separation: idempotent pairs are (E, identity)
    cover_idems = [cover.elements[i] for i in cover.idempotent_ids()]
    s_idems = {s.elements[i] for i in s.idempotent_ids()}
    ident = RowMonomialMatrix.identity(gm.group, gm.b_size)
    sep_ok = {p[0] for p in cover_idems} == s_idems and all(
        p[1] == ident for p in cover_idems
    ) and len(cover_idems) == len(s_idems)

    certs = {
        "idempotent_separating": sep_ok,
        "projection_surjective": {p[0] for p in cover.elements} == set(s.elements),
        "group_image_order": len(himage.elements),
    }
    if not sep_ok or not certs["projection_surjective"]:
        raise AssertionError("cover certificates failed")
    return EUnitaryCover(
        gm=gm,
        pairs=cover.elements,
        semigroup=cover,
        projection_1=proj1,
        group_image=himage,
        certificates=certs,
    )


class CapError(RuntimeError):
    pass
