"""The group-completion 2-category TM and its matrix layer.

Objects of TM are pairs (plus, minus) of objects of a permutative groupoid
M.  A 1-morphism A -> B is a witness object X with isomorphisms
A+ + X -> B+ and A- + X -> B-; a 2-morphism is an isomorphism of witnesses
compatible with those.  Composition adds witnesses, so it is strictly
associative.  For a rig category R, tensoring on the left through the left
distributivity isomorphism makes TR an R-module.

``TLevelMor`` realizes the simplicial levels: a level-l morphism carries a
chain of witnesses X^l -> ... -> X^0 and one pair of structure maps on X^0.
``TMatObj``/``TMatMor`` assemble n x n matrices of such data into witness
matrices plus matrix-valued structure maps; this is the form in which the
contraction bookkeeping stays order-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .rig_core import Mor, RigError
from .matrix_cat import (
    MorMatrix, ObjMatrix, add_mor_matrix, add_obj_matrix, compose_mor_matrix,
    identity_mor_matrix, mat_left_dist, mat_mul, mat_mul_mor, zero_matrix,
)


@dataclass(frozen=True)
class TMObject:
    plus: object
    minus: object


@dataclass(frozen=True)
class TMMor:
    src: TMObject
    tgt: TMObject
    witness: object
    alpha_plus: Mor
    alpha_minus: Mor


@dataclass(frozen=True)
class TLevelMor:
    """Morphism of the level-l simplicial category: witnesses X^0..X^l,
    structure maps on X^0 and isomorphisms phi^k: X^k -> X^{k-1}."""
    src: TMObject
    tgt: TMObject
    witnesses: tuple
    alpha_plus: Mor
    alpha_minus: Mor
    phis: tuple  # phis[k]: witnesses[k+1] -> witnesses[k]


def tm_mor_valid(cat, f):
    ap, am = f.alpha_plus, f.alpha_minus
    return (ap.src == cat.add_obj(f.src.plus, f.witness)
            and ap.tgt == f.tgt.plus
            and am.src == cat.add_obj(f.src.minus, f.witness)
            and am.tgt == f.tgt.minus)


def tm_identity(cat, a):
    return TMMor(a, a, cat.zero,
                 cat.identity(a.plus), cat.identity(a.minus))


def compose_tm(cat, g, f):
    """Composite with witness X + Y and maps beta(alpha + id)."""
    if f.tgt != g.src:
        raise RigError("TM morphisms not composable")
    w = cat.add_obj(f.witness, g.witness)
    idw = cat.identity(g.witness)
    ap = cat.compose(g.alpha_plus, cat.add_mor(f.alpha_plus, idw))
    am = cat.compose(g.alpha_minus, cat.add_mor(f.alpha_minus, idw))
    return TMMor(f.src, g.tgt, w, ap, am)


def tm2_relates(cat, f, g, phi):
    """Does phi: X -> Y satisfy g(1 + phi) = f?"""
    if f.src != g.src or f.tgt != g.tgt:
        return False
    return (cat.compose(g.alpha_plus,
                        cat.add_mor(cat.identity(f.src.plus), phi)) == f.alpha_plus
            and cat.compose(g.alpha_minus,
                            cat.add_mor(cat.identity(f.src.minus), phi)) == f.alpha_minus)


def tm2_mors(cat, f, g):
    """All 2-morphisms f -> g; with faithful translation at most one."""
    return [phi for phi in cat.hom(f.witness, g.witness)
            if tm2_relates(cat, f, g, phi)]


def tm_monoidal_obj(a, b, cat):
    return TMObject(cat.add_obj(a.plus, b.plus), cat.add_obj(a.minus, b.minus))


def tm_monoidal_mor(cat, f, g):
    """f + g; the symmetry shuffles g's source past f's witness."""
    a, b = f.src, g.src
    w = cat.add_obj(f.witness, g.witness)
    src = tm_monoidal_obj(a, b, cat)
    tgt = tm_monoidal_obj(f.tgt, g.tgt, cat)

    def component(ap, bp, fa, ga):
        # a+ + b+ + X + Y  ->  a+ + X + b+ + Y  ->  ft+ + gt+
        shuffle = cat.sum_mor([
            cat.identity(ap), cat.sym_add(bp, f.witness),
            cat.identity(g.witness)])
        return cat.compose(cat.add_mor(fa, ga), shuffle)

    return TMMor(src, tgt, w,
                 component(a.plus, b.plus, f.alpha_plus, g.alpha_plus),
                 component(a.minus, b.minus, f.alpha_minus, g.alpha_minus))


def module_action_obj(cat, a, b):
    """a in R acting on b in TR: componentwise tensor."""
    return TMObject(cat.mul_obj(a, b.plus), cat.mul_obj(a, b.minus))


def module_action_mor(cat, phi, f):
    """phi: A -> B acting on f: C -> D, witness A*X, maps (phi*alpha) d_l."""
    A, B = phi.src, phi.tgt
    w = cat.mul_obj(A, f.witness)

    def component(cp, alpha):
        d = cat.left_dist(A, cp, f.witness)
        return cat.compose(cat.mul_mor(phi, alpha), d)

    return TMMor(module_action_obj(cat, A, f.src),
                 module_action_obj(cat, B, f.tgt), w,
                 component(f.src.plus, f.alpha_plus),
                 component(f.src.minus, f.alpha_minus))


# ---------------------------------------------------------------------------
# hom enumeration and pi0


def enumerate_tm_mors(cat, a, b, witness_bound):
    """All 1-morphisms a -> b with witness drawn from the bounded universe."""
    out = []
    for x in cat.objects():
        if isinstance(x, int) and x > witness_bound:
            continue
        try:
            homs_p = cat.hom(cat.add_obj(a.plus, x), b.plus)
            homs_m = cat.hom(cat.add_obj(a.minus, x), b.minus)
        except RigError:
            continue
        for ap, am in product(homs_p, homs_m):
            out.append(TMMor(a, b, x, ap, am))
    return out


def tm_pi0_mor(cat, f, witness_bound=None):
    """Canonical representative of the 2-isomorphism class of f.

    Two 1-morphisms are identified when a 2-morphism relates them (the
    relation is symmetric since witness isomorphisms invert).  The class
    representative is the minimum under a deterministic sort key.
    """
    if witness_bound is None:
        witness_bound = f.witness if isinstance(f.witness, int) else 6
    cls = [g for g in enumerate_tm_mors(cat, f.src, f.tgt, witness_bound)
           if tm2_mors(cat, f, g) or tm2_mors(cat, g, f)]
    if f not in cls:
        cls.append(f)
    return min(cls, key=lambda g: (repr(g.witness), repr(g.alpha_plus),
                                   repr(g.alpha_minus)))


def pi0_of_TM(cat, obj_bound, witness_bound):
    """Connected components of TM objects within bounds: a union-find over
    the one-step relation 'some 1-morphism exists'."""
    objs = [TMObject(a, b) for a in cat.objects() for b in cat.objects()
            if not (isinstance(a, int) and a > obj_bound)
            and not (isinstance(b, int) and b > obj_bound)]
    parent = {o: o for o in objs}

    def find(o):
        while parent[o] != o:
            parent[o] = parent[parent[o]]
            o = parent[o]
        return o

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for a in objs:
        for b in objs:
            if a is b:
                continue
            if enumerate_tm_mors(cat, a, b, witness_bound):
                union(a, b)
    return objs, find


def anti_diagonal_mor(cat, a):
    """The explicit 1-morphism (0,0) -> (A,A) with witness A."""
    zero = TMObject(cat.zero, cat.zero)
    return TMMor(zero, TMObject(a, a), a,
                 cat.identity(a), cat.identity(a))


def tm_inclusion(cat, a):
    """The standard inclusion M -> TM on objects: A -> (A, 0)."""
    return TMObject(a, cat.zero)


# ---------------------------------------------------------------------------
# simplicial levels


def tlevel_identity(cat, a, ell):
    z = cat.zero
    idz = cat.identity(z)
    return TLevelMor(a, a, tuple([z] * (ell + 1)),
                     cat.identity(a.plus), cat.identity(a.minus),
                     tuple([idz] * ell))


def tlevel_from_tm(cat, f, ell):
    """Degenerate level-ell morphism on a 1-morphism: constant witness chain."""
    idw = cat.identity(f.witness)
    return TLevelMor(f.src, f.tgt, tuple([f.witness] * (ell + 1)),
                     f.alpha_plus, f.alpha_minus, tuple([idw] * ell))


def compose_tlevel(cat, g, f):
    if f.tgt != g.src:
        raise RigError("level morphisms not composable")
    ws = tuple(cat.add_obj(x, y) for x, y in zip(f.witnesses, g.witnesses))
    phis = tuple(cat.add_mor(p, q) for p, q in zip(f.phis, g.phis))
    idw = cat.identity(g.witnesses[0])
    ap = cat.compose(g.alpha_plus, cat.add_mor(f.alpha_plus, idw))
    am = cat.compose(g.alpha_minus, cat.add_mor(f.alpha_minus, idw))
    return TLevelMor(f.src, g.tgt, ws, ap, am, phis)


def tlevel_act(cat, theta, f):
    """Reindex a level morphism along a monotone map theta: [l'] -> [l],
    given as its value sequence, by composing and forgetting the witness
    isomorphisms and adjusting the structure maps."""

    def chain(s, t):
        # composite witnesses[t] -> witnesses[s], s <= t
        acc = cat.identity(f.witnesses[t])
        for k in range(t, s, -1):
            acc = cat.compose(f.phis[k - 1], acc)
        return acc

    vals = list(theta)
    lp = len(vals) - 1
    ws = tuple(f.witnesses[v] for v in vals)
    phis = tuple(chain(vals[i - 1], vals[i]) for i in range(1, lp + 1))
    drop = chain(0, vals[0])
    ap = cat.compose(f.alpha_plus, cat.add_mor(cat.identity(f.src.plus), drop))
    am = cat.compose(f.alpha_minus, cat.add_mor(cat.identity(f.src.minus), drop))
    return TLevelMor(f.src, f.tgt, ws, ap, am, phis)


# ---------------------------------------------------------------------------
# matrices over T_ell R


@dataclass(frozen=True)
class TMatObj:
    """Matrix of TM objects, stored as the pair of component matrices."""
    plus: ObjMatrix
    minus: ObjMatrix

    @property
    def n(self):
        return self.plus.n

    @property
    def cat(self):
        return self.plus.cat


@dataclass(frozen=True)
class TMatMor:
    """Matrix of level-ell TM morphisms in assembled form.

    witnesses[l] is the matrix of level-l witnesses (l = 0..ell); phis[l]
    maps witnesses[l+1] -> witnesses[l]; alpha_plus/minus are morphism
    matrices (src.plus + witnesses[0]) -> tgt.plus and likewise for minus.
    """
    src: TMatObj
    tgt: TMatObj
    witnesses: tuple
    alpha_plus: MorMatrix
    alpha_minus: MorMatrix
    phis: tuple


def tmat_embed(X):
    """An R-matrix as a T-matrix with zero minus part."""
    return TMatObj(X, zero_matrix(X.n, X.cat))


def tmat_add(s, t):
    return TMatObj(add_obj_matrix(s.plus, t.plus),
                   add_obj_matrix(s.minus, t.minus))


def tmat_mul_left(X, t):
    """Module product of an R object matrix with a T matrix."""
    return TMatObj(mat_mul(X, t.plus), mat_mul(X, t.minus))


def tmat_mor_valid(f):
    ap, am = f.alpha_plus, f.alpha_minus
    if ap.src != add_obj_matrix(f.src.plus, f.witnesses[0]):
        return False
    if ap.tgt != f.tgt.plus:
        return False
    if am.src != add_obj_matrix(f.src.minus, f.witnesses[0]):
        return False
    if am.tgt != f.tgt.minus:
        return False
    for l, phi in enumerate(f.phis):
        if phi.src != f.witnesses[l + 1] or phi.tgt != f.witnesses[l]:
            return False
    return True


def tmat_identity(t, ell):
    n, cat = t.n, t.cat
    z = zero_matrix(n, cat)
    idz = identity_mor_matrix(z)
    return TMatMor(t, t, tuple([z] * (ell + 1)),
                   identity_mor_matrix(t.plus), identity_mor_matrix(t.minus),
                   tuple([idz] * ell))


def tmat_compose(g, f):
    """g after f; witnesses add with f's first."""
    if f.tgt != g.src:
        raise RigError("T-matrix morphisms not composable")
    ws = tuple(add_obj_matrix(x, y) for x, y in zip(f.witnesses, g.witnesses))
    phis = tuple(add_mor_matrix(p, q) for p, q in zip(f.phis, g.phis))
    idw = identity_mor_matrix(g.witnesses[0])
    ap = compose_mor_matrix(g.alpha_plus, add_mor_matrix(f.alpha_plus, idw))
    am = compose_mor_matrix(g.alpha_minus, add_mor_matrix(f.alpha_minus, idw))
    return TMatMor(f.src, g.tgt, ws, ap, am, phis)


def tmat_act_obj_mor(X, g):
    """The identity of the object matrix X acting on g (left module)."""
    return tmat_act_mor(identity_mor_matrix(X), g)


def tmat_act_mor(F, g):
    """F: X -> X' acting on g: S -> T, witnesses X.S-products.

    alpha: (X.S+-) + (X.w0) -> X.(S+- + w0) -> X'.T+- via the matrix left
    distributivity followed by the product morphism F.(g.alpha).
    """
    X, Xp = F.src, F.tgt
    S = g.src
    ws = tuple(mat_mul(X, w) for w in g.witnesses)
    idX = identity_mor_matrix(X)
    phis = tuple(mat_mul_mor(idX, p) for p in g.phis)

    def component(s_part, alpha):
        d = mat_left_dist(X, [s_part, g.witnesses[0]])
        return compose_mor_matrix(mat_mul_mor(F, alpha), d)

    return TMatMor(tmat_mul_left(X, S), tmat_mul_left(Xp, g.tgt), ws,
                   component(S.plus, g.alpha_plus),
                   component(S.minus, g.alpha_minus))


def tmat_from_mor_matrix(F, ell):
    """An R morphism matrix as a witness-free T-matrix morphism."""
    n, cat = F.n, F.cat
    z = zero_matrix(n, cat)
    idz = identity_mor_matrix(z)
    zmor = identity_mor_matrix(z)
    return TMatMor(tmat_embed(F.src), tmat_embed(F.tgt),
                   tuple([z] * (ell + 1)),
                   F, zmor, tuple([idz] * ell))
