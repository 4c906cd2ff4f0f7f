"""Square matrices of objects and morphisms over a rig category.

Matrix multiplication uses the left-nested sum Z_ij = sum_k X_ik * Y_kj
(k = 1..n in order).  It is strictly unital with the unit matrix but only
associative up to the isomorphism built by ``mat_assoc``.  The two
structural builders here, ``mat_assoc`` and ``mat_left_dist``, are the only
places the additive symmetry is allowed to enter matrix bookkeeping; both
run inside ``structural_scope`` and keep their own call counters.
"""

from __future__ import annotations

from .rig_core import COUNTERS, RigError, structural_scope


class ObjMatrix:
    """n x n array of objects of one rig category."""

    __slots__ = ("cat", "n", "rows")

    def __init__(self, cat, rows):
        self.cat = cat
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise RigError("object matrix must be square")

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return (isinstance(other, ObjMatrix) and self.cat is other.cat
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.cat), self.rows))

    def __repr__(self):
        return f"ObjMatrix({self.rows})"


class MorMatrix:
    """n x n array of morphisms; source/target object matrices derived."""

    __slots__ = ("cat", "n", "rows")

    def __init__(self, cat, rows):
        self.cat = cat
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise RigError("morphism matrix must be square")

    @property
    def src(self):
        return ObjMatrix(self.cat, [[f.src for f in r] for r in self.rows])

    @property
    def tgt(self):
        return ObjMatrix(self.cat, [[f.tgt for f in r] for r in self.rows])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return (isinstance(other, MorMatrix) and self.cat is other.cat
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.cat), self.rows))

    def __repr__(self):
        return f"MorMatrix({self.rows})"


def obj_matrix(cat, rows):
    return ObjMatrix(cat, rows)


def unit_matrix(n, cat):
    """E_n: the multiplicative unit on the diagonal, zero elsewhere."""
    if n < 1:
        raise RigError("unit matrix needs n >= 1")
    return ObjMatrix(cat, [[cat.one if i == j else cat.zero for j in range(n)]
                           for i in range(n)])


def zero_matrix(n, cat):
    return ObjMatrix(cat, [[cat.zero] * n for _ in range(n)])


def identity_mor_matrix(X):
    cat = X.cat
    return MorMatrix(cat, [[cat.identity(X[i, j]) for j in range(X.n)]
                           for i in range(X.n)])


def compose_mor_matrix(G, F):
    cat = F.cat
    return MorMatrix(cat, [[cat.compose(G[i, j], F[i, j]) for j in range(F.n)]
                           for i in range(F.n)])


def invert_mor_matrix(F):
    cat = F.cat
    return MorMatrix(cat, [[cat.inverse(F[i, j]) for j in range(F.n)]
                           for i in range(F.n)])


def add_obj_matrix(X, Y):
    """Entrywise sum of object matrices."""
    cat = X.cat
    if X.n != Y.n:
        raise RigError("size mismatch")
    return ObjMatrix(cat, [[cat.add_obj(X[i, j], Y[i, j]) for j in range(X.n)]
                           for i in range(X.n)])


def add_mor_matrix(F, G):
    """Entrywise sum of morphism matrices."""
    cat = F.cat
    return MorMatrix(cat, [[cat.add_mor(F[i, j], G[i, j]) for j in range(F.n)]
                           for i in range(F.n)])


def mat_mul(X, Y):
    """Matrix product of object matrices, left-nested sums over k."""
    cat = X.cat
    if X.n != Y.n or X.cat is not Y.cat:
        raise RigError("matrix product needs equal sizes over one category")
    n = X.n
    return ObjMatrix(cat, [
        [cat.sum_obj([cat.mul_obj(X[i, k], Y[k, j]) for k in range(n)])
         for j in range(n)] for i in range(n)])


def mat_mul_mor(F, G):
    """The bifunctor on morphism matrices."""
    cat = F.cat
    if F.n != G.n:
        raise RigError("matrix product needs equal sizes")
    n = F.n
    return MorMatrix(cat, [
        [cat.sum_mor([cat.mul_mor(F[i, k], G[k, j]) for k in range(n)])
         for j in range(n)] for i in range(n)])


def block_sum(X, Y):
    """Block sum of object matrices (zeros off the blocks)."""
    cat = X.cat
    n, m = X.n, Y.n
    rows = []
    for i in range(n):
        rows.append(list(X.rows[i]) + [cat.zero] * m)
    for i in range(m):
        rows.append([cat.zero] * n + list(Y.rows[i]))
    return ObjMatrix(cat, rows)


def block_sum_mor(F, G):
    cat = F.cat
    n, m = F.n, G.n
    z = cat.identity(cat.zero)
    rows = []
    for i in range(n):
        rows.append(list(F.rows[i]) + [z] * m)
    for i in range(m):
        rows.append([z] * n + list(G.rows[i]))
    return MorMatrix(cat, rows)


def stabilize(X):
    """Block sum with E_1; preserves weak invertibility."""
    return block_sum(X, unit_matrix(1, X.cat))


def stabilize_mor(F):
    return block_sum_mor(F, identity_mor_matrix(unit_matrix(1, F.cat)))


# ---------------------------------------------------------------------------
# structural isomorphisms


def sum_shuffle(cat, objs, pi):
    """Canonical morphism  +_s objs[s]  ->  +_t objs[pi[t]]  built from the
    additive symmetry by bubbling blocks; pi[t] is the source index landing
    at target slot t."""
    m = len(objs)
    cur = list(range(m))
    acc = cat.identity(cat.sum_obj(objs))
    for t in range(m):
        p = cur.index(pi[t])
        while p > t:
            left = [objs[s] for s in cur[:p - 1]]
            a, b = objs[cur[p - 1]], objs[cur[p]]
            right = [objs[s] for s in cur[p + 1:]]
            step = cat.sum_mor(
                [cat.identity(cat.sum_obj(left)), cat.sym_add(a, b)]
                + [cat.identity(o) for o in right])
            acc = cat.compose(step, acc)
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            p -= 1
    return acc


def dist_left_multi(cat, a, bs):
    """Canonical morphism  +_i (a*b_i)  ->  a*(b_1+...+b_m)  from d_l."""
    if not bs:
        return cat.identity(cat.zero)  # a*0 = 0 strictly
    if len(bs) == 1:
        return cat.identity(cat.mul_obj(a, bs[0]))
    head, last = bs[:-1], bs[-1]
    rec = dist_left_multi(cat, a, head)
    step1 = cat.sum_mor([rec, cat.identity(cat.mul_obj(a, last))])
    step2 = cat.left_dist(a, cat.sum_obj(head), last)
    return cat.compose(step2, step1)


def mat_assoc(X, Y, Z):
    """The isomorphism (X.Y).Z -> X.(Y.Z), natural in all three arguments.

    Entry (i,j): the source is the flat sum over (k outer, l inner) of
    X_il * Y_lk * Z_kj; reorder to (l outer, k inner) with the symmetry, then
    distribute each X_il over its k-sum.
    """
    cat = X.cat
    n = X.n
    COUNTERS.mat_assoc += 1
    with structural_scope():
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                terms = {}
                for k in range(n):
                    for l in range(n):
                        terms[(k, l)] = cat.mul_obj(
                            cat.mul_obj(X[i, l], Y[l, k]), Z[k, j])
                order_src = [(k, l) for k in range(n) for l in range(n)]
                order_tgt = [(k, l) for l in range(n) for k in range(n)]
                objs = [terms[p] for p in order_src]
                pi = [order_src.index(p) for p in order_tgt]
                shuf = sum_shuffle(cat, objs, pi)
                dists = cat.sum_mor(
                    [dist_left_multi(cat, X[i, l],
                                     [cat.mul_obj(Y[l, k], Z[k, j])
                                      for k in range(n)])
                     for l in range(n)])
                row.append(cat.compose(dists, shuf))
            rows.append(row)
        return MorMatrix(cat, rows)


def mat_left_dist(X, parts):
    """The isomorphism  X.P_1 + ... + X.P_m  ->  X.(P_1 + ... + P_m)
    of object matrices (entrywise sums on both sides)."""
    cat = X.cat
    n = X.n
    if not parts:
        raise RigError("mat_left_dist needs at least one summand")
    COUNTERS.mat_dist += 1
    with structural_scope():
        m = len(parts)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                terms = {}
                for t in range(m):
                    for k in range(n):
                        terms[(t, k)] = cat.mul_obj(X[i, k], parts[t][k, j])
                order_src = [(t, k) for t in range(m) for k in range(n)]
                order_tgt = [(t, k) for k in range(n) for t in range(m)]
                objs = [terms[p] for p in order_src]
                pi = [order_src.index(p) for p in order_tgt]
                shuf = sum_shuffle(cat, objs, pi)
                dists = cat.sum_mor(
                    [dist_left_multi(cat, X[i, k],
                                     [parts[t][k, j] for t in range(m)])
                     for k in range(n)])
                row.append(cat.compose(dists, shuf))
            rows.append(row)
        return MorMatrix(cat, rows)


# ---------------------------------------------------------------------------
# weak invertibility


def pi0_matrix(X):
    """Matrix of component labels."""
    return tuple(tuple(X.cat.pi0_label(X[i, j]) for j in range(X.n))
                 for i in range(X.n))


def _gr_det(gr, M):
    n = len(M)
    if n == 0:
        return gr.one()
    if n == 1:
        return M[0][0]
    acc = gr.zero()
    for j in range(n):
        minor = [tuple(row[k] for k in range(n) if k != j) for row in M[1:]]
        term = gr.mul(M[0][j], _gr_det(gr, minor))
        acc = gr.add(acc, term if j % 2 == 0 else gr.neg(term))
    return acc


def gl_membership(M, gr):
    """Is the label matrix invertible over the group completion?

    M is a matrix of Pi0Rig elements, gr their GrRing.  Over Z this is
    det = +-1, over a finite commutative ring det a unit.
    """
    img = [[gr.from_pi0(x) for x in row] for row in M]
    return gr.is_invertible(_gr_det(gr, img))


def is_weakly_invertible(X, gr=None):
    from .rig_core import grothendieck
    if gr is None:
        gr = grothendieck(X.cat.pi0())
    return gl_membership(pi0_matrix(X), gr)
