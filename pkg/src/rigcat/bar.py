"""One-sided bar construction B(*, M, T) as a simplicial category.

A q-simplex is a triangular array: objects a_ij of M for i < j <= q,
objects a_i8 of T (8 stands for the top index), and structural morphisms
a_ijk: a_ij . a_jk -> a_ik subject to the cocycle square.  Conventions:
a_ii is the monoidal unit and the degenerate structural morphisms are
identities, which is what makes the reindexing action total.

The module category T is allowed to be the matrix category over the
group-completion levels, where structural morphisms carry witnesses; the
invertibility requirement then applies to their components.
"""

from __future__ import annotations

from itertools import product as iproduct

from .rig_core import Mor, RigError
from .matrix_cat import (
    MorMatrix, ObjMatrix, compose_mor_matrix, identity_mor_matrix,
    invert_mor_matrix, is_weakly_invertible, mat_assoc, mat_mul, mat_mul_mor,
    unit_matrix,
)
from .group_completion import (
    TMatMor, TMatObj, tmat_act_mor, tmat_compose, tmat_identity,
    tmat_mor_valid, tmat_mul_left,
)
from .simplicial import BiSSet, SSet, homology

INF = "inf"


class BarContext:
    """Operations of a monoidal category M acting on a module T."""

    name = "bar-context"

    # monoidal side
    def m_unit(self):
        raise NotImplementedError

    def m_mul_obj(self, a, b):
        raise NotImplementedError

    def m_mul_mor(self, f, g):
        raise NotImplementedError

    def m_compose(self, g, f):
        raise NotImplementedError

    def m_identity(self, a):
        raise NotImplementedError

    def m_inverse(self, f):
        raise NotImplementedError

    def m_assoc(self, a, b, c):
        raise NotImplementedError

    # module side
    def t_act_obj(self, a, t):
        raise NotImplementedError

    def t_act_mor(self, f, g):
        raise NotImplementedError

    def t_compose(self, g, f):
        raise NotImplementedError

    def t_identity(self, t):
        raise NotImplementedError

    def t_assoc(self, a, b, t):
        raise NotImplementedError

    def t_components_invertible(self, g):
        """The refined invertibility notion for structural morphisms."""
        return True

    def t_inverse_witness_free(self, g):
        raise NotImplementedError


class DiscreteBarContext(BarContext):
    """A monoid acting on a set; only identity morphisms.  ``act`` may be
    partial (return None) to model bounded windows."""

    def __init__(self, m_elements, mul, unit, t_elements, act, name="discrete"):
        self.m_elements = list(m_elements)
        self.mul = mul
        self.unit = unit
        self.t_elements = list(t_elements)
        self.act = act
        self.name = name

    def m_unit(self):
        return self.unit

    def m_mul_obj(self, a, b):
        r = self.mul(a, b)
        if r is None:
            raise RigError(f"{self.name}: product {a}.{b} leaves the window")
        return r

    def m_identity(self, a):
        return Mor(a, a, ("id",))

    def m_mul_mor(self, f, g):
        return self.m_identity(self.m_mul_obj(f.src, g.src))

    def m_compose(self, g, f):
        return f

    def m_inverse(self, f):
        return f

    def m_assoc(self, a, b, c):
        return self.m_identity(self.m_mul_obj(self.m_mul_obj(a, b), c))

    def t_act_obj(self, a, t):
        r = self.act(a, t)
        if r is None:
            raise RigError(f"{self.name}: action {a}.{t} leaves the window")
        return r

    def t_identity(self, t):
        return Mor(t, t, ("id",))

    def t_act_mor(self, f, g):
        return self.t_identity(self.t_act_obj(f.src, g.src))

    def t_compose(self, g, f):
        return f

    def t_assoc(self, a, b, t):
        return self.t_identity(self.t_act_obj(self.m_mul_obj(a, b), t))

    def t_inverse_witness_free(self, g):
        return g


def group_context(k):
    """Z/k acting on itself; the lower-left corner of the fiber square."""
    els = list(range(k))
    return DiscreteBarContext(els, lambda a, b: (a + b) % k, 0,
                              els, lambda a, t: (a + t) % k,
                              name=f"B(*,Z/{k},Z/{k})")


def trivial_module_context(m_elements, mul, unit, name="B(*,M,*)"):
    return DiscreteBarContext(m_elements, mul, unit, ["*"],
                              lambda a, t: "*", name=name)


def nat_window_context(m_bound, window):
    """The additive monoid N<=m_bound acting on the integer window
    [-window, window]; out-of-window actions are rejected."""

    def mul(a, b):
        return a + b if a + b <= m_bound else None

    def act(a, t):
        return a + t if abs(a + t) <= window else None

    return DiscreteBarContext(range(m_bound + 1), mul, 0,
                              range(-window, window + 1), act,
                              name=f"B(*,N<={m_bound},Z[{window}])")


class GLBarContext(BarContext):
    """GL_n over a rig category acting on GL_n of the level-ell completion."""

    def __init__(self, cat, n, ell):
        self.cat = cat
        self.n = n
        self.ell = ell
        self.name = f"B(*,GL_{n}({cat.name}),GL_{n}(T_{ell}{cat.name}))"

    def m_unit(self):
        return unit_matrix(self.n, self.cat)

    def m_mul_obj(self, a, b):
        return mat_mul(a, b)

    def m_mul_mor(self, f, g):
        return mat_mul_mor(f, g)

    def m_compose(self, g, f):
        return compose_mor_matrix(g, f)

    def m_identity(self, a):
        return identity_mor_matrix(a)

    def m_inverse(self, f):
        return invert_mor_matrix(f)

    def m_assoc(self, a, b, c):
        return mat_assoc(a, b, c)

    def t_act_obj(self, a, t):
        return tmat_mul_left(a, t)

    def t_act_mor(self, f, g):
        return tmat_act_mor(f, g)

    def t_compose(self, g, f):
        return tmat_compose(g, f)

    def t_identity(self, t):
        return tmat_identity(t, self.ell)

    def t_assoc(self, a, b, t):
        ab_t = self.t_act_obj(self.m_mul_obj(a, b), t)
        a_bt = self.t_act_obj(a, self.t_act_obj(b, t))
        base = tmat_identity(ab_t, self.ell)
        return TMatMor(ab_t, a_bt, base.witnesses,
                       mat_assoc(a, b, t.plus), mat_assoc(a, b, t.minus),
                       base.phis)

    def t_components_invertible(self, g):
        return tmat_mor_valid(g)

    def t_inverse_witness_free(self, g):
        if any(w != g.witnesses[0] or any(
                x != self.cat.zero for row in w.rows for x in row)
               for w in g.witnesses):
            raise RigError("only witness-free T morphisms invert")
        return TMatMor(g.tgt, g.src, g.witnesses,
                       invert_mor_matrix(g.alpha_plus),
                       invert_mor_matrix(g.alpha_minus), g.phis)


# ---------------------------------------------------------------------------
# simplices and morphisms


class BarSimplex:
    """Triangular array with structural morphisms; see module docstring."""

    def __init__(self, ctx, q, m_entries, t_entries, isos, inf_isos):
        self.ctx = ctx
        self.q = q
        self.m_entries = dict(m_entries)
        self.t_entries = dict(t_entries)
        self.isos = dict(isos)
        self.inf_isos = dict(inf_isos)

    def entry(self, i, j):
        if j == INF:
            return self.t_entries[i]
        if i == j:
            return self.ctx.m_unit()
        return self.m_entries[(i, j)]

    def iso(self, i, j, k):
        """Structural morphism a_ij . a_jk -> a_ik for k finite."""
        if i == j:
            return self.ctx.m_identity(self.entry(j, k))
        if j == k:
            return self.ctx.m_identity(self.entry(i, j))
        return self.isos[(i, j, k)]

    def inf_iso(self, i, j):
        """Structural morphism a_ij . a_j8 -> a_i8."""
        if i == j:
            return self.ctx.t_identity(self.t_entries[i])
        return self.inf_isos[(i, j)]

    def _key(self):
        return (self.q,
                tuple(sorted(self.m_entries.items())),
                tuple(sorted(self.t_entries.items())),
                tuple(sorted(self.isos.items())),
                tuple(sorted(self.inf_isos.items())))

    def __eq__(self, other):
        return isinstance(other, BarSimplex) and self.ctx is other.ctx \
            and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"BarSimplex(q={self.q}, diag={diag_forget(self)})"


def validate_simplex(a):
    """Sources/targets of every structural morphism plus the cocycle square
    for every i < j < k < l <= infinity."""
    ctx = a.ctx
    q = a.q
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            for k in range(j + 1, q + 1):
                iso = a.iso(i, j, k)
                src = ctx.m_mul_obj(a.entry(i, j), a.entry(j, k))
                if get_src(iso) != src or get_tgt(iso) != a.entry(i, k):
                    raise RigError(f"iso ({i},{j},{k}) has wrong endpoints")
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            g = a.inf_iso(i, j)
            src = ctx.t_act_obj(a.entry(i, j), a.t_entries[j])
            if g.src != src or g.tgt != a.t_entries[i]:
                raise RigError(f"inf iso ({i},{j}) has wrong endpoints")
            if not a.ctx.t_components_invertible(g):
                raise RigError(f"inf iso ({i},{j}) has non-invertible pieces")
    # cocycle squares, finite top index
    for i, j, k, l in iproduct(range(q + 1), repeat=4):
        if not (i < j < k < l <= q):
            continue
        route1 = ctx.m_compose(
            a.iso(i, k, l),
            ctx.m_mul_mor(a.iso(i, j, k), ctx.m_identity(a.entry(k, l))))
        route2 = ctx.m_compose(
            a.iso(i, j, l),
            ctx.m_compose(
                ctx.m_mul_mor(ctx.m_identity(a.entry(i, j)), a.iso(j, k, l)),
                ctx.m_assoc(a.entry(i, j), a.entry(j, k), a.entry(k, l))))
        if route1 != route2:
            raise RigError(f"cocycle fails at ({i},{j},{k},{l})")
    # cocycle squares ending at infinity
    for i, j, k in iproduct(range(q + 1), repeat=3):
        if not (i < j < k <= q):
            continue
        route1 = ctx.t_compose(
            a.inf_iso(i, k),
            ctx.t_act_mor(a.iso(i, j, k), ctx.t_identity(a.t_entries[k])))
        route2 = ctx.t_compose(
            a.inf_iso(i, j),
            ctx.t_compose(
                ctx.t_act_mor(ctx.m_identity(a.entry(i, j)), a.inf_iso(j, k)),
                ctx.t_assoc(a.entry(i, j), a.entry(j, k), a.t_entries[k])))
        if route1 != route2:
            raise RigError(f"infinity cocycle fails at ({i},{j},{k})")
    return True


def get_src(f):
    return f.src


def get_tgt(f):
    return f.tgt


class BarMor:
    """Componentwise morphism of bar simplices of equal degree."""

    def __init__(self, ctx, src, tgt, m_comps, t_comps):
        self.ctx = ctx
        self.src = src
        self.tgt = tgt
        self.m_comps = dict(m_comps)
        self.t_comps = dict(t_comps)

    def comp(self, i, j):
        if j == INF:
            return self.t_comps[i]
        if i == j:
            return self.ctx.m_identity(self.ctx.m_unit())
        return self.m_comps[(i, j)]

    def _key(self):
        return (tuple(sorted(self.m_comps.items())),
                tuple(sorted(self.t_comps.items())),
                self.src._key(), self.tgt._key())

    def __eq__(self, other):
        return isinstance(other, BarMor) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


def validate_barmor(f):
    """Endpoint typing plus f_ik a_ijk = b_ijk (f_ij . f_jk) for all
    i < j < k <= infinity."""
    ctx = f.ctx
    a, b = f.src, f.tgt
    if a.q != b.q:
        raise RigError("bar morphism needs equal degrees")
    q = a.q
    for (i, j), c in f.m_comps.items():
        if get_src(c) != a.entry(i, j) or get_tgt(c) != b.entry(i, j):
            raise RigError(f"component ({i},{j}) has wrong endpoints")
    for i, c in f.t_comps.items():
        if c.src != a.t_entries[i] or c.tgt != b.t_entries[i]:
            raise RigError(f"component ({i},inf) has wrong endpoints")
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            for k in range(j + 1, q + 1):
                lhs = ctx.m_compose(f.comp(i, k), a.iso(i, j, k))
                rhs = ctx.m_compose(
                    b.iso(i, j, k), ctx.m_mul_mor(f.comp(i, j), f.comp(j, k)))
                if lhs != rhs:
                    raise RigError(f"bar morphism fails at ({i},{j},{k})")
            lhs = ctx.t_compose(f.comp(i, INF), a.inf_iso(i, j))
            rhs = ctx.t_compose(
                b.inf_iso(i, j), ctx.t_act_mor(f.comp(i, j), f.comp(j, INF)))
            if lhs != rhs:
                raise RigError(f"bar morphism fails at ({i},{j},inf)")
    return True


def identity_barmor(a):
    ctx = a.ctx
    return BarMor(ctx, a, a,
                  {(i, j): ctx.m_identity(a.entry(i, j))
                   for (i, j) in a.m_entries},
                  {i: ctx.t_identity(t) for i, t in a.t_entries.items()})


def compose_barmor(g, f):
    ctx = f.ctx
    return BarMor(ctx, f.src, g.tgt,
                  {k: ctx.m_compose(g.m_comps[k], v)
                   for k, v in f.m_comps.items()},
                  {i: ctx.t_compose(g.t_comps[i], v)
                   for i, v in f.t_comps.items()})


# ---------------------------------------------------------------------------
# simplicial structure


def simplicial_action(phi, a):
    """Reindex a degree-p simplex along phi: [q] -> [p] (value tuple),
    extending by the unit/identity conventions at collisions."""
    ctx = a.ctx
    q = len(phi) - 1
    m_entries = {}
    isos = {}
    inf_isos = {}
    t_entries = {i: a.t_entries[phi[i]] for i in range(q + 1)}
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            m_entries[(i, j)] = a.entry(phi[i], phi[j])
            inf_isos[(i, j)] = a.inf_iso(phi[i], phi[j])
            for k in range(j + 1, q + 1):
                isos[(i, j, k)] = a.iso(phi[i], phi[j], phi[k])
    return BarSimplex(ctx, q, m_entries, t_entries, isos, inf_isos)


def barmor_action(phi, f):
    ctx = f.ctx
    q = len(phi) - 1
    src = simplicial_action(phi, f.src)
    tgt = simplicial_action(phi, f.tgt)
    m_comps = {}
    t_comps = {i: f.comp(phi[i], INF) for i in range(q + 1)}
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            m_comps[(i, j)] = f.comp(phi[i], phi[j])
    return BarMor(ctx, src, tgt, m_comps, t_comps)


# ---------------------------------------------------------------------------
# the diagonal equivalence


def diag_forget(a):
    """The diagonal (a_01, ..., a_{q-1 q}, a_q8)."""
    return tuple(a.entry(i, i + 1) for i in range(a.q)) + (a.t_entries[a.q],)


def diag_inverse(ctx, tup):
    """Simplex with right-nested products as entries and the canonical
    regrouping morphisms as structural data; diag_forget inverts it."""
    q = len(tup) - 1
    parts, t_last = tup[:-1], tup[-1]

    rn = {}
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            pass
    for j in range(q, 0, -1):
        rn[(j - 1, j)] = parts[j - 1]
    for span in range(2, q + 1):
        for i in range(q - span + 1):
            j = i + span
            rn[(i, j)] = ctx.m_mul_obj(parts[i], rn[(i + 1, j)])

    tn = {q: t_last}
    for i in range(q - 1, -1, -1):
        tn[i] = ctx.t_act_obj(parts[i], tn[i + 1])

    def reassoc(i, j, k):
        # rn(i,j) . rn(j,k) -> rn(i,k)
        if j == i + 1:
            return ctx.m_identity(rn[(i, k)])
        inner = reassoc(i + 1, j, k)
        step = ctx.m_mul_mor(ctx.m_identity(parts[i]), inner)
        al = ctx.m_assoc(parts[i], rn[(i + 1, j)], rn[(j, k)])
        return ctx.m_compose(step, al)

    def treassoc(i, j):
        # rn(i,j) . tn(j) -> tn(i)
        if j == i + 1:
            return ctx.t_identity(tn[i])
        inner = treassoc(i + 1, j)
        step = ctx.t_act_mor(ctx.m_identity(parts[i]), inner)
        al = ctx.t_assoc(parts[i], rn[(i + 1, j)], tn[j])
        return ctx.t_compose(step, al)

    isos = {}
    inf_isos = {}
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            inf_isos[(i, j)] = treassoc(i, j)
            for k in range(j + 1, q + 1):
                isos[(i, j, k)] = reassoc(i, j, k)
    return BarSimplex(ctx, q, rn, tn, isos, inf_isos)


def diag_comparison(a):
    """The canonical bar morphism diag_inverse(diag_forget(a)) -> a built
    from a's own structural morphisms."""
    ctx = a.ctx
    tilde = diag_inverse(ctx, diag_forget(a))
    q = a.q
    m_comps = {}
    t_comps = {q: ctx.t_identity(a.t_entries[q])}

    def cmor(i, j):
        if j == i + 1:
            return ctx.m_identity(a.entry(i, j))
        rest = cmor(i + 1, j)
        step = ctx.m_mul_mor(ctx.m_identity(a.entry(i, i + 1)), rest)
        return ctx.m_compose(a.iso(i, i + 1, j), step)

    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            m_comps[(i, j)] = cmor(i, j)
    for i in range(q - 1, -1, -1):
        rest = t_comps[i + 1]
        step = ctx.t_act_mor(ctx.m_identity(a.entry(i, i + 1)), rest)
        t_comps[i] = ctx.t_compose(a.inf_iso(i, i + 1), step)
    return BarMor(ctx, tilde, a, m_comps, t_comps)


# ---------------------------------------------------------------------------
# nerve of the bar construction (enumerable discrete case) and the probe


def bar_nerve(ctx, P, Q):
    """The bisimplicial set N_p B_q for a discrete context: a (p, q)-cell
    is a q-simplex (identity chains in the nerve direction collapse)."""
    if not isinstance(ctx, DiscreteBarContext):
        raise RigError("bar_nerve enumeration needs a discrete context")
    by_q = {}
    for q in range(Q + 1):
        cells = []
        for tup in iproduct(*([ctx.m_elements] * q + [ctx.t_elements])):
            try:
                cells.append(diag_frozen(ctx, tup))
            except RigError:
                continue
        by_q[q] = cells
    cells = {(p, q): list(by_q[q]) for p in range(P + 1) for q in range(Q + 1)}

    def hf(p, q, i, x):
        return x

    def hd(p, q, i, x):
        return x

    def vf(p, q, i, x):
        return bar_face(ctx, q, i, x)

    def vd(p, q, i, x):
        return bar_degen(ctx, q, i, x)

    return BiSSet(P, Q, cells, hf, vf, hd, vd, name=f"N{ctx.name}")


def diag_frozen(ctx, tup):
    """Validated diagonal of a discrete bar simplex: all products and
    actions must stay in the window."""
    q = len(tup) - 1
    a = diag_inverse(ctx, tup)
    return diag_forget(a)


def bar_face(ctx, q, i, tup):
    gs, h = list(tup[:-1]), tup[-1]
    if i == 0:
        return tuple(gs[1:]) + (h,)
    if i == q:
        return tuple(gs[:-1]) + (ctx.t_act_obj(gs[-1], h),)
    gs[i - 1] = ctx.m_mul_obj(gs[i - 1], gs[i])
    del gs[i]
    return tuple(gs) + (h,)


def bar_degen(ctx, q, i, tup):
    gs, h = list(tup[:-1]), tup[-1]
    gs.insert(i, ctx.m_unit())
    return tuple(gs) + (h,)


def bar_diagonal_sset(ctx, truncation):
    """Diagonal of the nerve of a discrete bar construction."""
    N = bar_nerve(ctx, truncation, truncation)
    from .simplicial import diagonal
    return diagonal(N)


def contractibility_probe(ctx, maxdeg):
    """Homology of the diagonal nerve of B(*, G, G)."""
    X = bar_diagonal_sset(ctx, maxdeg + 1)
    return homology(X, maxdeg)
