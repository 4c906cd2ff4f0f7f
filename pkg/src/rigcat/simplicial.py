"""Truncated simplicial and bisimplicial sets, the shear subdivision and
exact integral homology.

Simplex values are arbitrary hashable objects; face and degeneracy
operators are callables indexed by degree.  The shear functor z sends
(S, T) to (T | S, T) with every element of S above every element of T;
``z_upper`` is precomposition with z, ``z_lower`` its right adjoint whose
cells are compatibility-checked assignments on the nondegenerate cells of
the subdivided prism (``PrismMap``).  Homology always means the normalized
chain complex over Z reduced by Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import gcd


class TruncationError(Exception):
    """An operation needs simplices above the stored truncation."""


def monotone_maps(m, n):
    """All monotone maps [m] -> [n] as value tuples."""
    return [tuple(c) for c in combinations_with_replacement(range(n + 1), m + 1)]


def delta_compose(phi, psi):
    """phi after psi, both value tuples."""
    return tuple(phi[v] for v in psi)


def delta_identity(n):
    return tuple(range(n + 1))


def delta_face(n, i):
    """delta_i: [n-1] -> [n] skipping i."""
    return tuple(v for v in range(n + 1) if v != i)


def delta_degen(n, i):
    """sigma_i: [n+1] -> [n] repeating i."""
    return tuple(list(range(i + 1)) + list(range(i, n + 1)))


def is_monotone(vals):
    return all(vals[i] <= vals[i + 1] for i in range(len(vals) - 1))


@dataclass(frozen=True)
class DeltaMap:
    """A monotone map of finite ordinals with explicit target arity."""
    values: tuple
    target: int

    def __post_init__(self):
        if not is_monotone(self.values):
            raise ValueError(f"not monotone: {self.values}")
        if self.values and not (0 <= self.values[0] and self.values[-1] <= self.target):
            raise ValueError(f"values leave [0..{self.target}]")

    @property
    def source(self):
        return len(self.values) - 1

    def __call__(self, i):
        return self.values[i]

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise ValueError("not composable")
        return DeltaMap(delta_compose(self.values, other.values), self.target)


# ---------------------------------------------------------------------------
# simplicial sets


class SSet:
    """Simplicial set truncated at ``truncation``; cells per degree plus
    face/degeneracy callables (degree, index, value)."""

    def __init__(self, truncation, cells, face, degen, name="sset"):
        self.truncation = truncation
        self.cells = {d: list(cells.get(d, [])) for d in range(truncation + 1)}
        self._face = face
        self._degen = degen
        self.name = name

    def simplices(self, d):
        if d > self.truncation:
            raise TruncationError(f"{self.name}: degree {d} above truncation")
        return self.cells[d]

    def face(self, d, i, x):
        return self._face(d, i, x)

    def degen(self, d, i, x):
        return self._degen(d, i, x)

    def is_degenerate(self, d, x):
        return d > 0 and any(
            self.degen(d - 1, i, self.face(d, i, x)) == x for i in range(d))

    def nondegenerate(self, d):
        return [x for x in self.simplices(d) if not self.is_degenerate(d, x)]

    def act(self, phi, x):
        """Contravariant action of a monotone map on a simplex of degree
        phi.target, by the epi-mono factorization."""
        return _act(self.face, self.degen, tuple(phi.values), phi.target, x)


def _act(face, degen, phi, n, x):
    missing = [i for i in range(n + 1) if i not in set(phi)]
    if missing:
        i = missing[0]
        x = face(n, i, x)
        phi = tuple(v if v < i else v - 1 for v in phi)
        return _act(face, degen, phi, n - 1, x)
    m = len(phi) - 1
    for j in range(m):
        if phi[j] == phi[j + 1]:
            y = _act(face, degen, phi[:j] + phi[j + 1:], n, x)
            return degen(m - 1, j, y)
    return x


def standard_simplex(p, truncation):
    """Delta[p] truncated; a d-simplex is a monotone value tuple [d] -> [p]."""
    cells = {d: monotone_maps(d, p) for d in range(truncation + 1)}

    def face(d, i, x):
        return tuple(x[v] for v in delta_face(d, i))

    def degen(d, i, x):
        return tuple(x[v] for v in delta_degen(d, i))

    return SSet(truncation, cells, face, degen, name=f"Delta[{p}]")


def constant_sset(value, truncation):
    cells = {d: [value] for d in range(truncation + 1)}
    return SSet(truncation, cells, lambda d, i, x: x, lambda d, i, x: x,
                name="constant")


def check_simplicial_identities(X, rng=None, samples=None):
    """Exhaustively (or on random samples) check the simplicial identities
    on a truncated simplicial set; returns the number of checks done."""
    checks = 0
    for d in range(2, X.truncation + 1):
        pool = X.simplices(d)
        if rng is not None and samples:
            pool = [rng.choice(pool) for _ in range(min(samples, len(pool)))] if pool else []
        for x in pool:
            for j in range(d + 1):
                for i in range(j):
                    lhs = X.face(d - 1, i, X.face(d, j, x))
                    rhs = X.face(d - 1, j - 1, X.face(d, i, x))
                    assert lhs == rhs, f"d_i d_j fails at {x}"
                    checks += 1
    for d in range(0, X.truncation):
        for x in X.simplices(d):
            for i in range(d + 1):
                y = X.degen(d, i, x)
                assert X.face(d + 1, i, y) == x, "d_i s_i != id"
                assert X.face(d + 1, i + 1, y) == x, "d_{i+1} s_i != id"
                checks += 1
                if d + 1 < X.truncation:
                    for j in range(i + 1):
                        lhs = X.degen(d + 1, i + 1, X.degen(d, j, x))
                        rhs = X.degen(d + 1, j, X.degen(d, i, x))
                        assert lhs == rhs, "s_i s_j fails"
                        checks += 1
    return checks


# ---------------------------------------------------------------------------
# bisimplicial sets


class BiSSet:
    """Bisimplicial set bitruncated at (P, Q).  Cells are stored per
    bidegree; the four operators are callables (p, q, i, value)."""

    def __init__(self, P, Q, cells, h_face, v_face, h_degen, v_degen,
                 name="bisset"):
        self.P = P
        self.Q = Q
        self.cells = {k: list(v) for k, v in cells.items()}
        self._hf = h_face
        self._vf = v_face
        self._hd = h_degen
        self._vd = v_degen
        self.name = name

    def simplices(self, p, q):
        if p > self.P or q > self.Q or p < 0 or q < 0:
            raise TruncationError(f"{self.name}: bidegree ({p},{q}) out of range")
        return self.cells.get((p, q), [])

    def h_face(self, p, q, i, x):
        return self._hf(p, q, i, x)

    def v_face(self, p, q, i, x):
        return self._vf(p, q, i, x)

    def h_degen(self, p, q, i, x):
        return self._hd(p, q, i, x)

    def v_degen(self, p, q, i, x):
        return self._vd(p, q, i, x)

    def act(self, phi, psi, x):
        """Action of a pair of monotone maps, horizontal then vertical."""
        p, q = phi.target, psi.target

        def hface(d, i, y):
            return self.h_face(d, q, i, y)

        def hdegen(d, i, y):
            return self.h_degen(d, q, i, y)

        x = _act(hface, hdegen, tuple(phi.values), p, x)
        ps = phi.source

        def vface(d, i, y):
            return self.v_face(ps, d, i, y)

        def vdegen(d, i, y):
            return self.v_degen(ps, d, i, y)

        return _act(vface, vdegen, tuple(psi.values), q, x)

    def is_degenerate(self, p, q, x):
        if p > 0:
            for i in range(p):
                if self.h_degen(p - 1, q, i, self.h_face(p, q, i, x)) == x:
                    return True
        if q > 0:
            for i in range(q):
                if self.v_degen(p, q - 1, i, self.v_face(p, q, i, x)) == x:
                    return True
        return False


def product_prism(p, q, P, Q):
    """Delta[p] x Delta[q] as a bisimplicial set, bitruncated at (P, Q).
    An (s, t)-cell is a pair of monotone value tuples."""
    cells = {}
    for s in range(P + 1):
        for t in range(Q + 1):
            cells[(s, t)] = [(a, b) for a in monotone_maps(s, p)
                             for b in monotone_maps(t, q)]

    def hf(s, t, i, x):
        return (tuple(x[0][v] for v in delta_face(s, i)), x[1])

    def vf(s, t, i, x):
        return (x[0], tuple(x[1][v] for v in delta_face(t, i)))

    def hd(s, t, i, x):
        return (tuple(x[0][v] for v in delta_degen(s, i)), x[1])

    def vd(s, t, i, x):
        return (x[0], tuple(x[1][v] for v in delta_degen(t, i)))

    return BiSSet(P, Q, cells, hf, vf, hd, vd, name=f"Delta[{p}]xDelta[{q}]")


def external_product(X, Y, P, Q):
    """The bisimplicial set (p, q) -> X_p x Y_q."""
    cells = {(p, q): [(x, y) for x in X.simplices(p) for y in Y.simplices(q)]
             for p in range(P + 1) for q in range(Q + 1)}
    return BiSSet(
        P, Q, cells,
        lambda p, q, i, z: (X.face(p, i, z[0]), z[1]),
        lambda p, q, i, z: (z[0], Y.face(q, i, z[1])),
        lambda p, q, i, z: (X.degen(p, i, z[0]), z[1]),
        lambda p, q, i, z: (z[0], Y.degen(q, i, z[1])),
        name=f"{X.name}x{Y.name}")


def check_bisimplicial_identities(X, rng=None, samples=None):
    """Commutation of the two directions plus both directions' identities."""
    checks = 0
    for (p, q), pool in sorted(X.cells.items()):
        if p < 1 or q < 1:
            continue
        if rng is not None and samples:
            pool = [rng.choice(pool) for _ in range(min(samples, len(pool)))] if pool else []
        for x in pool:
            for i in range(p + 1):
                for j in range(q + 1):
                    lhs = X.v_face(p - 1, q, j, X.h_face(p, q, i, x))
                    rhs = X.h_face(p, q - 1, i, X.v_face(p, q, j, x))
                    assert lhs == rhs, "h/v faces do not commute"
                    checks += 1
    return checks


# ---------------------------------------------------------------------------
# nerves


def nerve(cat, truncation):
    """Nerve of a finite category: q-simplices are composable chains
    (f_1, ..., f_q); 0-simplices the objects."""
    objs = list(cat.objects())
    cells = {0: list(objs)}
    chains = {0: [((), a) for a in objs]}
    for d in range(1, truncation + 1):
        new = []
        for fs, tail in chains[d - 1]:
            for b in objs:
                for g in cat.hom(tail, b):
                    new.append((fs + (g,), b))
        chains[d] = new
        cells[d] = [fs for fs, _ in new]

    def face(d, i, x):
        if d == 1:
            return x[0].tgt if i == 0 else x[0].src
        if i == 0:
            return x[1:]
        if i == d:
            return x[:-1]
        return x[:i - 1] + (cat.compose(x[i], x[i - 1]),) + x[i + 1:]

    def degen(d, i, x):
        if d == 0:
            return (cat.identity(x),)
        src = x[0].src if i == 0 else x[i - 1].tgt
        return x[:i] + (cat.identity(src),) + x[i:]

    return SSet(truncation, cells, face, degen, name=f"N({getattr(cat, 'name', '?')})")


class OneObjectGroupoid:
    """A finite group as a one-object groupoid."""

    def __init__(self, elements, mul, unit, name="G"):
        self.elements = list(elements)
        self.mul = mul
        self.unit = unit
        self.name = name

    def objects(self):
        return ["*"]

    def hom(self, a, b):
        from .rig_core import Mor
        return [Mor("*", "*", ("g", g)) for g in self.elements]

    def identity(self, a):
        from .rig_core import Mor
        return Mor("*", "*", ("g", self.unit))

    def compose(self, g, f):
        from .rig_core import Mor
        return Mor("*", "*", ("g", self.mul(g.data[1], f.data[1])))


def cyclic_group_nerve(k, truncation):
    G = OneObjectGroupoid(range(k), lambda a, b: (a + b) % k, 0, name=f"Z/{k}")
    return nerve(G, truncation)


# ---------------------------------------------------------------------------
# the shear functor and its adjoints


def shear_ob(s_arity, t_arity):
    """Arities of z(S, T) = (T | S, T)."""
    return (t_arity + 1 + s_arity, t_arity)


def shear_mor(phi, psi):
    """z on a morphism pair: (psi | phi, psi)."""
    joined = tuple(psi.values) + tuple(psi.target + 1 + v for v in phi.values)
    return (DeltaMap(joined, psi.target + 1 + phi.target), psi)


def z_upper_required(p, q):
    """Bidegree of the input needed to evaluate z*X at (p, q)."""
    return (q + 1 + p, q)


def z_upper(X, P=None, Q=None):
    """Precomposition with the shear: (z*X)_(p,q) = X_(q+1+p, q).

    The output bitruncation (P, Q) must satisfy Q + 1 + P <= X.P and
    Q <= X.Q; by default the largest balanced rectangle is taken.
    """
    if P is None or Q is None:
        Q = min(X.Q, max(0, (X.P - 1) // 2)) if Q is None else Q
        P = X.P - 1 - Q if P is None else P
    if P < 0 or Q + 1 + P > X.P or Q > X.Q:
        raise TruncationError(
            f"z* at ({P},{Q}) needs input at {z_upper_required(P, Q)}, "
            f"have ({X.P},{X.Q})")
    cells = {}
    for q in range(Q + 1):
        for p in range(P + 1):
            cells[(p, q)] = list(X.simplices(q + 1 + p, q))

    def hf(p, q, i, x):
        return X.h_face(q + 1 + p, q, q + 1 + i, x)

    def hd(p, q, i, x):
        return X.h_degen(q + 1 + p, q, q + 1 + i, x)

    def vf(p, q, i, x):
        return X.v_face(q + p, q, i, X.h_face(q + 1 + p, q, i, x))

    def vd(p, q, i, x):
        return X.v_degen(q + 2 + p, q, i, X.h_degen(q + 1 + p, q, i, x))

    return BiSSet(P, Q, cells, hf, vf, hd, vd, name=f"z*({X.name})")


def eta_upper(X, p, q, x):
    """Component of the natural map z*X -> X at (p, q): restriction along
    the standard inclusion of S into T | S."""
    iota = DeltaMap(tuple(range(q + 1, q + 1 + p + 1)), q + 1 + p)

    def hface(d, i, y):
        return X.h_face(d, q, i, y)

    def hdegen(d, i, y):
        return X.h_degen(d, q, i, y)

    return _act(hface, hdegen, tuple(iota.values), q + 1 + p, x)


def diagonal(X):
    """Diagonal simplicial set of a bisimplicial set."""
    D = min(X.P, X.Q)
    cells = {d: list(X.simplices(d, d)) for d in range(D + 1)}

    def face(d, i, x):
        return X.v_face(d - 1, d, i, X.h_face(d, d, i, x))

    def degen(d, i, x):
        return X.v_degen(d + 1, d, i, X.h_degen(d, d, i, x))

    return SSet(D, cells, face, degen, name=f"diag({X.name})")


# ---------------------------------------------------------------------------
# cells of z_* as prism assignments


@dataclass(frozen=True)
class PrismCell:
    """A cell of z*(Delta[p] x Delta[q]) at bidegree (s, t): a monotone
    phi_hat: [t+1+s] -> [p] together with psi: [t] -> [q]."""
    s: int
    t: int
    phi_hat: tuple
    psi: tuple

    @property
    def t_part(self):
        return self.phi_hat[:self.t + 1]

    @property
    def s_part(self):
        return self.phi_hat[self.t + 1:]


def prism_cells(p, q, s, t):
    return [PrismCell(s, t, a, b)
            for a in monotone_maps(t + 1 + s, p) for b in monotone_maps(t, q)]


def prism_h_face(c, i):
    keep = [v for k, v in enumerate(c.s_part) if k != i]
    return PrismCell(c.s - 1, c.t, c.t_part + tuple(keep), c.psi)

def prism_h_degen(c, i):
    sp = list(c.s_part)
    sp.insert(i, sp[i])
    return PrismCell(c.s + 1, c.t, c.t_part + tuple(sp), c.psi)

def prism_v_face(c, i):
    tp = tuple(v for k, v in enumerate(c.t_part) if k != i)
    ps = tuple(v for k, v in enumerate(c.psi) if k != i)
    return PrismCell(c.s, c.t - 1, tp + c.s_part, ps)

def prism_v_degen(c, i):
    tp = list(c.t_part)
    tp.insert(i, tp[i])
    ps = list(c.psi)
    ps.insert(i, ps[i])
    return PrismCell(c.s, c.t + 1, tuple(tp) + c.s_part, tuple(ps))


def prism_nondegenerate(c):
    sp = c.s_part
    if any(sp[i] == sp[i + 1] for i in range(len(sp) - 1)):
        return False
    tp, ps = c.t_part, c.psi
    return not any(tp[i] == tp[i + 1] and ps[i] == ps[i + 1] for i in range(c.t))


from functools import lru_cache


@lru_cache(maxsize=None)
def prism_normalize(c):
    """Nondegenerate core plus the degeneracy word to rebuild the cell:
    cell = ops applied outermost-last, each op ('h'|'v', index)."""
    ops = []
    while True:
        sp = c.s_part
        hrep = next((i for i in range(len(sp) - 1) if sp[i] == sp[i + 1]), None)
        if hrep is not None:
            ops.append(("h", hrep))
            c = prism_h_face(c, hrep)
            continue
        tp, ps = c.t_part, c.psi
        vrep = next((i for i in range(c.t)
                     if tp[i] == tp[i + 1] and ps[i] == ps[i + 1]), None)
        if vrep is not None:
            ops.append(("v", vrep))
            c = prism_v_face(c, vrep)
            continue
        return c, tuple(reversed(ops))


def prism_value(target, assignment, c):
    """Value of a prism assignment at any cell: look up the nondegenerate
    core, then rebuild with the target's degeneracies."""
    core, ops = prism_normalize(c)
    v = assignment[core]
    for d, i in ops:
        if d == "h":
            v = target.h_degen(core.s, core.t, i, v)
            core = prism_h_degen(core, i)
        else:
            v = target.v_degen(core.s, core.t, i, v)
            core = prism_v_degen(core, i)
    return v


class PrismMap:
    """A bisimplicial map z*(Delta[p] x Delta[q]) -> X given by its values
    on jointly nondegenerate cells; this is a (p, q)-cell of z_* X.

    ``target`` must provide h_face/v_face/h_degen/v_degen with the
    (p, q, i, value) signature and cell equality.
    """

    def __init__(self, target, p, q, assignment, s_max=None, t_max=None):
        self.target = target
        self.p = p
        self.q = q
        self.s_max = p if s_max is None else s_max
        self.t_max = p + q + 1 if t_max is None else t_max
        self.assignment = dict(assignment)

    def key(self):
        return tuple(sorted(self.assignment.items(),
                            key=lambda kv: (kv[0].s, kv[0].t, kv[0].phi_hat, kv[0].psi),
                            ))

    def __eq__(self, other):
        return (isinstance(other, PrismMap) and self.p == other.p
                and self.q == other.q and self.assignment == other.assignment)

    def __hash__(self):
        return hash((self.p, self.q, tuple(sorted(
            (repr(k), repr(v)) for k, v in self.assignment.items()))))

    def value(self, c):
        return prism_value(self.target, self.assignment, c)

    def validate(self):
        """Every face of every assigned cell matches the target's face."""
        for c, v in self.assignment.items():
            if not prism_nondegenerate(c):
                raise ValueError(f"degenerate cell assigned: {c}")
            for i in range(c.s + 1):
                if c.s > 0:
                    want = self.value(prism_h_face(c, i))
                    got = self.target.h_face(c.s, c.t, i, v)
                    if want != got:
                        raise ValueError(f"h-face {i} mismatch at {c}")
            for i in range(c.t + 1):
                if c.t > 0:
                    want = self.value(prism_v_face(c, i))
                    got = self.target.v_face(c.s, c.t, i, v)
                    if want != got:
                        raise ValueError(f"v-face {i} mismatch at {c}")
        return True


def z_lower_required(p, q):
    """Bitruncation of the input needed for the (p, q)-cells of z_*."""
    return (p, p + q + 1)


def z_lower_domain(p, q, s_max, t_max):
    """The jointly nondegenerate prism cells within the given bounds."""
    out = []
    for s in range(min(p, s_max) + 1):
        for t in range(t_max + 1):
            out.extend(c for c in prism_cells(p, q, s, t) if prism_nondegenerate(c))
    return out


def eta_lower(X, p, q, x, s_max=None, t_max=None):
    """The natural map X -> z_* X: the value at a prism cell is x acted on
    by (phi_hat restricted to S, psi)."""
    s_max = X.P if s_max is None else s_max
    t_max = X.Q if t_max is None else t_max
    assignment = {}
    for c in z_lower_domain(p, q, s_max, t_max):
        phi = DeltaMap(c.s_part, p)
        psi = DeltaMap(c.psi, q)
        assignment[c] = X.act(phi, psi, x)
    return PrismMap(X, p, q, assignment, s_max=s_max, t_max=t_max)


def z_lower_counit(X, F):
    """Adjunction counit z* z_* X -> X evaluated on a z_*-cell F at
    bidegree (p, q): pick out F's value at the tautological cell."""
    p = F.p - F.q - 1
    q = F.q
    c = PrismCell(p, q, delta_identity(q + 1 + p), delta_identity(q))
    return F.value(c)


def enumerate_z_lower(X, p, q, s_max=None, t_max=None):
    """All (p, q)-cells of z_* X by backtracking over nondegenerate prism
    cells in order of total degree."""
    s_max = min(p, X.P if s_max is None else s_max)
    t_max = min(p + q + 1, X.Q if t_max is None else t_max)
    domain = sorted(z_lower_domain(p, q, s_max, t_max),
                    key=lambda c: (c.s + c.t, c.s, c.phi_hat, c.psi))
    results = []

    def viable(partial, c, v):
        if c.s > 0:
            for i in range(c.s + 1):
                f = prism_h_face(c, i)
                core, _ = prism_normalize(f)
                if core in partial and \
                        prism_value(X, partial, f) != X.h_face(c.s, c.t, i, v):
                    return False
        if c.t > 0:
            for i in range(c.t + 1):
                f = prism_v_face(c, i)
                core, _ = prism_normalize(f)
                if core in partial and \
                        prism_value(X, partial, f) != X.v_face(c.s, c.t, i, v):
                    return False
        return True

    def backtrack(k, partial):
        if k == len(domain):
            results.append(PrismMap(X, p, q, dict(partial), s_max, t_max))
            return
        c = domain[k]
        for v in X.simplices(c.s, c.t):
            if viable(partial, c, v):
                partial[c] = v
                backtrack(k + 1, partial)
                del partial[c]

    backtrack(0, {})
    return results


# ---------------------------------------------------------------------------
# homology


def smith_diagonal(M):
    """Diagonal of the Smith normal form of an integer matrix, with the
    divisibility chain enforced; exact arbitrary-precision arithmetic."""
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    top = 0
    while top < min(m, n):
        # locate a pivot of minimal absolute value
        best = None
        for i in range(top, m):
            for j in range(top, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        A[top], A[i0] = A[i0], A[top]
        for row in A:
            row[top], row[j0] = row[j0], row[top]
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, m):
                if A[i][top]:
                    qt = A[i][top] // A[top][top]
                    for j in range(top, n):
                        A[i][j] -= qt * A[top][j]
                    if A[i][top]:
                        A[top], A[i] = A[i], A[top]
                        dirty = True
            for j in range(top + 1, n):
                if A[top][j]:
                    qt = A[top][j] // A[top][top]
                    for i in range(top, m):
                        A[i][j] -= qt * A[i][top]
                    if A[top][j]:
                        for i in range(top, m):
                            A[i][top], A[i][j] = A[i][j], A[i][top]
                        dirty = True
        diag.append(abs(A[top][top]))
        top += 1
    # enforce divisibility d1 | d2 | ...
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            if a and b % a != 0:
                g = gcd(a, b)
                diag[i], diag[j] = g, a * b // g
    return sorted(diag)


@dataclass(frozen=True)
class AbGroup:
    """Finitely generated abelian group: free rank plus torsion factors."""
    free_rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion


def boundary_matrix(X, d):
    """Boundary of the normalized complex from degree d to d-1."""
    rows = X.nondegenerate(d - 1)
    cols = X.nondegenerate(d)
    index = {x: i for i, x in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, x in enumerate(cols):
        for i in range(d + 1):
            y = X.face(d, i, x)
            if y in index:
                M[index[y]][j] += (-1) ** i
    return M


def homology(X, maxdeg):
    """Integral homology groups H_0 .. H_maxdeg of the normalized complex."""
    if X.truncation < maxdeg + 1:
        raise TruncationError(
            f"homology to degree {maxdeg} needs truncation {maxdeg + 1}, "
            f"got {X.truncation}")
    counts = [len(X.nondegenerate(d)) for d in range(maxdeg + 2)]
    ranks = [0] * (maxdeg + 2)
    torsions = [()] * (maxdeg + 2)
    for d in range(1, maxdeg + 2):
        if counts[d] == 0 or counts[d - 1] == 0:
            ranks[d] = 0
            torsions[d] = ()
            continue
        diag = smith_diagonal(boundary_matrix(X, d))
        nonzero = [x for x in diag if x != 0]
        ranks[d] = len(nonzero)
        torsions[d] = tuple(x for x in nonzero if x > 1)
    out = []
    for d in range(maxdeg + 1):
        free = counts[d] - ranks[d] - ranks[d + 1]
        out.append(AbGroup(free, torsions[d + 1]))
    return out


# ---------------------------------------------------------------------------
# JSON dump/load


def dump_sset(X):
    doc = {"kind": "sset", "truncation": X.truncation, "cells": {}, "faces": {},
           "degeneracies": {}}
    index = {d: {x: i for i, x in enumerate(X.simplices(d))}
             for d in range(X.truncation + 1)}
    for d in range(X.truncation + 1):
        doc["cells"][str(d)] = [repr(x) for x in X.simplices(d)]
        if d > 0:
            doc["faces"][str(d)] = [
                [index[d - 1][X.face(d, i, x)] for i in range(d + 1)]
                for x in X.simplices(d)]
        if d < X.truncation:
            doc["degeneracies"][str(d)] = [
                [index[d + 1][X.degen(d, i, x)] for i in range(d + 1)]
                for x in X.simplices(d)]
    return doc


def load_sset(doc):
    truncation = doc["truncation"]
    cells = {d: [(d, i) for i in range(len(doc["cells"][str(d)]))]
             for d in range(truncation + 1)}
    faces = {int(k): v for k, v in doc["faces"].items()}
    degens = {int(k): v for k, v in doc["degeneracies"].items()}

    def face(d, i, x):
        return (d - 1, faces[d][x[1]][i])

    def degen(d, i, x):
        return (d + 1, degens[d][x[1]][i])

    return SSet(truncation, cells, face, degen, name="loaded")


def dump_bisset(X):
    doc = {"kind": "bisset", "P": X.P, "Q": X.Q, "cells": {},
           "h_faces": {}, "v_faces": {}, "h_degeneracies": {},
           "v_degeneracies": {}}
    index = {}
    for (p, q), xs in sorted(X.cells.items()):
        index[(p, q)] = {x: i for i, x in enumerate(xs)}
    for (p, q), xs in sorted(X.cells.items()):
        key = f"{p},{q}"
        doc["cells"][key] = [repr(x) for x in xs]
        if p > 0:
            doc["h_faces"][key] = [
                [index[(p - 1, q)][X.h_face(p, q, i, x)] for i in range(p + 1)]
                for x in xs]
        if q > 0:
            doc["v_faces"][key] = [
                [index[(p, q - 1)][X.v_face(p, q, i, x)] for i in range(q + 1)]
                for x in xs]
        if p < X.P:
            doc["h_degeneracies"][key] = [
                [index[(p + 1, q)][X.h_degen(p, q, i, x)] for i in range(p + 1)]
                for x in xs]
        if q < X.Q:
            doc["v_degeneracies"][key] = [
                [index[(p, q + 1)][X.v_degen(p, q, i, x)] for i in range(q + 1)]
                for x in xs]
    return doc


def load_bisset(doc):
    P, Q = doc["P"], doc["Q"]
    cells = {}
    for key, xs in doc["cells"].items():
        p, q = map(int, key.split(","))
        cells[(p, q)] = [(p, q, i) for i in range(len(xs))]
    hf = {k: v for k, v in doc["h_faces"].items()}
    vf = {k: v for k, v in doc["v_faces"].items()}
    hd = {k: v for k, v in doc["h_degeneracies"].items()}
    vd = {k: v for k, v in doc["v_degeneracies"].items()}

    def h_face(p, q, i, x):
        return (p - 1, q, hf[f"{p},{q}"][x[2]][i])

    def v_face(p, q, i, x):
        return (p, q - 1, vf[f"{p},{q}"][x[2]][i])

    def h_degen(p, q, i, x):
        return (p + 1, q, hd[f"{p},{q}"][x[2]][i])

    def v_degen(p, q, i, x):
        return (p, q + 1, vd[f"{p},{q}"][x[2]][i])

    return BiSSet(P, Q, cells, h_face, v_face, h_degen, v_degen, name="loaded")
