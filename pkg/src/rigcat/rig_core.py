"""Computable presentations of strictly bimonoidal groupoids.

A category here is a small groupoid equipped with two strict monoidal
structures (written ``add``/``mul`` for objects and morphisms), a
distinguished additive symmetry ``sym_add`` and a left distributivity
isomorphism ``left_dist``.  Addition and multiplication are strictly
associative and unital, right distributivity holds on the nose, left
distributivity only up to the recorded isomorphism.

Three families of instances are provided:

* discrete rigs (only identity morphisms, objects the rig elements),
* the category of finite sets and permutations,
* finitely generated free modules over Z/k with invertible matrices.
"""

from __future__ import annotations

import json
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import permutations, product


class RigError(Exception):
    """Malformed presentation or misuse of a category operation."""


class RigAxiomError(RigError):
    """A rig axiom fails; the message names the axiom and the witnesses."""


class OutOfRangeError(RigError):
    """An operation left the bounded object universe."""


# ---------------------------------------------------------------------------
# instrumentation
#
# The additive symmetry carries its own call counter so that validators can
# certify they never reorder sums.  Calls made while building one of the
# declared structural isomorphisms (matrix associativity / distributivity)
# are attributed to those builders instead.


class OpCounters:
    def __init__(self):
        self.reset()

    def reset(self):
        self.sym_add = 0        # direct uses of the additive symmetry
        self.mat_assoc = 0      # matrix-multiplication associator builds
        self.mat_dist = 0       # matrix-level left distributivity builds
        self._structural_depth = 0

    def snapshot(self):
        return {"sym_add": self.sym_add, "mat_assoc": self.mat_assoc,
                "mat_dist": self.mat_dist}


COUNTERS = OpCounters()


@contextmanager
def structural_scope():
    """Mark symmetry uses as internal to a structural-isomorphism builder."""
    COUNTERS._structural_depth += 1
    try:
        yield
    finally:
        COUNTERS._structural_depth -= 1


@dataclass(frozen=True)
class Mor:
    """Morphism with source, target and a hashable normal form.

    ``data`` is category specific: ``("id",)`` in a discrete category,
    ``("perm", images)`` in the category of finite sets, ``("mat", rows)``
    for matrices over a finite ring.  Equality of morphisms is equality of
    the triple, which is exactly equality of normal forms.
    """
    src: object
    tgt: object
    data: tuple

    def __repr__(self):
        return f"Mor({self.src}->{self.tgt}, {self.data})"


# ---------------------------------------------------------------------------
# finite rigs (the pi0 layer and the discrete instances)


class FiniteRig:
    """A rig given by element list and operation tables/functions.

    ``total`` distinguishes honest finite rigs (Z/k) from truncations of
    infinite ones (N up to a bound) where operations may leave the carrier;
    leaving it raises OutOfRangeError.
    """

    VALIDATION_CAP = 30  # axiom triples are checked on at most this many elements

    def __init__(self, name, elements, add, mul, zero, one,
                 total=True, cancellative=False, is_ring=False):
        self.name = name
        # a range stays a range: constant-time membership, no huge lists
        self.elements = elements if isinstance(elements, range) else list(elements)
        self._add = add
        self._mul = mul
        self.zero = zero
        self.one = one
        self.total = total
        self.cancellative = cancellative
        self.is_ring = is_ring

    def add(self, a, b):
        r = self._add(a, b)
        if self.total and r not in self._element_set():
            raise OutOfRangeError(f"{self.name}: {a}+{b} leaves the carrier")
        return r

    def mul(self, a, b):
        r = self._mul(a, b)
        if self.total and r not in self._element_set():
            raise OutOfRangeError(f"{self.name}: {a}*{b} leaves the carrier")
        return r

    def _element_set(self):
        if isinstance(self.elements, range):
            return self.elements
        if not hasattr(self, "_eset"):
            self._eset = set(self.elements)
        return self._eset

    def validate(self):
        """Check the rig axioms, on all triples for small carriers and on a
        prefix of VALIDATION_CAP elements for large ones.

        Raises RigAxiomError naming the first failing axiom instance.
        Truncated rigs are checked only where all intermediate values stay
        in the carrier.
        """
        els = list(self.elements[:self.VALIDATION_CAP]) \
            if isinstance(self.elements, range) else self.elements[:self.VALIDATION_CAP]
        eset = self._element_set()

        def safe(op, a, b):
            r = op(a, b)
            return r if r in eset else None

        for a in els:
            if safe(self._add, a, self.zero) not in (a,):
                raise RigAxiomError(f"additive unit fails at {a}")
            if safe(self._add, self.zero, a) not in (a,):
                raise RigAxiomError(f"additive unit fails at {a}")
            if safe(self._mul, a, self.one) not in (a,):
                raise RigAxiomError(f"multiplicative unit fails at {a}")
            if safe(self._mul, self.one, a) not in (a,):
                raise RigAxiomError(f"multiplicative unit fails at {a}")
            if safe(self._mul, a, self.zero) not in (self.zero,):
                raise RigAxiomError(f"zero absorption fails at {a}")
            if safe(self._mul, self.zero, a) not in (self.zero,):
                raise RigAxiomError(f"zero absorption fails at {a}")
        for a, b in product(els, repeat=2):
            x, y = safe(self._add, a, b), safe(self._add, b, a)
            if x is not None and y is not None and x != y:
                raise RigAxiomError(f"additive commutativity fails at ({a},{b})")
        for a, b, c in product(els, repeat=3):
            lhs = safe(self._add, a, b)
            lhs = safe(self._add, lhs, c) if lhs is not None else None
            rhs = safe(self._add, b, c)
            rhs = safe(self._add, a, rhs) if rhs is not None else None
            if lhs is not None and rhs is not None and lhs != rhs:
                raise RigAxiomError(f"additive associativity fails at ({a},{b},{c})")
            lhs = safe(self._mul, a, b)
            lhs = safe(self._mul, lhs, c) if lhs is not None else None
            rhs = safe(self._mul, b, c)
            rhs = safe(self._mul, a, rhs) if rhs is not None else None
            if lhs is not None and rhs is not None and lhs != rhs:
                raise RigAxiomError(f"multiplicative associativity fails at ({a},{b},{c})")
            s = safe(self._add, b, c)
            lhs = safe(self._mul, a, s) if s is not None else None
            p1, p2 = safe(self._mul, a, b), safe(self._mul, a, c)
            rhs = safe(self._add, p1, p2) if p1 is not None and p2 is not None else None
            if lhs is not None and rhs is not None and lhs != rhs:
                raise RigAxiomError(f"left distributivity fails at ({a},{b},{c})")
            lhs = safe(self._mul, s, a) if s is not None else None
            q1, q2 = safe(self._mul, b, a), safe(self._mul, c, a)
            rhs = safe(self._add, q1, q2) if q1 is not None and q2 is not None else None
            if lhs is not None and rhs is not None and lhs != rhs:
                raise RigAxiomError(f"right distributivity fails at ({a},{b},{c})")
        return self


def zmod(k):
    """The ring Z/k as a FiniteRig."""
    return FiniteRig(
        f"Z/{k}", range(k),
        lambda a, b: (a + b) % k, lambda a, b: (a * b) % k,
        0, 1 % k, total=True, cancellative=True, is_ring=True)


def nat_truncated(bound):
    """The rig of naturals enumerated up to ``bound``; ops past it fail loudly."""
    return FiniteRig(
        f"N<={bound}", range(bound + 1),
        lambda a, b: a + b, lambda a, b: a * b,
        0, 1, total=True, cancellative=True, is_ring=False)


def table_rig(elements, add_table, mul_table, zero, one, name="table"):
    """Rig from explicit operation tables (used to inject broken axioms)."""
    idx = {e: i for i, e in enumerate(elements)}

    def add(a, b):
        return add_table[idx[a]][idx[b]]

    def mul(a, b):
        return mul_table[idx[a]][idx[b]]

    return FiniteRig(name, elements, add, mul, zero, one)


class Pi0Rig:
    """Rig structure on connected-component labels of a category."""

    def __init__(self, name, elements, add, mul, zero, one,
                 cancellative, is_ring):
        self.name = name
        self.elements = list(elements)
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.cancellative = cancellative
        self.is_ring = is_ring


class GrRing:
    """Additive group completion of a Pi0Rig.

    For a ring the completion is the ring itself and the canonical map is
    the identity.  For a cancellative monoid of naturals the completion is
    Z, the class of a pair (a, b) being a - b.  Anything else is rejected.
    """

    def __init__(self, pi0):
        self.pi0 = pi0
        if pi0.is_ring:
            self.kind = "self"
            self.name = pi0.name
        elif pi0.cancellative:
            self.kind = "Z"
            self.name = "Z"
        else:
            raise RigError(
                f"group completion of {pi0.name}: carrier is neither a ring "
                "nor a cancellative monoid; unsupported")

    def from_pi0(self, a):
        """Canonical rig map from the pi0 carrier."""
        return a

    def from_pair(self, a, b):
        """Class of the formal difference a - b."""
        if self.kind == "Z":
            return a - b
        return self.sub(self.from_pi0(a), self.from_pi0(b))

    def add(self, a, b):
        return a + b if self.kind == "Z" else self.pi0.add(a, b)

    def mul(self, a, b):
        return a * b if self.kind == "Z" else self.pi0.mul(a, b)

    def sub(self, a, b):
        if self.kind == "Z":
            return a - b
        return next(x for x in self.pi0.elements if self.pi0.add(b, x) == a)

    def neg(self, a):
        return self.sub(self.zero(), a)

    def zero(self):
        return 0 if self.kind == "Z" else self.pi0.zero

    def one(self):
        return 1 if self.kind == "Z" else self.pi0.one

    def is_invertible(self, a):
        if self.kind == "Z":
            return a in (1, -1)
        return any(self.mul(a, x) == self.one() for x in self.pi0.elements)


def grothendieck(pi0):
    """Group completion of a Pi0Rig; see GrRing for what is supported."""
    return GrRing(pi0)


# ---------------------------------------------------------------------------
# rig categories


class RigCategory:
    """Base class; concrete categories fill in the _-prefixed primitives."""

    name = "rig-category"
    zero = None
    one = None

    # -- groupoid layer

    def objects(self):
        raise NotImplementedError

    def is_object(self, a):
        raise NotImplementedError

    def hom(self, a, b):
        raise NotImplementedError

    def identity(self, a):
        raise NotImplementedError

    def compose(self, g, f):
        if f.tgt != g.src:
            raise RigError(f"not composable: {f} then {g}")
        return self._compose(g, f)

    def inverse(self, f):
        raise NotImplementedError

    def is_identity(self, f):
        return f == self.identity(f.src)

    # -- bimonoidal layer

    def add_obj(self, a, b):
        raise NotImplementedError

    def add_mor(self, f, g):
        raise NotImplementedError

    def mul_obj(self, a, b):
        raise NotImplementedError

    def mul_mor(self, f, g):
        raise NotImplementedError

    def sym_add(self, a, b):
        """c_+(a,b): a+b -> b+a.  Counted; see OpCounters."""
        if COUNTERS._structural_depth == 0:
            COUNTERS.sym_add += 1
        return self._sym_add(a, b)

    def left_dist(self, a, b, c):
        """d_l(a;b,c): a*b + a*c -> a*(b+c)."""
        return self._left_dist(a, b, c)

    def pi0_label(self, a):
        raise NotImplementedError

    def pi0(self):
        raise NotImplementedError

    # -- conveniences shared by all instances

    def sum_obj(self, objs):
        """Left-nested sum; the empty sum is the zero object."""
        acc = self.zero
        for o in objs:
            acc = self.add_obj(acc, o)
        return acc

    def sum_mor(self, mors):
        acc = self.identity(self.zero)
        for f in mors:
            acc = self.add_mor(acc, f)
        return acc

    def random_object(self, rng, bound):
        raise NotImplementedError

    def random_auto(self, rng, a):
        """A random automorphism of ``a``."""
        raise NotImplementedError


class DiscreteRigCategory(RigCategory):
    """Discrete category on a finite rig: only identity morphisms."""

    def __init__(self, rig):
        rig.validate()
        self.rig = rig
        self.name = f"discrete({rig.name})"
        self.zero = rig.zero
        self.one = rig.one

    def objects(self):
        e = self.rig.elements
        return e if isinstance(e, range) else list(e)

    def is_object(self, a):
        return a in self.rig._element_set()

    def hom(self, a, b):
        return [self.identity(a)] if a == b else []

    def identity(self, a):
        return Mor(a, a, ("id",))

    def _compose(self, g, f):
        return f

    def inverse(self, f):
        return f

    def add_obj(self, a, b):
        return self.rig.add(a, b)

    def add_mor(self, f, g):
        return self.identity(self.add_obj(f.src, g.src))

    def mul_obj(self, a, b):
        return self.rig.mul(a, b)

    def mul_mor(self, f, g):
        return self.identity(self.mul_obj(f.src, g.src))

    def _sym_add(self, a, b):
        return self.identity(self.add_obj(a, b))

    def _left_dist(self, a, b, c):
        src = self.add_obj(self.mul_obj(a, b), self.mul_obj(a, c))
        return Mor(src, self.mul_obj(a, self.add_obj(b, c)), ("id",))

    def pi0_label(self, a):
        return a

    def pi0(self):
        r = self.rig
        return Pi0Rig(r.name, r.elements, r.add, r.mul, r.zero, r.one,
                      cancellative=r.cancellative, is_ring=r.is_ring)

    def random_object(self, rng, bound):
        e = self.rig.elements
        if isinstance(e, range):
            return rng.randint(0, min(bound, len(e) - 1))
        els = [x for x in e if not isinstance(x, int) or x <= bound]
        return rng.choice(els)

    def random_auto(self, rng, a):
        return self.identity(a)


def build_discrete_rig(rig):
    """Discrete rig category on a finite rig presentation."""
    return DiscreteRigCategory(rig)


# ---------------------------------------------------------------------------
# permutations, the finite-sets instance


def perm_compose(s, t):
    """(s after t) as image tuples."""
    return tuple(s[t[i]] for i in range(len(t)))

def perm_inverse(s):
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v] = i
    return tuple(inv)

def perm_block_sum(s, t):
    m = len(s)
    return s + tuple(m + v for v in t)

def perm_kronecker(s, t):
    """Product permutation on pairs, row-major encoding (i,j) -> i*|t| + j."""
    m, n = len(s), len(t)
    out = [0] * (m * n)
    for i in range(m):
        for j in range(n):
            out[i * n + j] = s[i] * n + t[j]
    return tuple(out)

def block_swap_perm(m, n):
    """The additive symmetry on m+n letters: the m-block moves past the n-block."""
    return tuple(list(range(n, n + m)) + list(range(n)))

class FiniteSetsCategory(RigCategory):
    """Finite sets 0..bound with permutations; + is disjoint sum, * product."""

    def __init__(self, bound):
        if bound < 1:
            raise RigError("finite-sets bound must be >= 1")
        self.bound = bound
        self.name = f"E(<={bound})"
        self.zero = 0
        self.one = 1

    def objects(self):
        return list(range(self.bound + 1))

    def is_object(self, a):
        return isinstance(a, int) and 0 <= a <= self.bound

    def _check(self, a):
        if not self.is_object(a):
            raise OutOfRangeError(f"{self.name}: object {a} out of range")
        return a

    def hom(self, a, b):
        if a != b:
            return []
        if a > 6:
            raise OutOfRangeError(f"{self.name}: refusing to enumerate S_{a}")
        return [Mor(a, a, ("perm", p)) for p in permutations(range(a))]

    def identity(self, a):
        self._check(a)
        return Mor(a, a, ("perm", tuple(range(a))))

    def _compose(self, g, f):
        return Mor(f.src, g.tgt, ("perm", perm_compose(g.data[1], f.data[1])))

    def inverse(self, f):
        return Mor(f.tgt, f.src, ("perm", perm_inverse(f.data[1])))

    def add_obj(self, a, b):
        return self._check(a + b)

    def add_mor(self, f, g):
        return Mor(self.add_obj(f.src, g.src), self.add_obj(f.tgt, g.tgt),
                   ("perm", perm_block_sum(f.data[1], g.data[1])))

    def mul_obj(self, a, b):
        return self._check(a * b)

    def mul_mor(self, f, g):
        return Mor(self.mul_obj(f.src, g.src), self.mul_obj(f.tgt, g.tgt),
                   ("perm", perm_kronecker(f.data[1], g.data[1])))

    def _sym_add(self, a, b):
        return Mor(self.add_obj(a, b), self.add_obj(b, a),
                   ("perm", block_swap_perm(a, b)))

    def _left_dist(self, a, b, c):
        # source a*b + a*c, target a*(b+c); slot (i,j) of the first block goes
        # to pair (i, j), slot (i,k) of the second to pair (i, b+k).
        src = self.add_obj(self.mul_obj(a, b), self.mul_obj(a, c))
        tgt = self.mul_obj(a, self.add_obj(b, c))
        out = [0] * src
        for i in range(a):
            for j in range(b):
                out[i * b + j] = i * (b + c) + j
            for k in range(c):
                out[a * b + i * c + k] = i * (b + c) + b + k
        return Mor(src, tgt, ("perm", tuple(out)))

    def pi0_label(self, a):
        return a

    def pi0(self):
        return Pi0Rig("N", range(self.bound + 1),
                      lambda a, b: a + b, lambda a, b: a * b, 0, 1,
                      cancellative=True, is_ring=False)

    def random_object(self, rng, bound):
        return rng.randint(0, min(bound, self.bound))

    def random_auto(self, rng, a):
        p = list(range(a))
        rng.shuffle(p)
        return Mor(a, a, ("perm", tuple(p)))


def build_finite_sets_E(bound):
    return FiniteSetsCategory(bound)


# ---------------------------------------------------------------------------
# free modules over Z/k


def _ring_dot(ring, row, col):
    acc = ring.zero
    for a, b in zip(row, col):
        acc = ring.add(acc, ring.mul(a, b))
    return acc


def ring_matmul(ring, A, B):
    n = len(A)
    m = len(B)
    p = len(B[0]) if m else 0
    out = []
    for i in range(n):
        out.append(tuple(_ring_dot(ring, A[i], [B[k][j] for k in range(m)])
                         for j in range(p)))
    return tuple(out)


def ring_identity_matrix(ring, n):
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(n))
                 for i in range(n))


def ring_det(ring, A):
    """Determinant over a commutative ring by cofactor expansion."""
    n = len(A)
    if n == 0:
        return ring.one
    if n == 1:
        return A[0][0]
    acc = ring.zero
    sign = True
    for j in range(n):
        minor = tuple(tuple(row[k] for k in range(n) if k != j) for row in A[1:])
        term = ring.mul(A[0][j], ring_det(ring, minor))
        if sign:
            acc = ring.add(acc, term)
        else:
            acc = ring.add(acc, _ring_neg(ring, term))
        sign = not sign
    return acc


def _ring_neg(ring, a):
    return next(x for x in ring.elements if ring.add(a, x) == ring.zero)


class FreeModulesCategory(RigCategory):
    """Free modules over a finite commutative ring; morphisms are invertible
    matrices.  Objects are ranks, + block sum, * Kronecker (row-major)."""

    def __init__(self, ring, bound):
        ring.validate()
        if not ring.is_ring:
            raise RigError("free modules need a ring")
        self.ring = ring
        self.bound = bound
        self.name = f"F({ring.name},<= {bound})"
        self.zero = 0
        self.one = 1

    def objects(self):
        return list(range(self.bound + 1))

    def is_object(self, a):
        return isinstance(a, int) and 0 <= a <= self.bound

    def _check(self, a):
        if not self.is_object(a):
            raise OutOfRangeError(f"{self.name}: rank {a} out of range")
        return a

    def _is_invertible(self, A):
        d = ring_det(self.ring, A)
        return any(self.ring.mul(d, x) == self.ring.one for x in self.ring.elements)

    def make_mor(self, n, rows):
        rows = tuple(tuple(r) for r in rows)
        if not self._is_invertible(rows):
            raise RigError(f"matrix {rows} is not invertible over {self.ring.name}")
        return Mor(n, n, ("mat", rows))

    def hom(self, a, b):
        if a != b:
            return []
        if a > 2 or len(self.ring.elements) ** (a * a) > 4096:
            raise OutOfRangeError("refusing to enumerate a large GL")
        out = []
        for entries in product(self.ring.elements, repeat=a * a):
            rows = tuple(tuple(entries[i * a + j] for j in range(a)) for i in range(a))
            if self._is_invertible(rows):
                out.append(Mor(a, a, ("mat", rows)))
        return out

    def identity(self, a):
        self._check(a)
        return Mor(a, a, ("mat", ring_identity_matrix(self.ring, a)))

    def _compose(self, g, f):
        return Mor(f.src, g.tgt, ("mat", ring_matmul(self.ring, g.data[1], f.data[1])))

    def inverse(self, f):
        A = [list(r) for r in f.data[1]]
        n = len(A)
        # Gauss-Jordan over the finite commutative ring by exhaustive pivots
        I = [list(r) for r in ring_identity_matrix(self.ring, n)]
        ring = self.ring
        for c in range(n):
            piv = None
            for r in range(c, n):
                if any(ring.mul(A[r][c], x) == ring.one for x in ring.elements):
                    piv = r
                    break
            if piv is None:
                raise RigError("matrix not invertible")
            A[c], A[piv] = A[piv], A[c]
            I[c], I[piv] = I[piv], I[c]
            inv = next(x for x in ring.elements if ring.mul(A[c][c], x) == ring.one)
            A[c] = [ring.mul(inv, v) for v in A[c]]
            I[c] = [ring.mul(inv, v) for v in I[c]]
            for r in range(n):
                if r != c and A[r][c] != ring.zero:
                    coef = A[r][c]
                    A[r] = [ring.add(v, _ring_neg(ring, ring.mul(coef, w)))
                            for v, w in zip(A[r], A[c])]
                    I[r] = [ring.add(v, _ring_neg(ring, ring.mul(coef, w)))
                            for v, w in zip(I[r], I[c])]
        return Mor(f.tgt, f.src, ("mat", tuple(tuple(r) for r in I)))

    def add_obj(self, a, b):
        return self._check(a + b)

    def add_mor(self, f, g):
        m, n = f.src, g.src
        rows = []
        for i in range(m):
            rows.append(tuple(f.data[1][i]) + tuple(self.ring.zero for _ in range(n)))
        for i in range(n):
            rows.append(tuple(self.ring.zero for _ in range(m)) + tuple(g.data[1][i]))
        return Mor(self.add_obj(f.src, g.src), self.add_obj(f.tgt, g.tgt),
                   ("mat", tuple(rows)))

    def mul_obj(self, a, b):
        return self._check(a * b)

    def mul_mor(self, f, g):
        m, n = f.src, g.src
        A, B = f.data[1], g.data[1]
        rows = []
        for i in range(m):
            for j in range(n):
                rows.append(tuple(self.ring.mul(A[i][k], B[j][l])
                                  for k in range(m) for l in range(n)))
        return Mor(self.mul_obj(f.src, g.src), self.mul_obj(f.tgt, g.tgt),
                   ("mat", tuple(rows)))

    def _perm_matrix(self, perm, n):
        rows = [[self.ring.zero] * n for _ in range(n)]
        for j in range(n):
            rows[perm[j]][j] = self.ring.one
        return tuple(tuple(r) for r in rows)

    def _sym_add(self, a, b):
        return Mor(self.add_obj(a, b), self.add_obj(b, a),
                   ("mat", self._perm_matrix(block_swap_perm(a, b), a + b)))

    def _left_dist(self, a, b, c):
        E = FiniteSetsCategory(max(1, (a + 1) * (b + c + 1)))
        p = E._left_dist(a, b, c).data[1]
        src = self.add_obj(self.mul_obj(a, b), self.mul_obj(a, c))
        return Mor(src, self.mul_obj(a, self.add_obj(b, c)),
                   ("mat", self._perm_matrix(p, len(p))))

    def pi0_label(self, a):
        return a

    def pi0(self):
        return Pi0Rig("N", range(self.bound + 1),
                      lambda a, b: a + b, lambda a, b: a * b, 0, 1,
                      cancellative=True, is_ring=False)

    def random_object(self, rng, bound):
        return rng.randint(0, min(bound, self.bound))

    def random_auto(self, rng, a):
        # random product of elementary operations applied to the identity
        A = [list(r) for r in ring_identity_matrix(self.ring, a)]
        ring = self.ring
        for _ in range(3 * a):
            kind = rng.randint(0, 1)
            if a >= 2 and kind == 0:
                i, j = rng.sample(range(a), 2)
                coef = rng.choice(ring.elements)
                A[i] = [ring.add(v, ring.mul(coef, w)) for v, w in zip(A[i], A[j])]
            elif a >= 2:
                i, j = rng.sample(range(a), 2)
                A[i], A[j] = A[j], A[i]
        return Mor(a, a, ("mat", tuple(tuple(r) for r in A)))


def build_free_modules(ring, bound):
    return FreeModulesCategory(ring, bound)


# ---------------------------------------------------------------------------
# pi0 of a category


def pi0(cat):
    """Component rig of a rig category.

    Checks that the labeling is constant on connected components (on a
    bounded prefix of the enumerable universe) and separates them, then
    returns the induced rig.
    """
    sample = list(cat.objects()[:30])
    for a in sample:
        for b in sample:
            try:
                homs = cat.hom(a, b)
            except OutOfRangeError:
                continue
            if homs and cat.pi0_label(a) != cat.pi0_label(b):
                raise RigError(
                    f"pi0 labeling splits a component: {a} ~ {b} but "
                    f"{cat.pi0_label(a)} != {cat.pi0_label(b)}")
    return cat.pi0()


# ---------------------------------------------------------------------------
# JSON presentations


def load_category(doc):
    """Build a category from a JSON presentation.

    {"kind": "discrete",     "params": {"rig": "zmod", "k": 6}}
    {"kind": "discrete",     "params": {"rig": "nat"}, "bound": 20}
    {"kind": "discrete",     "params": {"elements": [...], "add": [[..]],
                                        "mul": [[..]], "zero": 0, "one": 1}}
    {"kind": "finite-sets",  "bound": 4}
    {"kind": "free-modules", "params": {"modulus": 2}, "bound": 3}
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    kind = doc.get("kind")
    params = doc.get("params", {})
    bound = doc.get("bound")
    if kind == "discrete":
        if params.get("rig") == "zmod":
            return build_discrete_rig(zmod(params["k"]))
        if params.get("rig") == "nat":
            return build_discrete_rig(nat_truncated(bound if bound is not None else 20))
        if "elements" in params:
            return build_discrete_rig(table_rig(
                params["elements"], params["add"], params["mul"],
                params["zero"], params["one"]).validate())
        raise RigError(f"unknown discrete presentation {params}")
    if kind == "finite-sets":
        return build_finite_sets_E(bound if bound is not None else 4)
    if kind == "free-modules":
        return build_free_modules(zmod(params["modulus"]),
                                  bound if bound is not None else 3)
    raise RigError(f"unknown category kind {kind!r}")


def dump_mor(f):
    """Serialize a morphism: permutations as arrays, matrices row-major."""
    tag = f.data[0]
    if tag == "id":
        return {"kind": "id", "object": f.src}
    if tag == "perm":
        return {"kind": "perm", "images": list(f.data[1])}
    if tag == "mat":
        return {"kind": "mat", "rows": [list(r) for r in f.data[1]]}
    raise RigError(f"cannot serialize {f}")
