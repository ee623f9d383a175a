"""Exact faithful representation of the triangle group Delta(p1, p2, p3).

The extended triangle (Coxeter) group acts on a 3-dimensional space over
Q(zeta_n), n = lcm(2p1, 2p2, 2p3), by reflections R1, R2, R3 preserving the
cosine form

    B[i][i] = 1,  B[1][2] = -cos(pi/p3),  B[1][3] = -cos(pi/p2),  B[2][3] = -cos(pi/p1).

The rotations s1 = R2 R3, s2 = R3 R1, s3 = R1 R2 generate the orientation
preserving subgroup, and s1 s2 s3 = 1 holds on the nose.  Tits' theorem makes
the representation faithful, so equality of group elements is equality of
matrices.
"""

import threading
from fractions import Fraction
from math import gcd, inf
from typing import NamedTuple

from .cyclotomic import field_new, poly_mul, two_cos_pi_over, CycNum, canonical_key
from .errors import InternalInvariantError, MixedContextError, NotFiniteError
from .words import Word, parse_word

INFINITE = inf


def _lcm(*args):
    out = 1
    for a in args:
        out = out * a // gcd(out, a)
    return out


class TriangleSignature(NamedTuple):
    p1: int
    p2: int
    p3: int

    @classmethod
    def parse(cls, text):
        parts = [int(x) for x in str(text).replace(" ", "").strip("()").split(",")]
        if len(parts) != 3:
            raise ValueError("signature needs three orders, got %r" % (text,))
        return cls(*parts).validated()

    def validated(self):
        for p in self:
            if not isinstance(p, int) or p < 2:
                raise ValueError("cone orders must be integers >= 2, got %r" % (tuple(self),))
        return self

    def __str__(self):
        return "%d,%d,%d" % self


# -- 3x3 matrices as row-major 9-tuples of CycNum ---------------------------

def _matmul_generic(a, b):
    out = []
    for i in range(3):
        for j in range(3):
            out.append(a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j])
    return tuple(out)


def _matmul(field, a, b):
    if any(x.den != 1 for x in a) or any(x.den != 1 for x in b):
        return _matmul_generic(a, b)
    d = field.degree
    zero = (0,) * d
    out = []
    an = [x.num if any(x.num) else None for x in a]
    bn = [x.num if any(x.num) else None for x in b]
    for i in range(3):
        for j in range(3):
            acc = None
            for k in range(3):
                x, y = an[3 * i + k], bn[3 * k + j]
                if x is None or y is None:
                    continue
                p = poly_mul(x, y)
                if acc is None:
                    acc = p
                else:
                    acc = [s + t for s, t in zip(acc, p)]
            if acc is None:
                out.append(CycNum._make(field, zero, 1))
            else:
                out.append(CycNum._make(field, tuple(field.reduce(acc)), 1))
    return tuple(out)


def _transpose(a):
    return (a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8])


def _det(m):
    return (m[0] * (m[4] * m[8] - m[5] * m[7])
            - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6]))


def _adjugate(m):
    return (
        m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
        m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
        m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3],
    )


class GroupElement:
    """A group element, held as its 3x3 Tits matrix (row-major)."""

    __slots__ = ("ctx", "matrix", "_key")

    def __init__(self, ctx, matrix):
        self.ctx = ctx
        self.matrix = tuple(matrix)
        self._key = None

    def _same(self, other):
        if not isinstance(other, GroupElement) or other.ctx is not self.ctx:
            raise MixedContextError("elements come from different group contexts")

    def __mul__(self, other):
        self._same(other)
        return GroupElement(self.ctx, _matmul(self.ctx.field, self.matrix, other.matrix))

    def inverse(self):
        # det = 1 for rotations, so the adjugate is the inverse
        return GroupElement(self.ctx, _adjugate(self.matrix))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.identity
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def key(self):
        if self._key is None:
            self._key = b";".join(canonical_key(x) for x in self.matrix)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._same(other)
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.key())

    def is_identity(self):
        return self.matrix == self.ctx.identity.matrix

    def __repr__(self):
        return "GroupElement(<%s>, key=%s...)" % (self.ctx.signature, self.key()[:24])


class GroupContext:
    """Everything needed to compute in Delta(p1, p2, p3).  Build with
    :func:`group_new`."""

    def __init__(self, sig):
        sig = TriangleSignature(*sig).validated()
        self.signature = sig
        self.orders = tuple(sig)
        self.field = f = field_new(_lcm(2 * sig.p1, 2 * sig.p2, 2 * sig.p3))
        zero, one = f.zero(), f.one()
        half = Fraction(1, 2)
        # mirror pair (i, j) meets at angle pi/m; m for {1,2} is p3, etc.
        m = {(0, 1): sig.p3, (0, 2): sig.p2, (1, 2): sig.p1}
        twocos = {}
        for (i, j), p in m.items():
            twocos[i, j] = twocos[j, i] = two_cos_pi_over(f, p)
        self.form = tuple(
            one if i == j else twocos[i, j] * (-half)
            for i in range(3) for j in range(3))
        reflections = []
        for i in range(3):
            rows = []
            for r in range(3):
                for c in range(3):
                    if r != i:
                        rows.append(one if r == c else zero)
                    elif c == i:
                        rows.append(-one)
                    else:
                        rows.append(twocos[i, c])
            reflections.append(tuple(rows))
        self.reflections = tuple(reflections)
        self.identity = GroupElement(self, tuple(one if i == j else zero
                                                 for i in range(3) for j in range(3)))
        R1, R2, R3 = reflections
        gens = [GroupElement(self, _matmul(f, R2, R3)),
                GroupElement(self, _matmul(f, R3, R1)),
                GroupElement(self, _matmul(f, R1, R2))]
        self.generators = tuple(gens)
        # _powers[g][k] = s_g^k for 0 <= k < p_g
        self._powers = []
        for g, p in zip(gens, self.orders):
            pw = [self.identity]
            for _ in range(p - 1):
                pw.append(pw[-1] * g)
            self._powers.append(pw)
        self._self_check()

    def _self_check(self):
        B = self.form
        for i, R in enumerate(self.reflections):
            if _matmul_generic(_matmul_generic(_transpose(R), B), R) != B:
                raise InternalInvariantError("R%d does not preserve the form" % (i + 1))
        s1, s2, s3 = self.generators
        if not (s1 * s2 * s3).is_identity():
            raise InternalInvariantError("s1 s2 s3 != 1")
        for i, (g, p) in enumerate(zip(self.generators, self.orders)):
            if not (self._powers[i][-1] * g).is_identity():
                raise InternalInvariantError("s%d^%d != 1" % (i + 1, p))
            for k in range(1, p):
                if self._powers[i][k].is_identity():
                    raise InternalInvariantError("s%d has order %d < %d" % (i + 1, k, p))

    def __repr__(self):
        return "GroupContext(%s)" % (tuple(self.signature),)

    def gen_power(self, g, e):
        if not 1 <= g <= 3:
            raise ValueError("triangle groups have generators s1, s2, s3; got s%d" % g)
        return self._powers[g - 1][e % self.orders[g - 1]]

    def eval(self, w):
        return eval_word(self, w)

    def preserves_form(self, a):
        M = a.matrix
        return _matmul_generic(_matmul_generic(_transpose(M), self.form), M) == self.form


_CONTEXTS = {}
_LOCK = threading.RLock()


def group_new(sig):
    """Cached :class:`GroupContext` for a signature (one per signature, so
    elements built in different threads stay comparable)."""
    sig = TriangleSignature(*sig).validated()
    with _LOCK:
        ctx = _CONTEXTS.get(sig)
        if ctx is None:
            ctx = _CONTEXTS[sig] = GroupContext(sig)
    return ctx


def eval_word(ctx, w):
    """Image of a word in s1, s2, s3 (text or :class:`Word`)."""
    w = parse_word(w)
    result = ctx.identity
    for g, e in w.letters:
        p = ctx.gen_power(g, e)
        if not p.is_identity():
            result = p if result is ctx.identity else result * p
    return result


def equal(a, b):
    return a == b


def is_identity(a):
    return a.is_identity()


def element_key(a):
    return a.key()


def order(ctx, a):
    """Order of ``a``: an int, or :data:`INFINITE`.

    Finite-order elements of a triangle group are conjugate into some
    <s_i>, so only divisors of p1, p2, p3 are tried.
    """
    if a.ctx is not ctx:
        raise MixedContextError("element is not from this context")
    candidates = sorted({d for p in ctx.orders for d in range(1, p + 1) if p % d == 0})
    power = ctx.identity
    k = 0
    for c in candidates:
        while k < c:
            power = power * a
            k += 1
        if power.is_identity():
            return c
    return INFINITE


def geometry_type(sig):
    total = sum(Fraction(1, p) for p in sig)
    if total > 1:
        return "spherical"
    if total == 1:
        return "euclidean"
    return "hyperbolic"


def enumerate_group(ctx):
    """All elements of a finite triangle group, in breadth-first order from
    the identity (right multiplication by s1, s2, s3)."""
    if geometry_type(ctx.signature) != "spherical":
        raise NotFiniteError("Delta%s is infinite" % (tuple(ctx.signature),))
    seen = {ctx.identity.key(): ctx.identity}
    frontier = [ctx.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in ctx.generators:
                b = a * g
                k = b.key()
                if k not in seen:
                    seen[k] = b
                    nxt.append(b)
        frontier = nxt
    return list(seen.values())


class FiniteGroup:
    """A finite triangle group with its elements indexed 0..N-1 and a lazily
    filled multiplication table.  Index 0 is the identity."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.elements = enumerate_group(ctx)
        self.index = {a.key(): i for i, a in enumerate(self.elements)}
        n = len(self.elements)
        self._mul = [[-1] * n for _ in range(n)]
        self.inv = [self.index[a.inverse().key()] for a in self.elements]
        self.generator_index = tuple(self.index[g.key()] for g in ctx.generators)

    def __len__(self):
        return len(self.elements)

    def mul(self, i, j):
        r = self._mul[i][j]
        if r < 0:
            r = self._mul[i][j] = self.index[(self.elements[i] * self.elements[j]).key()]
        return r

    def index_of(self, a):
        return self.index[a.key()]

    def subgroup_closure(self, gens):
        """Indices of the subgroup generated by the given element indices."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def generates(self, gens):
        return len(self.subgroup_closure(gens)) == len(self.elements)


_FINITE = {}


def finite_group(ctx):
    with _LOCK:
        fg = _FINITE.get(ctx.signature)
        if fg is None or fg.ctx is not ctx:
            fg = _FINITE[ctx.signature] = FiniteGroup(ctx)
    return fg


__all__ = [
    "INFINITE", "TriangleSignature", "GroupElement", "GroupContext", "group_new",
    "eval_word", "equal", "is_identity", "element_key", "order", "geometry_type",
    "enumerate_group", "FiniteGroup", "finite_group", "Word",
]
