"""Nielsen moves on pairs, certified equivalence search and exhaustive orbits.

Moves, in the order used to break ties between equally short certificates::

    T1(1)    g1 -> g1^-1
    T1(2)    g2 -> g2^-1
    T2       (g1, g2) -> (g2, g1)
    T3(1,2)  g1 -> g1 g2
    T3(2,1)  g2 -> g2 g1

Search states are keyed by the matrices of the two entries, never by words,
so the word problem never enters the search.  A failed search proves nothing.
"""

import re
import threading
from dataclasses import dataclass
from typing import Tuple

from .errors import MixedContextError, NotFoundWithinBounds
from .tits import GroupElement, eval_word, finite_group
from .words import Word, parse_word

DEFAULT_MAX_STATES = 5_000_000
DEFAULT_MAX_WORD_LEN = 64


@dataclass(frozen=True, order=True)
class NielsenMove:
    kind: int          # 1, 2 or 3
    i: int = 0
    j: int = 0

    def __post_init__(self):
        ok = ((self.kind == 1 and self.i in (1, 2) and self.j == 0)
              or (self.kind == 2 and self.i == 0 and self.j == 0)
              or (self.kind == 3 and {self.i, self.j} == {1, 2}))
        if not ok:
            raise ValueError("invalid Nielsen move %r" % (self,))

    def __str__(self):
        if self.kind == 1:
            return "T1(%d)" % self.i
        if self.kind == 2:
            return "T2"
        return "T3(%d,%d)" % (self.i, self.j)

    @classmethod
    def parse(cls, text):
        text = text.replace(" ", "")
        m = re.fullmatch(r"T1\(([12])\)|T2|T3\(([12]),([12])\)", text)
        if m is None:
            raise ValueError("not a Nielsen move: %r" % text)
        if text.startswith("T1"):
            return cls(1, int(m.group(1)))
        if text == "T2":
            return cls(2)
        return cls(3, int(m.group(2)), int(m.group(3)))


T1_1 = NielsenMove(1, 1)
T1_2 = NielsenMove(1, 2)
T2 = NielsenMove(2)
T3_12 = NielsenMove(3, 1, 2)
T3_21 = NielsenMove(3, 2, 1)
MOVES = (T1_1, T1_2, T2, T3_12, T3_21)


class _Ops:
    """Memoized inverse and product for one group context."""

    LIMIT = 500_000

    def __init__(self, ctx):
        self.ctx = ctx
        self.inv = {}
        self.mul = {}

    def inverse(self, a):
        k = a.key()
        r = self.inv.get(k)
        if r is None:
            if len(self.inv) > self.LIMIT:
                self.inv.clear()
            r = self.inv[k] = a.inverse()
        return r

    def product(self, a, b):
        k = (a.key(), b.key())
        r = self.mul.get(k)
        if r is None:
            if len(self.mul) > self.LIMIT:
                self.mul.clear()
            r = self.mul[k] = a * b
        return r


_OPS = {}
_OPS_LOCK = threading.Lock()


def _ops(ctx):
    with _OPS_LOCK:
        ops = _OPS.get(ctx.signature)
        if ops is None or ops.ctx is not ctx:
            ops = _OPS[ctx.signature] = _Ops(ctx)
    return ops


@dataclass(frozen=True)
class GenPair:
    elements: Tuple[GroupElement, GroupElement]
    witnesses: Tuple[Word, Word]

    @classmethod
    def from_words(cls, ctx, w1, w2):
        w1, w2 = parse_word(w1), parse_word(w2)
        return cls((eval_word(ctx, w1), eval_word(ctx, w2)), (w1, w2))

    @property
    def ctx(self):
        return self.elements[0].ctx

    def key(self):
        return (self.elements[0].key(), self.elements[1].key())

    def same_elements(self, other):
        return self.key() == other.key()

    def check_witnesses(self):
        ctx = self.ctx
        return all(eval_word(ctx, w) == g for w, g in zip(self.witnesses, self.elements))

    def __str__(self):
        return "(%s, %s)" % self.witnesses


def _tidy(ctx, w):
    return w.reduced(ctx.orders)


def apply_move(pair, m, _ops_cache=None):
    """The pair after one elementary Nielsen move; witnesses are updated in
    step and kept freely reduced (with exponents taken modulo the generator
    orders)."""
    ctx = pair.ctx
    ops = _ops_cache or _ops(ctx)
    (g1, g2), (w1, w2) = pair.elements, pair.witnesses
    if m.kind == 1:
        if m.i == 1:
            return GenPair((ops.inverse(g1), g2), (w1.inverse(), w2))
        return GenPair((g1, ops.inverse(g2)), (w1, w2.inverse()))
    if m.kind == 2:
        return GenPair((g2, g1), (w2, w1))
    if m.i == 1:
        return GenPair((ops.product(g1, g2), g2), (_tidy(ctx, w1 * w2), w2))
    return GenPair((g1, ops.product(g2, g1)), (w1, _tidy(ctx, w2 * w1)))


def _predecessor(pair, m, ops):
    """The pair X with apply_move(X, m) == pair."""
    ctx = pair.ctx
    (g1, g2), (w1, w2) = pair.elements, pair.witnesses
    if m.kind in (1, 2):
        return apply_move(pair, m, ops)
    if m.i == 1:
        return GenPair((ops.product(g1, ops.inverse(g2)), g2),
                       (_tidy(ctx, w1 * w2.inverse()), w2))
    return GenPair((g1, ops.product(g2, ops.inverse(g1))),
                   (w1, _tidy(ctx, w2 * w1.inverse())))


@dataclass(frozen=True)
class Certificate:
    moves: Tuple[NielsenMove, ...]
    start: GenPair
    end: GenPair

    def __len__(self):
        return len(self.moves)

    def __str__(self):
        return format_moves(self.moves)

    def replay(self):
        pair = self.start
        for m in self.moves:
            pair = apply_move(pair, m)
        return pair

    def is_valid(self):
        return self.replay().same_elements(self.end)

    def inverted(self):
        return invert_certificate(self)


def format_moves(moves):
    return "; ".join(str(m) for m in moves)


def parse_moves(text):
    return tuple(NielsenMove.parse(t) for t in text.split(";") if t.strip())


def _inverse_moves(m):
    if m.kind in (1, 2):
        return (m,)
    # (g1 g2, g2) -> (g1, g2) is T1(2), T3(1,2), T1(2)
    k = NielsenMove(1, m.j)
    return (k, m, k)


def invert_certificate(cert):
    moves = []
    for m in reversed(cert.moves):
        moves.extend(_inverse_moves(m))
    return Certificate(tuple(moves), cert.end, cert.start)


def search_equivalence(a, b, max_states=DEFAULT_MAX_STATES, max_word_len=DEFAULT_MAX_WORD_LEN):
    """Look for a sequence of Nielsen moves taking ``a`` to ``b``.

    Bidirectional breadth-first search, one full layer at a time from the
    smaller frontier.  Among the meetings found in the first layer that
    produces any, the shortest certificate is returned, ties broken by the
    move order of :data:`MOVES`.  Raises :class:`NotFoundWithinBounds` when
    the bounds are hit or both frontiers die out.
    """
    if a.ctx is not b.ctx:
        raise MixedContextError("pairs come from different group contexts")
    ka, kb = a.key(), b.key()
    if ka == kb:
        return Certificate((), a, b)
    ops = _ops(a.ctx)

    # side[key] = (depth, linked key, move, pair)
    fwd = {ka: (0, None, None, a)}
    bwd = {kb: (0, None, None, b)}
    ffront, bfront = [ka], [kb]

    pruned = False

    def short_enough(p):
        return all(w.letter_count() <= max_word_len for w in p.witnesses)

    while ffront and bfront:
        forward = len(ffront) <= len(bfront)
        side, other = (fwd, bwd) if forward else (bwd, fwd)
        front = ffront if forward else bfront
        nxt = []
        meets = []
        for k in front:
            depth, _, _, pair = side[k]
            for m in MOVES:
                new = apply_move(pair, m, ops) if forward else _predecessor(pair, m, ops)
                nk = new.key()
                if nk in side:
                    continue
                if not short_enough(new):
                    pruned = True
                    continue
                side[nk] = (depth + 1, k, m, new)
                nxt.append(nk)
                if nk in other:
                    meets.append(nk)
                if len(fwd) + len(bwd) > max_states:
                    raise NotFoundWithinBounds(
                        "no certificate within %d states" % max_states, len(fwd) + len(bwd))
        if meets:
            best = min((_splice(fwd, bwd, k) for k in meets),
                       key=lambda ms: (len(ms), [MOVES.index(m) for m in ms]))
            return Certificate(tuple(best), a, b)
        if forward:
            ffront = nxt
        else:
            bfront = nxt
    if pruned:
        raise NotFoundWithinBounds("no certificate with witnesses of at most %d letters"
                                   % max_word_len, len(fwd) + len(bwd))
    raise NotFoundWithinBounds("search space exhausted without meeting",
                               len(fwd) + len(bwd))


def _splice(fwd, bwd, k):
    head = []
    cur = k
    while True:
        _, prev, m, _ = fwd[cur]
        if prev is None:
            break
        head.append(m)
        cur = prev
    head.reverse()
    tail = []
    cur = k
    while True:
        _, nxt, m, _ = bwd[cur]
        if nxt is None:
            break
        tail.append(m)
        cur = nxt
    return head + tail


@dataclass
class NielsenOrbits:
    """Nielsen classes of generating pairs of a finite triangle group.

    Pairs are ``(i, j)`` indices into ``group.elements``.
    """

    group: object
    components: list

    def component_index(self, pair):
        fg = self.group
        key = (fg.index_of(pair.elements[0]), fg.index_of(pair.elements[1]))
        return self._lookup[key]

    def __post_init__(self):
        self._lookup = {}
        for n, comp in enumerate(self.components):
            for p in comp:
                self._lookup[p] = n

    def same_class(self, a, b):
        return self.component_index(a) == self.component_index(b)

    def generating_pairs(self):
        return sorted(self._lookup)


def exhaustive_orbits(ctx):
    """Partition all generating pairs of a spherical triangle group into
    Nielsen classes by brute force (NotFiniteError otherwise)."""
    fg = finite_group(ctx)
    n = len(fg)
    gen_pairs = [(i, j) for i in range(n) for j in range(n) if fg.generates((i, j))]
    parent = {p: p for p in gen_pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    inv, mul = fg.inv, fg.mul
    for i, j in gen_pairs:
        for q in ((inv[i], j), (i, inv[j]), (j, i), (mul(i, j), j), (i, mul(j, i))):
            ra, rb = find((i, j)), find(q)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for p in gen_pairs:
        groups.setdefault(find(p), []).append(p)
    comps = sorted((sorted(c) for c in groups.values()), key=lambda c: c[0])
    return NielsenOrbits(fg, comps)
