"""Todd-Coxeter coset enumeration.

Two engines are provided, HLT (relator-based, with a lookahead pass when the
coset cap is reached) and Felsch (definition-by-definition with a deduction
stack).  Both return the same standardized :class:`CosetTable`: cosets are
renumbered in breadth-first order from the subgroup coset 0, scanning columns
g1, g1^-1, g2, g2^-1, ...

Right cosets, right action: ``table.act(c, w)`` is the coset ``c . w``.
"""

import os
from dataclasses import dataclass, field
from typing import Tuple

from .errors import CapExceeded, InternalInvariantError
from .words import Word, parse_word

DEFAULT_MAX_COSETS = 1_000_000
STRATEGIES = ("hlt", "felsch")


@dataclass(frozen=True)
class FpPresentation:
    generator_count: int
    relators: Tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(parse_word(r) for r in self.relators))
        for r in self.relators:
            if any(g > self.generator_count for g in r.generators()):
                raise ValueError("relator %s uses an unknown generator" % r)


@dataclass(frozen=True)
class SubgroupSpec:
    generators: Tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(parse_word(w) for w in self.generators))


@dataclass(frozen=True)
class EnumLimits:
    max_cosets: int = DEFAULT_MAX_COSETS
    strategy: str = "hlt"

    def __post_init__(self):
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")
        if self.strategy not in STRATEGIES:
            raise ValueError("strategy must be one of %s" % (STRATEGIES,))

    @classmethod
    def from_env(cls, strategy="hlt", environ=None):
        """Default limits, with ``TRIGON_MAX_COSETS`` overriding the cap."""
        environ = os.environ if environ is None else environ
        cap = environ.get("TRIGON_MAX_COSETS")
        return cls(int(cap) if cap else DEFAULT_MAX_COSETS, strategy)


def free_product_presentation(p1, p2):
    """<S1, S2 | S1^p1, S2^p2>, the orbifold group of a disk with two cone points."""
    return FpPresentation(2, (Word.gen(1, p1), Word.gen(2, p2)))


def triangle_presentation(sig):
    p1, p2, p3 = sig
    return FpPresentation(3, (Word.gen(1, p1), Word.gen(2, p2), Word.gen(3, p3),
                              Word(((1, 1), (2, 1), (3, 1)))))


def _columns(w):
    return [2 * (g - 1) + (0 if s > 0 else 1) for g, s in w.expand()]


@dataclass(frozen=True)
class CosetTable:
    """Permutation action of each generator on the cosets ``0..size-1``.

    ``perms[g-1][c]`` is ``c . g``.  Coset 0 is the subgroup itself.
    """

    presentation: FpPresentation
    subgroup: SubgroupSpec
    perms: Tuple[Tuple[int, ...], ...]
    stats: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def size(self):
        return len(self.perms[0]) if self.perms else 1

    index = size

    def inverse_perms(self):
        out = []
        for p in self.perms:
            inv = [0] * len(p)
            for c, d in enumerate(p):
                inv[d] = c
            out.append(tuple(inv))
        return out

    def permutation(self, w):
        """The permutation ``c -> c . w`` as a list."""
        w = parse_word(w)
        n = self.size
        cur = list(range(n))
        invs = None
        for g, e in w.letters:
            if e > 0:
                p = self.perms[g - 1]
            else:
                if invs is None:
                    invs = self.inverse_perms()
                p = invs[g - 1]
            for _ in range(abs(e)):
                cur = [p[c] for c in cur]
        return cur

    def act(self, c, w):
        return self.permutation(w)[c]

    def cycles(self, w):
        """Cycles of the permutation induced by ``w``, each starting at its
        smallest coset, ordered by that coset."""
        perm = self.permutation(w)
        seen = [False] * len(perm)
        out = []
        for c in range(len(perm)):
            if not seen[c]:
                cyc = []
                d = c
                while not seen[d]:
                    seen[d] = True
                    cyc.append(d)
                    d = perm[d]
                out.append(cyc)
        return out

    def check(self):
        """Raise InternalInvariantError unless all table invariants hold."""
        n = self.size
        for g, p in enumerate(self.perms, 1):
            if sorted(p) != list(range(n)):
                raise InternalInvariantError("generator %d does not act bijectively" % g)
        for r in self.presentation.relators:
            if self.permutation(r) != list(range(n)):
                raise InternalInvariantError("relator %s acts nontrivially" % r)
        for w in self.subgroup.generators:
            if self.act(0, w) != 0:
                raise InternalInvariantError("subgroup generator %s moves coset 0" % w)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for c in frontier:
                for p in self.perms:
                    if p[c] not in seen:
                        seen.add(p[c])
                        nxt.append(p[c])
            frontier = nxt
        if len(seen) != n:
            raise InternalInvariantError("action is not transitive")
        return True

    def to_dict(self):
        return {"index": self.size, "perms": [list(p) for p in self.perms]}


def action_cycles(table, w):
    """Sorted cycle lengths of ``w`` acting on the cosets."""
    return sorted(len(c) for c in table.cycles(w))


class _Full(Exception):
    pass


class _Enumerator:
    def __init__(self, pres, sub, max_cosets, felsch):
        self.ncols = 2 * pres.generator_count
        self.relators = [_columns(r) for r in pres.relators if len(r)]
        self.subgens = [_columns(w) for w in sub.generators if len(w)]
        self.max_cosets = max_cosets
        self.felsch = felsch
        self.table = []
        self.parent = []
        self.deductions = []
        self.high_water = 0
        self.defined = 0
        self.nlive = 0
        self._new()

    # -- bookkeeping ------------------------------------------------------

    def _new(self):
        if len(self.table) >= self.max_cosets:
            raise _Full
        c = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(c)
        self.defined += 1
        self.nlive += 1
        if self.nlive > self.high_water:
            self.high_water = self.nlive
        return c

    def live_count(self):
        return self.nlive

    def live(self, c):
        return self.parent[c] == c

    def rep(self, c):
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c, x):
        d = self._new()
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        if self.felsch:
            self.deductions.append((c, x))
        return d

    def _merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            self.nlive -= 1
            queue.append(hi)

    def coincidence(self, a, b):
        table = self.table
        queue = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f is None:
                    continue
                table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] is not None:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] is not None:
                    self._merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1
                    if self.felsch:
                        self.deductions.append((e1, x))

    def _scan(self, alpha, w, fill):
        table = self.table
        f = b = alpha
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                if self.felsch:
                    self.deductions.append((f, w[i]))
                return
            if not fill:
                return
            self.define(f, w[i])

    # -- compaction -------------------------------------------------------

    def compact(self):
        """Drop dead cosets, keeping the order of live ones; return the map."""
        remap = {}
        for c in range(len(self.table)):
            if self.live(c):
                remap[c] = len(remap)
        if len(remap) == len(self.table):
            return remap
        new = []
        for c in remap:
            row = self.table[c]
            new.append([None if d is None else remap[self.rep(d)] for d in row])
        self.table = new
        self.parent = list(range(len(new)))
        self.deductions = [(remap[self.rep(c)], x) for c, x in self.deductions
                           if self.rep(c) in remap] if self.deductions else []
        return remap

    # -- strategies -------------------------------------------------------

    def lookahead(self):
        c = 0
        while c < len(self.table):
            if self.live(c):
                for r in self.relators:
                    self._scan(c, r, fill=False)
                    if not self.live(c):
                        break
            c += 1

    def _make_room(self, alpha):
        """Called when the cap is hit; returns the remapped position of
        ``alpha`` or raises CapExceeded."""
        if not self.felsch:
            self.lookahead()
        old_len = len(self.table)
        remap = self.compact()
        if len(self.table) == old_len:
            raise CapExceeded(self.high_water, self.max_cosets)
        nxt = [remap[c] for c in remap if c >= alpha]
        return nxt[0] if nxt else len(self.table)

    def run_hlt(self):
        while True:
            try:
                for w in self.subgens:
                    self._scan(0, w, fill=True)
                break
            except _Full:
                self._make_room(0)
        alpha = 0
        while alpha < len(self.table):
            try:
                if self.live(alpha):
                    for r in self.relators:
                        self._scan(alpha, r, fill=True)
                        if not self.live(alpha):
                            break
                    if self.live(alpha):
                        for x in range(self.ncols):
                            if self.table[alpha][x] is None:
                                self.define(alpha, x)
            except _Full:
                alpha = self._make_room(alpha)
                continue
            alpha += 1

    def _conjugates(self):
        by_col = [[] for _ in range(self.ncols)]
        seen = set()
        for r in self.relators:
            inv = [x ^ 1 for x in reversed(r)]
            for rel in (r, inv):
                for k in range(len(rel)):
                    w = tuple(rel[k:] + rel[:k])
                    if w not in seen:
                        seen.add(w)
                        by_col[w[0]].append(list(w))
        return by_col

    def _process_deductions(self, by_col):
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.live(c):
                continue
            for w in by_col[x]:
                self._scan(c, w, fill=False)
                if not self.live(c):
                    break
            if self.live(c):
                d = self.table[c][x]
                if d is not None and self.live(d):
                    for w in by_col[x ^ 1]:
                        self._scan(d, w, fill=False)
                        if not self.live(d):
                            break

    def run_felsch(self):
        by_col = self._conjugates()
        while True:
            try:
                for w in self.subgens:
                    self._scan(0, w, fill=True)
                break
            except _Full:
                self._make_room(0)
        self._process_deductions(by_col)
        alpha = 0
        while alpha < len(self.table):
            if self.live(alpha):
                row = self.table[alpha]
                x = next((x for x in range(self.ncols) if row[x] is None), None)
                if x is not None:
                    try:
                        self.define(alpha, x)
                    except _Full:
                        alpha = self._make_room(alpha)
                        continue
                    self._process_deductions(by_col)
                    continue
            alpha += 1

    # -- output -----------------------------------------------------------

    def standardized(self):
        order = [0]
        pos = {0: 0}
        k = 0
        while k < len(order):
            c = order[k]
            k += 1
            for x in range(self.ncols):
                d = self.table[c][x]
                if d is None:
                    raise InternalInvariantError("incomplete coset table")
                d = self.rep(d)
                if d not in pos:
                    pos[d] = len(order)
                    order.append(d)
        if len(order) != self.live_count():
            raise InternalInvariantError("coset table is not connected")
        perms = []
        for g in range(self.ncols // 2):
            perms.append(tuple(pos[self.rep(self.table[c][2 * g])] for c in order))
        return tuple(perms)


def todd_coxeter(pres, sub=SubgroupSpec(), limits=EnumLimits()):
    """Enumerate the cosets of ``sub`` in the group presented by ``pres``.

    Raises :class:`CapExceeded` if more than ``limits.max_cosets`` cosets
    would be needed at once.
    """
    if not isinstance(sub, SubgroupSpec):
        sub = SubgroupSpec(tuple(sub))
    for w in sub.generators:
        if any(g > pres.generator_count for g in w.generators()):
            raise ValueError("subgroup word %s uses an unknown generator" % w)
    felsch = limits.strategy == "felsch"
    en = _Enumerator(pres, sub, limits.max_cosets, felsch)
    if felsch:
        en.run_felsch()
    else:
        en.run_hlt()
    table = CosetTable(pres, sub, en.standardized(),
                       {"strategy": limits.strategy, "high_water": en.high_water,
                        "defined": en.defined})
    table.check()
    return table
