"""Orientable 2-orbifolds, covers read off coset tables, and almost coverings.

Text forms (round-trippable)::

    S2(2,3,7)          sphere with cone points
    D2(5,5)            disk with cone points
    Sigma(g=1,b=1)     genus g, b boundary circles, no cone points
    Sigma(g=0,b=2;3)   ... with cone points after the semicolon

Cone orders are kept sorted and order-1 points are dropped.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .errors import IllegalFillError, InconsistentCoverError, OrbifoldSyntaxError


@dataclass(frozen=True)
class Orbifold:
    genus: int = 0
    boundary_count: int = 0
    cone_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be non-negative")
        cones = tuple(sorted(int(q) for q in self.cone_orders if q != 1))
        if any(q < 1 for q in cones):
            raise ValueError("cone orders must be positive")
        object.__setattr__(self, "cone_orders", cones)

    @classmethod
    def sphere(cls, *cones):
        return cls(0, 0, cones)

    @classmethod
    def disk(cls, *cones):
        return cls(0, 1, cones)

    @classmethod
    def parse(cls, text):
        return parse_orbifold(text)

    def euler_characteristic(self):
        return euler_characteristic(self)

    def __str__(self):
        cones = ",".join(map(str, self.cone_orders))
        if self.genus == 0 and self.boundary_count == 0:
            return "S2(%s)" % cones
        if self.genus == 0 and self.boundary_count == 1:
            return "D2(%s)" % cones
        tail = ";" + cones if cones else ""
        return "Sigma(g=%d,b=%d%s)" % (self.genus, self.boundary_count, tail)


_ORB = re.compile(r"^\s*(?:(?P<kind>S2|D2)\((?P<cones>[\d,\s]*)\)"
                  r"|Sigma\(\s*g\s*=\s*(?P<g>\d+)\s*,\s*b\s*=\s*(?P<b>\d+)\s*"
                  r"(?:;(?P<scones>[\d,\s]*))?\))\s*$")


def parse_orbifold(text):
    m = _ORB.match(text)
    if m is None:
        if re.match(r"^\s*(P2|RP2|N|Klein|Mobius)", text):
            raise OrbifoldSyntaxError("non-orientable orbifolds are not supported: %r" % text)
        raise OrbifoldSyntaxError("cannot parse orbifold %r" % text)

    def cones(s):
        s = (s or "").strip()
        return tuple(int(x) for x in s.split(",") if x.strip()) if s else ()

    if m.group("kind") == "S2":
        return Orbifold(0, 0, cones(m.group("cones")))
    if m.group("kind") == "D2":
        return Orbifold(0, 1, cones(m.group("cones")))
    return Orbifold(int(m.group("g")), int(m.group("b")), cones(m.group("scones")))


def euler_characteristic(orb):
    """Orbifold Euler characteristic 2 - 2g - b - sum(1 - 1/q), exact."""
    chi = Fraction(2 - 2 * orb.genus - orb.boundary_count)
    for q in orb.cone_orders:
        chi -= 1 - Fraction(1, q)
    return chi


@dataclass(frozen=True)
class CoverReconstruction:
    """The finite cover of D0(p1, p2) attached to a coset table.

    ``cone_data`` pairs each base cone order with the cycle lengths of the
    generator going around it; ``boundary_cycles`` are the cycle lengths of
    S1 S2, i.e. the degrees of the boundary circles over the base boundary.
    """

    degree: int
    base: Orbifold
    cone_data: Tuple[Tuple[int, Tuple[int, ...]], ...]
    boundary_cycles: Tuple[int, ...]
    cover: Orbifold
    surface_euler: int = field(default=0)


def _cycle_lengths(perm):
    seen = [False] * len(perm)
    out = []
    for c in range(len(perm)):
        if not seen[c]:
            n = 0
            while not seen[c]:
                seen[c] = True
                c = perm[c]
                n += 1
            out.append(n)
    return sorted(out)


def reconstruct_cover(sig, table):
    """Cover orbifold of D0(p1, p2) for a table over <S1, S2 | S1^p1, S2^p2>.

    The underlying surface is assembled cell by cell: a degree-d cover of the
    pair of pants left after deleting the cone disks (Euler characteristic
    -d), plus one disk per cycle of S1 and of S2.  Boundary circles are the
    cycles of S1 S2.  Cone orders are p_i / l for each S_i-cycle of length l.
    """
    p1, p2 = sig[0], sig[1]
    pres = table.presentation
    if pres.generator_count != 2 or sorted(
            (r.letters for r in pres.relators)) != sorted((((1, p1),), ((2, p2),))):
        raise InconsistentCoverError(
            "table is not over the free product Z%d * Z%d" % (p1, p2))
    d = table.size
    cone_data = []
    cones = []
    chi_top = -d
    for p, perm in ((p1, table.perms[0]), (p2, table.perms[1])):
        lengths = _cycle_lengths(perm)
        for ell in lengths:
            if p % ell:
                raise InconsistentCoverError("cycle of length %d under an order-%d generator" % (ell, p))
            if ell < p:
                cones.append(p // ell)
        chi_top += len(lengths)
        cone_data.append((p, tuple(lengths)))
    boundary = tuple(_cycle_lengths(table.permutation("S1 S2")))
    b = len(boundary)
    twice_genus = 2 - b - chi_top
    if twice_genus < 0 or twice_genus % 2:
        raise InconsistentCoverError(
            "surface with chi=%d and %d boundary circles has no orientable genus" % (chi_top, b))
    cover = Orbifold(twice_genus // 2, b, tuple(cones))
    return CoverReconstruction(d, Orbifold.disk(p1, p2), tuple(cone_data), boundary, cover, chi_top)


def verify_riemann_hurwitz(recon):
    """chi(cover) == degree * chi(base), exactly."""
    return euler_characteristic(recon.cover) == recon.degree * euler_characteristic(recon.base)


FILL = "fill"
LEAVE = "leave"


@dataclass(frozen=True)
class AlmostCoverPlan:
    """One decision per boundary cycle, aligned with ``boundary_cycles``."""

    fills: Tuple[Tuple[int, str], ...]

    @classmethod
    def leave_all(cls, recon):
        return cls(tuple((ell, LEAVE) for ell in recon.boundary_cycles))

    @classmethod
    def filling(cls, recon, lengths):
        """Fill one boundary cycle of each requested length (a multiset)."""
        wanted = list(lengths)
        fills = []
        for ell in recon.boundary_cycles:
            if ell in wanted:
                wanted.remove(ell)
                fills.append((ell, FILL))
            else:
                fills.append((ell, LEAVE))
        if wanted:
            raise IllegalFillError("no boundary cycle of length %s to fill" % wanted)
        return cls(tuple(fills))


@dataclass
class AlmostCoverReport:
    cover_orbifold: Orbifold
    exceptional_degrees: Tuple[int, ...]
    filled_disks: int
    is_special: bool
    degree: int
    filled_cone_orders: Tuple[int, ...] = ()
    discrepancies: list = field(default_factory=list)

    @property
    def t(self):
        return self.filled_disks


def assemble_almost_cover(recon, plan, p3):
    """Cap the filled boundary circles with disks over the exceptional disk.

    A circle of degree l over the boundary of a disk with a cone point of
    order p3 is capped by a disk carrying a cone point of order p3 / l
    (smooth when l = p3).
    """
    if tuple(ell for ell, _ in plan.fills) != tuple(recon.boundary_cycles):
        raise IllegalFillError("plan does not match the boundary cycles %s" % (recon.boundary_cycles,))
    cones = list(recon.cover.cone_orders)
    new_cones = []
    exceptional = []
    filled = 0
    for ell, action in plan.fills:
        if action == FILL:
            if p3 % ell:
                raise IllegalFillError("cannot fill a degree-%d circle over a cone of order %d" % (ell, p3))
            new_cones.append(p3 // ell)
            filled += 1
        elif action == LEAVE:
            exceptional.append(ell)
        else:
            raise IllegalFillError("unknown plan action %r" % (action,))
    cover = Orbifold(recon.cover.genus, recon.cover.boundary_count - filled,
                     tuple(cones + new_cones))
    exceptional = tuple(sorted(exceptional))
    special = len(exceptional) == 1 and exceptional[0] <= p3
    return AlmostCoverReport(cover, exceptional, filled, special, recon.degree,
                             tuple(sorted(q for q in new_cones if q > 1)))


def filled_disks_riemann_hurwitz(plan, p3):
    """Each capping disk covers D(p3) with degree l: chi = l * chi(D(p3))."""
    base = euler_characteristic(Orbifold.disk(p3))
    return all(euler_characteristic(Orbifold.disk(p3 // ell)) == ell * base
               for ell, action in plan.fills if action == FILL)
