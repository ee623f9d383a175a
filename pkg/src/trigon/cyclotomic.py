"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as residues modulo the n-th cyclotomic polynomial in the
power basis ``1, x, ..., x^(phi(n)-1)``.  Internally a :class:`CycNum` keeps an
integer numerator vector over one positive common denominator, which keeps the
integral case (the only one the group layer really produces) cheap; the
rational coefficient view is available as :attr:`CycNum.coeffs`.

Polynomials are coefficient tuples, lowest degree first.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisibilityError, MixedFieldError, ZeroInversionError

BigRational = Fraction


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_divmod(a, b):
    """Long division of ``a`` by ``b``; exact on integers when ``b`` is monic."""
    a = list(a)
    b = list(b)
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    lead = b[-1]
    if len(a) < len(b):
        return [0], a
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c:
            c = c / lead if lead != 1 else c
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    r = a[:len(b) - 1] or [0]
    return q, r


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n (lowest degree first), by dividing x^n - 1 by
    the product of Phi_d over the proper divisors d of n."""
    if n < 1:
        raise ValueError("n must be positive, got %r" % (n,))
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in _divisors(n)[:-1]:
        den = poly_mul(den, cyclotomic_polynomial(d))
    q, r = poly_divmod(num, den)
    if any(r):
        raise ArithmeticError("non-exact cyclotomic division for n=%d" % n)
    return tuple(int(c) for c in q)


class CycField:
    """The field Q(zeta_n); use :func:`field_new` to get the cached instance."""

    __slots__ = ("n", "phi_n", "degree", "_reduce_rows", "_zero", "_one",
                 "__weakref__")

    def __init__(self, n):
        if n < 1:
            raise ValueError("conductor must be positive, got %r" % (n,))
        self.n = n
        self.phi_n = cyclotomic_polynomial(n)
        self.degree = len(self.phi_n) - 1
        d = self.degree
        # rows[k - d] = x^k mod Phi_n for d <= k <= 2d - 2, as sparse pairs
        rows = []
        cur = [-c for c in self.phi_n[:d]]
        for _ in range(max(d - 1, 0)):
            rows.append(tuple((j, c) for j, c in enumerate(cur) if c))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.phi_n[j]
        self._reduce_rows = rows
        self._zero = None
        self._one = None

    def __repr__(self):
        return "CycField(%d)" % self.n

    def __reduce__(self):
        return (field_new, (self.n,))

    def zero(self):
        if self._zero is None:
            self._zero = CycNum._make(self, (0,) * self.degree, 1)
        return self._zero

    def one(self):
        if self._one is None:
            self._one = CycNum._make(self, (1,) + (0,) * (self.degree - 1), 1)
        return self._one

    def reduce(self, poly):
        """Residue of an integer (or rational) polynomial modulo Phi_n."""
        d = self.degree
        out = list(poly[:d]) + [0] * (d - len(poly))
        if len(poly) > 2 * d - 1:
            # rare: fold by repeated division
            _, r = poly_divmod(list(poly), list(self.phi_n))
            return list(r) + [0] * (d - len(r))
        for k in range(d, len(poly)):
            c = poly[k]
            if c:
                for j, rc in self._reduce_rows[k - d]:
                    out[j] += c * rc
        return out

    def __call__(self, value):
        if isinstance(value, CycNum):
            if value.field is not self:
                raise MixedFieldError("value lives in %r, not %r" % (value.field, self))
            return value
        return from_rational(self, value)


@lru_cache(maxsize=None)
def field_new(n):
    return CycField(n)


def _normalize(num, den):
    g = den
    for c in num:
        if g == 1:
            break
        if c:
            g = gcd(g, c)
    if den < 0:
        g = -g
    if g != 1:
        num = tuple(c // g for c in num)
        den //= g
    if den != 1 and not any(num):
        den = 1
    return num, den


def _from_fractions(field, coeffs):
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    num = tuple(int(c * den) for c in coeffs)
    return CycNum._make(field, *_normalize(num, den))


class CycNum:
    """An element of Q(zeta_n), canonically reduced modulo Phi_n."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _make(cls, field, num, den):
        self = object.__new__(cls)
        self.field = field
        self.num = tuple(num)
        self.den = den
        self._hash = None
        return self

    def __init__(self, field, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > field.degree:
            coeffs = field.reduce(coeffs)
        coeffs = list(coeffs) + [Fraction(0)] * (field.degree - len(coeffs))
        made = _from_fractions(field, coeffs)
        self.field = field
        self.num = made.num
        self.den = made.den
        self._hash = None

    @property
    def coeffs(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def _check(self, other):
        if not isinstance(other, CycNum):
            return self.field(other)
        if other.field is not self.field:
            if other.field.n != self.field.n:
                raise MixedFieldError(
                    "cannot combine elements of Q(zeta_%d) and Q(zeta_%d)"
                    % (self.field.n, other.field.n))
        return other

    def __add__(self, other):
        other = self._check(other)
        if self.den == other.den:
            num = tuple(a + b for a, b in zip(self.num, other.num))
            return CycNum._make(self.field, *_normalize(num, self.den))
        num = tuple(a * other.den + b * self.den for a, b in zip(self.num, other.num))
        return CycNum._make(self.field, *_normalize(num, self.den * other.den))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._make(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        field = self.field
        prod = field.reduce(poly_mul(self.num, other.num))
        den = self.den * other.den
        if den == 1:
            return CycNum._make(field, prod, 1)
        return CycNum._make(field, *_normalize(tuple(prod), den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * inverse(self._check(other))

    def __rtruediv__(self, other):
        return self._check(other) * inverse(self)

    def __pow__(self, k):
        if k < 0:
            return inverse(self) ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return (self.field.n == other.field.n and self.den == other.den
                    and self.num == other.num)
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
                if k and c == 1:
                    terms.append(mono)
                elif k and c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(str(c) + ("*" + mono if mono else ""))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return "CycNum[%d](%s)" % (self.field.n, body)

    def is_rational(self):
        return not any(self.num[1:])

    def to_complex(self):
        """Numeric value under zeta_n -> exp(2 pi i / n); for display only."""
        import cmath
        z = cmath.exp(2j * cmath.pi / self.field.n)
        return sum(c * z ** k for k, c in enumerate(self.num)) / self.den


def from_rational(f, q):
    q = Fraction(q)
    return CycNum._make(f, (q.numerator,) + (0,) * (f.degree - 1), q.denominator)


def zeta_power(f, k):
    k %= f.n
    poly = [0] * (k + 1)
    poly[k] = 1
    if k < f.degree:
        return CycNum._make(f, tuple(poly) + (0,) * (f.degree - k - 1), 1)
    _, r = poly_divmod(poly, list(f.phi_n))
    r = [int(c) for c in r] + [0] * (f.degree - len(r))
    return CycNum._make(f, tuple(r[:f.degree]), 1)


def two_cos_pi_over(f, p):
    """2 cos(pi/p) = zeta_{2p} + zeta_{2p}^{-1}, as an element of ``f``."""
    if p < 1 or f.n % (2 * p):
        raise DivisibilityError("2*%d does not divide conductor %d" % (p, f.n))
    k = f.n // (2 * p)
    return zeta_power(f, k) + zeta_power(f, -k)


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def is_zero(a):
    return not any(a.num)


def canonical_key(a):
    return ("%d|%d|%s" % (a.field.n, a.den, ",".join(map(str, a.num)))).encode()


def inverse(a):
    """Multiplicative inverse via the extended Euclidean algorithm on
    (a, Phi_n) over Q."""
    if is_zero(a):
        raise ZeroInversionError("zero has no inverse in %r" % a.field)
    f = a.field
    # invariant: s * a == r  (mod Phi_n)
    r0, r1 = [Fraction(c) for c in f.phi_n], [Fraction(c, a.den) for c in a.num]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    r1 = _trim(r1)
    while len(r1) > 1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, _trim(r)
        s0, s1 = s1, _trim(_poly_sub(s0, poly_mul(q, s1)))
    c = r1[0]
    coeffs = [x / c for x in s1]
    coeffs = f.reduce(coeffs) if len(coeffs) > f.degree else coeffs
    coeffs = list(coeffs) + [Fraction(0)] * (f.degree - len(coeffs))
    return _from_fractions(f, coeffs)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
