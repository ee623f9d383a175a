"""Words in numbered generators and the shared text grammar.

Grammar::

    word := term (WS term)*
    term := gen ("^" signed_int)?
    gen  := "s1" | "s2" | "s3"
    WS   := one or more spaces or "·"

The empty string is the identity.  The parser is a little more lenient than
the grammar: separators may be omitted (``s1s2^2s1``), ``S1``/``S2`` and
``g1``... are accepted in free-product contexts, and a parenthesised subword
may carry an exponent, as in ``(s1 s2)^-2``.  :meth:`Word.__str__` always
emits the strict form.
"""

import re

from .errors import WordSyntaxError

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<gen>[sSgG])(?P<idx>[1-9])
      | (?P<open>\()
      | (?P<close>\))
      | (?P<pow>\^\s*(?P<exp>[+-]?\d+))
      | (?P<sep>[·*.])
    )""",
    re.VERBOSE,
)


class Word:
    """An immutable sequence of ``(generator, exponent)`` syllables.

    Generators are 1-based indices.  Nothing is simplified on construction;
    use :meth:`reduced` for that.
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple((int(g), int(e)) for g, e in letters)
        for g, e in letters:
            if g < 1:
                raise ValueError("generator index must be >= 1, got %d" % g)
            if e == 0:
                raise ValueError("exponents must be nonzero")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def gen(cls, g, e=1):
        return cls(((g, e),)) if e else cls()

    @classmethod
    def parse(cls, text):
        return parse_word(text)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def inverse(self):
        return Word((g, -e) for g, e in reversed(self.letters))

    def letter_count(self):
        """Length counted in single generator letters, sum of |exponent|."""
        return sum(abs(e) for _, e in self.letters)

    def generators(self):
        return {g for g, _ in self.letters}

    def expand(self):
        """The word as a flat list of ``(generator, +1 or -1)``."""
        out = []
        for g, e in self.letters:
            out.extend([(g, 1 if e > 0 else -1)] * abs(e))
        return out

    def reduced(self, orders=None):
        """Merge adjacent syllables of the same generator and cancel.

        With ``orders`` (a mapping or sequence indexed from generator 1) the
        exponent of generator ``g`` is also reduced into ``(-p/2, p/2]`` modulo
        its order ``p``; that is only valid in groups where ``g^p = 1``.
        """
        def order_of(g):
            if orders is None:
                return None
            if isinstance(orders, dict):
                return orders.get(g)
            return orders[g - 1] if g - 1 < len(orders) else None

        stack = []
        for g, e in self.letters:
            if stack and stack[-1][0] == g:
                e += stack.pop()[1]
            p = order_of(g)
            if p:
                e %= p
                if e > p // 2:
                    e -= p
            if e:
                stack.append((g, e))
        return Word(stack)

    def format(self, symbol="s", sep=" "):
        parts = []
        for g, e in self.letters:
            parts.append("%s%d" % (symbol, g) if e == 1 else "%s%d^%d" % (symbol, g, e))
        return sep.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "Word(%r)" % (self.format(),)


def parse_word(text):
    """Parse ``text`` into a :class:`Word`; see the module docstring."""
    if isinstance(text, Word):
        return text
    pos = 0
    stack = [[]]
    last = None  # what a following "^" applies to
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise WordSyntaxError("cannot parse word %r at position %d" % (text, pos))
        pos = m.end()
        if m.group("gen"):
            stack[-1].append((int(m.group("idx")), 1))
            last = "gen"
        elif m.group("open"):
            stack.append([])
            last = None
        elif m.group("close"):
            if len(stack) == 1:
                raise WordSyntaxError("unbalanced ')' in %r" % text)
            inner = _flatten(stack.pop())
            stack[-1].append(inner)
            last = "group"
        elif m.group("pow"):
            k = int(m.group("exp"))
            if last is None:
                raise WordSyntaxError("exponent without a base in %r" % text)
            if k == 0:
                raise WordSyntaxError("zero exponent in %r" % text)
            item = stack[-1].pop()
            if last == "gen":
                stack[-1].append((item[0], item[1] * k))
            else:
                stack[-1].append(item ** k)
            last = None
        else:
            last = None
        # trailing whitespace is consumed by the next match or the loop end
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if len(stack) != 1:
        raise WordSyntaxError("unbalanced '(' in %r" % text)
    return _flatten(stack[0])


def _flatten(items):
    letters = []
    for item in items:
        if isinstance(item, Word):
            letters.extend(item.letters)
        else:
            letters.append(item)
    return Word(letters)


def parse_word_list(text):
    """Semicolon separated words, e.g. ``"S2; S1 S2 S1^-1"``."""
    return [parse_word(part) for part in text.split(";") if part.strip()]
