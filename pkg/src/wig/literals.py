"""Text form of letters and words.

Grammar: ``1`` is the identity letter, a bare identifier is a base
letter or an alias, and ``(L,C,R)`` is a triple.  A word is a sequence
of letter expressions separated by whitespace (juxtaposition).  An
aliases file holds lines ``name = expr``; aliases may use earlier
aliases.  Formatting is canonical (aliases fully expanded) unless an
alias table is supplied, in which case known subterms print by name.
"""

from __future__ import annotations

import re

from .errors import ParseError

_TOKEN = re.compile(r"\(|\)|,|1|[A-Za-z_][A-Za-z_0-9]*")
_SKIP = re.compile(r"\s+")


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        ws = _SKIP.match(text, i)
        if ws:
            i = ws.end()
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError("bad character %r at offset %d" % (text[i], i))
        out.append(m.group())
        i = m.end()
    return out


class _Parser:
    def __init__(self, tokens, alphabet, aliases):
        self.tokens = tokens
        self.pos = 0
        self.alphabet = alphabet
        self.aliases = aliases or {}

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, want):
        tok = self.next()
        if tok != want:
            raise ParseError("expected %r, got %r" % (want, tok))

    def letter(self):
        tok = self.next()
        if tok == "1":
            return self.alphabet.one
        if tok == "(":
            left = self.letter()
            self.expect(",")
            center = self.letter()
            self.expect(",")
            right = self.letter()
            self.expect(")")
            return self.alphabet.triple(left, center, right)
        if tok in (")", ","):
            raise ParseError("unexpected %r" % tok)
        if tok in self.aliases:
            return self.aliases[tok]
        try:
            return self.alphabet.base(tok)
        except KeyError:
            raise ParseError("unknown letter %r" % tok) from None


def parse_generator(text, alphabet, aliases=None):
    p = _Parser(_tokenize(text), alphabet, aliases)
    g = p.letter()
    if p.peek() is not None:
        raise ParseError("trailing input after letter: %r" % p.peek())
    return g


def parse_word(text, alphabet, aliases=None):
    p = _Parser(_tokenize(text), alphabet, aliases)
    letters = []
    while p.peek() is not None:
        letters.append(p.letter())
    if not letters:
        raise ParseError("empty word")
    return tuple(letters)


def parse_aliases(lines, alphabet):
    """Build an alias table from ``name = expr`` lines."""
    aliases = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("line %d: expected 'name = expr'" % lineno)
        name, expr = line.split("=", 1)
        name = name.strip()
        if not name.isidentifier() or name == "1":
            raise ParseError("line %d: bad alias name %r" % (lineno, name))
        aliases[name] = parse_generator(expr, alphabet, aliases)
    return aliases


def load_aliases(path, alphabet):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_aliases(fh, alphabet)


def binary_aliases(alphabet):
    """Conventional names for the low letters of a two-letter alphabet.

    ``x1 = (x,1,y)`` and ``y1 = (y,1,x)`` for base letters x, y; the
    four height-3 letters get the names h, h1, h2, h3 when the alphabet
    is literally (e, f).
    """
    if alphabet.size != 2:
        raise ValueError("binary aliases need a two-letter alphabet")
    a, b = alphabet.bases()
    one = alphabet.one
    a1 = alphabet.triple(a, one, b)
    b1 = alphabet.triple(b, one, a)
    aliases = {a.name + "1": a1, b.name + "1": b1}
    if alphabet.letters == ("e", "f"):
        aliases["h"] = alphabet.triple(a1, b, b1)
        aliases["h1"] = alphabet.triple(a1, a, b1)
        aliases["h2"] = alphabet.triple(b1, b, a1)
        aliases["h3"] = alphabet.triple(b1, a, a1)
    return aliases


def format_generator(g, aliases=None):
    if not aliases:
        return g.literal()
    byuid = {gen.uid: name for name, gen in aliases.items()}

    def fmt(x):
        name = byuid.get(x.uid)
        if name is not None:
            return name
        if x.height <= 1:
            return x.literal()
        return "(%s,%s,%s)" % (fmt(x.left), fmt(x.center), fmt(x.right))

    return fmt(g)


def format_word(letters, aliases=None):
    return " ".join(format_generator(g, aliases) for g in letters)
