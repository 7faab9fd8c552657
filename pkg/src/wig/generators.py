"""Arena of interned generator letters.

Letters come in levels: the identity letter ``1`` at level 0, the base
idempotents at level 1 (behaving as degenerate triples ``(1, x, 1)``),
and at every level ``i >= 2`` the triples ``(l, c, r)`` whose outer
entries are distinct letters of level ``i - 1`` sharing the level
``i - 2`` letter ``c`` as an outer entry.

Letters are hash-consed per alphabet: structural equality coincides
with object identity, so words, grounds and class tables compare in
O(1) per letter.  The levels grow super-exponentially, hence the
enumeration cap; individual letters above the cap may still be interned
(products of low mountains can raise peaks well above it).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import HeightCapExceeded, HeightTooSmall, InvalidTriple

DEFAULT_ENUM_CAP = 6
DEFAULT_INTERN_CAP = 64


class Generator:
    """One letter of the arena: ``1``, a base idempotent, or a triple."""

    __slots__ = ("alphabet", "uid", "height", "left", "center", "right",
                 "name", "_key", "_ground")

    def __init__(self, alphabet, uid, height, left, center, right, name, key):
        self.alphabet = alphabet
        self.uid = uid
        self.height = height
        self.left = left
        self.center = center
        self.right = right
        self.name = name
        self._key = key
        self._ground = None

    @property
    def is_identity(self):
        return self.height == 0

    def entries(self):
        """Outer entries (left, right); empty for the identity letter."""
        if self.height == 0:
            return ()
        return (self.left, self.right)

    @property
    def ground(self):
        """All letters nested inside this one, itself included."""
        gs = self._ground
        if gs is None:
            if self.height == 0:
                gs = frozenset((self,))
            else:
                gs = self.left.ground | {self} | self.right.ground
            self._ground = gs
        return gs

    def literal(self):
        """Canonical text form: ``1``, a base name, or ``(l,c,r)``."""
        if self.height == 0:
            return "1"
        if self.height == 1:
            return self.name
        return "(%s,%s,%s)" % (self.left.literal(), self.center.literal(),
                               self.right.literal())

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __repr__(self):
        return self.literal()


@dataclass(frozen=True)
class SideResolution:
    """Where the center of a triple sits inside its outer entries.

    ``left_center_side`` is ``'l'`` or ``'r'`` according to which entry
    of ``g.left`` equals ``g.center``; ``left_other`` is the remaining
    entry of ``g.left``.  Dually for the right side.
    """

    left_center_side: str
    left_other: Generator
    right_center_side: str
    right_other: Generator


def side_resolution(g):
    """Resolve the center of ``g`` inside both outer entries.

    Needs height >= 3: lower triples have base-letter entries whose two
    outer entries coincide, so there is no "other" entry to name.
    """
    if g.height < 3:
        raise HeightTooSmall(
            "side resolution needs height >= 3, got %d" % g.height)
    if g.left.left is g.center:
        lcs, lo = "l", g.left.right
    else:
        lcs, lo = "r", g.left.left
    if g.right.left is g.center:
        rcs, ro = "l", g.right.right
    else:
        rcs, ro = "r", g.right.left
    return SideResolution(lcs, lo, rcs, ro)


class Alphabet:
    """Interning arena for the letters generated by a base idempotent set.

    Interning is serialized behind a lock; every read on interned
    letters (entries, heights, grounds, level tuples) is safe from any
    number of threads afterwards.
    """

    def __init__(self, letters=("e", "f"), enum_cap=DEFAULT_ENUM_CAP,
                 intern_cap=DEFAULT_INTERN_CAP):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must not be empty")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct")
        for name in letters:
            if not name.isidentifier() or name == "1":
                raise ValueError("bad base letter name: %r" % (name,))
        self.letters = letters
        self.enum_cap = enum_cap
        self.intern_cap = intern_cap
        self._lock = threading.RLock()
        self._next_uid = 0
        self.one = self._make(0, None, None, None, "1", (0,))
        bases = []
        for idx, name in enumerate(letters):
            bases.append(self._make(1, self.one, None, self.one, name, (1, idx)))
        self._bases = tuple(bases)
        self._base_by_name = {g.name: g for g in bases}
        self._triples = {}
        self._levels = {0: (self.one,), 1: self._bases}
        self._neighbors = {}
        self._letter_mountains = {}

    def _make(self, height, left, center, right, name, key):
        g = Generator(self, self._next_uid, height, left, center, right,
                      name, key)
        self._next_uid += 1
        return g

    @property
    def size(self):
        return len(self.letters)

    def base(self, name):
        try:
            return self._base_by_name[name]
        except KeyError:
            raise KeyError("unknown base letter %r" % (name,)) from None

    def bases(self):
        return self._bases

    def triple(self, left, center, right):
        """Intern the triple ``(left, center, right)``.

        Raises InvalidTriple unless the outer entries are distinct
        letters of equal height sharing ``center`` as an outer entry.
        """
        if left.alphabet is not self or right.alphabet is not self \
                or center.alphabet is not self:
            raise InvalidTriple("entries from a different alphabet")
        if left is right:
            raise InvalidTriple("outer entries are equal: %r" % (left,))
        if left.height != right.height or left.height < 1:
            raise InvalidTriple("outer entries must share height >= 1")
        if center.height != left.height - 1:
            raise InvalidTriple(
                "center height %d does not fit outer height %d"
                % (center.height, left.height))
        if not (center is left.left or center is left.right) or \
                not (center is right.left or center is right.right):
            raise InvalidTriple("center is not a shared outer entry")
        height = left.height + 1
        if height > self.intern_cap:
            raise HeightCapExceeded(
                "letter height %d above intern cap %d" % (height, self.intern_cap))
        key = (left.uid, center.uid, right.uid)
        with self._lock:
            g = self._triples.get(key)
            if g is None:
                g = self._make(height, left, center, right, None,
                               (height, left._key, center._key, right._key))
                self._triples[key] = g
            return g

    def level(self, i):
        """All letters of height ``i`` in canonical (l, c, r) order."""
        if i < 0:
            raise ValueError("negative level")
        got = self._levels.get(i)
        if got is not None:
            return got
        if i > self.enum_cap:
            raise HeightCapExceeded(
                "level %d above enumeration cap %d" % (i, self.enum_cap))
        with self._lock:
            got = self._levels.get(i)
            if got is not None:
                return got
            prev = self.level(i - 1)
            anchors = {}
            for g in prev:
                for c in dict.fromkeys(g.entries()):
                    anchors.setdefault(c, []).append(g)
            out = []
            for l in prev:
                cs = dict.fromkeys(sorted(l.entries()))
                for c in cs:
                    for r in anchors[c]:
                        if r is not l:
                            out.append(self.triple(l, c, r))
            level = tuple(out)
            self._levels[i] = level
            return level

    def neighbors_up(self, g):
        """All letters one level above ``g`` having it as an outer entry."""
        if g.alphabet is not self:
            raise ValueError("letter from a different alphabet")
        if g.height < 1:
            raise ValueError("the identity letter has no neighbors")
        got = self._neighbors.get(g.uid)
        if got is None:
            up = self.level(g.height + 1)
            got = tuple(h for h in up if h.left is g or h.right is g)
            self._neighbors[g.uid] = got
        return got


def precedes(h, g):
    """Ground order: ``h`` precedes ``g`` iff it is nested inside ``g``."""
    return h in g.ground


def uphill_path(h, g):
    """A strictly ascending entry chain from ``h`` to ``g``, or None.

    When ``h`` lies in the ground of ``g`` the chain exists, is one
    letter per height from ``h`` up to ``g``, and stays inside the
    ground of ``g``.
    """
    if h is g:
        return (g,)
    if g.height == 0:
        return None
    if h in g.left.ground:
        return uphill_path(h, g.left) + (g,)
    if h in g.right.ground:
        return uphill_path(h, g.right) + (g,)
    return None


def neighbor_count(i, n):
    """Closed-form size of the up-neighbor set of a height-``i`` letter."""
    if n < 2 or i < 1:
        raise ValueError("need n >= 2 and i >= 1")
    value = 2 ** (2 * i - 1) * (3 * n - 5) + 4
    assert value % 3 == 0
    return value // 3


def level_size(i, n):
    """Closed-form number of letters of height ``i`` over ``n`` base letters."""
    if n < 2 or i < 0:
        raise ValueError("need n >= 2 and i >= 0")
    if i == 0:
        return 1
    size = n
    for j in range(1, i):
        factor = 4 ** (j - 1) * (3 * n - 5) + 2
        assert factor % 3 == 0
        size *= factor // 3
    return size


def count_formulas(i, n):
    """Pair (size of level i+1, up-neighbor count at level i)."""
    return level_size(i + 1, n), neighbor_count(i, n)
