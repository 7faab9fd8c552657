"""Words over the letter arena and their terrain shapes.

A word is a tuple of letters.  It is a landscape when consecutive
letters sit one level apart with the lower one an outer entry of the
higher one.  Local maxima are ridges, local minima are rivers; a
landscape with endpoints ``1`` is a mountain range, and a river-free
mountain range is a mountain, the canonical word shape.
"""

from __future__ import annotations

from enum import Enum

from .errors import CodeLengthMismatch, EndpointMismatch

LEFT = "l"
RIGHT = "r"


class Shape(Enum):
    NOT_LANDSCAPE = "not-landscape"
    LETTER = "letter"
    UPHILL = "uphill"
    DOWNHILL = "downhill"
    VALLEY = "valley"
    CANYON = "canyon"
    MOUNTAIN_RANGE = "mountain-range"
    MOUNTAIN = "mountain"
    LANDSCAPE = "landscape"


def is_step_up(a, b):
    """True when ``b`` sits one level above ``a`` with ``a`` an entry."""
    return a is b.left or a is b.right


def is_landscape(word):
    if not word:
        return False
    for a, b in zip(word, word[1:]):
        if not (is_step_up(a, b) or is_step_up(b, a)):
            return False
    return True


def _directions(word):
    # +1 for an ascending step, -1 for a descending one
    return [1 if b.height > a.height else -1 for a, b in zip(word, word[1:])]


def river_positions(word):
    return tuple(i for i in range(1, len(word) - 1)
                 if word[i - 1].height > word[i].height < word[i + 1].height)


def ridge_positions(word):
    return tuple(i for i in range(1, len(word) - 1)
                 if word[i - 1].height < word[i].height > word[i + 1].height)


def classify(word):
    """Most specific shape of a word."""
    if not is_landscape(word):
        return Shape.NOT_LANDSCAPE
    if len(word) == 1:
        return Shape.MOUNTAIN if word[0].height == 0 else Shape.LETTER
    dirs = _directions(word)
    if all(d == 1 for d in dirs):
        return Shape.UPHILL
    if all(d == -1 for d in dirs):
        return Shape.DOWNHILL
    if word[0].height == 0 and word[-1].height == 0:
        return Shape.MOUNTAIN if not river_positions(word) else Shape.MOUNTAIN_RANGE
    flips = [i for i in range(1, len(dirs)) if dirs[i] != dirs[i - 1]]
    if dirs[0] == -1 and len(flips) == 1:
        return Shape.CANYON if word[0] is word[-1] else Shape.VALLEY
    return Shape.LANDSCAPE


def splice(u, v):
    """Join two landscapes overlapping in one letter."""
    if u[-1] is not v[0]:
        raise EndpointMismatch("cannot splice %r with %r" % (u[-1], v[0]))
    return u + v[1:]


def reverse(word):
    return word[::-1]


class Mountain:
    """A river-free mountain range; the canonical form of a word.

    Nontrivial mountains ascend from ``1`` to their single peak and
    descend back; the trivial mountain is the one-letter word ``1``.
    """

    __slots__ = ("letters", "peak_index")

    def __init__(self, letters):
        letters = tuple(letters)
        if letters[0].height != 0 or letters[-1].height != 0:
            raise ValueError("mountain endpoints must be the identity letter")
        if not is_landscape(letters):
            raise ValueError("not a landscape")
        if river_positions(letters):
            raise ValueError("mountain must have no rivers")
        self.letters = letters
        self.peak_index = len(letters) // 2

    @property
    def peak(self):
        return self.letters[self.peak_index]

    @property
    def height(self):
        return self.peak.height

    @property
    def is_trivial(self):
        return len(self.letters) == 1

    @property
    def left_hill(self):
        """Ascending arm, peak included."""
        return self.letters[:self.peak_index + 1]

    @property
    def right_hill(self):
        """Descending arm, peak included."""
        return self.letters[self.peak_index:]

    def __eq__(self, other):
        return isinstance(other, Mountain) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return "<%s>" % " ".join(g.literal() for g in self.letters)


def as_mountain(word):
    return word if isinstance(word, Mountain) else Mountain(tuple(word))


def _center_powers(g):
    # g, g^c, g^cc, ... down to height 0 or 1
    powers = [g]
    while powers[-1].height >= 2:
        powers.append(powers[-1].center)
    return powers


def uphill_to(g):
    """The canonical ascent from ``1`` to ``g`` (center-power ladder)."""
    if g.height == 0:
        return (g,)
    powers = _center_powers(g)
    seq = []
    if powers[-1].height == 1:
        seq.append(g.alphabet.one)
    for k in range(len(powers) - 1, 0, -1):
        seq.append(powers[k])
        seq.append(powers[k - 1].left)
    seq.append(g)
    return tuple(seq)


def downhill_from(g):
    """The canonical descent from ``g`` to ``1`` (mirror of uphill_to)."""
    if g.height == 0:
        return (g,)
    powers = _center_powers(g)
    seq = [g]
    for k in range(1, len(powers)):
        seq.append(powers[k - 1].right)
        seq.append(powers[k])
    if powers[-1].height == 1:
        seq.append(g.alphabet.one)
    return tuple(seq)


def letter_mountain(g):
    """The mountain associated with a letter: its two canonical hills."""
    cache = g.alphabet._letter_mountains
    m = cache.get(g.uid)
    if m is None:
        m = Mountain(splice(uphill_to(g), downhill_from(g)))
        cache[g.uid] = m
    return m


def descent_code(word):
    """Read the left/right choices of a descent as a word over {l, r}.

    The final step onto ``1`` carries no information and is skipped, so
    a full descent from a height-i letter yields a code of length i-1.
    """
    if word[-1].height == 0:
        word = word[:-1]
    code = []
    for a, b in zip(word, word[1:]):
        if b is a.left:
            code.append(LEFT)
        elif b is a.right:
            code.append(RIGHT)
        else:
            raise ValueError("not a descent at %r -> %r" % (a, b))
    return "".join(code)


def downhill_from_code(g, code):
    """Rebuild the descent of ``g`` selected by an {l, r} code."""
    if len(code) != max(g.height - 1, 0):
        raise CodeLengthMismatch(
            "code %r has length %d, need %d" % (code, len(code), g.height - 1))
    letters = [g]
    cur = g
    for q in code:
        cur = cur.left if q == LEFT else cur.right
        letters.append(cur)
    if g.height > 0:
        letters.append(g.alphabet.one)
    return tuple(letters)


def descents(g):
    """All descents from ``g`` to ``1`` in code order (l before r)."""
    if g.height == 0:
        return ((g,),)
    out = []

    def walk(prefix, cur):
        if cur.height == 1:
            out.append(tuple(prefix) + (g.alphabet.one,))
            return
        walk(prefix + [cur.left], cur.left)
        walk(prefix + [cur.right], cur.right)

    walk([g], g)
    return tuple(out)


def compact(m):
    """Lossless (peak, ascent code, descent code) form of a mountain."""
    m = as_mountain(m)
    return (m.peak, descent_code(reverse(m.left_hill)),
            descent_code(m.right_hill))


def from_compact(peak, s, t):
    left = reverse(downhill_from_code(peak, s))
    right = downhill_from_code(peak, t)
    return Mountain(splice(left, right))
