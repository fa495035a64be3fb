"""
Value types for three-strand braid words, position permutations and twist-words.

Twists are kept as integers counting half-twists, so a twist-word [1/2, 3/2, -1/2]
is stored as halves (1, 3, -1). Every operation in the package is exact.

Conventions used throughout:

* A ``Perm3`` with image (p1, p2, p3) moves the content at position i to
  position p_i, i.e. ``result[p(i)] = t[i]``.
* ``a.then(b)`` is the permutation that applies ``a`` to contents first and ``b``
  afterwards.
* The first letter of a braid word is the top end of the braid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence


class _Letter(NamedTuple):
    index: int
    sign: int


class Generator(_Letter):
    """One of the four letters s1, s1^-1, s2, s2^-1.

    A tuple underneath, so hashing and comparison stay cheap in large word sets.
    """

    __slots__ = ()

    def __new__(cls, index: int, sign: int = 1):
        if index not in (1, 2):
            raise ValueError(f"generator index must be 1 or 2, got {index}")
        if sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {sign}")
        return super().__new__(cls, index, sign)

    def __invert__(self) -> Generator:
        return inverse_generator(self)

    def __str__(self):
        return f"s{self.index}" if self.sign == 1 else f"s{self.index}^-1"

    __repr__ = __str__


S1 = Generator(1, 1)
S1_INV = Generator(1, -1)
S2 = Generator(2, 1)
S2_INV = Generator(2, -1)
GENERATORS = (S1, S1_INV, S2, S2_INV)


_INVERSE = {S1: S1_INV, S1_INV: S1, S2: S2_INV, S2_INV: S2}


def inverse_generator(g: Generator) -> Generator:
    return _INVERSE[g]


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A finite word in the B3 generators; the empty word is the identity braid.

    No reduction is applied on construction.
    """

    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: BraidWord) -> BraidWord:
        return word_concat(self, other)

    def __mul__(self, n: int) -> BraidWord:
        return BraidWord(self.letters * n)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "I"


IDENTITY_WORD = BraidWord()


def word(*letters: Generator) -> BraidWord:
    return BraidWord(tuple(letters))


def word_concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    return BraidWord(w1.letters + w2.letters)


def word_inverse(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(inverse_generator(g) for g in reversed(w.letters)))


def word_power(w: BraidWord, n: int) -> BraidWord:
    """w^n; negative powers go through the inverse word, n == 0 gives I."""
    if n < 0:
        return BraidWord(word_inverse(w).letters * -n)
    return BraidWord(w.letters * n)


def free_reduce(w: BraidWord) -> BraidWord:
    # Single stack pass: free reduction is confluent, so this gives the unique normal form.
    out: list[Generator] = []
    for g in w.letters:
        if out and out[-1].index == g.index and out[-1].sign == -g.sign:
            out.pop()
        else:
            out.append(g)
    return BraidWord(tuple(out))


# Memo for Perm3.then; S3 has only 36 ordered pairs.
_THEN: dict = {}


@dataclass(frozen=True, slots=True)
class Perm3:
    """Bijection of positions {1, 2, 3}; content at position i moves to ``image[i-1]``."""

    image: tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.image) != [1, 2, 3]:
            raise ValueError(f"{self.image} is not a permutation of (1, 2, 3)")
        if not isinstance(self.image, tuple):
            object.__setattr__(self, "image", tuple(self.image))

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def then(self, other: Perm3) -> Perm3:
        """Apply ``self`` to contents first, then ``other``."""
        key = (self.image, other.image)
        out = _THEN.get(key)
        if out is None:
            out = _THEN[key] = Perm3(tuple(other.image[j - 1] for j in self.image))
        return out

    def inverse(self) -> Perm3:
        inv = [0, 0, 0]
        for i, j in enumerate(self.image, start=1):
            inv[j - 1] = i
        return Perm3(tuple(inv))

    def is_identity(self) -> bool:
        return self.image == (1, 2, 3)

    def permute(self, items: Sequence) -> tuple:
        out = [None, None, None]
        for i, x in enumerate(items):
            out[self.image[i] - 1] = x
        return tuple(out)


IDENTITY_PERM = Perm3((1, 2, 3))
P12 = Perm3((2, 1, 3))
P23 = Perm3((1, 3, 2))
P13 = Perm3((3, 2, 1))


def compose(*perms: Perm3) -> Perm3:
    """Compose left to right: the first argument acts on contents first."""
    out = IDENTITY_PERM
    for p in perms:
        out = out.then(p)
    return out


def swap_of(g: Generator) -> Perm3:
    return P12 if g.index == 1 else P23


def perm_lift(w: BraidWord) -> Perm3:
    """Transport map for twists moved from below ``w`` to its top.

    The swap of the last letter acts first and the swap of the first letter last.
    """
    out = IDENTITY_PERM
    for g in w.letters:
        out = swap_of(g).then(out)
    return out


def perm_elim(w: BraidWord) -> Perm3:
    """Position map accumulated while eliminating crossings top-down (first letter first)."""
    out = IDENTITY_PERM
    for g in w.letters:
        out = out.then(swap_of(g))
    return out


def _fmt_half(n: int) -> str:
    return str(n // 2) if n % 2 == 0 else f"{n}/2"


@dataclass(frozen=True, slots=True)
class TwistWord:
    """Triple of twists in half-units: entry i is worth ``halves[i] / 2`` full twists."""

    halves: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        if not isinstance(self.halves, tuple):
            object.__setattr__(self, "halves", tuple(self.halves))
        if len(self.halves) != 3:
            raise ValueError("a twist-word has exactly three entries")

    @classmethod
    def of(cls, a, b, c) -> TwistWord:
        """Build from values (ints, Fractions or strings like '3/2'), each a multiple of 1/2."""
        halves = []
        for v in (a, b, c):
            h = Fraction(v) * 2
            if h.denominator != 1:
                raise ValueError(f"{v} is not a multiple of 1/2")
            halves.append(int(h))
        return cls(tuple(halves))

    @property
    def values(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(h, 2) for h in self.halves)

    def __add__(self, other: TwistWord) -> TwistWord:
        a, b = self.halves, other.halves
        return TwistWord((a[0] + b[0], a[1] + b[1], a[2] + b[2]))

    def __sub__(self, other: TwistWord) -> TwistWord:
        a, b = self.halves, other.halves
        return TwistWord((a[0] - b[0], a[1] - b[1], a[2] - b[2]))

    def __neg__(self) -> TwistWord:
        return TwistWord(tuple(-h for h in self.halves))

    def total_halves(self) -> int:
        return sum(self.halves)

    def rotations(self) -> tuple[TwistWord, TwistWord, TwistWord]:
        h = self.halves
        return (self, TwistWord((h[2], h[0], h[1])), TwistWord((h[1], h[2], h[0])))

    def display_entries(self) -> list[str]:
        return [_fmt_half(h) for h in self.halves]

    def display(self) -> str:
        return "[" + ", ".join(self.display_entries()) + "]"

    def __str__(self):
        return self.display()


ZERO_TWIST = TwistWord((0, 0, 0))


def apply_perm(p: Perm3, t: TwistWord) -> TwistWord:
    h = t.halves
    out = [0, 0, 0]
    out[p.image[0] - 1] = h[0]
    out[p.image[1] - 1] = h[1]
    out[p.image[2] - 1] = h[2]
    return TwistWord(tuple(out))


@dataclass(frozen=True, slots=True)
class FramedBraid:
    """Standard form [r,s,t]·B: all twist isotoped to the top, then the braid word."""

    twist: TwistWord = ZERO_TWIST
    word: BraidWord = IDENTITY_WORD

    def __str__(self):
        return f"{self.twist}·{self.word}"


# Left-hand sides of the braid relation and its formally inverted variant.
_BRAID_RELATIONS: tuple[tuple[tuple[Generator, ...], tuple[Generator, ...]], ...] = (
    ((S1, S2, S1), (S2, S1, S2)),
    ((S1_INV, S2_INV, S1_INV), (S2_INV, S1_INV, S2_INV)),
)
_CANCELLING_PAIRS = tuple((g, inverse_generator(g)) for g in GENERATORS)


def neighbor_letters(letters: tuple[Generator, ...]) -> list[tuple[Generator, ...]]:
    """Letter tuples one relation step away, without repeats, in a fixed order.

    Steps: the braid relation (either direction, plain or inverted letters) at any
    position, insertion of a cancelling pair at any gap, deletion of an adjacent
    cancelling pair.
    """
    n = len(letters)
    out: list[tuple[Generator, ...]] = []
    for lhs, rhs in _BRAID_RELATIONS:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            for i in range(n - 2):
                if letters[i:i + 3] == a:
                    out.append(letters[:i] + b + letters[i + 3:])
    for i in range(n + 1):
        head, tail = letters[:i], letters[i:]
        for pair in _CANCELLING_PAIRS:
            out.append(head + pair + tail)
    for i in range(n - 1):
        x, y = letters[i], letters[i + 1]
        if x.index == y.index and x.sign == -y.sign:
            out.append(letters[:i] + letters[i + 2:])
    return list(dict.fromkeys(out))


def relation_neighbor_list(w: BraidWord) -> list[BraidWord]:
    return [BraidWord(t) for t in neighbor_letters(w.letters)]


def relation_neighbors(w: BraidWord) -> set[BraidWord]:
    """All words one relation step away from ``w`` (see :func:`neighbor_letters`)."""
    return set(relation_neighbor_list(w))


def writhe(w: BraidWord) -> int:
    return sum(g.sign for g in w.letters)


def parse_word(text: str) -> BraidWord:
    """Quick word builder for flat strings like ``"s1 s2^-1"`` (no powers, no twist)."""
    table = {str(g): g for g in GENERATORS}
    return BraidWord(tuple(table[tok] for tok in text.split()))

