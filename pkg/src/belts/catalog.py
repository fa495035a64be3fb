"""
First-generation fermions and their pure twist-words.

The pure twist-words are tabulated data. Standard forms are recovered by
inverse reduction through a fixed two-letter braid per handedness:
s1 s2^-1 for left-handed entries (the positron's braid) and s2^-1 s1 for
right-handed ones (a reconstruction: the only two-letter word that sends whole
twists onto every right-handed value).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .core import S1, S1_INV, S2, S2_INV, BraidWord, FramedBraid, TwistWord, word
from .reduction import cyclic_equivalent, inverse_reduce

Handedness = Literal["left", "right"]

LEFT_WORD = word(S1, S2_INV)
RIGHT_WORD = word(S2_INV, S1)

# (particle, colour, left pure twist, right pure twist), in table order.
_TABLE = [
    ("e-", None, (0, -2, -1), (-1, 0, -2)),
    ("ubar", "B", (0, -1, -1), (-1, 1, -2)),
    ("ubar", "G", (1, -2, -1), (-1, 0, -1)),
    ("ubar", "R", (0, -2, 0), (0, 0, -2)),
    ("d", "B", (1, -2, 0), (0, 0, -1)),
    ("d", "G", (0, -1, 0), (0, 1, -2)),
    ("d", "R", (1, -1, -1), (-1, 1, -1)),
    ("nu", None, (1, -1, 0), (0, 1, -1)),
    ("dbar", "B", (1, 0, 0), (0, 2, -1)),
    ("dbar", "G", (2, -1, 0), (0, 1, 0)),
    ("dbar", "R", (1, -1, 1), (1, 1, -1)),
    ("u", "B", (2, -1, 1), (1, 1, 0)),
    ("u", "G", (1, 0, 1), (1, 2, -1)),
    ("u", "R", (2, 0, 0), (0, 2, 0)),
    ("e+", None, (2, 0, 1), (1, 2, 0)),
]

_PRETTY = {"e-": "e⁻", "e+": "e⁺", "nu": "ν", "ubar": "ū", "dbar": "d̄", "u": "u", "d": "d"}


@dataclass(frozen=True, slots=True)
class ParticleEntry:
    particle: str
    color: str | None
    handedness: Handedness
    pure: TwistWord

    @property
    def name(self) -> str:
        return self.particle if self.color is None else f"{self.particle}_{self.color}"

    @property
    def pretty_name(self) -> str:
        base = _PRETTY[self.particle]
        return base if self.color is None else f"{base}_{self.color}"

    @property
    def braid_word(self) -> BraidWord:
        return LEFT_WORD if self.handedness == "left" else RIGHT_WORD

    @property
    def standard_form(self) -> FramedBraid:
        return derive_standard_form(self)

    def label(self) -> str:
        return f"{self.name} ({self.handedness})"


class UnknownParticle(LookupError):
    pass


def _build() -> tuple[ParticleEntry, ...]:
    left, right = [], []
    for particle, color, lw, rw in _TABLE:
        left.append(ParticleEntry(particle, color, "left", TwistWord.of(*lw)))
        right.append(ParticleEntry(particle, color, "right", TwistWord.of(*rw)))
    return tuple(left + right)


_ENTRIES = _build()
_INDEX = {(e.name, e.handedness): e for e in _ENTRIES}
_ALIASES = {"e⁻": "e-", "e⁺": "e+", "ν": "nu", "nu_L": "nu", "nu_R": "nu"}


def all_entries() -> tuple[ParticleEntry, ...]:
    """All 30 entries: the left-handed column top to bottom, then the right-handed one."""
    return _ENTRIES


def lookup(name: str, handedness: str) -> ParticleEntry:
    key = _ALIASES.get(name, name)
    for pretty, ascii_ in (("ū", "ubar"), ("d̄", "dbar")):
        if key.startswith(pretty):
            key = ascii_ + key[len(pretty):]
    try:
        return _INDEX[(key, handedness)]
    except KeyError:
        raise UnknownParticle(f"no table entry for {name!r} ({handedness})") from None


def collisions(mode: Literal["exact", "cyclic"] = "exact") -> list[tuple[ParticleEntry, ParticleEntry]]:
    """All unordered pairs of distinct entries whose pure twist-words coincide."""
    if mode == "exact":
        same = lambda a, b: a == b  # noqa: E731
    elif mode == "cyclic":
        same = cyclic_equivalent
    else:
        raise ValueError(f"unknown collision mode {mode!r}")
    return [(a, b) for a, b in combinations(_ENTRIES, 2) if same(a.pure, b.pure)]


def derive_standard_form(entry: ParticleEntry) -> FramedBraid:
    w = entry.braid_word
    return FramedBraid(inverse_reduce(entry.pure, w), w)


def candidate_words() -> list[BraidWord]:
    """The two-letter words mixing both generators, used to justify the right-handed choice."""
    ones, twos = (S1, S1_INV), (S2, S2_INV)
    return [word(a, b) for a in ones for b in twos] + [word(b, a) for a in ones for b in twos]
