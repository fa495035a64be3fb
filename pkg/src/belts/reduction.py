"""Pure twist-word of a framed 3-braid, standard-form multiplication and its inverse."""

from __future__ import annotations

from .core import (
    S1,
    S1_INV,
    S2,
    S2_INV,
    ZERO_TWIST,
    BraidWord,
    FramedBraid,
    Generator,
    TwistWord,
    apply_perm,
    perm_elim,
    perm_lift,
    swap_of,
    word_concat,
    writhe,
)

# Twist left behind when a crossing is traded for twists by flipping the top node.
# Each triple is invariant under the swap its generator induces.
GENERATOR_TWISTS: dict[Generator, TwistWord] = {
    S1: TwistWord((1, 1, -1)),
    S1_INV: TwistWord((-1, -1, 1)),
    S2: TwistWord((-1, 1, 1)),
    S2_INV: TwistWord((1, -1, -1)),
}

PureTwistWord = TwistWord


def twist_of_generator(g: Generator) -> TwistWord:
    return GENERATOR_TWISTS[g]


def pure_twist(fb: FramedBraid) -> PureTwistWord:
    """Eliminate crossings top-down until the braid word is the identity.

    Each letter permutes the accumulated twist by its swap and then adds its own
    twist triple.
    """
    h0, h1, h2 = fb.twist.halves
    for g in fb.word.letters:
        if g.index == 1:
            h0, h1 = h1, h0
        else:
            h1, h2 = h2, h1
        d = GENERATOR_TWISTS[g].halves
        h0, h1, h2 = h0 + d[0], h1 + d[1], h2 + d[2]
    return TwistWord((h0, h1, h2))


def pure_twist_stepwise(fb: FramedBraid) -> list[TwistWord]:
    """Accumulated twist after each eliminated letter (first item is the initial twist)."""
    acc = fb.twist
    out = [acc]
    for g in fb.word.letters:
        acc = apply_perm(swap_of(g), acc) + twist_of_generator(g)
        out.append(acc)
    return out


def multiply(fb1: FramedBraid, fb2: FramedBraid) -> FramedBraid:
    """Join ``fb2`` below ``fb1`` and move its twists up through ``fb1``'s braid."""
    twist = fb1.twist + apply_perm(perm_lift(fb1.word), fb2.twist)
    return FramedBraid(twist, word_concat(fb1.word, fb2.word))


IDENTITY_FRAMED = FramedBraid()


def isotopic(fb1: FramedBraid, fb2: FramedBraid) -> bool:
    return pure_twist(fb1) == pure_twist(fb2)


def cyclic_equivalent(t1: PureTwistWord, t2: PureTwistWord) -> bool:
    return t2 in t1.rotations()


def inverse_reduce(target: PureTwistWord, w: BraidWord) -> TwistWord:
    """The unique top twist A with ``pure_twist(A·w) == target``.

    Uses pure_twist(A·w) = perm_elim(w)(A) + pure_twist([0,0,0]·w).
    """
    offset = pure_twist(FramedBraid(ZERO_TWIST, w))
    return apply_perm(perm_elim(w).inverse(), target - offset)


def conserved_total_halves(fb: FramedBraid) -> int:
    """Entry sum of the pure twist-word, in half-units, predicted without reducing."""
    return fb.twist.total_halves() + writhe(fb.word)
