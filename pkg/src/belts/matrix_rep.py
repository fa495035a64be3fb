"""
Framed permutations: monomial 3x3 matrices diag(t^a, t^b, t^c) * P.

The formal variable t is never evaluated; a matrix is stored as the exponents at
its nonzero positions. Products follow PD = D^P P, where D^P is the diagonal
permuted by P.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    IDENTITY_PERM,
    S1,
    S1_INV,
    S2,
    S2_INV,
    ZERO_TWIST,
    BraidWord,
    FramedBraid,
    Generator,
    Perm3,
    TwistWord,
    apply_perm,
    swap_of,
)

# None marks a zero entry; an int is the exponent (in half-units) of t.
MonomialMatrix = tuple[tuple[int | None, ...], ...]


@dataclass(frozen=True, slots=True)
class FramedPermutation:
    twist: TwistWord = ZERO_TWIST
    perm: Perm3 = IDENTITY_PERM

    def __matmul__(self, other: FramedPermutation) -> FramedPermutation:
        return fp_multiply(self, other)


FP_IDENTITY = FramedPermutation()

_RHO: dict[Generator, FramedPermutation] = {
    S1: FramedPermutation(TwistWord((-1, -1, 1)), swap_of(S1)),
    S1_INV: FramedPermutation(TwistWord((1, 1, -1)), swap_of(S1)),
    S2: FramedPermutation(TwistWord((1, -1, -1)), swap_of(S2)),
    S2_INV: FramedPermutation(TwistWord((-1, 1, 1)), swap_of(S2)),
}


def rho_of(g: Generator) -> FramedPermutation:
    """Twists and swap created on a trivial belt by flipping in the crossing ``g``."""
    return _RHO[g]


def fp_multiply(f1: FramedPermutation, f2: FramedPermutation) -> FramedPermutation:
    # Matrix order: f2's permutation acts on contents before f1's.
    return FramedPermutation(f1.twist + apply_perm(f1.perm, f2.twist), f2.perm.then(f1.perm))


def rho_accumulate(w: BraidWord) -> FramedPermutation:
    out = FP_IDENTITY
    for g in w.letters:
        out = fp_multiply(out, _RHO[g])
    return out


def pure_twist_via_rho(w: BraidWord) -> TwistWord:
    """Pure twist-word of [0,0,0]·w read off the accumulated framed permutation.

    The accumulated twist sits in the frame of the braid's bottom end; moving it
    back through the inverse permutation before negating puts it in the same frame
    as top-down elimination.
    """
    f = rho_accumulate(w)
    return -apply_perm(f.perm.inverse(), f.twist)


def pure_twist_via_rho_framed(fb: FramedBraid) -> TwistWord:
    """As :func:`pure_twist_via_rho`, with the top twist entered as a leading diagonal factor.

    The factor carries the negated twist, matching the sign of the rho matrices.
    """
    f = fp_multiply(FramedPermutation(-fb.twist, IDENTITY_PERM), rho_accumulate(fb.word))
    return -apply_perm(f.perm.inverse(), f.twist)


def pure_twist_via_rho_unframed(w: BraidWord) -> TwistWord:
    """Plain negation of the accumulated twist, without the frame correction."""
    return -rho_accumulate(w).twist


def perm_matrix(p: Perm3) -> tuple[tuple[int, ...], ...]:
    """0/1 matrix M with M e_i = e_{p(i)}."""
    m = [[0, 0, 0] for _ in range(3)]
    for i in (1, 2, 3):
        m[p(i) - 1][i - 1] = 1
    return tuple(tuple(row) for row in m)


def as_matrix(f: FramedPermutation) -> MonomialMatrix:
    pm = perm_matrix(f.perm)
    return tuple(
        tuple(f.twist.halves[r] if pm[r][c] else None for c in range(3)) for r in range(3)
    )


def monomial_matmul(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    """Product of monomial matrices with entries t^e (None is 0).

    Exponents add; a sum of two nonzero monomials cannot occur for monomial inputs.
    """
    out = []
    for r in range(3):
        row = []
        for c in range(3):
            terms = [a[r][k] + b[k][c] for k in range(3) if a[r][k] is not None and b[k][c] is not None]
            if len(terms) > 1:
                raise ValueError("inputs are not monomial matrices")
            row.append(terms[0] if terms else None)
        out.append(tuple(row))
    return tuple(out)
