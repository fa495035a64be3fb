"""Exact pure twist-word computations for framed three-strand braids (braided belts)."""

from .core import (
    GENERATORS,
    IDENTITY_PERM,
    IDENTITY_WORD,
    P12,
    P13,
    P23,
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
    free_reduce,
    inverse_generator,
    perm_elim,
    perm_lift,
    relation_neighbors,
    swap_of,
    word,
    word_concat,
    word_inverse,
    writhe,
)
from .expr import ParseError, parse_expression, render_expression
from .reduction import (
    cyclic_equivalent,
    inverse_reduce,
    isotopic,
    multiply,
    pure_twist,
    twist_of_generator,
)

__version__ = "0.1.0"
