from itertools import combinations

import pytest

from belts.catalog import (
    LEFT_WORD,
    RIGHT_WORD,
    UnknownParticle,
    all_entries,
    candidate_words,
    collisions,
    derive_standard_form,
    lookup,
)
from belts.core import S1, S2_INV, FramedBraid, TwistWord, word
from belts.reduction import inverse_reduce, pure_twist

# Transcribed from the published table: name, left-handed, right-handed.
TABLE = """
e-      0,-2,-1  -1,0,-2
ubar_B  0,-1,-1  -1,1,-2
ubar_G  1,-2,-1  -1,0,-1
ubar_R  0,-2,0   0,0,-2
d_B     1,-2,0   0,0,-1
d_G     0,-1,0   0,1,-2
d_R     1,-1,-1  -1,1,-1
nu      1,-1,0   0,1,-1
dbar_B  1,0,0    0,2,-1
dbar_G  2,-1,0   0,1,0
dbar_R  1,-1,1   1,1,-1
u_B     2,-1,1   1,1,0
u_G     1,0,1    1,2,-1
u_R     2,0,0    0,2,0
e+      2,0,1    1,2,0
"""


def _rows():
    for line in TABLE.strip().splitlines():
        name, left, right = line.split()
        yield name, TwistWord.of(*left.split(",")), TwistWord.of(*right.split(","))


def _rotations(t):
    a, b, c = t.halves
    return {(a, b, c), (c, a, b), (b, c, a)}


def test_table_verbatim():
    entries = all_entries()
    assert len(entries) == 30
    rows = list(_rows())
    expected = [(n, "left", l) for n, l, _ in rows] + [(n, "right", r) for n, _, r in rows]
    assert [(e.name, e.handedness, e.pure) for e in entries] == expected


def test_lookup():
    assert lookup("e+", "left").pure == TwistWord.of(2, 0, 1)
    assert lookup("nu", "left").pure == TwistWord.of(1, -1, 0)
    assert lookup("d_B", "right").pure == TwistWord.of(0, 0, -1)
    assert lookup("ν", "right").pure == TwistWord.of(0, 1, -1)
    assert lookup("ū_B", "left").pure == TwistWord.of(0, -1, -1)
    with pytest.raises(UnknownParticle):
        lookup("muon", "left")
    with pytest.raises(UnknownParticle):
        lookup("e+", "up")


def test_first_and_last():
    entries = all_entries()
    assert (entries[0].name, entries[0].handedness, entries[0].pure) == ("e-", "left", TwistWord.of(0, -2, -1))
    assert (entries[-1].name, entries[-1].handedness, entries[-1].pure) == ("e+", "right", TwistWord.of(1, 2, 0))


def test_exact_collisions_empty():
    assert collisions("exact") == []


def test_cyclic_collisions_by_brute_force():
    entries = all_entries()
    brute = {
        (a.label(), b.label())
        for a, b in combinations(entries, 2)
        if b.pure.halves in _rotations(a.pure)
    }
    got = {(a.label(), b.label()) for a, b in collisions("cyclic")}
    assert got == brute
    assert ("nu (left)", "nu (right)") in got
    # Every left-handed entry is a rotation of exactly one right-handed entry.
    assert len(got) == 15
    assert all(a.endswith("(left)") and b.endswith("(right)") for a, b in got)


def test_unknown_mode():
    with pytest.raises(ValueError):
        collisions("fuzzy")


def test_derive_examples():
    assert derive_standard_form(lookup("e+", "left")) == FramedBraid(TwistWord.of(1, 1, 1), word(S1, S2_INV))
    assert derive_standard_form(lookup("e-", "left")) == FramedBraid(TwistWord.of(-1, -1, -1), word(S1, S2_INV))
    assert derive_standard_form(lookup("e-", "right")) == FramedBraid(TwistWord.of(-1, -1, -1), word(S2_INV, S1))


@pytest.mark.parametrize("entry", all_entries(), ids=lambda e: e.label())
def test_roundtrip_and_whole_twists(entry):
    fb = derive_standard_form(entry)
    assert pure_twist(fb) == entry.pure
    assert all(h in (-2, 0, 2) for h in fb.twist.halves)


def test_handedness_sum_symmetry():
    by_name = {}
    for e in all_entries():
        by_name.setdefault(e.name, {})[e.handedness] = e.pure.total_halves()
    assert len(by_name) == 15
    assert all(v["left"] == v["right"] for v in by_name.values())


def test_right_word_is_the_unique_whole_twist_choice():
    def whole(w, hand):
        return all(
            all(h in (-2, 0, 2) for h in inverse_reduce(e.pure, w).halves)
            for e in all_entries()
            if e.handedness == hand
        )

    assert [w for w in candidate_words() if whole(w, "right")] == [RIGHT_WORD]
    assert [w for w in candidate_words() if whole(w, "left")] == [LEFT_WORD]
