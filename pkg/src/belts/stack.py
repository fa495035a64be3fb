"""
The +/- symbol-stack technique for reading off a pure twist-word by hand.

Each letter becomes a row of three symbols. A cross joins the two columns that
carry equal symbols and a bar continues the third column straight down. Summing
the symbols (+ is 1/2, - is -1/2) along each path, starting from the top twist,
gives the pure twist-word at the bottom.

This module deliberately works from the symbol table alone and shares no code
with :mod:`belts.reduction`, so it can serve as an independent check.

Rendered layout for [0,0,0] s1 (cells as wide as the widest number, two spaces
between cells)::

     0     0     0
     +     +     -
        x        |
    1/2   1/2   -1/2

The first line is the top twist-word and the last the path sums at the ending
columns. Each letter contributes a symbol line and a connector line with an
``x`` between the crossed columns and a ``|`` under the third.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FramedBraid, Perm3, TwistWord

SYMBOLS: dict[tuple[int, int], str] = {
    (1, 1): "++-",
    (1, -1): "--+",
    (2, 1): "-++",
    (2, -1): "+--",
}

CROSS_12 = (1, 2)
CROSS_23 = (2, 3)


@dataclass(frozen=True, slots=True)
class StackRow:
    symbols: str
    cross: tuple[int, int]


@dataclass(frozen=True, slots=True)
class SymbolStack:
    header: TwistWord
    rows: tuple[StackRow, ...] = ()


def _cross_for(symbols: str) -> tuple[int, int]:
    # The cross sits under the pair of equal symbols.
    if symbols[0] == symbols[1]:
        return CROSS_12
    if symbols[1] == symbols[2]:
        return CROSS_23
    raise ValueError(f"row {symbols!r} has no pair of equal adjacent symbols")


def build_stack(fb: FramedBraid) -> SymbolStack:
    rows = []
    for g in fb.word.letters:
        sym = SYMBOLS[(g.index, g.sign)]
        rows.append(StackRow(sym, _cross_for(sym)))
    return SymbolStack(fb.twist, tuple(rows))


def trace_paths(stack: SymbolStack) -> list[tuple[int, int]]:
    """For each start column, (end column, path sum in half-units)."""
    out = []
    for start in (1, 2, 3):
        col = start
        total = stack.header.halves[start - 1]
        for row in stack.rows:
            total += 1 if row.symbols[col - 1] == "+" else -1
            a, b = row.cross
            if col == a:
                col = b
            elif col == b:
                col = a
        out.append((col, total))
    return out


def evaluate(stack: SymbolStack) -> tuple[TwistWord, Perm3]:
    """Column sums deposited at each path's end, and the start -> end position map."""
    sums = [0, 0, 0]
    ends = []
    for end, total in trace_paths(stack):
        sums[end - 1] = total
        ends.append(end)
    return TwistWord(tuple(sums)), Perm3(tuple(ends))


def render(stack: SymbolStack) -> list[str]:
    sums, _ = evaluate(stack)
    head = stack.header.display_entries()
    foot = sums.display_entries()
    width = max(len(s) for s in head + foot)
    pitch = width + 2
    centers = [k * pitch + (width - 1) // 2 for k in range(3)]

    def grid(cells: list[str]) -> str:
        return "  ".join(c.center(width) for c in cells).rstrip()

    lines = [grid(head)]
    for row in stack.rows:
        lines.append(grid(list(row.symbols)))
        line = [" "] * (3 * width + 4)
        a, b = row.cross
        line[(centers[a - 1] + centers[b - 1]) // 2] = "x"
        bar = ({1, 2, 3} - {a, b}).pop()
        line[centers[bar - 1]] = "|"
        lines.append("".join(line).rstrip())
    lines.append(grid(foot))
    return lines
