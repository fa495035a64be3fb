"""Rebuild the fermion table: stored pure twist-words, recovered standard forms,
forward re-reduction, and the exact/cyclic collision scan."""

import argparse

from belts.catalog import all_entries, collisions, derive_standard_form
from belts.expr import render_expression
from belts.reduction import pure_twist


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pretty", action="store_true", help="use the table's symbols for names")
    args = ap.parse_args()

    print(f"{'hand':<6} {'particle':<8} {'pure twist':<13} {'standard form':<24} check")
    for e in all_entries():
        sf = derive_standard_form(e)
        ok = pure_twist(sf) == e.pure
        name = e.pretty_name if args.pretty else e.name
        print(f"{e.handedness:<6} {name:<8} {e.pure.display():<13} {render_expression(sf):<24} {'ok' if ok else 'MISMATCH'}")

    for mode in ("exact", "cyclic"):
        pairs = collisions(mode)
        print(f"\n{mode} collisions: {len(pairs)}")
        for a, b in pairs:
            print(f"  {a.label():<16} {a.pure.display():<13} ~ {b.label():<16} {b.pure.display()}")


if __name__ == "__main__":
    main()
