#!/usr/bin/env python3
"""Verify every catalog entry and exercise the duality sweep.

Prints one line per entry with the checker verdict, the exact violation
set of the negative fixtures, and confirms duality is an involution that
preserves validity.
"""

from bihom import axioms, catalog, constructions


def main():
    for name in catalog.names():
        kind, _ = catalog.EXPECTATIONS[name]
        model = catalog.entry(name)
        if kind == "r-element":
            print(f"{name:14s} r-element (see the search script)")
            continue
        structure = model.to_structure(kind)
        report = (axioms.check_infbh_bialgebra(structure) if kind == "bialgebra"
                  else axioms.check_bihom_algebra(structure))
        if report.passed:
            print(f"{name:14s} {kind:10s} PASS")
        else:
            pairs = sorted(tuple(v.indices) for v in report.violations)
            ids = sorted({v.equation_id for v in report.violations})
            print(f"{name:14s} {kind:10s} FAIL {ids} at {pairs}")
        if kind == "bialgebra":
            b = model.as_bialgebra()
            dual = constructions.dualize(b)
            involution = constructions.dualize(dual) == b
            dual_report = axioms.check_infbh_bialgebra(dual)
            print(f"{'':14s} dual: involution={involution} "
                  f"valid={dual_report.passed or 'mirrors the violations'}")


if __name__ == "__main__":
    main()
