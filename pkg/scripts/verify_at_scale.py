#!/usr/bin/env python3
"""Large-range verification: construction validity for every n up to a bound,
plus the arithmetic consistency of the offset case split.

Usage: python scripts/verify_at_scale.py [construction_to] [offset_to]
Defaults: construction_to=1000, offset_to=10**6.
"""

import sys
import time

from circulant_tdc import (
    FormulaConsistencyError,
    formula_tdc,
    tdc_total_domination_offset,
    total_domination_number_formula,
    verify_construction,
)


def main() -> int:
    construction_to = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    offset_to = int(sys.argv[2]) if len(sys.argv) > 2 else 10**6
    failures = 0

    t = time.time()
    bad = [n for n in range(6, construction_to + 1) if not verify_construction(n).ok]
    print(
        f"constructions 6..{construction_to}: "
        f"{'all verified' if not bad else f'FAILED at {bad[:10]}'} "
        f"({time.time() - t:.1f}s)"
    )
    failures += len(bad)

    t = time.time()
    inconsistent = []
    for n in range(6, offset_to + 1):
        try:
            tdc_total_domination_offset(n)
        except FormulaConsistencyError:
            inconsistent.append(n)
    if inconsistent:
        detail = ", ".join(
            f"n={n} (difference {formula_tdc(n) - total_domination_number_formula(n)})"
            for n in inconsistent[:10]
        )
        print(f"offset case split 6..{offset_to}: INCONSISTENT at {detail} ({time.time() - t:.1f}s)")
    else:
        print(f"offset case split 6..{offset_to}: consistent ({time.time() - t:.1f}s)")
    failures += len(inconsistent)

    return 2 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
