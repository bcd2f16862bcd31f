#!/usr/bin/env python3
"""Scan all Fano triples up to a bound and tabulate their discrete data.

For each triple: ADE type, kappa, |sigma_b|, root count, the constant term
(1/12) sum (a_k^2 - 1)/a_k (verified three ways), and the b-coefficient match
verdict over all roots.

Usage: python scripts/scan_triples.py [--max-a3 N]
"""

import argparse
import sys
import time
from fractions import Fraction

from cusp_hierarchy.hqe import b_coefficient_match, constant_term_identity
from cusp_hierarchy.milnor import build_root_system
from cusp_hierarchy.orbifold import FanoTriple, NotFanoError


def fano_triples(max_a3: int):
    for a1 in range(1, max_a3 + 1):
        for a2 in range(a1, max_a3 + 1):
            for a3 in range(a2, max_a3 + 1):
                try:
                    FanoTriple((a1, a2, a3))
                except (NotFanoError, ValueError):
                    continue
                yield (a1, a2, a3)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-a3", type=int, default=6)
    args = parser.parse_args()

    header = f"{'triple':>10} {'type':>5} {'kappa':>6} {'|s_b|':>6} " \
             f"{'roots':>6} {'constant':>10} {'b-match':>8} {'sec':>6}"
    print(header)
    print("-" * len(header))
    for a in fano_triples(args.max_a3):
        t0 = time.time()
        ms = build_root_system(a)
        const = constant_term_identity(ms)
        ok = all(b_coefficient_match(ms, alpha).ok for alpha in ms.finite.roots)
        print(f"{str(a):>10} {ms.finite.type_tag:>5} {ms.orb.triple.kappa:>6} "
              f"{ms.sigma_order:>6} {len(ms.finite.roots):>6} "
              f"{str(Fraction(const)):>10} {'yes' if ok else 'NO':>8} "
              f"{time.time() - t0:>6.2f}")
        if not ok:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
