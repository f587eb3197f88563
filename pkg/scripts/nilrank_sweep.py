#!/usr/bin/env python3
"""Sweep the C(alpha, beta, gamma) family over F_p and cross-check the
closed-form nil-rank against the brute-force enumeration."""

import argparse
import sys

from isotopelab import Field, c_family, nil_rank_bruteforce, nil_rank_exact_C


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=5, help="odd prime (default 5)")
    args = parser.parse_args()

    field = Field.gf(args.p)
    mismatches = 0
    rank3 = []
    for a in range(1, args.p):
        for b in range(args.p):
            for g in range(args.p):
                alpha = field.scalar(a)
                exact = nil_rank_exact_C(alpha, b, g)
                brute = nil_rank_bruteforce(c_family(field, a, b, g))
                if exact.rank != brute.rank:
                    mismatches += 1
                    print(f"MISMATCH ({a},{b},{g}): exact {exact.rank}, brute {brute.rank}")
                if exact.rank == 3:
                    rank3.append((a, b, g))
    total = (args.p - 1) * args.p * args.p
    print(f"checked {total} parameter triples over gf {args.p}")
    print(f"rank-3 members (beta gamma = -2 alpha): {len(rank3)}")
    for triple in rank3:
        print("  C%s" % (triple,))
    print("mismatches:", mismatches)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
