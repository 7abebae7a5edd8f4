#!/usr/bin/env python3
"""Build the construction families and print their verified certificates.

Usage: python scripts/certify_constructions.py [--l-max 5] [--mn-max 7]
                                               [--es-n-max 7]
"""

import argparse
import time

from cupcap import (build_convex_free, build_free_set, free_set_size_bound,
                    verify_construction)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--l-max", type=int, default=5)
    ap.add_argument("--mn-max", type=int, default=7)
    ap.add_argument("--es-n-max", type=int, default=7)
    args = ap.parse_args()

    print(f"{'claim':>16} {'size':>6} {'bound':>8} {'coll':>5} "
          f"{'cup':>4} {'cap':>4} {'convex':>7} {'ok':>3} {'secs':>6}")
    for l in range(3, args.l_max + 1):
        for m in range(3, args.mn_max + 1):
            for n in range(3, args.mn_max + 1):
                t0 = time.monotonic()
                ps = build_free_set(l, m, n)
                cert = verify_construction(ps, ("x", l, m, n))
                dt = time.monotonic() - t0
                bound = free_set_size_bound(l, m, n)
                print(f"{f'x:{l},{m},{n}':>16} {cert.size:>6} "
                      f"{str(bound):>8} {cert.max_collinear_points:>5} "
                      f"{cert.longest_cup_points:>4} "
                      f"{cert.longest_cap_points:>4} {'-':>7} "
                      f"{'Y' if cert.passes else 'N':>3} {dt:>6.2f}")
    for l in range(3, args.l_max + 1):
        for n in range(6, args.es_n_max + 1):
            t0 = time.monotonic()
            ps = build_convex_free(l, n)
            cert = verify_construction(ps, ("es", l, n))
            dt = time.monotonic() - t0
            print(f"{f'es:{l},{n}':>16} {cert.size:>6} {'-':>8} "
                  f"{cert.max_collinear_points:>5} "
                  f"{cert.longest_cup_points:>4} {cert.longest_cap_points:>4} "
                  f"{cert.max_convex_points:>7} "
                  f"{'Y' if cert.passes else 'N':>3} {dt:>6.2f}")


if __name__ == "__main__":
    main()
