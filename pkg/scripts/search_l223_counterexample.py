"""Search small groups for a p-subgroup H that is an H-subgroup, and a normal
p'-subgroup N, such that HN (in G or modulo N) is not an H-subgroup.

Such a pair separates the correct HC test from one that uses N_G(H) in place
of N_T(H): under that substitution HC collapses to the H-subgroup property.
"""

import argparse
import itertools
from math import gcd

from hclab.corpus import realize
from hclab.embedding import is_h_subgroup
from hclab.group import join, quotient
from hclab.lattice import all_subgroups, normal_subgroups, prime_of_p_group


def candidate_specs(max_order: int):
    for m in range(2, max_order):
        for n in range(2, max_order // m + 1):
            for k in range(2, m):
                if gcd(k, m) == 1 and pow(k, n, m) == 1:
                    yield f"SD({m},{n},{k})"
    small = ["C2", "C3", "C4", "S3", "D8", "Q8", "A4", "D10", "Dic3", "SD(7,3,2)", "SD(5,4,2)"]
    for a, b in itertools.combinations_with_replacement(small, 2):
        yield f"prod({a},{b})"
    yield from ["S4", "SL23", "A5", "S5"]


def find(G):
    for H in all_subgroups(G):
        p = prime_of_p_group(H.size)
        if p is None or not is_h_subgroup(G, H).holds:
            continue
        for N in normal_subgroups(G):
            if N.size % p == 0 or N.is_trivial:
                continue
            HN = join(G, H, N)
            Q, proj = quotient(G, N)
            if not is_h_subgroup(G, HN).holds or not is_h_subgroup(Q, proj.image(HN)).holds:
                return H, N, HN
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=72)
    args = ap.parse_args()
    seen = set()
    for spec in candidate_specs(args.max_order):
        if spec in seen:
            continue
        seen.add(spec)
        G = realize(spec)
        if G.order > args.max_order * 2:
            continue
        hit = find(G)
        if hit:
            H, N, HN = hit
            print(f"{spec} (order {G.order}): |H|={H.size} |N|={N.size} |HN|={HN.size}")


if __name__ == "__main__":
    main()
