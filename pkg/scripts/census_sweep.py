"""Sweep the closed-form census over a range of orders.

Prints one line per order (total / chiral / achiral and the toroidal family
breakdown) and a cumulative Theta(M^2) sanity ratio at the end.

Usage: python scripts/census_sweep.py [MAX_ORDER]
"""

import sys

from pg4.counting import count_order, count_self_mirror


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    cumulative = 0
    for N in range(1, max_order + 1):
        c = count_order(N)
        cumulative += c.total
        sm = count_self_mirror(N)
        fams = " ".join(f"{k.split(':')[1]}={v}"
                        for k, v in sorted(c.per_family.items())
                        if v and k.startswith("tor:"))
        extra = " ".join(f"{k}={v}" for k, v in sorted(c.per_family.items())
                         if v and not k.startswith("tor:"))
        print(f"N={N:5d} total={c.total:6d} chiral={c.chiral:6d} "
              f"achiral={c.achiral:5d} self-mirror={sm:4d}  {fams} {extra}")
    print(f"\ncumulative groups of order <= {max_order}: {cumulative}"
          f"  (ratio to M^2: {cumulative / max_order**2:.3f})")


if __name__ == "__main__":
    main()
