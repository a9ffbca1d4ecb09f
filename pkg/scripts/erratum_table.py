"""Tabulate which form of the component eigenvalue relation holds.

For each m and p prints whether H_{r,p} P_m equals e_p(m + (d/2) delta) P_m
as written (unscaled) and after the (d/2)^p rescaling.
"""
import argparse

from jpk.jack import jack_table, shifted_e
from jpk.partitions import format_partition, partitions_upto
from jpk.scalars import field_from_literal


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--max-weight", type=int, default=3)
    ap.add_argument("--d", default="symbolic")
    a = ap.parse_args()
    fld = field_from_literal(a.d)
    t = jack_table(a.r, fld)
    d = fld.d
    print(f"r={a.r} d={fld.key}")
    print(f"{'m':<10} {'p':>2}  {'unscaled':<8} {'scaled':<8}")
    for m in partitions_upto(a.max_weight, a.r):
        P = t.P(m)
        S = t.S_image(m)
        for p in range(1, a.r + 1):
            e = shifted_e(p, m, d)
            raw = (S[p] - P.scale(e)).is_zero()
            scaled = (S[p].scale((d / 2) ** p) - P.scale(e)).is_zero()
            print(f"({format_partition(m)})".ljust(10),
                  f"{p:>2}  {'holds' if raw else 'fails':<8} {'holds' if scaled else 'fails':<8}")


if __name__ == "__main__":
    main()
