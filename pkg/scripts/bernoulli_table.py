"""Print multivariate Bernoulli polynomials f_m for |m| <= N."""
import argparse

from jpk.binomialtype import bernoulli_series, binomial_family
from jpk.jack import jack_table
from jpk.partitions import format_partition
from jpk.scalars import field_from_literal
from jpk.serialize import sympoly_latex, sympoly_text


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--N", type=int, default=3)
    ap.add_argument("--d", default="symbolic")
    ap.add_argument("--latex", action="store_true")
    a = ap.parse_args()
    fld = field_from_literal(a.d)
    fam = binomial_family(bernoulli_series(a.r, a.N, fld), a.N, jack_table(a.r, fld))
    show = sympoly_latex if a.latex else sympoly_text
    for m in sorted(fam, key=lambda k: (sum(k), k)):
        print(f"({format_partition(m)})  {show(fam[m])}")


if __name__ == "__main__":
    main()
