"""Run every verification suite over a grid of r and d and print a summary.

    python scripts/run_suites.py --max-r 3 --max-weight 3
"""
import argparse
import time
from dataclasses import dataclass

from jpk.cli import SUITES, RunConfig, cmd_verify


@dataclass
class Grid:
    max_r: int = 3
    max_weight: int = 3
    trunc: int = 4
    box: int = 3
    d_values: tuple = ("symbolic", "2", "1/3")
    jobs: int = 4


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=Grid.max_r)
    ap.add_argument("--max-weight", type=int, default=Grid.max_weight)
    ap.add_argument("--trunc", type=int, default=Grid.trunc)
    ap.add_argument("--box", type=int, default=Grid.box)
    a = ap.parse_args()
    g = Grid(a.max_r, a.max_weight, a.trunc, a.box)
    print(f"{'suite':<20} {'r':>2} {'d':<9} {'pass':>5} {'fail':>5} {'skip':>5} {'sec':>7}")
    total_fail = 0
    for d in g.d_values:
        for r in range(1, g.max_r + 1):
            cfg = RunConfig(r=r, d=d, max_weight=g.max_weight, trunc=g.trunc, box=g.box,
                            jobs=g.jobs)
            for s in SUITES:
                t0 = time.perf_counter()
                res = cmd_verify(s, cfg)
                c = res.counts
                total_fail += c["fail"]
                print(f"{s:<20} {r:>2} {d:<9} {c['pass']:>5} {c['fail']:>5} {c['skip']:>5} "
                      f"{time.perf_counter() - t0:>7.2f}")
    print("all passed" if not total_fail else f"{total_fail} failing reports")


if __name__ == "__main__":
    main()
