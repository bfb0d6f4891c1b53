"""Row-algorithm timings over a sweep of n, written as CSV (integer nanoseconds)."""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from mahonia.bench import run_bench


@dataclass
class ScalingConfig:
    ns: list = field(default_factory=lambda: [10, 20, 40, 60, 80])
    algos: list = field(default_factory=lambda: ["recurrence", "genfun", "closed"])
    repeat: int = 3


def main(cfg: ScalingConfig, out=sys.stdout):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "algo", "median_ns"])
    for n in cfg.ns:
        for t in run_bench("inv-row", (n,), cfg.algos, cfg.repeat):
            w.writerow([n, t.algo, t.median_ns])


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--ns", type=int, nargs="+", default=ScalingConfig().ns)
    p.add_argument("--algos", nargs="+", default=ScalingConfig().algos)
    p.add_argument("--repeat", type=int, default=3)
    a = p.parse_args()
    main(ScalingConfig(a.ns, a.algos, a.repeat))
