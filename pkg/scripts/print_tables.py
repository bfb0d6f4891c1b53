"""Print small I_n(t) and H(n,d,t) tables, each row checked against brute force."""

import argparse
from dataclasses import dataclass

from mahonia.compositions import comp_bruteforce, comp_closed_row
from mahonia.inversions import inv_bruteforce, inv_closed_row


@dataclass
class TableConfig:
    max_n: int = 7
    d_values: tuple = (2, 3, 4)


def main(cfg: TableConfig):
    print("I_n(t)")
    for n in range(1, cfg.max_n + 1):
        row = inv_closed_row(n).values
        assert row == inv_bruteforce(n).values
        print(f"  n={n:<2}", " ".join(map(str, row)))
    for d in cfg.d_values:
        print(f"H(n,{d},t)")
        for n in range(1, cfg.max_n + 1):
            row = comp_closed_row(n, d).values
            assert row == comp_bruteforce(n, d).values
            print(f"  n={n:<2}", " ".join(map(str, row)))


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=TableConfig.max_n)
    p.add_argument("--d", type=int, nargs="+", default=list(TableConfig.d_values))
    a = p.parse_args()
    main(TableConfig(a.max_n, tuple(a.d)))
