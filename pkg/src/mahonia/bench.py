"""Timing harness comparing the row algorithms.

Outputs of every algorithm are compared before any timing is reported.
Times are integer nanoseconds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median_low
from typing import Callable

from mahonia import compositions as C
from mahonia import inversions as I
from mahonia import qanalog as Q


class BenchMismatch(AssertionError):
    pass


def _clear_caches():
    for fn in (
        I.inv_recurrence_row,
        I._signed_subset_weights,
        Q.gaussian_row,
        C.comp_recurrence_row,
    ):
        fn.cache_clear()


INV_ROW: dict[str, Callable[..., tuple[int, ...]]] = {
    "recurrence": lambda n: I.inv_recurrence_row(n),
    "genfun": lambda n: I.inv_genfun(n).values,
    "closed": lambda n: I.inv_closed_row(n).values,
    "brute": lambda n: I.inv_bruteforce(n).values,
}

COMP_ROW: dict[str, Callable[..., tuple[int, ...]]] = {
    "recurrence": lambda n, d: C.comp_recurrence_row(n, d),
    "genfun": lambda n, d: C.comp_genfun(n, d).values,
    "closed": lambda n, d: C.comp_closed_row(n, d).values,
    "brute": lambda n, d: C.comp_bruteforce(n, d).values,
}

TARGETS = {"inv-row": INV_ROW, "comp-row": COMP_ROW}


@dataclass(frozen=True)
class Timing:
    algo: str
    median_ns: int
    repeat: int


def run_bench(target: str, args: tuple[int, ...], algos, repeat: int = 3) -> list[Timing]:
    """Time each algorithm ``repeat`` times on a cold cache.

    Raises BenchMismatch if the algorithms disagree; nothing is timed
    past that point.
    """
    table = TARGETS[target]
    unknown = [a for a in algos if a not in table]
    if unknown:
        raise KeyError(f"unknown algorithm(s) for {target}: {', '.join(unknown)}")
    outputs = {}
    samples: dict[str, list[int]] = {a: [] for a in algos}
    for a in algos:
        for _ in range(max(1, repeat)):
            _clear_caches()
            t0 = time.perf_counter_ns()
            out = table[a](*args)
            samples[a].append(time.perf_counter_ns() - t0)
        outputs[a] = tuple(out)
    ref_name = algos[0]
    for a in algos[1:]:
        if outputs[a] != outputs[ref_name]:
            raise BenchMismatch(f"{target}{args}: {a} disagrees with {ref_name}")
    return [Timing(a, median_low(samples[a]), max(1, repeat)) for a in algos]
