#!/usr/bin/env python3
"""Timing breakdown of the pairwise equivalence decisions.

Prints the slowest pairs and the split between spectrum-filtered pairs
(no linear solve needed) and pairs that reached the intertwiner system.

Usage:
    python scripts/bench_distinctness.py [--q 2]
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from qact import decide_equivalence, parse_scalar, validate_q
from qact.catalog import ENTRY_ORDER, instantiate_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", default="2")
    parser.add_argument("--top", type=int, default=10)
    args = parser.parse_args()
    q = validate_q(parse_scalar(args.q))

    reps = instantiate_all(q)
    timings = []
    filtered = solved = 0
    start = time.perf_counter()
    for i, e1 in enumerate(ENTRY_ORDER):
        for e2 in ENTRY_ORDER[i + 1 :]:
            t0 = time.perf_counter()
            verdict = decide_equivalence(reps[e1], reps[e2])
            dt = time.perf_counter() - t0
            assert not verdict.equivalent, (e1, e2)
            timings.append((dt, e1, e2, verdict.candidates_tried))
            if verdict.candidates_tried == 0:
                filtered += 1
            else:
                solved += 1
    total = time.perf_counter() - start

    print(f"q = {q}: {len(timings)} pairs in {total:.2f}s")
    print(f"  ruled out by spectra alone: {filtered}")
    print(f"  required intertwiner solves: {solved}")
    print(f"slowest {args.top} pairs:")
    for dt, e1, e2, tried in sorted(timings, reverse=True)[: args.top]:
        print(f"  {e1:6s} vs {e2:6s} {dt * 1000:7.1f} ms  candidates tried: {tried}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
