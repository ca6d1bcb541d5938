#!/usr/bin/env python3
"""Measure lattice-game step totals for the winning builder.

Prints, per (q, n), the exact stage count, total steps against the
level-filling coordinator, the worst per-stage step count, and the ratio
against the n^2 log2 n scale (only a sanity band at these sizes; the true
asymptotics are far out of reach).
"""

import argparse
import math
import random

from monopath.games import (
    ExtensionCoordinator,
    a_bound,
    b_bound,
    builder_strategy,
    coordinator_strategy,
    play_lattice,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--seeds", type=int, default=5, help="extra random-extension runs")
    args = ap.parse_args()

    q = args.q
    print(f"{'n':>3} {'stages':>7} {'steps':>7} {'max/stage':>9} "
          f"{'ceil(a)':>7} {'n^2 lg n':>9} {'ratio':>6}")
    for n in range(3, args.n_max + 1):
        tr = play_lattice(builder_strategy(q, n), coordinator_strategy(q, n), q, n)
        worst = max(len(s.steps) for s in tr.stages)
        steps = [tr.total_steps]
        for seed in range(args.seeds):
            tr2 = play_lattice(
                builder_strategy(q, n), ExtensionCoordinator(q, n, random.Random(seed)), q, n
            )
            assert tr2.n_stages == b_bound(q, n)
            steps.append(tr2.total_steps)
            worst = max(worst, max(len(s.steps) for s in tr2.stages))
        scale = n * n * math.log2(n)
        print(
            f"{n:>3} {tr.n_stages:>7} {max(steps):>7} {worst:>9} "
            f"{math.ceil(a_bound(q, n)):>7} {scale:>9.1f} {max(steps) / scale:>6.2f}"
        )


if __name__ == "__main__":
    main()
