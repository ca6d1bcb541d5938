#!/usr/bin/env python3
"""Tabulate exact small Ramsey values against the general bounds.

N_k(q, n) by exhaustive search, next to the closed forms for k = 2 and the
recursive upper bound for k = 3; f(q, n) next to its sandwich.
"""

import argparse
import time

from monopath.digraphs import CapExceeded, f_exact
from monopath.search import BudgetExceeded, SearchBudget, n_exact, recursive_upper_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--time-cap", type=float, default=60.0, help="per-value cap (s)")
    args = ap.parse_args()
    budget = SearchBudget(time_cap=args.time_cap)

    print("N_2(q, n) = (n-1)^q + 1:")
    for q, ns in [(1, (2, 3, 4)), (2, (2, 3, 4)), (3, (2, 3))]:
        for n in ns:
            t0 = time.monotonic()
            try:
                value = n_exact(2, q, n, budget)
            except BudgetExceeded as exc:
                print(f"  q={q} n={n}: gave up ({exc})")
                continue
            closed = (n - 1) ** q + 1
            mark = "ok" if value == closed else "MISMATCH"
            print(f"  q={q} n={n}: {value:>4} (closed form {closed}) {mark} "
                  f"[{time.monotonic() - t0:.1f}s]")

    print("N_3(2, n) = C(2n-4, n-2) + 1:")
    t0 = time.monotonic()
    value = n_exact(3, 2, 4, budget)
    print(f"  n=4: {value} (closed form 7) [{time.monotonic() - t0:.1f}s] "
          f"recursive upper bound {recursive_upper_bound(3, 2, 4)}")

    print("f(q, n) with (n/q)^(q-1) <= f <= (n-1)^(q-1) + 1:")
    for q, n in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3)]:
        try:
            f = f_exact(q, n, cap=12)
        except CapExceeded as exc:
            print(f"  q={q} n={n}: {exc}")
            continue
        low = (n / q) ** (q - 1)
        high = (n - 1) ** (q - 1) + 1
        print(f"  q={q} n={n}: {f:>3}  (bounds [{low:.2f}, {high}])")


if __name__ == "__main__":
    main()
