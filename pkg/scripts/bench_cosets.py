"""Time the coset enumerator on a few standard groups.

    python3 scripts/bench_cosets.py [--strategy hlt|felsch] [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from fpg.cosets import Completed, todd_coxeter, verify_table
from fpg.datasets import builtin
from fpg.presentation import FinitePresentation

CASES = [
    ("S3", FinitePresentation.make(["x", "y"], [("1", "x x"), ("2", "y y y"), ("3", "x y x y")]), [], 6),
    ("A5", FinitePresentation.make(["x", "y"], [("1", "x x"), ("2", "y y y"), ("3", "x y x y x y x y x y")]),
     [], 60),
    ("D50", FinitePresentation.make(["r", "s"], [("1", " ".join(["r"] * 50)), ("2", "s s"), ("3", "s r s r")]),
     [], 100),
    ("main", builtin("main"), ["a1", "u3", "b a1 a2 a3"], 1),
]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    for name, P, H, expected in CASES:
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = todd_coxeter(P, H, strategy=args.strategy)
            best = min(best, time.perf_counter() - t0)
        ok = isinstance(out, Completed) and out.index == expected and verify_table(P, H, out.table)
        print(f"{name:6} index={getattr(out, 'index', '?'):>4} {'ok' if ok else 'MISMATCH'}  {best * 1000:8.2f} ms")


if __name__ == "__main__":
    main()
