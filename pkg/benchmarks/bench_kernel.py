"""Compare the compiled and pure-Python straightening kernels.

Each run builds a fresh kernel (cold memo tables) and straightens a fixed
set of reversed generator words in U(q_K).  Run with

    python3 benchmarks/bench_kernel.py --K 3 --length 8 --repeat 3
"""

import argparse
import random
import time

from qyangian import _backend, _kernel_py
from qyangian.pbw import GeneratorOrder, algebra


def _words(rank_count: int, length: int, count: int, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(rank_count) for _ in range(length)) for _ in range(count)]


def _time(cls, alg, words, repeat: int) -> tuple[float, dict]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        kern = cls(alg.parity, alg.kernel.bracket, alg.kernel.square)
        t0 = time.perf_counter()
        result = [kern.mul_word(w) for w in words]
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--K", type=int, default=3)
    ap.add_argument("--length", type=int, default=8)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    alg = algebra(GeneratorOrder.lex(args.K))
    words = _words(len(alg.pairs), args.length, args.count, args.seed)
    t_py, r_py = _time(_kernel_py.Straightener, alg, words, args.repeat)
    print(f"python  {t_py:8.3f} s")
    if _backend.BACKEND != "cython":
        print("compiled kernel not available; build with pip install -e . --no-build-isolation")
        return
    t_cy, r_cy = _time(_backend.Straightener, alg, words, args.repeat)
    print(f"cython  {t_cy:8.3f} s")
    print(f"speedup {t_py / t_cy:8.2f}x")
    print("results identical:", r_py == r_cy)


if __name__ == "__main__":
    main()
