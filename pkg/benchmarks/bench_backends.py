"""Compare the compiled and pure-Python equal-area DP kernels.

Usage: python3 benchmarks/bench_backends.py [--sizes 1000,10000,...] [--k 9]
"""
import argparse
import importlib
import random
import time


def load_backends():
    backends = {}
    try:
        backends["cython"] = importlib.import_module("eqbreaks._speedups")
    except ImportError:
        pass
    backends["python"] = importlib.import_module("eqbreaks._fallback")
    return backends


def time_kernel(fn, prefix, k, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(prefix, k)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="1000,10000,100000,1000000",
                    help="comma-separated n values")
    ap.add_argument("--k", type=int, default=9)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = load_backends()
    rng = random.Random(42)
    print(f"{'n':>10} " + " ".join(f"{name:>12}" for name in backends)
          + f" {'speedup':>9}")
    for n in sizes:
        prefix = [0.0] * (n + 1)
        acc = 0.0
        for i in range(n):
            acc += rng.lognormvariate(0.0, 2.0)
            prefix[i + 1] = acc
        prefix = tuple(prefix)
        row = {}
        for name, mod in backends.items():
            # pure python at n=1e6 takes minutes; cap it
            reps = args.repeats if name != "python" or n <= 10 ** 5 else 1
            row[name] = time_kernel(mod.dp_equal_area_table, prefix,
                                    args.k, reps)
        cells = " ".join(f"{row[name] * 1000:>10.1f}ms" for name in backends)
        speed = (f"{row['python'] / row['cython']:>8.1f}x"
                 if "cython" in row else "      n/a")
        print(f"{n:>10} {cells} {speed}")


if __name__ == "__main__":
    main()
