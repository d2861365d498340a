"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 20]

Each kernel is checked for identical output before it is timed; numba
functions are warmed up first so compilation is not counted.
"""
import argparse
import time

import numpy as np

from sevol import kernels


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def cases(rng):
    n = 36  # a 6x6 world
    w = np.full((n, n), np.inf)
    for i in range(n):
        for j in rng.choice(n, size=4, replace=False):
            w[i, j] = w[j, i] = rng.uniform(1.0, 1.5)
    yield "floyd_warshall 36 nodes", kernels.floyd_warshall_numpy, kernels.floyd_warshall_numba, (w,)
    w = np.where(rng.random((144, 144)) < 0.05, rng.uniform(1, 2, (144, 144)), np.inf)
    yield "floyd_warshall 144 nodes", kernels.floyd_warshall_numpy, kernels.floyd_warshall_numba, (w,)
    c = rng.uniform(0, 3, size=(20, 20))
    yield "dtw 20x20", kernels.dtw_numpy, kernels.dtw_numba, (c,)
    c = rng.uniform(0, 3, size=(200, 200))
    yield "dtw 200x200", kernels.dtw_numpy, kernels.dtw_numba, (c,)
    s = rng.integers(0, 5, size=(16, 16)).astype(float)
    mask = rng.random((16, 16)) < 0.9
    yield "top_m 16x16, m=5", kernels.top_m_numpy, kernels.top_m_numba, (s, mask, 5)
    s = rng.random((512, 64))
    mask = np.ones((512, 64), bool)
    yield "top_m 512x64, m=8", kernels.top_m_numpy, kernels.top_m_numba, (s, mask, 8)


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if kernels.numba is None:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<26s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}  match")
    for name, slow, fast, a in cases(rng):
        ok = same(slow(*a), fast(*a))
        t_np = best_of(slow, a, args.repeat)
        t_nb = best_of(fast, a, args.repeat)
        print(f"{name:<26s} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f} {t_np / t_nb:>7.1f}x  {ok}")


if __name__ == "__main__":
    main()
