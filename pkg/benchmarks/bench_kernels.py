"""Compare the compiled and pure-Python counting kernels.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]

Counts open/closed multiplicities at N random points of the fundamental domain
for a few fixtures.  With --search, also times the default-grid lattice search
for the octagon at k = 3 on each backend.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ktiling import kernels
from ktiling.coverage import domain_frame, random_domain_rows
from ktiling.instance import load_instance
from ktiling.search import SearchSpec, search_lattice_k_tilings


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--search", action="store_true")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}; {args.points} points, best of {args.repeat}")
    print(f"{'instance':<18}" + "".join(f"{b:>12}" for b in backends) + (f"{'speedup':>10}" if len(backends) > 1 else ""))
    for name in ("d8_lemma3", "d10_lemma4", "d8prime_grs", "d8_badshear"):
        P, X = load_instance(name).build()
        frame = domain_frame(P, X)
        rows = random_domain_rows(X, frame, args.points, np.random.default_rng(0))
        times, results = {}, {}
        for b in backends:
            kernels.use_backend(b)
            times[b] = _time(lambda: results.__setitem__(b, frame.count_rows(rows)), args.repeat)
        if len(set(map(str, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {name}")
        line = f"{name:<18}" + "".join(f"{times[b] * 1e3:>10.1f}ms" for b in backends)
        if len(backends) > 1:
            line += f"{times['python'] / times['c']:>9.1f}x"
        print(line)
    if args.search:
        P = load_instance("d8_lemma3").build_polygon()
        for b in backends:
            kernels.use_backend(b)
            t0 = time.perf_counter()
            hits = search_lattice_k_tilings(SearchSpec(P, 3))
            print(f"search d8 k=3 [{b}]: {len(hits)} hits in {time.perf_counter() - t0:.1f}s")
    kernels.use_backend(backends[0])


if __name__ == "__main__":
    main()
