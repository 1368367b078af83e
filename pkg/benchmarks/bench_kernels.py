#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--objects 64] [--repeats 2000]

Also cross-checks that both implementations return identical results on
the benchmark inputs before timing them.
"""

from __future__ import annotations

import argparse
import random
import time

from atomxr.kernels import _fallback

try:
    from atomxr.kernels import _native
except ImportError:
    _native = None


def make_scene(n: int, seed: int):
    rng = random.Random(seed)
    xs = [rng.uniform(-10, 10) for _ in range(n)]
    ys = [rng.uniform(-2, 2) for _ in range(n)]
    zs = [rng.uniform(-10, 10) for _ in range(n)]
    radii = [rng.uniform(0.1, 1.5) for _ in range(n)]
    return xs, ys, zs, radii


def time_overlap(impl, scene, repeats: int) -> float:
    xs, ys, zs, radii = scene
    started = time.perf_counter()
    for _ in range(repeats):
        impl.overlap_pairs(xs, ys, zs, radii)
    return time.perf_counter() - started


def time_displace(impl, repeats: int) -> float:
    started = time.perf_counter()
    for i in range(repeats):
        impl.displace(0.0, 0.0, 0.0, 1.0, float(i % 7) - 3.0, -2.0, 1.0 / 60.0)
    return time.perf_counter() - started


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--objects", type=int, default=64)
    parser.add_argument("--repeats", type=int, default=2000)
    args = parser.parse_args()

    scene = make_scene(args.objects, seed=1)
    print(f"scene: {args.objects} spheres, {args.repeats} sweeps per implementation")

    if _native is None:
        print("compiled kernel not built (pip install -e . builds it); "
              "timing fallback only")
        fallback = time_overlap(_fallback, scene, args.repeats)
        print(f"overlap_pairs python  : {fallback:8.3f}s")
        return

    assert _native.overlap_pairs(*scene) == _fallback.overlap_pairs(*scene), \
        "implementations disagree"

    native = time_overlap(_native, scene, args.repeats)
    fallback = time_overlap(_fallback, scene, args.repeats)
    print(f"overlap_pairs native  : {native:8.3f}s")
    print(f"overlap_pairs python  : {fallback:8.3f}s")
    print(f"overlap_pairs speedup : {fallback / native:8.1f}x")

    native_d = time_displace(_native, args.repeats * 100)
    fallback_d = time_displace(_fallback, args.repeats * 100)
    print(f"displace      native  : {native_d:8.3f}s")
    print(f"displace      python  : {fallback_d:8.3f}s")
    print(f"displace      speedup : {fallback_d / native_d:8.1f}x")


if __name__ == "__main__":
    main()
