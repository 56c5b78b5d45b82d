#!/usr/bin/env python
"""siltlab enumeration benchmark.

Runs a timed enumeration of a catalog algebra and prints throughput metrics.
Run with:

    uv run python benchmarks/run.py [--algebra D:6] [--threads N]
"""

from __future__ import annotations

import asyncio
import time
import tracemalloc

from siltlab.catalog import registry
from siltlab.silting.explorer import Explorer


async def run_benchmark(spec: str = "D:6", threads: int = 4) -> dict:
    algebra = registry.get_by_spec(spec)
    tracemalloc.start()

    start = time.monotonic()
    explorer = Explorer(algebra, threads=threads)
    result = await explorer.run()
    elapsed = time.monotonic() - start

    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()

    stats = explorer.stats
    return {
        "algebra": result.algebra,
        "objects": result.count,
        "complete": result.complete,
        "mutations": stats["mutations"],
        "hom_hits": stats["hom_hits"],
        "hom_misses": stats["hom_misses"],
        "elapsed_s": round(elapsed, 3),
        "objects_per_sec": round(result.count / max(elapsed, 0.001), 1),
        "peak_memory_mb": round(peak / 1024 / 1024, 2),
    }


def main():
    import argparse

    parser = argparse.ArgumentParser(description="siltlab benchmark")
    parser.add_argument("--algebra", default="D:6", help="Catalog algebra NAME[:m]")
    parser.add_argument("--threads", type=int, default=4)
    args = parser.parse_args()

    print(f"Benchmarking: {args.algebra}, threads={args.threads}")
    results = asyncio.run(run_benchmark(args.algebra, args.threads))

    print("\nResults:")
    for k, v in results.items():
        print(f"  {k:<22} {v}")


if __name__ == "__main__":
    main()
