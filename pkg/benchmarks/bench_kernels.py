"""Time the compiled and pure-Python step kernels on the same workload.

    python benchmarks/bench_kernels.py [--runs 40] [--iterations 15]

Also checks that both backends produce identical metrics.
"""

import argparse
import time

import numpy as np

from evoc.engine import RunConfig, run, step_draws
from evoc.experiments import run_seed
from evoc.kernel import BACKENDS, get_step_kernel
from evoc.world import WorldConfig, build_world


def workload(runs, iterations):
    return [RunConfig(WorldConfig(creator_fraction=f, creator_invent_rate=p),
                      iterations=iterations, seed=run_seed(0, f, p, r))
            for f in (0.1, 0.3, 0.6, 1.0) for p in (0.5, 1.0) for r in range(runs)]


def kernel_only(name, steps=300):
    """Kernel time alone, with draws generated up front."""
    cfg = RunConfig(WorldConfig(creator_fraction=0.5, creator_invent_rate=0.75))
    rng = np.random.default_rng(1)
    world = build_world(cfg.world, rng)
    blocks = [step_draws(world, cfg, rng) for _ in range(steps)]
    kernel = get_step_kernel(name)
    t0 = time.perf_counter()
    for order, draws in blocks:
        kernel(world.states, world.fitness, world.p_im, world.p_sym, world.invent_rate,
               world.neighbor_table, world.neighbor_count, order, draws, cfg.change_prob,
               cfg.weights.w_move, cfg.weights.w_sym)
    return (time.perf_counter() - t0) / (steps * world.population)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=40)
    ap.add_argument("--iterations", type=int, default=15)
    args = ap.parse_args()
    configs = workload(args.runs, args.iterations)
    visits = len(configs) * args.iterations * 100
    results, timings = {}, {}
    for name in sorted(BACKENDS):
        t0 = time.perf_counter()
        results[name] = [run(c, backend=name) for c in configs]
        timings[name] = time.perf_counter() - t0
        print(f"{name:>7}: {timings[name]:7.3f}s  {1e6 * timings[name] / visits:6.2f} us/agent-visit")
    if len(timings) == 2:
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x")
    kern = {name: kernel_only(name) for name in sorted(BACKENDS)}
    for name, t in kern.items():
        print(f"kernel only, {name:>7}: {1e9 * t:8.1f} ns/agent-visit")
    if len(kern) == 2:
        print(f"kernel speedup: {kern['python'] / kern['cython']:.0f}x")
    same = all(r == results["python"] for r in results.values())
    print("identical results:", same)


if __name__ == "__main__":
    main()
