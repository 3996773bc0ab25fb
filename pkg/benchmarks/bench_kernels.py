"""Compare the compiled kernels against the pure-Python fallback.

Run as: python benchmarks/bench_kernels.py
"""

import itertools
import time

from hampoly import _pykernels

try:
    from hampoly import _ckernels
except ImportError:
    _ckernels = None


def bench(label, fn, repeat=3):
    best = min(_timed(fn) for _ in range(repeat))
    print(f"  {label:28s} {best * 1e3:9.2f} ms")
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def workload_enumerate(mod):
    for js in itertools.combinations(range(8), 5):
        mod.j_circuit_tuples(8, list(js))


def workload_greedy(mod):
    js = [0, 2, 3, 5, 6]
    for perm in itertools.permutations(js):
        for mask in range(32):
            minus = [mask >> k & 1 == 1 for k in range(5)]
            mod.greedy_tuple(8, list(perm), minus)


def workload_pareto(mod):
    tuples = mod.j_circuit_tuples(8, [0, 1, 2, 3, 4])
    for mask in range(32):
        minus = [mask >> k & 1 == 1 for k in range(5)]
        mod.pareto_min(tuples, minus)


def main():
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled extension not built; benchmarking fallback only")
    results = {}
    for work_name, work in (("j_circuit_tuples n=8 |J|=5", workload_enumerate),
                            ("greedy all orderings/signs", workload_greedy),
                            ("pareto_min 32 partitions", workload_pareto)):
        print(work_name)
        for name, mod in backends:
            results[(work_name, name)] = bench(name, lambda: work(mod))
        if len(backends) == 2:
            speedup = results[(work_name, "python")] / results[(work_name, "cython")]
            print(f"  {'speedup':28s} {speedup:9.1f} x")


if __name__ == "__main__":
    main()
