"""Compiled vs pure-Python kernels on the oracle's hot paths.

Usage: python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import statistics
import time
from contextlib import contextmanager

import numpy as np

from coverideals import graphs, kernels
from coverideals.experiments import complete_power, counterexample_graph
from coverideals.monomial import power
from coverideals.oracle import betti_table_oracle, hochster_entry


@contextmanager
def backend(name: str):
    saved = kernels.BACKEND
    kernels.BACKEND = name
    try:
        yield
    finally:
        kernels.BACKEND = saved


def _subset_sweep():
    J = power(graphs.cover_ideal(counterexample_graph("G")), 3)
    return lambda: hochster_entry(J, 2, 16, sweep="subsets")


def _lattice_entry():
    J = power(graphs.cover_ideal(counterexample_graph("G")), 3)
    return lambda: hochster_entry(J, 2, 16)


def _full_table():
    I = complete_power(5, 3)
    return lambda: betti_table_oracle(I).sorted_entries()


def _cycle_table():
    I = power(graphs.cover_ideal(graphs.cycle(5)), 3)
    return lambda: betti_table_oracle(I).sorted_entries()


def _dense_rank():
    M = np.random.default_rng(0).integers(0, 32003, size=(250, 250))
    return lambda: kernels.rank_mod_p(M, 32003)


WORKLOADS = {
    "beta_2,16 by all 16-subsets": _subset_sweep,
    "beta_2,16 by LCM lattice": _lattice_entry,
    "oracle table J(K_5)^3": _full_table,
    "oracle table J(C_5)^3": _cycle_table,
    "rank 250x250 over GF(32003)": _dense_rank,
}


def time_call(fn, repeat: int) -> tuple[float, object]:
    samples, value = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    if kernels.compiled_kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rows = []
    for name, make in WORKLOADS.items():
        fn = make()
        times, values = {}, {}
        for b in ("cython", "python"):
            with backend(b):
                times[b], values[b] = time_call(fn, args.repeat)
        if values["cython"] != values["python"]:
            raise SystemExit(f"backends disagree on {name}")
        rows.append({"workload": name, **{f"{b}_s": round(t, 4) for b, t in times.items()}, "speedup": round(times["python"] / times["cython"], 1)})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'cython':>9}  {'python':>9}  speedup")
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['cython_s']:>8.4f}s  {r['python_s']:>8.4f}s  {r['speedup']:>6.1f}x")


if __name__ == "__main__":
    main()
