"""Compare the compiled enumeration kernels against the pure-python ones.

Run:  python3 benchmarks/bench_kernel.py

Workloads mirror the hot loops of a search sweep: vector enumeration
over order-pools and braid-orbit BFS, on groups large enough for the
difference to matter but small enough to finish in seconds.
"""
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import numpy as np

from prymsearch import _kernel_py


def load_compiled():
    try:
        from prymsearch import _kernel
        return _kernel
    except ImportError:
        return None


def dihedral_table(n):
    def mul(a, b):
        ea, ka = divmod(a, n)
        eb, kb = divmod(b, n)
        k = (kb + ka) % n if eb == 0 else (kb - ka) % n
        return ((ea + eb) % 2) * n + k
    return [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]


def flat(table):
    return np.asarray(table, dtype=np.int32).reshape(-1)


def inverse(table):
    n = len(table)
    inv = [0] * n
    for a in range(n):
        inv[a] = table[a].index(0)
    return np.asarray(inv, dtype=np.int32)


def orders(table):
    n = len(table)
    out = [0] * n
    for x in range(n):
        k, acc = 1, x
        while acc != 0:
            acc = table[acc][x]
            k += 1
        out[x] = k
    return out


def time_one(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    compiled = load_compiled()
    table = dihedral_table(18)              # order 36
    tf, inv = flat(table), inverse(table)
    n = len(table)
    ords = orders(table)
    pools = [tuple(x for x in range(n) if ords[x] == m) for m in (2, 2, 2, 18)]

    rows = []
    py_t, py_vecs = time_one(_kernel_py.enumerate_vectors_kernel, tf, inv, n, pools)
    rows.append(("enumerate_vectors (order 36, [2,2,2,18])", py_t, None))
    if compiled:
        c_t, c_vecs = time_one(compiled.enumerate_vectors_kernel, tf, inv, n, pools)
        assert list(map(tuple, c_vecs)) == list(map(tuple, py_vecs)), "kernel mismatch"
        rows[-1] = (rows[-1][0], py_t, c_t)

    start = tuple(int(x) for x in py_vecs[0])
    py_t, py_orb = time_one(_kernel_py.braid_orbit_kernel, tf, inv, n, tuple(start))
    rows.append((f"braid_orbit (seed {tuple(start)}, {len(py_orb)} elements)", py_t, None))
    if compiled:
        c_t, c_orb = time_one(compiled.braid_orbit_kernel, tf, inv, n, tuple(start))
        assert list(map(tuple, c_orb)) == list(map(tuple, py_orb)), "kernel mismatch"
        rows[-1] = (rows[-1][0], py_t, c_t)

    backend = getattr(compiled, "BACKEND", None) if compiled else None
    print(f"compiled backend: {backend or 'not built (pure python only)'}")
    print(f"{'workload':<55} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, pt, ct in rows:
        if ct:
            print(f"{name:<55} {pt*1e3:>8.1f}ms {ct*1e3:>8.1f}ms {pt/ct:>7.1f}x")
        else:
            print(f"{name:<55} {pt*1e3:>8.1f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
