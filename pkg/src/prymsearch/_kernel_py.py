"""Pure-python enumeration kernels (fallback when the compiled core is absent).

Both implementations expose the same two functions with identical semantics
and deterministic output order; `covers` picks whichever imports.
"""
from typing import List, Sequence, Tuple

BACKEND = "python"


def enumerate_vectors_kernel(table_flat: Sequence[int], inv: Sequence[int], n: int,
                             pools: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """All tuples with entries from the pools positionally and product identity.

    The last coordinate is forced by the product constraint; it is emitted only
    when it lies in the final pool.  Output is in lexicographic order provided
    the pools are sorted.
    """
    r = len(pools)
    last_pool = set(pools[-1])
    out: List[Tuple[int, ...]] = []
    vec = [0] * r

    def rec(d: int, prod: int):
        if d == r - 1:
            x = inv[prod]
            if x in last_pool:
                vec[d] = x
                out.append(tuple(vec))
            return
        base = prod * n
        for x in pools[d]:
            vec[d] = x
            rec(d + 1, table_flat[base + x])

    if r == 1:
        # degenerate: single entry must be the identity, which pools exclude
        return []
    rec(0, 0)
    return out


def braid_orbit_kernel(table_flat: Sequence[int], inv: Sequence[int], n: int,
                       start: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Orbit of a vector under both directions of the elementary braid moves."""
    r = len(start)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for i in range(r - 1):
            a, b = v[i], v[i + 1]
            w = v[:i] + (b, table_flat[table_flat[inv[b] * n + a] * n + b]) + v[i + 2:]
            if w not in seen:
                seen.add(w)
                stack.append(w)
            u = v[:i] + (table_flat[table_flat[a * n + b] * n + inv[a]], a) + v[i + 2:]
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return sorted(seen)
