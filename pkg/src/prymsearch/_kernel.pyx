# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled enumeration kernels: vector enumeration and braid-orbit BFS.

Mirrors _kernel_py exactly (same functions, same output order).
"""
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

import numpy as np

BACKEND = "compiled"


def enumerate_vectors_kernel(table_flat, inv, int n, pools):
    cdef int[::1] T = np.ascontiguousarray(table_flat, dtype=np.int32)
    cdef int[::1] iv = np.ascontiguousarray(inv, dtype=np.int32)
    cdef int r = len(pools)
    if r == 1:
        return []
    cdef int[::1] sizes = np.array([len(p) for p in pools], dtype=np.int32)
    cdef int maxp = max(len(p) for p in pools)
    flat_pools = np.zeros((r, maxp), dtype=np.int32)
    for pool_idx, p in enumerate(pools):
        flat_pools[pool_idx, :len(p)] = p
    cdef int[:, ::1] P = flat_pools
    cdef unsigned char[::1] in_last = np.zeros(n, dtype=np.uint8)
    for last_elem in pools[r - 1]:
        in_last[last_elem] = 1

    cdef vector[int] flat_out
    cdef int[8] vec
    cdef int[8] prods
    cdef int[8] pos
    cdef int d = 0, x, last, k
    if r > 8:
        raise ValueError("kernel supports at most 8 branch points")
    prods[0] = 0
    pos[0] = 0
    while d >= 0:
        if d == r - 1:
            last = iv[prods[d]]
            if in_last[last]:
                vec[d] = last
                for k in range(r):
                    flat_out.push_back(vec[k])
            d -= 1
            continue
        if pos[d] == sizes[d]:
            d -= 1
            continue
        x = P[d, pos[d]]
        pos[d] += 1
        vec[d] = x
        prods[d + 1] = T[prods[d] * n + x]
        d += 1
        pos[d] = 0
    out = []
    cdef size_t t = 0
    while t < flat_out.size():
        out.append(tuple(flat_out[t + k] for k in range(r)))
        t += r
    return out


cdef inline long long pack(int* v, int r) nogil:
    cdef long long key = 0
    cdef int i
    for i in range(r):
        key |= (<long long> v[i]) << (8 * i)
    return key


def braid_orbit_kernel(table_flat, inv, int n, start):
    cdef int r = len(start)
    if r > 8 or n > 255:
        # fall back to the pure implementation for oversized inputs
        from . import _kernel_py
        return _kernel_py.braid_orbit_kernel(list(table_flat), list(inv), n, tuple(start))
    cdef int[::1] T = np.ascontiguousarray(table_flat, dtype=np.int32)
    cdef int[::1] iv = np.ascontiguousarray(inv, dtype=np.int32)
    cdef int[8] v
    cdef int i, a, b
    cdef long long key
    for i in range(r):
        v[i] = start[i]
    cdef unordered_set[long long] seen
    cdef vector[long long] stack
    key = pack(v, r)
    seen.insert(key)
    stack.push_back(key)
    while stack.size() > 0:
        key = stack.back()
        stack.pop_back()
        for i in range(r):
            v[i] = <int> ((key >> (8 * i)) & 0xFF)
        for i in range(r - 1):
            a = v[i]
            b = v[i + 1]
            v[i] = b
            v[i + 1] = T[T[iv[b] * n + a] * n + b]
            key = pack(v, r)
            if seen.find(key) == seen.end():
                seen.insert(key)
                stack.push_back(key)
            v[i] = T[T[a * n + b] * n + iv[a]]
            v[i + 1] = a
            key = pack(v, r)
            if seen.find(key) == seen.end():
                seen.insert(key)
                stack.push_back(key)
            v[i] = a
            v[i + 1] = b
    out = []
    for key in seen:
        out.append(tuple(<int> ((key >> (8 * i)) & 0xFF) for i in range(r)))
    out.sort()
    return out
