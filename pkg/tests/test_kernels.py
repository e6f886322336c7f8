"""The compiled and pure-python kernels must agree exactly."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prymsearch import _kernel_py
from prymsearch.covers import kernel_name

try:
    from prymsearch import _kernel
except ImportError:
    _kernel = None

from test_groups import QUAT, cyclic_table, dihedral_table

pytestmark = pytest.mark.skipif(_kernel is None, reason="compiled core not built")


def setup_group(table):
    n = len(table)
    tf = np.asarray(table, dtype=np.int32).reshape(-1)
    inv = np.asarray([table[a].index(0) for a in range(n)], dtype=np.int32)
    ords = []
    for x in range(n):
        k, acc = 1, x
        while acc != 0:
            acc, k = table[acc][x], k + 1
        ords.append(k)
    return tf, inv, n, ords


TABLES = [cyclic_table(6), cyclic_table(8), dihedral_table(4),
          dihedral_table(6), QUAT]


@pytest.mark.parametrize("ti", range(len(TABLES)))
def test_enumerate_vectors_agree(ti):
    table = TABLES[ti]
    tf, inv, n, ords = setup_group(table)
    for pattern in [(2, 2, 2, 2), (2, 2, 4, 4), (4, 4, 4, 4), (2, 4, 4, 2)]:
        pools = [tuple(x for x in range(n) if ords[x] == m) for m in pattern]
        a = [tuple(map(int, v)) for v in
             _kernel.enumerate_vectors_kernel(tf, inv, n, pools)]
        b = [tuple(map(int, v)) for v in
             _kernel_py.enumerate_vectors_kernel(tf, inv, n, pools)]
        assert a == b


@pytest.mark.parametrize("ti", range(len(TABLES)))
def test_braid_orbits_agree(ti):
    table = TABLES[ti]
    tf, inv, n, ords = setup_group(table)
    pools = [tuple(x for x in range(1, n))] * 4
    vecs = _kernel_py.enumerate_vectors_kernel(tf, inv, n, pools)
    for v in vecs[:10]:
        v = tuple(map(int, v))
        a = sorted(tuple(map(int, w)) for w in _kernel.braid_orbit_kernel(tf, inv, n, v))
        b = sorted(tuple(map(int, w)) for w in _kernel_py.braid_orbit_kernel(tf, inv, n, v))
        assert a == b


def test_backend_reported():
    assert kernel_name() in ("compiled", "python")
    if _kernel is not None:
        assert kernel_name() == "compiled"
