"""Branch data for group covers of the line, up to equivalence.

A datum is (G, x, sigma): a generating vector x = (x_1..x_r) of nonidentity
elements with product 1 (so G acts on a curve branched over r points, orders
of the x_i are the branching orders) together with a central involution sigma.
Vectors are identified under braid moves and automorphisms of G; each vector
class is then paired with every central involution, so two data sharing the
vector class but carrying different involutions stay distinct.  Canonical
vector representatives are lexicographic minima.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .groups import Catalog, FiniteGroup, GroupId, GroupMap

try:
    from . import _kernel as _impl
except ImportError:          # compiled core not built; same interface
    from . import _kernel_py as _impl


def kernel_name() -> str:
    return _impl.BACKEND


def _flat_table(group: FiniteGroup) -> np.ndarray:
    flat = getattr(group, "_flat_table", None)
    if flat is None:
        flat = np.asarray(group.table, dtype=np.int32).ravel()
        group._flat_table = flat
    return flat


def max_order(gtilde: int, r: int) -> int:
    """Largest group order admitting a genus-gtilde cover with r branch points.

    For r = 4 the extremal signature is (2,2,2,3), giving 12(gtilde-1); for
    r >= 5 it is (2,...,2), giving 4(gtilde-1).
    """
    if gtilde < 2:
        raise ValueError("total-space genus must be at least 2")
    if r < 4:
        raise ValueError("only r >= 4 branch points are supported")
    return 12 * (gtilde - 1) if r == 4 else 4 * (gtilde - 1)


def admissible_signatures(gtilde: int, order: int, r: int) -> List[Tuple[int, ...]]:
    """Non-decreasing r-tuples of divisors >= 2 of the group order such that
    Riemann-Hurwitz gives total-space genus gtilde."""
    divisors = [d for d in range(2, order + 1) if order % d == 0]
    target = Fraction(2 * gtilde - 2, order) + 2
    out = []
    for sig in combinations_with_replacement(divisors, r):
        if sum(Fraction(1, 1) - Fraction(1, m) for m in sig) == target:
            out.append(sig)
    return out


def signature_of(group: FiniteGroup, vector: Sequence[int]) -> Tuple[int, ...]:
    """Sorted branching orders of a vector."""
    return tuple(sorted(group.elem_order[x] for x in vector))


def genus_from_signature(order: int, signature: Sequence[int]) -> int:
    tot = sum(Fraction(1, 1) - Fraction(1, m) for m in signature) - 2
    g2 = Fraction(order) * tot + 2
    if g2.denominator != 1 or g2.numerator % 2:
        raise ValueError("signature does not give an integral genus")
    return int(g2) // 2


def enumerate_vectors(group: FiniteGroup, signature: Sequence[int]) -> List[Tuple[int, ...]]:
    """Generating vectors with product 1 and ord(x_i) = signature[i] positionally.

    Emitted in lexicographic order; arrangements of the signature other than
    the given one are reached later through braid moves, not here.
    """
    pools = [[x for x in range(group.n) if group.elem_order[x] == m] for m in signature]
    if any(not p for p in pools):
        return []
    raw = _impl.enumerate_vectors_kernel(_flat_table(group), group.inv, group.n, pools)
    gen_cache: Dict[FrozenSet[int], bool] = {}
    out = []
    for v in raw:
        key = frozenset(v)
        ok = gen_cache.get(key)
        if ok is None:
            ok = len(group.closure(v)) == group.n
            gen_cache[key] = ok
        if ok:
            out.append(v)
    return out


def braid_move(group: FiniteGroup, vector: Sequence[int], i: int,
               direction: int = 1) -> Tuple[int, ...]:
    """Elementary move at position i (1-based).

    Forward: (.., a, b, ..) -> (.., b, b^-1 a b, ..); direction -1 inverts it.
    """
    if not 1 <= i <= len(vector) - 1:
        raise ValueError("move index out of range")
    v = tuple(vector)
    a, b = v[i - 1], v[i]
    t = group.table
    if direction >= 0:
        return v[:i - 1] + (b, t[t[group.inv[b]][a]][b]) + v[i + 1:]
    return v[:i - 1] + (t[t[a][b]][group.inv[a]], a) + v[i + 1:]


def braid_orbit(group: FiniteGroup, vector: Sequence[int]) -> List[Tuple[int, ...]]:
    """Full orbit under elementary moves and their inverses, sorted."""
    return _impl.braid_orbit_kernel(_flat_table(group), group.inv, group.n, tuple(vector))


@dataclass(frozen=True, order=True)
class PrymDatum:
    group: GroupId
    vector: Tuple[int, ...]
    sigma: int


@dataclass(frozen=True)
class QuotientDatum:
    group: FiniteGroup              # the quotient by <sigma>
    projection: GroupMap
    images: Tuple[int, ...]         # images of the vector entries, zeros kept
    branch_indices: Tuple[int, ...] # positions with nontrivial image
    genus: int                      # genus of the quotient curve
    branch_count: int               # fixed points of sigma on the cover


def format_datum(group: FiniteGroup, vector: Sequence[int], sigma: int) -> str:
    if group.id is None:
        raise ValueError("datum text form needs a catalog id")
    sig = ",".join(str(m) for m in signature_of(group, vector))
    xs = ",".join(str(x) for x in vector)
    return "%s [%s] x=[%s] sigma=%d" % (group.id, sig, xs, sigma)


def parse_datum(text: str, catalog: Catalog) -> Tuple[FiniteGroup, Tuple[int, ...], int]:
    """Parse 'G(n,i) [m1,..,mr] x=[x1,..,xr] sigma=s' and validate everything."""
    parts = text.split()
    if len(parts) != 4 or not parts[2].startswith("x=[") or not parts[3].startswith("sigma="):
        raise ValueError("bad datum syntax %r" % text)
    group = catalog.group(GroupId.parse(parts[0]))
    sig = tuple(int(t) for t in parts[1].strip("[]").split(","))
    vector = tuple(int(t) for t in parts[2][2:].strip("[]").split(","))
    sigma = int(parts[3][6:])
    validate_datum(group, vector, sigma)
    if signature_of(group, vector) != tuple(sorted(sig)):
        raise ValueError("signature does not match the vector orders")
    return group, vector, sigma


def validate_datum(group: FiniteGroup, vector: Sequence[int], sigma: int) -> None:
    if len(vector) < 3:
        raise ValueError("need at least 3 branch points")
    if any(not 0 < x < group.n for x in vector):
        raise ValueError("vector entry out of range or identity")
    prod = 0
    for x in vector:
        prod = group.table[prod][x]
    if prod != 0:
        raise ValueError("vector entries do not multiply to the identity")
    if not group.generates(vector):
        raise ValueError("vector does not generate the group")
    if sigma not in group.central_involutions():
        raise ValueError("sigma is not a central involution")


def _vector_classes(group: FiniteGroup, vectors: Sequence[Tuple[int, ...]]
                    ) -> List[Tuple[Tuple[int, ...], List[int]]]:
    """Orbits of the enumerated vectors under braid moves and Aut(G).

    Returns (canonical vector, braid-orbit ids) per class; the canonical
    vector is the lexicographic minimum and need not have sorted orders.
    """
    orbit_of: Dict[Tuple[int, ...], int] = {}
    bmins: List[Tuple[int, ...]] = []
    for v in vectors:
        if v in orbit_of:
            continue
        orbit = braid_orbit(group, v)
        oid = len(bmins)
        for w in orbit:
            orbit_of[w] = oid
        bmins.append(orbit[0])
    autos = group.automorphism_group()
    perms = [[orbit_of[tuple(al[x] for x in bm)] for bm in bmins]
             for al in autos]
    out = []
    seen = set()
    for oid in range(len(bmins)):
        if oid in seen:
            continue
        cls = sorted({perms[ai][oid] for ai in range(len(perms))})
        seen.update(cls)
        out.append((min(bmins[o] for o in cls), cls))
    return out


def hurwitz_classes(group: FiniteGroup, signature: Sequence[int]) -> List[PrymDatum]:
    """Inequivalent data for one signature.

    Vectors are identified under braid moves together with Aut(G); the
    central involution is part of the datum and is never identified away,
    so each vector class contributes one datum per central involution.
    (Relabeling the group moves the whole family of involutions along, so
    the count per class is well defined.)
    """
    sigmas = group.central_involutions()
    if not sigmas:
        return []
    vectors = enumerate_vectors(group, signature)
    if not vectors:
        return []
    classes = [PrymDatum(group.id, vec, s)
               for vec, _ in _vector_classes(group, vectors)
               for s in sigmas]
    return sorted(classes, key=lambda d: (d.vector, d.sigma))


def hurwitz_partition(group: FiniteGroup, signature: Sequence[int]
                      ) -> List[Tuple[PrymDatum, int]]:
    """Like hurwitz_classes but also reports how many enumerated vectors
    each class absorbs.  Only vectors whose order pattern equals the
    (sorted) signature are counted; braid images with shuffled patterns
    fall outside the enumeration universe."""
    sig = tuple(signature)
    sigmas = group.central_involutions()
    vectors = enumerate_vectors(group, signature)
    if not sigmas or not vectors:
        return []
    orbit_of: Dict[Tuple[int, ...], int] = {}
    bmins: List[Tuple[int, ...]] = []
    osize: List[int] = []
    for v in vectors:
        if v in orbit_of:
            continue
        orbit = braid_orbit(group, v)
        oid = len(bmins)
        for w in orbit:
            orbit_of[w] = oid
        bmins.append(orbit[0])
        osize.append(sum(1 for w in orbit
                         if tuple(group.elem_order[x] for x in w) == sig))
    autos = group.automorphism_group()
    perms = [[orbit_of[tuple(al[x] for x in bm)] for bm in bmins] for al in autos]
    out: List[Tuple[PrymDatum, int]] = []
    seen = set()
    for oid in range(len(bmins)):
        if oid in seen:
            continue
        cls = sorted({perms[ai][oid] for ai in range(len(perms))})
        seen.update(cls)
        vec = min(bmins[o] for o in cls)
        size = sum(osize[o] for o in cls)
        for s in sigmas:
            out.append((PrymDatum(group.id, vec, s), size))
    return sorted(out, key=lambda t: (t[0].vector, t[0].sigma))


def quotient_datum(group: FiniteGroup, vector: Sequence[int], sigma: int) -> QuotientDatum:
    """Quotient curve data for the involution sigma under the cover group."""
    quot, proj = group.quotient((0, sigma))
    images = tuple(proj.image[x] for x in vector)
    if not quot.generates([y for y in images if y]):
        raise ArithmeticError("quotient images fail to generate")
    b = 0
    for x in vector:
        m = group.elem_order[x]
        if m % 2 == 0 and _power(group, x, m // 2) == sigma:
            b += group.n // m
    branch_indices = tuple(i for i, y in enumerate(images) if y != 0)
    branched = [quot.elem_order[images[i]] for i in branch_indices]
    tot = sum(Fraction(1, 1) - Fraction(1, m) for m in branched) - 2
    g2 = Fraction(quot.n) * tot + 2
    if g2.denominator != 1 or int(g2) % 2:
        raise ArithmeticError("quotient genus not integral")
    g = int(g2) // 2
    gtilde = genus_from_signature(group.n, signature_of(group, vector))
    if b % 2 or gtilde != 2 * g - 1 + b // 2:
        raise ArithmeticError("quotient invariants violate the covering relations")
    return QuotientDatum(quot, proj, images, branch_indices, g, b)


def _power(group: FiniteGroup, x: int, k: int) -> int:
    p = 0
    for _ in range(k):
        p = group.table[p][x]
    return p


def enumerate_prym_data(group: FiniteGroup, gtilde: int, r: int = 4) -> List[PrymDatum]:
    """All canonical data on the group with total-space genus gtilde."""
    if not group.central_involutions():
        return []
    out: List[PrymDatum] = []
    for sig in admissible_signatures(gtilde, group.n, r):
        out.extend(hurwitz_classes(group, sig))
    return out
