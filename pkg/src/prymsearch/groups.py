"""Finite groups as full multiplication tables.

Conventions: elements are indices 0..n-1, identity is 0, mult[a][b] is the
index of a*b.  Groups this size (catalog bound 72, hard ceiling ~200) need no
permutation-group machinery; everything is done directly on the table.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True, order=True)
class GroupId:
    order: int
    index: int

    def __str__(self):
        return "G(%d,%d)" % (self.order, self.index)

    @staticmethod
    def parse(text: str) -> "GroupId":
        t = text.strip()
        if not (t.startswith("G(") and t.endswith(")")):
            raise ValueError("bad group id %r" % text)
        a, b = t[2:-1].split(",")
        gid = GroupId(int(a), int(b))
        if gid.order < 1 or gid.index < 1:
            raise ValueError("bad group id %r" % text)
        return gid


@dataclass(frozen=True)
class Subgroup:
    parent: Optional[GroupId]
    elements: Tuple[int, ...]  # sorted, contains 0


@dataclass(frozen=True)
class GroupMap:
    source: Optional[GroupId]
    target: Optional[GroupId]
    image: Tuple[int, ...]


def verify_table(table: Sequence[Sequence[int]]) -> List[str]:
    """Check all group axioms on a raw table; returns a list of defects."""
    defects: List[str] = []
    n = len(table)
    if n == 0:
        return ["empty table"]
    T = np.asarray(table, dtype=np.int64)
    if T.shape != (n, n):
        return ["table is not square"]
    if T.min() < 0 or T.max() >= n:
        return ["entry out of range"]
    if not (np.array_equal(T[0], np.arange(n)) and np.array_equal(T[:, 0], np.arange(n))):
        defects.append("element 0 is not an identity")
    # each row/column must hit 0 exactly once (inverses)
    if not (np.all(np.sort(T, axis=1) == np.arange(n)) and
            np.all(np.sort(T, axis=0) == np.arange(n)[:, None])):
        defects.append("table rows/columns are not permutations")
    left = T[T, :]          # left[a,b,c] = (a*b)*c
    right = T[:, T]         # right[a,b,c] = a*(b*c)
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        defects.append("associativity fails at triple (%d,%d,%d)" % (a, b, c))
    return defects


class FiniteGroup:
    """Immutable finite group on a multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], gid: Optional[GroupId] = None,
                 name: Optional[str] = None, checked: bool = False):
        self.n = len(table)
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.id = gid
        self.name = name
        if not checked:
            defects = verify_table(self.table)
            if defects:
                raise ValueError("not a group: " + "; ".join(defects))
        T = np.asarray(self.table, dtype=np.int32)
        self._T = T
        self.inv = tuple(int(v) for v in (T == 0).argmax(axis=1))
        # element orders, vectorized power walk
        orders = np.zeros(self.n, dtype=np.int32)
        cur = np.arange(self.n)
        base = np.arange(self.n)
        for k in range(1, self.n + 1):
            newly = (cur == 0) & (orders == 0)
            orders[newly] = k
            if orders.all():
                break
            cur = T[cur, base]
        self.elem_order = tuple(int(v) for v in orders)
        self._classes: Optional[Tuple[Tuple[int, ...], ...]] = None
        self._class_of: Optional[Tuple[int, ...]] = None
        self._normals: Optional[Tuple[Tuple[int, ...], ...]] = None
        self._autos: Optional[Tuple[Tuple[int, ...], ...]] = None
        self._fingerprint = None
        self._class_colors: Optional[Tuple[int, ...]] = None
        self._class_base: Optional[Tuple[tuple, ...]] = None

    # -- basic arithmetic -------------------------------------------------
    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, x: int, g: int) -> int:
        """g * x * g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    @property
    def exponent(self) -> int:
        e = 1
        for m in set(self.elem_order):
            e = e * m // np.gcd(e, m)
        return int(e)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._T, self._T.T))

    # -- conjugacy --------------------------------------------------------
    def conjugacy_classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Partition into conjugacy classes, ordered by smallest member."""
        if self._classes is None:
            T, inv = self._T, np.asarray(self.inv)
            seen = np.zeros(self.n, dtype=bool)
            classes = []
            class_of = [0] * self.n
            for x in range(self.n):
                if seen[x]:
                    continue
                orbit = np.unique(T[T[:, x], inv])
                seen[orbit] = True
                for y in orbit:
                    class_of[y] = len(classes)
                classes.append(tuple(int(v) for v in orbit))
            self._classes = tuple(classes)
            self._class_of = tuple(class_of)
        return self._classes

    def class_of(self) -> Tuple[int, ...]:
        self.conjugacy_classes()
        return self._class_of  # type: ignore[return-value]

    def center(self) -> Tuple[int, ...]:
        central = np.all(self._T == self._T.T, axis=1)
        return tuple(int(v) for v in np.flatnonzero(central))

    def central_involutions(self) -> List[int]:
        return [x for x in self.center() if self.elem_order[x] == 2]

    # -- subgroups ----------------------------------------------------------
    def closure(self, seed: Iterable[int]) -> Tuple[int, ...]:
        """Smallest subgroup containing the seed elements."""
        table = self.table
        elems = {0}
        work = [0]
        for s in seed:
            if s not in elems:
                elems.add(s)
                work.append(s)
        known: List[int] = []
        while work:
            x = work.pop()
            for a in known:
                for p in (table[a][x], table[x][a]):
                    if p not in elems:
                        elems.add(p)
                        work.append(p)
            p = table[x][x]
            if p not in elems:
                elems.add(p)
                work.append(p)
            known.append(x)
        return tuple(sorted(elems))

    def generates(self, seed: Iterable[int]) -> bool:
        return len(self.closure(seed)) == self.n

    def subgroup(self, elements: Iterable[int]) -> Subgroup:
        elems = tuple(sorted(set(elements) | {0}))
        for a in elems:
            if self.inv[a] not in elems:
                raise ValueError("not closed under inversion")
            for b in elems:
                if self.table[a][b] not in elems:
                    raise ValueError("not closed under multiplication")
        return Subgroup(self.id, elems)

    def is_normal(self, elements: Sequence[int]) -> bool:
        elems = set(elements)
        return all(self.conj(x, g) in elems for x in elements for g in range(self.n))

    def normal_subgroups(self) -> Tuple[Tuple[int, ...], ...]:
        """All normal subgroups, sorted by size then by element tuple."""
        if self._normals is None:
            classes = self.conjugacy_classes()
            found = {(0,): True}
            queue = [(0,)]
            while queue:
                base = queue.pop()
                for cls in classes:
                    if cls[0] in base:  # classes are whole in or out of a normal subgroup
                        continue
                    ext = self.closure(base + cls)
                    if ext not in found:
                        found[ext] = True
                        queue.append(ext)
            self._normals = tuple(sorted(found, key=lambda t: (len(t), t)))
        return self._normals

    def quotient(self, normal: Sequence[int]) -> Tuple["FiniteGroup", GroupMap]:
        """Quotient with canonical coset labels (cosets ordered by least member)."""
        nset = sorted(set(normal))
        if not self.is_normal(nset):
            raise ValueError("subgroup is not normal")
        table = self.table
        rep = [-1] * self.n  # least member of the coset of x
        cosets: List[int] = []
        for x in range(self.n):
            if rep[x] >= 0:
                continue
            members = sorted(table[x][h] for h in nset)
            for y in members:
                rep[y] = members[0]
            cosets.append(members[0])
        cosets.sort()
        coset_index = {c: i for i, c in enumerate(cosets)}
        image = tuple(coset_index[rep[x]] for x in range(self.n))
        q = len(cosets)
        qtable = [[coset_index[rep[table[cosets[i]][cosets[j]]]] for j in range(q)]
                  for i in range(q)]
        quot = FiniteGroup(qtable, checked=True)
        return quot, GroupMap(self.id, quot.id, image)

    def subgroup_as_group(self, elements: Sequence[int]) -> "FiniteGroup":
        """The subgroup on its own sorted labels (0 stays the identity)."""
        elems = sorted(set(elements))
        if elems[0] != 0:
            raise ValueError("subgroup must contain the identity")
        pos = {e: i for i, e in enumerate(elems)}
        tab = [[pos[self.table[a][b]] for b in elems] for a in elems]
        return FiniteGroup(tab, checked=True)

    # -- invariants for isomorphism pruning --------------------------------
    def abelian_invariants(self) -> Tuple[int, ...]:
        """Invariant factors of G/[G,G] (d_1 | d_2 | ...)."""
        comms = {self.table[self.table[a][b]][self.table[self.inv[a]][self.inv[b]]]
                 for a in range(self.n) for b in range(a + 1, self.n)}
        derived = self.closure(comms)
        ab, _ = self.quotient(derived)
        factors = []
        work = ab
        while work.n > 1:
            d = work.exponent
            x = max(range(work.n), key=lambda e: (work.elem_order[e] == d, -e))
            sub = work.closure([x])
            work, _ = work.quotient(sub)
            factors.append(d)
        return tuple(reversed(factors))

    def derived_subgroup(self) -> Tuple[int, ...]:
        comms = {self.table[self.table[a][b]][self.table[self.inv[a]][self.inv[b]]]
                 for a in range(self.n) for b in range(a + 1, self.n)}
        return self.closure(comms)

    def _refined_class_colors(self) -> Tuple[int, ...]:
        """Canonical class colors: (size, order, square-root count) refined
        to stability under inversion and prime-power maps on classes."""
        if self._class_colors is None:
            classes = self.conjugacy_classes()
            co = self.class_of()
            T = self._T
            sq = T[np.arange(self.n), np.arange(self.n)]
            sqrt_count = np.bincount(sq, minlength=self.n)
            reps = [c[0] for c in classes]
            base = tuple((len(c), self.elem_order[c[0]], int(sqrt_count[c[0]]))
                         for c in classes)
            primes = {2}
            m = self.n
            p = 2
            while m > 1:
                if m % p == 0:
                    primes.add(p)
                    while m % p == 0:
                        m //= p
                p += 1
            maps = [tuple(co[self.inv[r]] for r in reps)]
            for p in sorted(primes):
                pm = []
                for r in reps:
                    y = 0
                    for _ in range(p):
                        y = self.table[y][r]
                    pm.append(co[y])
                maps.append(tuple(pm))
            k = len(classes)
            ranks = {c: i for i, c in enumerate(sorted(set(base)))}
            colors = [ranks[c] for c in base]
            for _ in range(k):
                keyed = [(colors[i],) + tuple(colors[m[i]] for m in maps)
                         for i in range(k)]
                ranks = {c: i for i, c in enumerate(sorted(set(keyed)))}
                nxt = [ranks[c] for c in keyed]
                stable = len(set(nxt)) == len(set(colors))
                colors = nxt
                if stable:
                    break
            self._class_colors = tuple(colors)
            self._class_base = base
        return self._class_colors

    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariant (not a certificate)."""
        if self._fingerprint is None:
            colors = self._refined_class_colors()
            cls_profile = tuple(sorted(zip(self._class_base, colors)))
            ord_profile = tuple(sorted(
                (m, sum(1 for o in self.elem_order if o == m))
                for m in set(self.elem_order)))
            der = self.derived_subgroup()
            der_orders = tuple(sorted(self.elem_order[x] for x in der))
            cen = self.center()
            cen_orders = tuple(sorted(self.elem_order[x] for x in cen))
            T, inv = self.table, self.inv
            lcs = []
            cur = der
            while len(cur) > 1:
                lcs.append(len(cur))
                gens = {T[T[inv[a]][inv[x]]][T[a][x]]
                        for a in cur for x in range(self.n)}
                nxt = self.closure(gens)
                if len(nxt) == len(cur):
                    break
                cur = nxt
            ders = []
            cur = der
            while len(cur) > 1:
                ders.append(len(cur))
                sub = self.subgroup_as_group(cur)
                inner = sub.derived_subgroup()
                if len(inner) == len(cur):
                    break
                srt = sorted(cur)
                cur = tuple(srt[i] for i in inner)
            pw = []
            for p in sorted({2} | {q for q in range(2, self.n + 1)
                                   if self.n % q == 0 and all(q % d for d in range(2, q))}):
                img = set()
                for x in range(self.n):
                    y = 0
                    for _ in range(p):
                        y = T[y][x]
                    img.add(y)
                pw.append((p, len(self.closure(img))))
            self._fingerprint = (self.n, ord_profile, cls_profile,
                                 self.abelian_invariants(), der_orders,
                                 cen_orders, tuple(lcs), tuple(ders), tuple(pw))
        return self._fingerprint

    # -- automorphisms ------------------------------------------------------
    def _element_types(self) -> List[tuple]:
        # refined class colors subsume order, class size and power structure
        colors = self._refined_class_colors()
        class_of = self.class_of()
        return [(colors[class_of[x]],) for x in range(self.n)]

    def _generating_chain(self):
        """Greedy generating sequence plus a product chain for fast image maps.

        Returns (gens, chain) where chain is a list of (elem, a, b) meaning
        elem = a*b with both factors appearing earlier (generators get a = -1,
        b = position in gens).
        """
        types = self._element_types()
        bucket: Dict[tuple, int] = {}
        for t in types:
            bucket[t] = bucket.get(t, 0) + 1
        order_pref = sorted(range(1, self.n), key=lambda x: (bucket[types[x]], x))
        gens: List[int] = []
        chain: List[Tuple[int, int, int]] = [(0, -2, -2)]
        have = {0}
        for x in order_pref:
            if x in have:
                continue
            gens.append(x)
            chain.append((x, -1, len(gens) - 1))
            have.add(x)
            # close under multiplication, recording one derivation per element
            frontier = [x]
            known = [e for e, _, _ in chain[:-1]]
            while frontier:
                y = frontier.pop()
                for a in list(known):
                    for p, pa, pb in ((self.table[a][y], a, y), (self.table[y][a], y, a)):
                        if p not in have:
                            have.add(p)
                            chain.append((p, pa, pb))
                            frontier.append(p)
                p = self.table[y][y]
                if p not in have:
                    have.add(p)
                    chain.append((p, y, y))
                    frontier.append(p)
                known.append(y)
            if len(have) == self.n:
                break
        return gens, chain

    def _image_from_gens(self, target: "FiniteGroup", gens, chain, images):
        """Extend generator images along the chain; None if types clash early."""
        img = [-1] * self.n
        for elem, a, b in chain:
            if a == -2:
                img[elem] = 0
            elif a == -1:
                img[elem] = images[b]
            else:
                img[elem] = target.table[img[a]][img[b]]
        return img

    def _isomorphisms(self, target: "FiniteGroup", find_all: bool):
        if self.n != target.n:
            return []
        gens, chain = self._generating_chain()
        my_types = self._element_types()
        their_types = target._element_types()
        cand: List[List[int]] = []
        for g in gens:
            c = [x for x in range(target.n) if their_types[x] == my_types[g]]
            if not c:
                return []
            cand.append(c)
        found: List[Tuple[int, ...]] = []
        tt = target._T
        tT = self._T

        def leaf_check(img_arr) -> bool:
            if len(set(img_arr)) != self.n:
                return False
            im = np.asarray(img_arr)
            return bool(np.array_equal(im[tT], tt[im[:, None], im[None, :]]))

        def dfs(i: int, images: List[int]):
            if found and not find_all:
                return
            if i == len(gens):
                img = self._image_from_gens(target, gens, chain, images)
                if leaf_check(img):
                    found.append(tuple(img))
                return
            for x in cand[i]:
                if x in images:
                    continue
                images.append(x)
                if self._partial_ok(target, gens, chain, images):
                    dfs(i + 1, images)
                images.pop()
                if found and not find_all:
                    return

        dfs(0, [])
        return found

    def _partial_ok(self, target, gens, chain, images) -> bool:
        # map the subgroup generated by the first len(images) generators and
        # check injectivity and order preservation on it
        k = len(images)
        img = {0: 0}
        used = {0}
        for elem, a, b in chain[1:]:
            if a == -1:
                if b >= k:
                    break
                v = images[b]
            else:
                if a not in img or b not in img:
                    break
                v = target.table[img[a]][img[b]]
            if v in used:
                if elem in img:
                    continue
                return False
            if target.elem_order[v] != self.elem_order[elem]:
                return False
            img[elem] = v
            used.add(v)
        return True

    def automorphism_group(self) -> Tuple[Tuple[int, ...], ...]:
        """All automorphisms as permutation tuples, identity first."""
        if self._autos is None:
            autos = self._isomorphisms(self, find_all=True)
            ident = tuple(range(self.n))
            rest = sorted(a for a in autos if a != ident)
            self._autos = tuple([ident] + rest)
        return self._autos

    def isomorphism_to(self, other: "FiniteGroup") -> Optional[Tuple[int, ...]]:
        if self.n != other.n or self.fingerprint() != other.fingerprint():
            return None
        res = self._isomorphisms(other, find_all=False)
        return res[0] if res else None


# -- catalog ---------------------------------------------------------------

class Catalog:
    def __init__(self, groups: List[FiniteGroup]):
        self.by_id: Dict[GroupId, FiniteGroup] = {}
        self.by_order: Dict[int, List[FiniteGroup]] = {}
        for g in groups:
            if g.id in self.by_id:
                raise ValueError("duplicate id %s" % g.id)
            self.by_id[g.id] = g
            self.by_order.setdefault(g.id.order, []).append(g)
        for lst in self.by_order.values():
            lst.sort(key=lambda g: g.id.index)
        self.bound = max(self.by_order) if self.by_order else 0
        missing = [n for n in range(1, self.bound + 1) if n not in self.by_order]
        if missing:
            raise ValueError("catalog gap: order %d missing" % missing[0])
        self._match_cache: Dict[tuple, GroupId] = {}

    def group(self, gid: GroupId) -> FiniteGroup:
        if gid not in self.by_id:
            raise KeyError("no catalog group %s" % gid)
        return self.by_id[gid]

    def groups_of_order(self, n: int) -> List[FiniteGroup]:
        if n > self.bound:
            raise ValueError("catalog gap: order %d beyond bound %d" % (n, self.bound))
        return self.by_order.get(n, [])

    def counts(self) -> Dict[int, int]:
        return {n: len(lst) for n, lst in sorted(self.by_order.items())}

    def match_id(self, g: FiniteGroup) -> GroupId:
        """Identify the catalog group isomorphic to g."""
        key = g.fingerprint()
        hit = self._match_cache.get(key)
        if hit is not None:
            cand = self.by_id[hit]
            if g.isomorphism_to(cand) is not None:
                return hit
        for cand in self.groups_of_order(g.n):
            if g.isomorphism_to(cand) is not None:
                self._match_cache[key] = cand.id
                return cand.id
        raise LookupError("no catalog group of order %d matches (catalog incomplete?)" % g.n)


def parse_catalog_record(line: str) -> FiniteGroup:
    rec = json.loads(line)
    for field in ("order", "index", "table"):
        if field not in rec:
            raise ValueError("catalog record missing %r" % field)
    gid = GroupId(int(rec["order"]), int(rec["index"]))
    table = rec["table"]
    if len(table) != gid.order:
        raise ValueError("catalog record %s: table size mismatch" % gid)
    defects = verify_table(table)
    if defects:
        raise ValueError("catalog record %s: %s" % (gid, defects[0]))
    return FiniteGroup(table, gid=gid, name=rec.get("name"), checked=True)


def load_catalog(path) -> Catalog:
    groups = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                groups.append(parse_catalog_record(line))
            except ValueError as exc:
                raise ValueError("catalog line %d: %s" % (lineno, exc)) from None
    return Catalog(groups)
