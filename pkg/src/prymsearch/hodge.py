"""Isotypic decomposition of holomorphic differentials for a Galois cover
of the line, and its splitting under a central involution.

For a group acting on a curve with rational quotient and branch data
(x_1, ..., x_r), the multiplicity of each irreducible in H^{1,0} is
determined by the local eigenvalue data at the branch points.  Everything
here is exact: multiplicities accumulate as rationals and must come out
as nonnegative integers, and the total dimension must equal the genus.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .chartable import CharacterTable, character_table
from .covers import QuotientDatum
from .cyclotomic import CycInt
from .groups import FiniteGroup


@dataclass(frozen=True)
class HodgeDecomposition:
    """Multiplicities mu[chi] of each irreducible inside H^{1,0}."""

    group: FiniteGroup
    vector: Tuple[int, ...]
    mu: Tuple[int, ...]
    genus: int

    @property
    def table(self) -> CharacterTable:
        return character_table(self.group)

    def chi_values(self) -> List[CycInt]:
        """Exact character of the full module."""
        return self.table.class_function(self.mu)


@dataclass(frozen=True)
class SigmaSplit:
    """Eigenspace split of H^{1,0} under a central involution."""

    sigma: int
    mu_plus: Tuple[int, ...]
    mu_minus: Tuple[int, ...]
    dim_plus: int
    dim_minus: int

    def parts(self, side: int) -> Tuple[Tuple[int, int], ...]:
        """Nonzero (irreducible index, multiplicity) pairs for side +1/-1."""
        mu = self.mu_plus if side > 0 else self.mu_minus
        return tuple((i, m) for i, m in enumerate(mu) if m)


def _expected_genus(group: FiniteGroup, vector: Sequence[int]) -> int:
    tot = Fraction(-2)
    for x in vector:
        m = group.elem_order[x]
        if m > 1:
            tot += 1 - Fraction(1, m)
    two_g = group.n * tot + 2
    if two_g.denominator != 1 or int(two_g) % 2:
        raise ArithmeticError("branch data violates the genus formula")
    return int(two_g) // 2


def hodge_multiplicities(group: FiniteGroup, vector: Sequence[int]) -> HodgeDecomposition:
    """Decompose H^{1,0} of the cover with the given branch entries.

    Identity entries are allowed (they contribute nothing); this lets the
    same routine serve quotient covers whose induced vectors keep
    collapsed entries in place.
    """
    ct = character_table(group)
    genus = _expected_genus(group, vector)
    entries = [x for x in vector if x != 0]
    orders = [group.elem_order[x] for x in entries]
    mu = [0] * ct.k
    for chi in range(ct.k):
        if chi == 0:
            # rows are sorted trivial-first; a rational base contributes no
            # invariant differentials
            mu[chi] = 0
            continue
        acc = Fraction(-ct.degrees[chi])
        for x, m in zip(entries, orders):
            mults = ct.eigen_mults(chi, x)
            for alpha in range(1, m):
                if mults[alpha]:
                    acc += Fraction(alpha, m) * mults[alpha]
        if acc.denominator != 1 or acc < 0:
            raise ArithmeticError("non-integral multiplicity for character %d" % chi)
        mu[chi] = int(acc)
    total = sum(d * m for d, m in zip(ct.degrees, mu))
    if total != genus:
        raise ArithmeticError("decomposition dimension %d does not match genus %d"
                              % (total, genus))
    return HodgeDecomposition(group, tuple(vector), tuple(mu), genus)


def conjugate_decomposition(h: HodgeDecomposition) -> HodgeDecomposition:
    """Same module with every character replaced by its complex conjugate."""
    ct = h.table
    mu = [0] * ct.k
    for chi, m in enumerate(h.mu):
        mu[ct.conjugate_index(chi)] = m
    return HodgeDecomposition(h.group, h.vector, tuple(mu), h.genus)


def sigma_split(h: HodgeDecomposition, sigma: int) -> SigmaSplit:
    """Split by the +/-1 scalar through which a central involution acts."""
    ct = h.table
    plus = [0] * ct.k
    minus = [0] * ct.k
    for chi, m in enumerate(h.mu):
        if not m:
            continue
        if ct.central_scalar(chi, sigma) > 0:
            plus[chi] = m
        else:
            minus[chi] = m
    dim_plus = sum(ct.degrees[c] * m for c, m in enumerate(plus))
    dim_minus = sum(ct.degrees[c] * m for c, m in enumerate(minus))
    return SigmaSplit(sigma, tuple(plus), tuple(minus), dim_plus, dim_minus)


def fixed_part(h: HodgeDecomposition, elements: Sequence[int]) -> Tuple[int, ...]:
    """Multiplicities of the constituents on which every given element acts
    trivially (the subgroup-fixed subspace)."""
    ct = h.table
    want = {ct.class_of[x] for x in elements}
    out = [0] * ct.k
    for chi, m in enumerate(h.mu):
        if m and want.issubset(ct.kernel_classes(chi)):
            out[chi] = m
    return tuple(out)


def sym2_dim(table: CharacterTable, mults: Sequence[int]) -> int:
    """dim of the invariants in Sym^2 of the module with these multiplicities."""
    if not any(mults):
        return 0
    return table.sym2_invariant_dim(table.class_function(mults))


def pullback_multiplicities(h: HodgeDecomposition, qd: QuotientDatum) -> Tuple[int, ...]:
    """Decomposition of the quotient cover, written in the multiplicity
    coordinates of the big group.

    Characters of the quotient are matched with characters of the big group
    by comparing exact values along the projection; this is the independent
    route to the sigma-even part.
    """
    ct = h.table
    quot = qd.group
    qct = character_table(quot)
    qh = hodge_multiplicities(quot, qd.images)
    e = ct.exponent
    out = [0] * ct.k
    for j, m in enumerate(qh.mu):
        if not m:
            continue
        lifted = [qct.value(j, qct.class_of[qd.projection.image[rep]]).embed(e)
                  for rep in ct.reps]
        found = None
        for i in range(ct.k):
            if ct.degrees[i] != qct.degrees[j]:
                continue
            if all(ct.value(i, c) == lifted[c] for c in range(ct.k)):
                found = i
                break
        if found is None:
            raise ArithmeticError("no lift for quotient character %d" % j)
        out[found] += m
    return tuple(out)


def format_decomposition(h: HodgeDecomposition, split: SigmaSplit) -> str:
    """Two-line print form, e.g. ``V- = 1*[d=2,#13] + 2*[d=2,#15]``.

    Character indices are 1-based row numbers of the character table.
    """
    ct = h.table

    def side(mu: Tuple[int, ...]) -> str:
        terms = ["%d*[d=%d,#%d]" % (m, ct.degrees[c], c + 1)
                 for c, m in enumerate(mu) if m]
        return " + ".join(terms) if terms else "0"

    return "V+ = %s\nV- = %s" % (side(split.mu_plus), side(split.mu_minus))
