"""Decision procedures for the eigenvalue conditions that make a family of
Prym varieties special.

Condition (A) asks for a one-dimensional space of invariants in Sym^2 of
the odd part of the differentials.  (B1) and (B2) are sufficient criteria
for the stronger multiplication condition, and a large enough branch count
settles it outright.  All decisions reduce to exact invariant-dimension
computations in the character ring.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .chartable import CharacterTable, character_table
from .covers import PrymDatum, quotient_datum
from .groups import FiniteGroup, Subgroup
from .hodge import (HodgeDecomposition, SigmaSplit, fixed_part,
                    hodge_multiplicities, sigma_split, sym2_dim)

B1_PROVED = "B1-proved"
B2_PROVED = "B2-proved"
BGE6_PROVED = "bge6-proved"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ConditionReport:
    datum: PrymDatum
    gtilde: int
    g: int
    b: int
    p: int
    dim_S2_Vminus: int
    dim_S2_Vplus: int
    A: bool
    B1: Optional[bool]           # None when A fails
    B2: Optional[bool]           # None when A fails or B1 already holds
    witness: Optional[Subgroup]
    b_ge6: bool
    g_positive: bool
    B_status: str
    polarization_type: str


def polarization_type(g: int, b: int) -> str:
    """Type of the induced polarization on the odd eigenvariety."""
    if b in (0, 2):
        return "principally polarized"
    ones = b // 2 - 1
    return "(" + ",".join(["1"] * ones + ["2"] * g) + ")"


def _split(group: FiniteGroup, vector: Sequence[int], sigma: int
           ) -> Tuple[CharacterTable, HodgeDecomposition, SigmaSplit]:
    ct = character_table(group)
    h = hodge_multiplicities(group, vector)
    return ct, h, sigma_split(h, sigma)


def _b1_holds(ct: CharacterTable, split: SigmaSplit) -> bool:
    linear = tuple(m if ct.degrees[c] == 1 else 0
                   for c, m in enumerate(split.mu_minus))
    return sym2_dim(ct, linear) == 1


def _b2_witness(group: FiniteGroup, vector: Sequence[int], sigma: int,
                ct: CharacterTable, h: HodgeDecomposition,
                split: SigmaSplit) -> Optional[Subgroup]:
    """Smallest proper nontrivial normal subgroup whose fixed subspace is a
    nonzero sigma-odd block meeting the invariant condition, with all four
    branch entries surviving in the quotient."""
    entries = set(vector)
    for elems in group.normal_subgroups():
        if len(elems) == 1 or len(elems) == group.n:
            continue
        if entries & set(elems):
            continue
        fixed = fixed_part(h, elems)
        if not any(fixed):
            continue
        if any(ct.central_scalar(c, sigma) > 0 for c, m in enumerate(fixed) if m):
            continue  # a fixed constituent is sigma-even; note sigma in N lands here
        if sym2_dim(ct, fixed) != 1:
            continue
        return group.subgroup(elems)
    return None


def check_A(group: FiniteGroup, vector: Sequence[int], sigma: int
            ) -> Tuple[bool, Tuple[int, int]]:
    """Decide condition (A); returns the flag plus the invariant dimensions
    of Sym^2 on the odd and even parts."""
    if len(vector) != 4:
        raise ValueError("unsupported r")
    ct, _, split = _split(group, vector, sigma)
    dim_minus = sym2_dim(ct, split.mu_minus)
    dim_plus = sym2_dim(ct, split.mu_plus)
    return dim_minus == 1, (dim_minus, dim_plus)


def check_B1(group: FiniteGroup, vector: Sequence[int], sigma: int) -> bool:
    ok, _ = check_A(group, vector, sigma)
    if not ok:
        raise ValueError("condition (A) fails; (B1) undefined")
    ct, _, split = _split(group, vector, sigma)
    return _b1_holds(ct, split)


def check_B2(group: FiniteGroup, vector: Sequence[int], sigma: int
             ) -> Tuple[bool, Optional[Subgroup]]:
    ok, _ = check_A(group, vector, sigma)
    if not ok:
        raise ValueError("condition (A) fails; (B2) undefined")
    ct, h, split = _split(group, vector, sigma)
    witness = _b2_witness(group, vector, sigma, ct, h, split)
    return witness is not None, witness


def check_shortcut(group: FiniteGroup, vector: Sequence[int], sigma: int
                   ) -> Tuple[bool, bool]:
    """Record (b >= 6, g > 0) for the embedding shortcut."""
    qd = quotient_datum(group, vector, sigma)
    return qd.branch_count >= 6, qd.genus > 0


def classify(group: FiniteGroup, vector: Sequence[int], sigma: int
             ) -> ConditionReport:
    """Full report for one datum.

    (B1) is only consulted under (A), and (B2) only when (B1) fails; a
    blank (B2) therefore means "not needed", not "false".
    """
    r = len(vector)
    ct, h, split = _split(group, vector, sigma)
    qd = quotient_datum(group, vector, sigma)
    g, b = qd.genus, qd.branch_count
    dim_minus = sym2_dim(ct, split.mu_minus)
    dim_plus = sym2_dim(ct, split.mu_plus)
    a_holds = r == 4 and dim_minus == 1
    b_ge6 = b >= 6
    b1: Optional[bool] = None
    b2: Optional[bool] = None
    witness: Optional[Subgroup] = None
    if a_holds:
        b1 = _b1_holds(ct, split)
        if not b1:
            witness = _b2_witness(group, vector, sigma, ct, h, split)
            b2 = witness is not None
    if b1:
        status = B1_PROVED
    elif b2:
        status = B2_PROVED
    elif b_ge6:
        status = BGE6_PROVED
    else:
        status = UNKNOWN
    return ConditionReport(
        datum=PrymDatum(group.id, tuple(vector), sigma),
        gtilde=h.genus, g=g, b=b, p=split.dim_minus,
        dim_S2_Vminus=dim_minus, dim_S2_Vplus=dim_plus,
        A=a_holds, B1=b1, B2=b2, witness=witness,
        b_ge6=b_ge6, g_positive=g > 0, B_status=status,
        polarization_type=polarization_type(g, b),
    )
