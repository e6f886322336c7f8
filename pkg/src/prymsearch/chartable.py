"""Exact complex character tables via modular class-algebra splitting.

The table is computed over a prime field F_p with p = 1 (mod exponent) and
p > 2*sqrt(|G|), where the class algebra splits completely; eigenvalue
multiplicities of each element's action are then small nonnegative integers
(< p), so the mod-p data lifts uniquely to exact cyclotomic values.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .cyclotomic import CycInt, _power_rows, euler_phi
from .groups import FiniteGroup, GroupId


# -- modular linear algebra -------------------------------------------------

def _modinv(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def _nullspace_modp(A: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the kernel of A over F_p."""
    A = A.copy() % p
    rows, cols = A.shape
    pivot_col_of_row: List[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if A[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[[piv, r]] = A[[r, piv]]
        A[r] = A[r] * _modinv(A[r, c], p) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivot_col_of_row.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivot_col_of_row]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivot_col_of_row):
            basis[pc, k] = (-A[i, fc]) % p
    return basis


def _echelon_basis(B: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Column-reduce B so that B[pivots] = identity; returns (B, pivot rows)."""
    B = B.copy() % p
    rows, cols = B.shape
    pivots: List[int] = []
    c = 0
    for r in range(rows):
        if c == cols:
            break
        piv = None
        for j in range(c, cols):
            if B[r, j] % p:
                piv = j
                break
        if piv is None:
            continue
        if piv != c:
            B[:, [piv, c]] = B[:, [c, piv]]
        B[:, c] = B[:, c] * _modinv(B[r, c], p) % p
        for j in range(cols):
            if j != c and B[r, j]:
                B[:, j] = (B[:, j] - B[r, j] * B[:, c]) % p
        pivots.append(r)
        c += 1
    if c != cols:
        raise ArithmeticError("basis not full rank")
    return B, pivots


def _charpoly_modp(A: np.ndarray, p: int) -> List[int]:
    """Characteristic polynomial over F_p, ascending coefficients (monic)."""
    A = A.copy() % p
    n = A.shape[0]
    if n == 0:
        return [1]
    # similarity reduction to upper Hessenberg form
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if A[i, j] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            A[[piv, j + 1]] = A[[j + 1, piv]]
            A[:, [piv, j + 1]] = A[:, [j + 1, piv]]
        inv = _modinv(A[j + 1, j], p)
        for i in range(j + 2, n):
            f = A[i, j] * inv % p
            if f:
                A[i] = (A[i] - f * A[j + 1]) % p
                A[:, j + 1] = (A[:, j + 1] + f * A[:, i]) % p
    # recurrence over leading principal minors of xI - A (Hessenberg expansion)
    polys: List[List[int]] = [[1]]
    for k in range(1, n + 1):
        akk = int(A[k - 1, k - 1])
        prev = polys[k - 1]
        cur = [(-akk * c) % p for c in prev] + [0]
        for t in range(len(prev)):
            cur[t + 1] = (cur[t + 1] + prev[t]) % p
        beta = 1
        for i in range(k - 1, 0, -1):
            beta = beta * int(A[i, i - 1]) % p
            if beta == 0:
                break
            coeff = int(A[i - 1, k - 1]) * beta % p
            if coeff:
                q = polys[i - 1]
                for t in range(len(q)):
                    cur[t] = (cur[t] - coeff * q[t]) % p
        polys.append(cur)
    return polys[n]


def _poly_roots_modp(coeffs: Sequence[int], p: int) -> List[int]:
    lam = np.arange(p, dtype=np.int64)
    acc = np.full(p, coeffs[-1] % p, dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        acc = (acc * lam + c) % p
    return [int(v) for v in np.flatnonzero(acc == 0)]


def _smallest_prime_with(e: int, lower: int) -> int:
    def is_prime(m: int) -> bool:
        if m < 2:
            return False
        for d in range(2, isqrt(m) + 1):
            if m % d == 0:
                return False
        return True

    p = e + 1
    while True:
        if p > lower and is_prime(p):
            return p
        p += e


def _primitive_root(p: int) -> int:
    fac = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ArithmeticError("no primitive root (p not prime?)")


# -- character table ---------------------------------------------------------

@dataclass(frozen=True)
class Character:
    group: Optional[GroupId]
    degree: int
    values: Tuple[CycInt, ...]


class CharacterTable:
    """Exact character table of a finite group.

    Values are stored two ways: as integer coefficient vectors over the power
    basis of Z[zeta_e] (values_coeffs, shape chars x classes x phi(e)) and as
    eigenvalue-multiplicity tensors per class (eig[c][chi, alpha] = number of
    eigenvalues zeta_m^alpha of the class representative, m its order).
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.class_of = group.class_of()
        self.k = len(self.classes)
        self.reps = tuple(c[0] for c in self.classes)
        self.sizes = tuple(len(c) for c in self.classes)
        self.exponent = group.exponent
        e = self.exponent
        self.power_map = self._build_power_map()
        self.degrees, self.eig = self._dixon()
        self.values_coeffs = self._values_from_eig()
        self._sort_rows()
        self._values_cyc: Dict[Tuple[int, int], CycInt] = {}
        self._verify_basic()

    # power_map[c][k] = class of rep_c ** k, for k in 0..e-1
    def _build_power_map(self) -> Tuple[Tuple[int, ...], ...]:
        g = self.group
        pm = []
        for rep in self.reps:
            row = [self.class_of[0]]
            cur = 0
            for _ in range(self.exponent - 1):
                cur = g.table[cur][rep]
                row.append(self.class_of[cur])
            # row[k] currently holds class of rep^k with row[0] = identity class
            pm.append(tuple(row))
        return tuple(pm)

    def power_class(self, c: int, k: int) -> int:
        return self.power_map[c][k % self.exponent]

    def _class_matrices(self) -> np.ndarray:
        g = self.group
        n = g.n
        T = np.asarray(g.table, dtype=np.int64)
        cls = np.asarray(self.class_of, dtype=np.int64)
        M = np.zeros((self.k, self.k, self.k), dtype=np.int64)
        for i in range(self.k):
            acc = np.zeros((self.k, self.k), dtype=np.int64)
            prod_cls = cls[T[list(self.classes[i])]]      # |C_i| x n
            col_cls = np.broadcast_to(cls, prod_cls.shape)
            np.add.at(acc, (col_cls.ravel(), prod_cls.ravel()), 1)
            # acc[j,l] = #{(x,y): x in C_i, y in C_j, xy in C_l} = a_ijl * |C_l|
            sizes = np.asarray(self.sizes)
            if np.any(acc % sizes[None, :]):
                raise ArithmeticError("class structure constants not integral")
            M[i] = acc // sizes[None, :]
        return M

    def _dixon(self):
        n = self.group.n
        e = self.exponent
        p = _smallest_prime_with(e, 2 * isqrt(n) + 1)
        self.prime = p
        omega = pow(_primitive_root(p), (p - 1) // e, p)
        self.omega = omega
        A = self._class_matrices()
        # M_i acting with eigenvector (omega_chi(j))_j and eigenvalue omega_chi(i):
        # (M_i)[j, l] = a_ijl
        spaces = [_echelon_basis(np.eye(self.k, dtype=np.int64), p)]

        def split(space, M):
            B, piv = space
            d = B.shape[1]
            if d == 1:
                return [space]
            R = (M @ B % p)[piv] % p
            roots = _poly_roots_modp(_charpoly_modp(R, p), p)
            if len(roots) == 1:
                return [space]
            out = []
            for lam in roots:
                K = _nullspace_modp((R - lam * np.eye(d, dtype=np.int64)) % p, p)
                if K.shape[1]:
                    out.append(_echelon_basis(B @ K % p, p))
            if sum(s[0].shape[1] for s in out) != d:
                raise ArithmeticError("eigenspace split lost dimensions")
            return out

        # deterministic pseudo-random combinations usually split in one pass
        seed = 1
        for _ in range(3):
            if all(s[0].shape[1] == 1 for s in spaces):
                break
            comb = np.zeros((self.k, self.k), dtype=np.int64)
            for i in range(self.k):
                seed = (seed * 48271 + 11) % 2147483647
                comb = (comb + (seed % p) * A[i]) % p
            spaces = [s2 for s in spaces for s2 in split(s, comb)]
        for i in range(self.k):
            if all(s[0].shape[1] == 1 for s in spaces):
                break
            spaces = [s2 for s in spaces for s2 in split(s, A[i] % p)]
        if not all(s[0].shape[1] == 1 for s in spaces):
            raise ArithmeticError("class algebra failed to split")
        if len(spaces) != self.k:
            raise ArithmeticError("wrong number of central characters")

        # normalize eigenvectors at the identity-class coordinate: w_j = omega_j
        id_cls = self.class_of[0]
        omegas = np.zeros((self.k, self.k), dtype=np.int64)
        for t, (B, _) in enumerate(spaces):
            w = B[:, 0] % p
            if w[id_cls] == 0:
                raise ArithmeticError("central character vanishing at identity")
            omegas[t] = w * _modinv(int(w[id_cls]), p) % p

        # degrees from the first orthogonality relation
        sizes = np.asarray(self.sizes, dtype=np.int64)
        inv_cls = [self.class_of[self.group.inv[r]] for r in self.reps]
        size_inv = np.asarray([_modinv(int(s), p) for s in sizes], dtype=np.int64)
        degrees = []
        for t in range(self.k):
            s = int(np.sum(omegas[t] * omegas[t][inv_cls] % p * size_inv % p) % p)
            target = n * _modinv(s, p) % p
            d = [dd for dd in range(1, isqrt(n) + 1) if dd * dd % p == target]
            if len(d) != 1:
                raise ArithmeticError("degree recovery failed")
            degrees.append(d[0])
        if sum(d * d for d in degrees) != n:
            raise ArithmeticError("degree sum check failed")

        # character values mod p, then eigenvalue multiplicities per class
        chi_p = omegas * np.asarray(degrees, dtype=np.int64)[:, None] % p * size_inv[None, :] % p
        eig: List[np.ndarray] = []
        for c in range(self.k):
            m = self.group.elem_order[self.reps[c]]
            om = pow(omega, e // m, p)
            dft = np.asarray([[pow(om, (-a * k) % m, p) for k in range(m)]
                              for a in range(m)], dtype=np.int64)
            seq = chi_p[:, [self.power_map[c][k] for k in range(m)]]
            N = seq @ dft.T % p * _modinv(m, p) % p
            if np.any(N > max(degrees)):
                raise ArithmeticError("eigenvalue multiplicity lift out of range")
            if not np.array_equal(N.sum(axis=1), np.asarray(degrees)):
                raise ArithmeticError("eigenvalue multiplicities do not sum to degree")
            eig.append(N.astype(np.int64))
        return degrees, eig

    def _values_from_eig(self) -> np.ndarray:
        e = self.exponent
        phi = euler_phi(e)
        rows = np.asarray(_power_rows(e), dtype=np.int64)  # e x phi
        vals = np.zeros((self.k, self.k, phi), dtype=np.int64)
        for c in range(self.k):
            N = self.eig[c]
            m = N.shape[1]
            exps = (np.arange(m) * (e // m)) % e
            vals[:, c, :] = N @ rows[exps]
        return vals

    def _sort_rows(self):
        phi = self.values_coeffs.shape[2]
        one = np.zeros(phi, dtype=np.int64)
        one[0] = 1

        def key(t):
            if self.degrees[t] == 1 and np.array_equal(self.values_coeffs[t], np.broadcast_to(one, (self.k, phi))):
                return (0, 0, ())
            return (1, self.degrees[t], tuple(self.values_coeffs[t].ravel()))

        order = sorted(range(self.k), key=key)
        if key(order[0])[0] != 0:
            raise ArithmeticError("trivial character missing")
        self.degrees = [self.degrees[t] for t in order]
        self.values_coeffs = self.values_coeffs[order]
        self.eig = [N[order] for N in self.eig]

    def _verify_basic(self):
        n = self.group.n
        if sum(d * d for d in self.degrees) != n:
            raise ArithmeticError("degree sum violated")
        for d in self.degrees:
            if n % d:
                raise ArithmeticError("degree does not divide group order")

    # -- exact value access ------------------------------------------------
    def value(self, chi: int, cls: int) -> CycInt:
        key = (chi, cls)
        v = self._values_cyc.get(key)
        if v is None:
            v = CycInt(self.exponent, tuple(int(x) for x in self.values_coeffs[chi, cls]))
            self._values_cyc[key] = v
        return v

    def character(self, chi: int) -> Character:
        return Character(self.group.id, self.degrees[chi],
                         tuple(self.value(chi, c) for c in range(self.k)))

    def eigen_mults(self, chi: int, element: int) -> Tuple[int, ...]:
        """Multiplicity N_alpha of eigenvalue zeta_m^alpha of rho_chi at the element."""
        c = self.class_of[element]
        return tuple(int(v) for v in self.eig[c][chi])

    def central_scalar(self, chi: int, element: int) -> int:
        c = self.class_of[element]
        d = self.degrees[chi]
        coeffs = self.values_coeffs[chi, c]
        if coeffs[0] == d and not coeffs[1:].any():
            return 1
        if coeffs[0] == -d and not coeffs[1:].any():
            return -1
        raise ArithmeticError("element is not acting as a +/-1 scalar")

    def kernel_classes(self, chi: int) -> Tuple[int, ...]:
        d = self.degrees[chi]
        out = []
        for c in range(self.k):
            coeffs = self.values_coeffs[chi, c]
            if coeffs[0] == d and not coeffs[1:].any():
                out.append(c)
        return tuple(out)

    def conjugate_index(self, chi: int) -> int:
        """Index of the complex-conjugate character."""
        inv_cls = [self.class_of[self.group.inv[r]] for r in self.reps]
        target = self.values_coeffs[chi][inv_cls]
        for j in range(self.k):
            if self.degrees[j] == self.degrees[chi] and np.array_equal(self.values_coeffs[j], target):
                return j
        raise ArithmeticError("conjugate character not found")

    # -- pairings ------------------------------------------------------------
    def inner_product(self, a: Sequence[CycInt], b: Sequence[CycInt]) -> int:
        """(1/|G|) sum |C_j| a_j conj(b_j); must come out a rational integer."""
        e = self.exponent
        acc = CycInt.zero(e)
        for j in range(self.k):
            acc = acc + a[j] * b[j].conjugate() * self.sizes[j]
        return acc.divide_exact(self.group.n).as_int()

    def sym2_invariant_dim(self, phi: Sequence[CycInt]) -> int:
        """dim of the G-invariants in Sym^2 of a module with character phi."""
        e = self.exponent
        acc = CycInt.zero(e)
        for j in range(self.k):
            sq_cls = self.power_map[j][2 % e]
            acc = acc + (phi[j] * phi[j] + phi[sq_cls]) * self.sizes[j]
        dim = acc.divide_exact(2 * self.group.n).as_int()
        if dim < 0:
            raise ArithmeticError("negative invariant dimension")
        return dim

    def class_function(self, mults: Sequence[int]) -> List[CycInt]:
        """Character of sum(mults[chi] * V_chi) as a list of exact values."""
        arr = np.tensordot(np.asarray(mults, dtype=np.int64), self.values_coeffs, axes=(0, 0))
        return [CycInt(self.exponent, tuple(int(x) for x in arr[c])) for c in range(self.k)]

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "order": self.group.n,
            "exponent": self.exponent,
            "degrees": list(self.degrees),
            "classes": [list(c) for c in self.classes],
            "power_map": [list(r) for r in self.power_map],
            "eig": [N.tolist() for N in self.eig],
        }


def character_table(group: FiniteGroup) -> CharacterTable:
    """Memoized exact character table."""
    tab = getattr(group, "_chartable", None)
    if tab is None:
        tab = CharacterTable(group)
        group._chartable = tab
    return tab


# -- exhaustive orthogonality verification ------------------------------------

def _exponent_tensor(table: CharacterTable) -> np.ndarray:
    """E[chi, class, t] = multiplicity of zeta_e^t among eigenvalues."""
    e = table.exponent
    E = np.zeros((table.k, table.k, e), dtype=np.float64)
    for c in range(table.k):
        N = table.eig[c]
        m = N.shape[1]
        for a in range(m):
            E[:, c, (a * (e // m)) % e] += N[:, a]
    return E


def verify_orthogonality(table: CharacterTable) -> None:
    """Exact row and column orthogonality for the whole table.

    Products of values are accumulated as integer vectors indexed by root
    exponent (float64 matmuls are exact here: every entry is bounded by
    |G| * max_degree^2 << 2^53), then reduced modulo the cyclotomic relation.
    """
    e = table.exponent
    n = table.group.n
    k = table.k
    E = _exponent_tensor(table)
    rows = np.asarray(_power_rows(e), dtype=np.int64)
    w = np.asarray(table.sizes, dtype=np.float64)

    gram = np.zeros((e, k, k))
    colg = np.zeros((e, k, k))
    for t in range(e):
        Erolled = np.roll(E, t, axis=2)
        gram[t] = np.einsum("icx,c,jcx->ij", E, w, Erolled)
        colg[t] = np.einsum("xcs,xds->cd", E, Erolled)
    gram_i = np.rint(gram).astype(np.int64)
    colg_i = np.rint(colg).astype(np.int64)
    if not (np.allclose(gram, gram_i) and np.allclose(colg, colg_i)):
        raise ArithmeticError("orthogonality accumulation not integral")

    # reduce exponent vectors mod Phi_e and compare with the expected deltas
    red_rows = np.tensordot(gram_i, rows, axes=(0, 0))      # k x k x phi
    red_cols = np.tensordot(colg_i, rows, axes=(0, 0))
    phi = rows.shape[1]
    expect_rows = np.zeros((k, k, phi), dtype=np.int64)
    expect_rows[np.arange(k), np.arange(k), 0] = n
    if not np.array_equal(red_rows, expect_rows):
        raise ArithmeticError("row orthogonality violated")
    expect_cols = np.zeros((k, k, phi), dtype=np.int64)
    for c in range(k):
        expect_cols[c, c, 0] = n // table.sizes[c]
    if not np.array_equal(red_cols, expect_cols):
        raise ArithmeticError("column orthogonality violated")


def verify_regular_spectrum(table: CharacterTable) -> None:
    """sum_chi degree * N_alpha(chi, x) = |G|/ord(x) for every class and alpha."""
    degs = np.asarray(table.degrees, dtype=np.int64)
    n = table.group.n
    for c in range(table.k):
        N = table.eig[c]
        m = N.shape[1]
        tot = degs @ N
        if not np.all(tot == n // m):
            raise ArithmeticError("regular representation spectrum not uniform at class %d" % c)
