"""Exact arithmetic in rings of cyclotomic integers Z[zeta_n].

Elements are stored as integer coordinate vectors over the power basis
1, zeta, ..., zeta^(phi(n)-1), where zeta = exp(2*pi*i/n).  All operations
are exact; nothing here touches floating point except `to_complex`, which
exists for tests and debugging.
"""
from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd
from typing import Tuple


def _poly_divide(num: Tuple[int, ...], den: Tuple[int, ...]) -> Tuple[int, ...]:
    # exact division of integer polynomials, ascending coefficients
    num_l = list(num)
    deg_n, deg_d = len(num_l) - 1, len(den) - 1
    quot = [0] * (deg_n - deg_d + 1)
    for i in range(deg_n - deg_d, -1, -1):
        q, r = divmod(num_l[i + deg_d], den[deg_d])
        if r:
            raise ArithmeticError("non-exact polynomial division")
        quot[i] = q
        for j in range(deg_d + 1):
            num_l[i + j] -= q * den[j]
    if any(num_l):
        raise ArithmeticError("non-exact polynomial division")
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    num = tuple([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divide(num, cyclotomic_poly(d))
    return num


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    # row t = coordinates of zeta_n^t over the power basis, for t in 0..n-1
    d = euler_phi(n)
    phi = cyclotomic_poly(n)
    rows = []
    for t in range(n):
        if t < d:
            row = [0] * d
            row[t] = 1
        else:
            prev = rows[t - 1]
            row = [0] * (d + 1)
            for j, c in enumerate(prev):
                row[j + 1] = c
            top = row.pop()
            if top:
                # zeta^d = -(phi_0 + ... + phi_{d-1} zeta^{d-1})
                for j in range(d):
                    row[j] -= top * phi[j]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def _reduce(n: int, conv: list) -> Tuple[int, ...]:
    # reduce a raw coefficient list (degree may reach 2d-2) modulo Phi_n
    d = euler_phi(n)
    phi = cyclotomic_poly(n)
    for i in range(len(conv) - 1, d - 1, -1):
        c = conv[i]
        if c:
            conv[i] = 0
            for j in range(d):
                conv[i - d + j] -= c * phi[j]
    return tuple(conv[:d])


class CycInt:
    """An element of Z[zeta_n] with exact integer coordinates."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Tuple[int, ...]):
        self.n = n
        self.coeffs = coeffs

    # constructors -----------------------------------------------------
    @staticmethod
    def zero(n: int) -> "CycInt":
        return CycInt(n, (0,) * euler_phi(n))

    @staticmethod
    def from_int(n: int, value: int) -> "CycInt":
        c = [0] * euler_phi(n)
        c[0] = value
        return CycInt(n, tuple(c))

    @staticmethod
    def root(n: int, k: int) -> "CycInt":
        """zeta_n^k."""
        return CycInt(n, _power_rows(n)[k % n])

    # ring operations --------------------------------------------------
    def _check(self, other: "CycInt"):
        if self.n != other.n:
            raise ValueError("mixed conductors %d and %d" % (self.n, other.n))

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.n, other)
        self._check(other)
        return CycInt(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.n, other)
        self._check(other)
        return CycInt(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.n, tuple(a * other for a in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        d = len(a)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        return CycInt(self.n, _reduce(self.n, conv))

    __rmul__ = __mul__

    def conjugate(self) -> "CycInt":
        """Complex conjugation, zeta -> zeta^(n-1)."""
        rows = _power_rows(self.n)
        d = len(self.coeffs)
        acc = [0] * d
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * (self.n - 1)) % self.n]
                for t in range(d):
                    acc[t] += c * row[t]
        return CycInt(self.n, tuple(acc))

    def divide_exact(self, k: int) -> "CycInt":
        """Divide by a nonzero integer; raises if any coordinate is not divisible."""
        out = []
        for a in self.coeffs:
            q, r = divmod(a, k)
            if r:
                raise ArithmeticError("non-exact division by %d" % k)
            out.append(q)
        return CycInt(self.n, tuple(out))

    def embed(self, m: int) -> "CycInt":
        """Image in Z[zeta_m], where m is a multiple of the conductor.

        zeta_n maps to zeta_m^(m/n), so coordinates move from the power
        basis of Z[zeta_n] to the one of Z[zeta_m].
        """
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("cannot embed conductor %d into %d" % (self.n, m))
        step = m // self.n
        vec = [0] * m
        for j, c in enumerate(self.coeffs):
            vec[j * step] = c
        return CycInt(m, reduce_exponent_vector(m, vec))

    # predicates and conversions ----------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError("not a rational integer: %r" % (self,))
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(c * z ** j for j, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        return isinstance(other, CycInt) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        if self.is_integer():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mon = "z" if j == 1 else "z^%d" % j
                terms.append(mon if c == 1 else ("-" + mon if c == -1 else "%d*%s" % (c, mon)))
        return "(" + "+".join(terms).replace("+-", "-") + ")"


def reduce_exponent_vector(n: int, vec) -> Tuple[int, ...]:
    """Reduce sum_t vec[t]*zeta_n^t (vec of length n) to power-basis coordinates."""
    rows = _power_rows(n)
    d = euler_phi(n)
    acc = [0] * d
    for t, c in enumerate(vec):
        if c:
            row = rows[t % n]
            for j in range(d):
                acc[j] += c * row[j]
    return tuple(acc)
