"""Arithmetic in Hecke eigenvalue fields Q[t]/(f(t)) for monic integral f.

Only integral elements are supported. Polynomials are coefficient tuples,
constant term first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_rem_monic(a: Sequence[int], m: Sequence[int]) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    n = len(m) - 1
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            for i in range(n + 1):
                a[k - n + i] -= c * m[i]
    return _trim(a[:n] if n else [0])


def _poly_derivative(a: Sequence[int]) -> tuple[int, ...]:
    return _trim([i * a[i] for i in range(1, len(a))]) if len(a) > 1 else (0,)


def _poly_gcd_degree(a: Sequence[int], b: Sequence[int]) -> int:
    """Degree of gcd(a, b) over Q."""

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def rem(x, y):
        x = x[:]
        while len(x) >= len(y):
            q = x[-1] / y[-1]
            shift = len(x) - len(y)
            for i, v in enumerate(y):
                x[i + shift] -= q * v
            x = strip(x)
        return x

    x = strip([Fraction(v) for v in a])
    y = strip([Fraction(v) for v in b])
    while y:
        x, y = y, rem(x, y)
    return len(x) - 1


def bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class HeckeField:
    min_poly: tuple[int, ...]

    def __post_init__(self):
        mp = _trim(tuple(int(c) for c in self.min_poly))
        object.__setattr__(self, "min_poly", mp)
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if mp[-1] != 1:
            raise ValueError(f"minimal polynomial {mp} is not monic")
        if _poly_gcd_degree(mp, _poly_derivative(mp)) != 0:
            raise ValueError(f"minimal polynomial {mp} is not squarefree")

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def __call__(self, coeffs) -> "HeckeElement":
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        return HeckeElement(poly_rem_monic(tuple(int(c) for c in coeffs), self.min_poly), self)

    @property
    def gen(self) -> "HeckeElement":
        return self((0, 1))

    def embeddings(self) -> np.ndarray:
        """Complex roots of the minimal polynomial."""
        return np.roots(self.min_poly[::-1])


RATIONALS = HeckeField((0, 1))


@dataclass(frozen=True)
class HeckeElement:
    coeffs: tuple[int, ...]
    field: HeckeField

    def _check(self, other) -> "HeckeElement":
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("Hecke elements from different fields")
        return other

    def __add__(self, other):
        return he_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        return he_arith(self, other, "sub")

    def __rsub__(self, other):
        return he_arith(self._check(other), self, "sub")

    def __mul__(self, other):
        return he_arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self):
        return HeckeElement(tuple(-c for c in self.coeffs), self.field)

    def __pow__(self, k: int):
        out = self.field(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return len(self.coeffs) == 1

    def embeddings(self) -> np.ndarray:
        roots = self.field.embeddings()
        return np.polyval(np.array(self.coeffs[::-1], dtype=float), roots)

    def norm(self) -> int:
        return field_norm(self)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and len(self.coeffs) > 1:
                continue
            terms.append(str(c) if i == 0 else f"{c}*t" if i == 1 else f"{c}*t^{i}")
        return " + ".join(terms) or "0"


def he_arith(x: HeckeElement, y: HeckeElement, op: str) -> HeckeElement:
    y = x._check(y)
    if y is NotImplemented:
        raise TypeError(f"unsupported operand {y!r}")
    n = max(len(x.coeffs), len(y.coeffs))
    a = x.coeffs + (0,) * (n - len(x.coeffs))
    b = y.coeffs + (0,) * (n - len(y.coeffs))
    if op == "add":
        c = [u + v for u, v in zip(a, b)]
    elif op == "sub":
        c = [u - v for u, v in zip(a, b)]
    elif op == "mul":
        c = poly_mul(x.coeffs, y.coeffs)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return HeckeElement(poly_rem_monic(c, x.field.min_poly), x.field)


def multiplication_matrix(x: HeckeElement) -> list[list[int]]:
    """Matrix of multiplication by x on the power basis 1, t, ..., t^(n-1)."""
    n = x.field.degree
    cols = []
    basis = (1,)
    for _ in range(n):
        col = poly_rem_monic(poly_mul(x.coeffs, basis), x.field.min_poly)
        cols.append(list(col) + [0] * (n - len(col)))
        basis = (0,) + basis
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def field_norm(x: HeckeElement) -> int:
    """Product of the conjugates of x, i.e. Res(min_poly, x) for monic min_poly."""
    return bareiss_det(multiplication_matrix(x))
