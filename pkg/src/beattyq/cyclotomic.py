"""Exact arithmetic in Z[w], w = exp(2*pi*i/q).

Elements are kept as their remainder modulo the q-th cyclotomic polynomial,
so an element is zero exactly when every stored coefficient is zero.  Sums of
roots of unity are most cheaply built as *group-ring vectors*: a length-q
integer vector ``v`` standing for sum(v[e] * w**e), which ``from_counts``
reduces to canonical form.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from typing import Sequence

import numpy as np

_INT64_SAFE = 2**62


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact quotient of integer polynomials (low-to-high), den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for k in range(dn + 1):
                num[i + k] -= c * den[k]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> tuple[int, ...]:
    """Coefficients of Phi_q, lowest degree first."""
    if q < 1:
        raise ValueError("q must be >= 1")
    num = [-1] + [0] * (q - 1) + [1]
    for d in _divisors(q)[:-1]:
        num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


def totient(q: int) -> int:
    return len(cyclotomic_poly(q)) - 1


@lru_cache(maxsize=None)
def _reduction_table(q: int) -> np.ndarray:
    """Row e holds x**e mod Phi_q for 0 <= e < q; shape (q, phi(q))."""
    phi_poly = cyclotomic_poly(q)
    n = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (n - 1)
    for _ in range(q):
        rows.append(cur)
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [c - top * f for c, f in zip(nxt, phi_poly[:-1])]
        cur = nxt
    big = max((abs(c) for row in rows for c in row), default=0)
    table = np.array(rows, dtype=np.int64 if big < 2**31 else object)
    table.setflags(write=False)
    return table


def _reduce_counts(q: int, counts) -> tuple[int, ...]:
    """Canonical coefficients of sum(counts[e] * w**e), len(counts) == q."""
    table = _reduction_table(q)
    v = np.asarray(counts)
    if v.dtype != object and table.dtype != object:
        bound = int(np.abs(v).max(initial=0)) * int(np.abs(table).max(initial=0)) * q
        if bound < _INT64_SAFE:
            return tuple(int(c) for c in v.astype(np.int64) @ table)
    v = np.array([int(c) for c in v], dtype=object)
    return tuple(int(c) for c in v @ table.astype(object))


def _fold(q: int, coeffs) -> np.ndarray:
    """Fold a polynomial's coefficients into a length-q group-ring vector."""
    a = np.asarray(coeffs)
    pad = (-len(a)) % q
    if pad:
        a = np.concatenate([a, np.zeros(pad, dtype=a.dtype)])
    return a.reshape(-1, q).sum(axis=0)


class CycloElt:
    """An element of Z[w] in canonical form (remainder mod Phi_q)."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Sequence[int]):
        n = totient(q)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != n:
            raise ValueError(f"expected {n} coefficients for q={q}, got {len(coeffs)}")
        self.q = q
        self.coeffs = coeffs

    @classmethod
    def from_counts(cls, q: int, counts) -> "CycloElt":
        if len(counts) != q:
            raise ValueError("group-ring vector must have length q")
        return cls(q, _reduce_counts(q, counts))

    @classmethod
    def from_poly(cls, q: int, coeffs: Sequence[int]) -> "CycloElt":
        """Value at w of an arbitrary integer polynomial (low-to-high)."""
        if not len(coeffs):
            return cls.zero(q)
        return cls.from_counts(q, _fold(q, np.array(list(coeffs), dtype=object)))

    @classmethod
    def zero(cls, q: int) -> "CycloElt":
        return cls(q, (0,) * totient(q))

    @classmethod
    def one(cls, q: int) -> "CycloElt":
        return root_power(q, 0)

    def _check(self, other: "CycloElt"):
        if self.q != other.q:
            raise ValueError(f"moduli differ: {self.q} vs {other.q}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycloElt.one(self.q).scale(other)
        self._check(other)
        return CycloElt(self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElt(self.q, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "CycloElt":
        return CycloElt(self.q, [k * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        a = np.array(self.coeffs, dtype=object)
        b = np.array(other.coeffs, dtype=object)
        big = max(map(abs, self.coeffs), default=0) * max(map(abs, other.coeffs), default=0)
        if big * len(a) < _INT64_SAFE:
            prod = np.convolve(a.astype(np.int64), b.astype(np.int64))
        else:
            prod = np.convolve(a, b)
        return CycloElt.from_counts(self.q, _fold(self.q, prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __complex__(self):
        return embed_complex(self)

    def __repr__(self):
        return f"CycloElt(q={self.q}, coeffs={list(self.coeffs)})"


def root_power(q: int, e: int) -> CycloElt:
    """w**e as a canonical element."""
    return CycloElt(q, _reduction_table(q)[e % q].tolist())


def is_zero(e: CycloElt) -> bool:
    return e.is_zero()


def embed_complex(e: CycloElt) -> complex:
    """Numeric value at exp(2*pi*i/q).  For display only, never for equality."""
    w = cmath.exp(2j * cmath.pi / e.q)
    acc = 0j
    for c in reversed(e.coeffs):
        acc = acc * w + c
    return acc
