"""Rational Beatty sets modulo q and their discrete Fourier transforms.

B(p, q, r) is the set {floor(n*q/p + r) : n in Z}, read as a multiset on Z_q
with p elements per period.  The transform at j is

    sum_{n=0}^{p-1} w**(-j * floor(n*q/p + r)),    w = exp(2*pi*i/q),

and for j != 0 (mod q) it has the closed form

    [g | j] * g * (1 - w**j) / (1 - w**(j*pbar)) * w**(-j*r)

where g = gcd(p, q) and p*pbar = g (mod q).  The closed form is kept as a
(numerator, denominator) pair and compared by cross-multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .cyclotomic import CycloElt, root_power
from .modarith import generalized_inverse, inverse_mod


@dataclass(frozen=True)
class BeattyParams:
    p: int
    q: int
    r: int = 0

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.p == 0:
            raise ValueError("p must be nonzero")
        # the set is unchanged by (p, n) -> (-p, -n)
        object.__setattr__(self, "p", abs(self.p))
        object.__setattr__(self, "r", self.r % self.q)

    @cached_property
    def g(self) -> int:
        return math.gcd(self.p, self.q)

    @cached_property
    def pbar(self) -> int:
        return generalized_inverse(self.p, self.q).pbar

    def floors(self) -> np.ndarray:
        """floor(n*q/p) + r for n in [0, p), not reduced mod q."""
        p, q, r = self.p, self.q, self.r
        if p * q + r < 2**62:
            return np.arange(p, dtype=np.int64) * q // p + r
        return np.array([n * q // p + r for n in range(p)], dtype=object)


def indicator_vector(b: BeattyParams) -> np.ndarray:
    """Multiplicity of every residue class 0..q-1 in the multiset."""
    f = b.floors() % b.q
    return np.bincount(f.astype(np.int64), minlength=b.q)


def indicator(b: BeattyParams, x: int) -> int:
    # multiplicity of x: number of n in [0, p) with floor(n*q/p) = x - r (mod q)
    y = (x - b.r) % b.q
    lo = -(-y * b.p // b.q)            # ceil(y*p/q)
    hi = -(-(y + 1) * b.p // b.q)      # ceil((y+1)*p/q)
    return hi - lo


def membership_by_duality(p: int, q: int, x: int) -> bool:
    """x is in B(p, q, 0) iff frac(x*p/q) is 0 or exceeds 1 - p/q (coprime, 0<p<q)."""
    if not (1 <= p < q) or math.gcd(p, q) != 1:
        raise ValueError(f"duality needs gcd(p, q) = 1 and 1 <= p < q, got p={p}, q={q}")
    fp = Fraction(x * p % q, q)
    return fp == 0 or fp > 1 - Fraction(p, q)


def interval_count(p: int, q: int, x, y) -> int:
    """Number of elements of B(p, q, 0) in the real interval [x, y)."""
    if not (1 <= p < q) or math.gcd(p, q) != 1:
        raise ValueError(f"balance needs gcd(p, q) = 1 and 1 <= p < q, got p={p}, q={q}")
    x, y = Fraction(x), Fraction(y)
    if x >= y:
        raise ValueError("interval needs x < y")
    # elements are integers, so [x, y) holds the same ones as [ceil x, ceil y)
    lo, hi = math.ceil(x), math.ceil(y)
    return -(-hi * p // q) + (lo * p // -q)


def dft_counts(b: BeattyParams, j: int) -> np.ndarray:
    """Group-ring vector of the transform: entry e counts terms equal to w**e."""
    e = (-(j % b.q) * b.floors()) % b.q
    return np.bincount(e.astype(np.int64), minlength=b.q)


def dft_direct(b: BeattyParams, j: int) -> CycloElt:
    """Exact transform by direct summation over one period."""
    return CycloElt.from_counts(b.q, dft_counts(b, j))


def ft_closed_form(b: BeattyParams, j: int, pbar: int | None = None) -> tuple[CycloElt, CycloElt]:
    """(numerator, denominator) of the closed-form transform at j != 0 (mod q).

    ``pbar`` overrides the inverse representative (any p*pbar = g mod q works).
    """
    q = b.q
    j %= q
    if j == 0:
        raise ValueError("closed form is for j != 0 (mod q); use dft_direct")
    if j % b.g:
        return CycloElt.zero(q), CycloElt.one(q)
    if pbar is None:
        pbar = b.pbar
    elif (b.p * pbar - b.g) % q:
        raise ValueError(f"{pbar} is not a generalized inverse of {b.p} mod {q}")
    num = (CycloElt.one(q) - root_power(q, j)) * root_power(q, -j * b.r)
    den = CycloElt.one(q) - root_power(q, j * pbar)
    return num.scale(b.g), den


def closed_form_matches(b: BeattyParams, j: int) -> bool:
    """Exact check that dft_direct(j) * denominator == numerator in Z[w]."""
    num, den = ft_closed_form(b, j)
    return (dft_direct(b, j) * den - num).is_zero()


def ft_magnitude(b: BeattyParams, j: int) -> float:
    """|transform(j)| = [g | j] * g * |sin(pi j/q) / sin(pi j pbar/q)|."""
    q = b.q
    j %= q
    if j == 0:
        raise ValueError("magnitude formula is for j != 0 (mod q)")
    if j % b.g:
        return 0.0
    # reduce angles mod q first; sin(pi*k/q) has period q up to sign
    return b.g * abs(math.sin(math.pi * j / q) / math.sin(math.pi * (j * b.pbar % q) / q))


def transform_numeric(b: BeattyParams, j: int) -> complex:
    """Floating-point transform by direct summation (figures, quick checks)."""
    e = (-(j % b.q) * b.floors()) % b.q
    return complex(np.exp(2j * np.pi * e.astype(np.float64) / b.q).sum())


def variation_identity_check(p: int, q: int) -> bool:
    """floor(q*qbar/p) = (q*qbar - 1)/p = -pbar (mod q), qbar = q^{-1} mod p.

    For p = 1 the floor form degenerates (q*qbar/p is an integer), so only the
    congruence (q*qbar - 1)/p = -pbar is checked.
    """
    if not (1 <= p < q) or math.gcd(p, q) != 1:
        raise ValueError(f"need gcd(p, q) = 1 and 1 <= p < q, got p={p}, q={q}")
    qbar = inverse_mod(q, p) if p > 1 else 1
    pbar = generalized_inverse(p, q).pbar
    t = q * qbar - 1
    if t % p:
        return False
    ok = (t // p + pbar) % q == 0
    if p > 1:
        ok = ok and (q * qbar) // p == t // p
    return ok
