"""Integer and modular primitives: gcd, generalized inverses, order of 2,
binary weight and the nearest-integer continued fraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b) > 0."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


@dataclass(frozen=True)
class GeneralizedInverse:
    p: int
    q: int
    g: int
    pbar: int


def generalized_inverse(p: int, q: int) -> GeneralizedInverse:
    """Smallest positive pbar with p*pbar = gcd(p, q) (mod q).

    pbar is unique modulo q/g; the representative returned lies in [1, q/g].
    """
    if p < 1 or q < 2:
        raise ValueError(f"need p >= 1 and q >= 2, got p={p}, q={q}")
    g = gcd(p, q)
    a, b = p // g, q // g
    if b == 1:
        pbar = 1
    else:
        pbar = pow(a, -1, b)
    return GeneralizedInverse(p, q, g, pbar)


def inverse_mod(a: int, n: int) -> int:
    """Inverse of a modulo n in [0, n); raises ValueError if none exists."""
    if n == 1:
        return 0
    return pow(a, -1, n)


def order_of_two(q: int) -> int:
    """Multiplicative order of 2 modulo an odd q >= 3."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"order of 2 needs odd q >= 3, got {q}")
    m, x = 1, 2
    while x != 1:
        x = (2 * x) % q
        m += 1
    return m


def popcount(n: int) -> int:
    if n < 0:
        raise ValueError("popcount of a negative integer")
    return bin(n).count("1")


@dataclass(frozen=True)
class NicfExpansion:
    p: int
    q: int
    terms: tuple[int, ...]

    def value(self) -> Fraction:
        acc = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            acc = a + 1 / acc
        return acc

    def violations(self) -> list[str]:
        """Constraint breaches of the expansion (empty for a valid NICF)."""
        t, n = self.terms, len(self.terms) - 1
        bad = []
        for i in range(1, n + 1):
            if abs(t[i]) < 2:
                bad.append(f"|a_{i}| < 2")
        for i in range(1, n):
            if abs(t[i]) == 2 and t[i] * t[i + 1] <= 0:
                bad.append(f"a_{i} = {t[i]} but a_{i}*a_{i + 1} <= 0")
        if n > 0 and t[n] == -2:
            bad.append("a_n = -2")
        return bad


def _nearest(x: Fraction) -> int:
    # half-integers round down; rounding them up would end an expansion on -2
    fl = x.numerator // x.denominator
    return fl + 1 if x - fl > Fraction(1, 2) else fl


def nicf(p: int, q: int) -> NicfExpansion:
    """Nearest-integer continued fraction of p/q."""
    if q < 1:
        raise ValueError("denominator must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    x = Fraction(p, q)
    terms = []
    while True:
        a = _nearest(x)
        terms.append(a)
        x -= a
        if x == 0:
            break
        x = 1 / x
    e = NicfExpansion(p, q, tuple(terms))
    bad = e.violations()
    if bad:
        raise AssertionError(f"NICF of {p}/{q} = {terms} breaks {bad}")
    return e


def nicf_product(e: NicfExpansion) -> int:
    """Product of |a_i| over the partial quotients after a_0."""
    return prod(abs(a) for a in e.terms[1:])
