"""Trigonometric identities generated by the doubling construction.

With q odd and m the order of 2 mod q:

* sum_{k=1}^{m} csc(2^k pi / q) = 0;
* S(q, t) = sum_{u=1}^{t} sum_{a in C_q(2u-1)} w**a, where C_q(x) is the
  doubling orbit {x*2^j mod q : 0 <= j < m} (with multiplicity), and
      sum_k sin(2pi*2t*2^k/q) / sin(2pi*2^k/q) =  2 Re S(q, t)
      sum_k cos(2pi*2t*2^k/q) / sin(2pi*2^k/q) = -2 Im S(q, t)
  over k = 0..m-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cyclotomic import CycloElt, embed_complex
from .modarith import order_of_two


@dataclass(frozen=True)
class CyclotomicCoset:
    q: int
    seed: int
    elements: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.elements)


def coset(q: int, x: int) -> CyclotomicCoset:
    m = order_of_two(q)
    return CyclotomicCoset(q, x, tuple(x * pow(2, j, q) % q for j in range(m)))


def distinct_cosets(q: int) -> list[tuple[int, ...]]:
    """Distinct doubling orbits of Z_q, each as a sorted tuple."""
    seen, out = set(), []
    for x in range(q):
        if x in seen:
            continue
        orbit = tuple(sorted(set(coset(q, x).elements)))
        seen.update(orbit)
        out.append(orbit)
    return out


def csc_cleared_sum(q: int) -> CycloElt:
    """sum_{k=1}^{m} w^(2^(k-1)) prod_{s=k}^{m-1} (1 + w^(2^s)) as an element of Z[w].

    This is sum_k w^(2^(k-1)) / (1 - w^(2^k)) times the common denominator
    (1 - w) prod_{s<m} (1 + w^(2^s)).  Built with Horner steps in the group
    ring, where multiplying by 1 + w^a is a rotate-and-add.
    """
    m = order_of_two(q)
    acc = np.zeros(q, dtype=object)     # running product P_k
    acc[0] = 1
    total = np.zeros(q, dtype=object)
    for k in range(m, 0, -1):
        # here acc = prod_{s=k}^{m-1} (1 + w^(2^s))
        total = total + np.roll(acc, pow(2, k - 1, q))
        a = pow(2, k - 1, q)
        acc = acc + np.roll(acc, a)
    return CycloElt.from_counts(q, total)


def binary_range_sum(q: int) -> CycloElt:
    """sum_{x=1}^{2^m - 1} w^x, the expanded form of the cleared sum."""
    m = order_of_two(q)
    n = 2**m - 1
    counts = [n // q + (1 if 1 <= e <= n % q else 0) for e in range(q)]
    counts[0] = n // q
    return CycloElt.from_counts(q, counts)


def csc_numeric(q: int) -> float:
    m = order_of_two(q)
    return sum(1 / math.sin(math.pi * (pow(2, k, 2 * q)) / q) for k in range(1, m + 1))


def csc_identity_check(q: int) -> tuple[bool, float]:
    """(exact verdict, numeric residual) for sum_{k=1}^{m} csc(2^k pi/q) = 0."""
    cleared = csc_cleared_sum(q)
    exact = cleared.is_zero() and cleared == binary_range_sum(q)
    return exact, csc_numeric(q)


def csc_terms(q: int) -> list[tuple[int, int]]:
    """The identity as (sign, n) pairs meaning sign / sin(n pi/q) with 0 < n < q/2."""
    m = order_of_two(q)
    out = []
    for k in range(1, m + 1):
        a = pow(2, k, 2 * q)          # csc(a pi/q), a in [0, 2q)
        sign = 1
        if a > q:
            a, sign = a - q, -1
        if a > q // 2:
            a = q - a
        out.append((sign, a))
    out.sort(key=lambda t: t[1])
    if out[0][0] < 0:
        out = [(-s, a) for s, a in out]
    return out


def s_sum(q: int, t: int) -> CycloElt:
    counts = [0] * q
    for u in range(1, t + 1):
        for a in coset(q, 2 * u - 1).elements:
            counts[a] += 1
    return CycloElt.from_counts(q, counts)


def coset_cover_multiplicity(q: int, t: int) -> int | None:
    """c if the orbits of 1, 3, ..., 2t-1 cover Z_q minus 0 exactly c times, else None."""
    counts = [0] * q
    for u in range(1, t + 1):
        for a in coset(q, 2 * u - 1).elements:
            counts[a] += 1
    if counts[0]:
        return None
    rest = set(counts[1:])
    return rest.pop() if len(rest) == 1 else None


def sine_ratio_sum(q: int, t: int) -> float:
    m = order_of_two(q)
    return sum(
        math.sin(2 * math.pi * (2 * t * pow(2, k, q) % q) / q)
        / math.sin(2 * math.pi * pow(2, k, q) / q)
        for k in range(m)
    )


def minus_one_in_orbit(q: int) -> bool:
    """-1 lies in the doubling orbit of 1 mod q.

    Then every w**a in S(q, t) comes with its conjugate and the cosine ratio
    sums vanish.  For prime q this is the same as m being even; for composite
    q it is stronger (q = 15 has m = 4 but no power of 2 is -1).
    """
    return (q - 1) in coset(q, 1).elements


def cosine_ratio_sum(q: int, t: int) -> float:
    m = order_of_two(q)
    return sum(
        math.cos(2 * math.pi * (2 * t * pow(2, k, q) % q) / q)
        / math.sin(2 * math.pi * pow(2, k, q) / q)
        for k in range(m)
    )


def identity_report(q: int, t: int | None = None) -> list[dict]:
    """Machine-checkable records {q, t, kind, lhs_terms, rhs, ...}."""
    m = order_of_two(q)
    exact, resid = csc_identity_check(q)
    terms = csc_terms(q)
    latex = " ".join(
        f"{'+' if s > 0 else '-'} \\frac{{1}}{{\\sin({n}\\pi/{q})}}" for s, n in terms
    ).lstrip("+ ")
    records = [{
        "q": q, "t": None, "kind": "csc",
        "lhs_terms": [[s, n] for s, n in terms], "rhs": 0,
        "exact": exact, "residual": resid, "latex": f"{latex} = 0",
    }]
    ts = [t] if t is not None else list(range(1, m))
    for tt in ts:
        s = s_sum(q, tt)
        z = embed_complex(s)
        c = coset_cover_multiplicity(q, tt)
        sr, cr = sine_ratio_sum(q, tt), cosine_ratio_sum(q, tt)
        records.append({
            "q": q, "t": tt, "kind": "S",
            "lhs_terms": [list(coset(q, 2 * u - 1).elements) for u in range(1, tt + 1)],
            "rhs": [z.real, z.imag], "coeffs": list(s.coeffs),
            "cover_multiplicity": c,
            "exact": (s == CycloElt.one(q).scale(-c)) if c is not None else None,
        })
        records.append({
            "q": q, "t": tt, "kind": "sine_ratio",
            "lhs_terms": [[2 * tt * pow(2, k, q) % q, pow(2, k, q)] for k in range(m)],
            "rhs": 2 * z.real, "value": sr,
            "latex": f"\\sum_{{k=0}}^{{{m - 1}}} \\frac{{\\sin({4 * tt}\\pi 2^k/{q})}}"
                     f"{{\\sin(2\\pi 2^k/{q})}} = {2 * z.real:.12g}",
        })
        records.append({
            "q": q, "t": tt, "kind": "cosine_ratio",
            "lhs_terms": [[2 * tt * pow(2, k, q) % q, pow(2, k, q)] for k in range(m)],
            "rhs": -2 * z.imag, "value": cr,
            "zero_by_symmetry": minus_one_in_orbit(q),
        })
    return records
