"""Desk-scale testers for three open conjectures.

* rational function: if f(x) = sum_k x^v_k / (1 - x^u_k), with units
  1 <= u_1 < ... < u_n < q, vanishes at w = exp(2 pi i/q), then sum(u) >= q;
* its strengthening: with no subset of the u_k summing to 0 (mod q),
  vanishing at w forces vanishing at every q-th root of unity except 1;
* the sine-sum inequality system, claimed to force q = 2^n - 1 and
  {p} = {1, 2, ..., 2^(n-1)} (mod q).

Scans produce evidence only.  An empty violation list proves nothing beyond
the range scanned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .covering import CoveringInstance
from .cyclotomic import CycloElt, _divisors, _reduction_table, root_power
from .modarith import generalized_inverse

SINE_MARGIN = 1e-9


@dataclass(frozen=True)
class RationalFunctionSpec:
    q: int
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if len(self.u) != len(self.v):
            raise ValueError("u and v must have equal length")
        if any(b <= a for a, b in zip(self.u, self.u[1:])):
            raise ValueError("u must be strictly increasing")
        if any(not 1 <= x < self.q or math.gcd(x, self.q) != 1 for x in self.u):
            raise ValueError("every u_k must be a unit in [1, q)")

    def to_dict(self) -> dict:
        return {"q": self.q, "u": list(self.u), "v": list(self.v)}

    def evaluate(self, e: int = 1) -> complex:
        """Numeric value at exp(2 pi i e/q)."""
        x = np.exp(2j * np.pi * e / self.q)
        return complex(sum(x**vk / (1 - x**uk) for uk, vk in zip(self.u, self.v)))


BUHLER = RationalFunctionSpec(15, (1, 2, 4, 11, 13, 14), (0, 5, 10, 10, 5, 0))


def vanishes_at_root(spec: RationalFunctionSpec, e: int) -> bool:
    """Exact: does f vanish at x = exp(2 pi i e/q)?

    With h = gcd(e, q), x is a primitive d-th root (d = q/h), namely
    z**e' for z = exp(2 pi i/d), e' = e/h.  Denominators are cleared by
    their product and the result is reduced mod Phi_d.
    """
    q = spec.q
    e %= q
    h = math.gcd(e, q)
    d = q // h
    ep = e // h
    if d == 1 or any(ep * uk % d == 0 for uk in spec.u):
        raise ZeroDivisionError(f"1 - x^u vanishes at x = w^{e} for some u in {spec.u}")
    one = CycloElt.one(d)
    dens = [one - root_power(d, ep * uk) for uk in spec.u]
    n = len(dens)
    # prefix/suffix products of the denominators
    pre = [one]
    for den in dens:
        pre.append(pre[-1] * den)
    suf = [one]
    for den in reversed(dens):
        suf.append(suf[-1] * den)
    suf.reverse()
    total = CycloElt.zero(d)
    for k in range(n):
        total = total + root_power(d, ep * spec.v[k]) * pre[k] * suf[k + 1]
    return total.is_zero()


def _term_table(q: int, u: int) -> np.ndarray:
    """Row v: reduced coefficients of q * w^v / (1 - w^u), u a unit mod q."""
    t = np.arange(q)
    base = np.zeros(q, dtype=np.int64)
    base[(t * u) % q] = -t
    table = _reduction_table(q)
    rows = np.stack([np.roll(base, v) for v in range(q)])
    if table.dtype == object:
        return rows.astype(object) @ table
    return rows @ table


def vanishing_offsets(q: int, us: Sequence[int]) -> list[tuple[int, ...]]:
    """All v (with v_1 = 0) making sum_k w^v_k / (1 - w^u_k) vanish.

    Multiplying f by w^(-v_1) does not affect vanishing, so fixing v_1 = 0
    loses nothing.  Exact meet in the middle on reduced coordinates.
    """
    n = len(us)
    if n == 0:
        return []
    tabs = [_term_table(q, u) for u in us]
    if n == 1:
        return [(0,)] if not np.any(tabs[0][0]) else []
    split = (n + 1) // 2
    head_ranges = [range(1)] + [range(q)] * (split - 1)
    tail_ranges = [range(q)] * (n - split)

    def sums(tables, ranges):
        acc = np.zeros((1, tables[0].shape[1]), dtype=tables[0].dtype)
        keys = [()]
        for tb, rg in zip(tables, ranges):
            acc = (acc[:, None, :] + tb[list(rg)][None, :, :]).reshape(-1, acc.shape[1])
            keys = [k + (v,) for k in keys for v in rg]
        return acc, keys

    head, hkeys = sums(tabs[:split], head_ranges)
    tail, tkeys = sums(tabs[split:], tail_ranges)
    if head.dtype == object or tail.dtype == object:
        as_key = lambda row: repr(tuple(int(c) for c in row)).encode()  # noqa: E731
    else:
        as_key = lambda row: row.tobytes()  # noqa: E731
    index: dict[bytes, list[int]] = {}
    for i, row in enumerate(tail):
        index.setdefault(as_key(row), []).append(i)
    out = []
    for i, row in enumerate(-head):
        for ti in index.get(as_key(row), ()):
            out.append(hkeys[i] + tkeys[ti])
    return sorted(out)


def _unit_sets(q: int, n_max: int, max_sum: int | None = None):
    units = [x for x in range(1, q) if math.gcd(x, q) == 1]
    for n in range(1, n_max + 1):
        for us in combinations(units, n):
            if max_sum is None or sum(us) <= max_sum:
                yield us


def scan_rational_function(q: int, n_max: int = 4) -> dict:
    """Specs with sum(u) < q that vanish at w (conjecturally none)."""
    violations, scanned = [], 0
    for us in _unit_sets(q, n_max, max_sum=q - 1):
        scanned += 1
        for vs in vanishing_offsets(q, us):
            violations.append(RationalFunctionSpec(q, us, vs))
    return {"q": q, "n_max": n_max, "u_sets_scanned": scanned,
            "violations": [s.to_dict() for s in violations]}


def has_zero_sum_subset(q: int, us: Sequence[int]) -> bool:
    """Some nonempty subset (the whole set included) sums to 0 mod q."""
    reach: set[int] = set()
    for u in us:
        reach |= {(r + u) % q for r in reach} | {u % q}
    return 0 in reach


def strengthened_scan(q: int, n_max: int = 4) -> dict:
    """Zero-sum-free unit sets whose f vanishes at w but not at all roots != 1."""
    violations, vanishing, scanned = [], 0, 0
    others = _divisors(q)[1:-1]       # w^h for proper divisors h > 1 of q
    for us in _unit_sets(q, n_max):
        if has_zero_sum_subset(q, us):
            continue
        scanned += 1
        for vs in vanishing_offsets(q, us):
            vanishing += 1
            spec = RationalFunctionSpec(q, us, vs)
            if not all(vanishes_at_root(spec, h) for h in others):
                violations.append(spec)
    return {"q": q, "n_max": n_max, "u_sets_scanned": scanned,
            "vanishing_specs": vanishing, "violations": [s.to_dict() for s in violations]}


def rational_function_from_cover(inst: CoveringInstance) -> RationalFunctionSpec:
    """u = pbar_k and v = -r_k over the members with gcd(p_k, q) = 1."""
    pairs = sorted(
        (pbar, -r % inst.q)
        for (p, r), g, pbar in zip(inst.members, inst.gs, inst.pbars)
        if g == 1
    )
    return RationalFunctionSpec(inst.q, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


def martin_inequalities(q: int, ps: Sequence[int]) -> list[float]:
    """Per k: sum_i 1/|sin(pi p_k pbar_i/q)| - 2/sin(pi/q) (>= 0 means it holds)."""
    pbars = [generalized_inverse(p, q).pbar for p in ps]
    lhs = 2 / math.sin(math.pi / q)
    return [
        sum(1 / abs(math.sin(math.pi * (pk * pb % q) / q)) for pb in pbars) - lhs
        for pk in ps
    ]


def strong_martin_scan(n: int, q_min: int, q_max: int) -> dict:
    """Unit tuples of size n, sum <= q, q > (7/4)^n, satisfying every inequality."""
    hits, violations = [], []
    floor_q = (7 / 4) ** n
    scanned = 0
    for q in range(max(q_min, 2), q_max + 1):
        if not q > floor_q:
            continue
        units = [x for x in range(1, q) if math.gcd(x, q) == 1]
        expected = {pow(2, i, q) for i in range(n)}
        for ps in combinations(units, n):
            if sum(ps) > q:
                continue
            scanned += 1
            if all(s >= -SINE_MARGIN for s in martin_inequalities(q, ps)):
                hits.append((q, ps))
                if not (q == 2**n - 1 and set(ps) == expected):
                    violations.append((q, ps))
    # the inequalities only see each p_k up to sign, so flag violations whose
    # signed classes match the predicted set
    def signed(q, ps):
        return {min(x % q, -x % q) for x in ps}

    return {"n": n, "q_range": [q_min, q_max], "tuples_scanned": scanned,
            "hits": [[q, list(p)] for q, p in hits],
            "violations": [[q, list(p)] for q, p in violations],
            "violations_up_to_sign": [
                [q, list(p)] for q, p in violations
                if not (q == 2**n - 1 and signed(q, p) == signed(q, [2**i for i in range(n)]))
            ]}
