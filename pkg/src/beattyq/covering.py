"""Perfect c-fold coverings of Z by rational Beatty sets with a common q.

Two independent routes decide whether an instance is a perfect cover:

* the *profile* route adds up indicator vectors and checks for a constant;
* the *spectral* route uses the closed-form transforms: sum(p_k) = c*q and,
  for every 1 <= j < q,
      sum_{k : g_k | j} g_k * w**(-j r_k) / (1 - w**(j pbar_k)) == 0.

The spectral sum is evaluated exactly.  Each 1/(1 - z) with z a primitive
d-th root of unity equals -(1/d) * sum_{t<d} t z**t, so d times the sum is an
integer combination of roots of unity.  The sum at j depends on j only
through h = gcd(j, q) up to a Galois automorphism of Q(w**h), so one
representative j = h per proper divisor h of q decides all of them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .beatty import BeattyParams, indicator_vector
from .cyclotomic import CycloElt, _divisors, root_power
from .modarith import generalized_inverse, inverse_mod, order_of_two, popcount

MAX_REPORTED_FAILURES = 16


@dataclass(frozen=True)
class CoveringInstance:
    q: int
    members: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be >= 2")
        norm = []
        for p, r in self.members:
            if p < 1:
                raise ValueError(f"member p must be >= 1, got {p}")
            norm.append((int(p), int(r) % self.q))
        if not norm:
            raise ValueError("an instance needs at least one member")
        object.__setattr__(self, "members", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.members)

    @cached_property
    def params(self) -> tuple[BeattyParams, ...]:
        return tuple(BeattyParams(p, self.q, r) for p, r in self.members)

    @cached_property
    def gs(self) -> tuple[int, ...]:
        return tuple(math.gcd(p, self.q) for p, _ in self.members)

    @cached_property
    def pbars(self) -> tuple[int, ...]:
        return tuple(generalized_inverse(p, self.q).pbar for p, _ in self.members)

    def to_json(self) -> str:
        return json.dumps({"q": self.q, "members": [list(mr) for mr in self.members]})

    @classmethod
    def from_dict(cls, d: dict) -> "CoveringInstance":
        return cls(int(d["q"]), tuple((int(p), int(r)) for p, r in d["members"]))

    @classmethod
    def from_json(cls, s: str) -> "CoveringInstance":
        return cls.from_dict(json.loads(s))


@dataclass
class CoverVerdict:
    is_perfect: bool
    c: int | None
    profile: list[int] = field(default_factory=list)
    criterion_failures: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "is_perfect": self.is_perfect,
            "c": self.c,
            "profile": self.profile,
            "criterion_failures": self.criterion_failures,
        }


def coverage_profile(inst: CoveringInstance) -> list[int]:
    total = np.zeros(inst.q, dtype=np.int64)
    for b in inst.params:
        total += indicator_vector(b)
    return total.tolist()


def is_perfect_cover(inst: CoveringInstance) -> CoverVerdict:
    """Profile route: the sum of indicators is constant."""
    prof = coverage_profile(inst)
    perfect = len(set(prof)) == 1
    return CoverVerdict(perfect, prof[0] if perfect else None, prof, [])


def criterion_sum(inst: CoveringInstance, j: int) -> CycloElt:
    """d * sum_k [g_k|j] g_k w^(-j r_k) / (1 - w^(j pbar_k)) in Z[w^h], h = gcd(j, q).

    Returned as an element of the d-th cyclotomic ring, d = q/h.  It is zero
    iff the j-th spectral condition holds.
    """
    q = inst.q
    j %= q
    if j == 0:
        raise ValueError("criterion sums are for 1 <= j < q")
    h = math.gcd(j, q)
    d = q // h
    jj = j // h                       # w**j = z**jj with z = w**h primitive d-th root
    positions, weights = [], []
    bound = 0
    for (p, r), g, pbar in zip(inst.members, inst.gs, inst.pbars):
        if j % g:
            continue
        a = jj * pbar % d             # denominator 1 - z**a
        dk = d // math.gcd(a, d)      # order of z**a; > 1 since j != 0 (mod q)
        t = np.arange(dk, dtype=np.int64)
        positions.append((t * a - jj * r) % d)
        weights.append(-(g * (d // dk)) * t)
        bound += g * d * dk
    if not positions:
        return CycloElt.zero(d)
    pos = np.concatenate(positions)
    w = np.concatenate(weights)
    if bound < 2**52:
        # float64 accumulation is exact below 2**53
        vec = np.rint(np.bincount(pos, weights=w, minlength=d)).astype(np.int64)
    else:
        vec = np.zeros(d, dtype=object)
        np.add.at(vec, pos, w.astype(object))
    return CycloElt.from_counts(d, vec)


def criterion_cross_product(inst: CoveringInstance, j: int) -> CycloElt:
    """The j-th condition with denominators cleared by their product.

    sum_{k: g_k|j} g_k w^(-j r_k) prod_{i != k, g_i|j} (1 - w^(j pbar_i)),
    an element of Z[w].  Slow for many members; kept as a literal reference.
    """
    q = inst.q
    j %= q
    one = CycloElt.one(q)
    active = [k for k, g in enumerate(inst.gs) if j % g == 0]
    dens = [one - root_power(q, j * inst.pbars[k]) for k in active]
    total = CycloElt.zero(q)
    for idx, k in enumerate(active):
        term = root_power(q, -j * inst.members[k][1]).scale(inst.gs[k])
        for i2, den in enumerate(dens):
            if i2 != idx:
                term = term * den
        total = total + term
    return total


def covering_criterion(inst: CoveringInstance, all_j: bool = False) -> CoverVerdict:
    """Spectral route.  ``all_j`` evaluates every j instead of one per gcd class."""
    q = inst.q
    s = sum(p for p, _ in inst.members)
    if all_j:
        bad_classes = None
        failures = [j for j in range(1, q) if not criterion_sum(inst, j).is_zero()]
    else:
        bad_classes = {h for h in _divisors(q)[:-1] if not criterion_sum(inst, h).is_zero()}
        failures = [j for j in range(1, q) if math.gcd(j, q) in bad_classes]
    perfect = s % q == 0 and not failures
    return CoverVerdict(
        perfect,
        s // q if perfect else None,
        coverage_profile(inst) if perfect else [],
        failures[:MAX_REPORTED_FAILURES],
    )


def fraenkel_two_set(q: int, p1: int, r1: int, p2: int, r2: int) -> bool:
    """Do B(p1, q, r1) and B(p2, q, r2) partition Z?"""
    if not (1 <= p1 < q and 1 <= p2 < q):
        raise ValueError("need 1 <= p_k < q")
    return p1 + p2 == q and (p1 * r1 + p2 * r2 + math.gcd(p1, q)) % q == 0


def construct_cfc(q: int, delta: int, gamma: int) -> CoveringInstance:
    """Members p_k = delta*2^(m-k), r_k = gamma - deltabar*2^(k-1) (mod q), k = 1..m."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    if math.gcd(delta, q) != 1:
        raise ValueError(f"delta={delta} is not coprime to q={q}")
    m = order_of_two(q)
    dbar = inverse_mod(delta, q)
    members = []
    for k in range(1, m + 1):
        p = delta * pow(2, m - k, q) % q
        r = (gamma - dbar * pow(2, k - 1, q)) % q
        members.append((p, r))
    return CoveringInstance(q, tuple(members))


def predicted_multiplicity(q: int, delta: int) -> int:
    """Number of ones in the binary expansion of delta*(2^m - 1)/q."""
    m = order_of_two(q)
    delta %= q
    if delta == 0 or math.gcd(delta, q) != 1:
        raise ValueError(f"delta={delta} is not a unit mod {q}")
    return popcount(delta * (2**m - 1) // q)


def match_cfc(inst: CoveringInstance) -> tuple[int, int] | None:
    """(delta, gamma) exhibiting inst as a CFC construction up to ordering, or None."""
    q = inst.q
    if q < 3 or q % 2 == 0 or inst.m != order_of_two(q):
        return None
    m = inst.m
    by_p = {}
    for p, r in inst.members:
        if p % q in by_p:
            return None
        by_p[p % q] = r
    for delta in range(1, q):
        if math.gcd(delta, q) != 1:
            continue
        ps = [delta * pow(2, m - k, q) % q for k in range(1, m + 1)]
        if set(ps) != set(by_p):
            continue
        dbar = inverse_mod(delta, q)
        gammas = {(by_p[p] + dbar * pow(2, k - 1, q)) % q for k, p in enumerate(ps, 1)}
        if len(gammas) == 1:
            return delta, gammas.pop()
    return None


def two_cover_moduli(limit: int) -> list[int]:
    """q <= limit of the form 2^m - 1 or (2^(2uv) - 1)/(2^u + 1), with ord_2(q) >= 3."""
    if limit < 3:
        raise ValueError("limit must be >= 3")
    found = set()
    m = 3
    while 2**m - 1 <= limit:
        found.add(2**m - 1)
        m += 1
    u = 1
    while (2 ** (2 * u) - 1) // (2**u + 1) <= limit:
        v = 1
        while True:
            n = (2 ** (2 * u * v) - 1) // (2**u + 1)
            if n > limit:
                break
            found.add(n)
            v += 1
        u += 1
    # at least three sets are needed, i.e. m = ord_2(q) >= 3
    return sorted(n for n in found if n >= 3 and n % 2 and order_of_two(n) >= 3)


def two_cover_witness(q: int) -> int | None:
    """Smallest unit delta whose doubling construction has multiplicity 2, or None.

    The formula family in two_cover_moduli is a sufficient-condition shape;
    some Mersenne members (15, 255, ...) have no such delta.
    """
    m = order_of_two(q)
    base = (2**m - 1) // q
    for delta in range(1, q):
        if math.gcd(delta, q) == 1 and popcount(delta * base) == 2:
            return delta
    return None


def is_mersenne(n: int) -> bool:
    return n > 0 and (n + 1) & n == 0


def has_zero_subset_sum(q: int, ps: Sequence[int]) -> bool:
    """Some nonempty proper subset of ps sums to 0 (mod q)."""
    m = len(ps)
    for size in range(1, m):
        for sub in combinations(ps, size):
            if sum(sub) % q == 0:
                return True
    return False


def few_gi_hypotheses(inst: CoveringInstance) -> bool:
    """Hypotheses of the 'few g_i' property: distinct p in (0, q), gcd of all g = 1,
    no pair p_i + p_j = q, and a perfect cover."""
    ps = [p for p, _ in inst.members]
    q = inst.q
    if len(set(ps)) != len(ps) or not all(0 < p < q for p in ps):
        return False
    if math.gcd(*inst.gs) != 1:
        return False
    if any(a + b == q for a, b in combinations(ps, 2)):
        return False
    return is_perfect_cover(inst).is_perfect


def few_gi_property(inst: CoveringInstance, j: int) -> bool:
    """If some g_k divides j (j != 0 mod q), then at least three g_k do."""
    if not few_gi_hypotheses(inst):
        raise ValueError("instance does not satisfy the hypotheses of the property")
    if j % inst.q == 0:
        raise ValueError("j must be nonzero mod q")
    hits = sum(1 for g in inst.gs if j % g == 0)
    return hits == 0 or hits >= 3


def rotate_instance(inst: CoveringInstance, k: int = 0) -> CoveringInstance:
    """Multiply densities by pbar_k and offsets by p_k (needs gcd(p_k, q) = 1)."""
    q = inst.q
    pk = inst.members[k][0]
    if math.gcd(pk, q) != 1:
        raise ValueError("rotation needs a member with p coprime to q")
    pkbar = inverse_mod(pk, q)
    members = []
    for p, r in inst.members:
        np_ = pkbar * p % q
        members.append((np_ if np_ else q, pk * r % q))
    return CoveringInstance(q, tuple(members))


def iter_cfc_instances(q_values: Iterable[int], gamma: int = 0):
    for q in q_values:
        for delta in range(1, q):
            if math.gcd(delta, q) == 1:
                yield delta, construct_cfc(q, delta, gamma)
