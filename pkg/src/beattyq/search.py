"""Finite search classifying perfect covers by at most five Beatty sets.

Stage 1 lists density tuples 1 = p_1 < ... < p_m < q <= q_max with
sum(p) = 0 (mod q), no pair p_i + p_j = q, and

    1 <= sum_{k>=2, gcd(p_k, q) = 1} sin(pi/q) / sin(pi*pbar_k/q).

Stage 2 keeps tuples whose every unit rotation (multiply by pbar_k, reduce,
sort) is again a stage-1 tuple.  Stage 3 searches all offsets r_2..r_m
(r_1 = 0) for perfect covers.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .beatty import BeattyParams, indicator_vector
from .covering import CoveringInstance, covering_criterion, is_perfect_cover, match_cfc
from .modarith import generalized_inverse

INEQUALITY_MARGIN = 1e-9


def q_bound(n: int, g: int = 1) -> int:
    """Upper bound on q when the smallest gcd g occurs n times."""
    if n < 3:
        raise ValueError("bound needs n >= 3")
    table = {3: 7, 4: 17, 5: 33, 6: 730}
    if n in table:
        return table[n] * g
    return math.ceil(((n / (math.e - 1) + 1) ** n + 1) * g)


@dataclass(frozen=True, order=True)
class CandidateTuple:
    q: int
    p: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.p)

    def to_list(self):
        return [self.q, list(self.p)]


def inequality_value(q: int, p: tuple[int, ...]) -> float:
    """sum over k >= 2 with gcd(p_k, q) = 1 of sin(pi/q)/sin(pi*pbar_k/q)."""
    s = 0.0
    for x in p[1:]:
        if math.gcd(x, q) != 1:
            continue                  # gated out of the j = 1 condition
        pbar = generalized_inverse(x, q).pbar
        s += math.sin(math.pi / q) / math.sin(math.pi * pbar / q)
    return s


def _stage1_for_q(args) -> tuple[list[CandidateTuple], list[CandidateTuple]]:
    q, m_max = args
    out, ties = [], []
    for m in range(3, m_max + 1):
        for rest in combinations(range(2, q), m - 1):
            p = (1,) + rest
            if sum(p) % q:
                continue
            s = set(p)
            if any(q - x in s and q - x != x for x in p):
                continue
            val = inequality_value(q, p)
            if abs(val - 1) <= INEQUALITY_MARGIN:
                ties.append(CandidateTuple(q, p))
            if val >= 1 - INEQUALITY_MARGIN:
                out.append(CandidateTuple(q, p))
    return out, ties


def enumerate_candidates(m_max: int = 5, q_max: int = 33, threads: int = 1, with_ties: bool = False):
    """Stage 1.  Borderline tuples (within the margin of 1) are accepted."""
    jobs = [(q, m_max) for q in range(3, q_max + 1)]
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            parts = list(ex.map(_stage1_for_q, jobs))
    else:
        parts = [_stage1_for_q(job) for job in jobs]
    cands = sorted(c for part, _ in parts for c in part)
    ties = sorted(t for _, part in parts for t in part)
    return (cands, ties) if with_ties else cands


def rotations(t: CandidateTuple) -> list[CandidateTuple]:
    out = []
    for x in t.p:
        if math.gcd(x, t.q) == 1:
            xbar = generalized_inverse(x, t.q).pbar
            out.append(CandidateTuple(t.q, tuple(sorted(xbar * y % t.q for y in t.p))))
    return out


def refine_by_rotation(cands: list[CandidateTuple]) -> list[CandidateTuple]:
    """Stage 2: keep tuples closed under unit rotations within the list."""
    keys = set(cands)
    return [t for t in cands if all(r in keys for r in rotations(t))]


def _shift_table(q: int, p: int) -> np.ndarray:
    """Row r is the indicator vector of B(p, q, r)."""
    base = indicator_vector(BeattyParams(p, q, 0))
    return np.stack([np.roll(base, r) for r in range(q)])


def exhaustive_r_search(t: CandidateTuple) -> list[tuple[int, ...]]:
    """All offset tuples (0, r_2, ..., r_m) making the tuple a perfect cover.

    Meet in the middle: the members split into a head (containing p_1 with
    r_1 = 0) and a tail; a cover needs head + tail == c everywhere, with
    c = sum(p)/q forced.
    """
    q, ps = t.q, t.p
    m = len(ps)
    if m < 3:
        raise ValueError("offset search needs at least three members")
    if sum(ps) % q:
        return []
    c = sum(ps) // q
    tables = [_shift_table(q, p) for p in ps]
    split = (m + 1) // 2
    head_tables, tail_tables = tables[:split], tables[split:]

    tail_index: dict[bytes, list[tuple[int, ...]]] = {}
    for rs in product(range(q), repeat=len(tail_tables)):
        v = sum(tb[r] for tb, r in zip(tail_tables, rs))
        tail_index.setdefault(v.astype(np.int64).tobytes(), []).append(rs)

    target = np.full(q, c, dtype=np.int64)
    found = []
    for rs in product(range(q), repeat=split - 1):
        v = head_tables[0][0] + sum(tb[r] for tb, r in zip(head_tables[1:], rs))
        need = (target - v).astype(np.int64).tobytes()
        for tail in tail_index.get(need, ()):
            found.append((0,) + rs + tail)
    return sorted(found)


@dataclass
class SearchReport:
    m_max: int
    q_max: int
    stage1_count: int
    stage1_by_m: dict[int, int]
    boundary_ties: list[CandidateTuple]
    stage2_survivors: list[CandidateTuple]
    eliminated: list[CandidateTuple]
    perfect_covers: list[CoveringInstance]
    cfc_matches: list[tuple[int, int] | None] = field(default_factory=list)

    def survivors_by_m(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for t in self.stage2_survivors:
            out[t.m] = out.get(t.m, 0) + 1
        return out

    def to_dict(self) -> dict:
        return {
            "m_max": self.m_max,
            "q_max": self.q_max,
            "stage1_count": self.stage1_count,
            "stage1_by_m": {str(k): v for k, v in sorted(self.stage1_by_m.items())},
            "boundary_ties": [t.to_list() for t in self.boundary_ties],
            "stage2_survivors": [t.to_list() for t in self.stage2_survivors],
            "stage2_by_m": {str(k): v for k, v in sorted(self.survivors_by_m().items())},
            "eliminated": [t.to_list() for t in self.eliminated],
            "perfect_covers": [json.loads(i.to_json()) for i in self.perfect_covers],
            "cfc_matches": [list(x) if x else None for x in self.cfc_matches],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def run_full_search(m_max: int = 5, q_max: int = 33, threads: int = 1) -> SearchReport:
    cands, ties = enumerate_candidates(m_max, q_max, threads, with_ties=True)
    by_m: dict[int, int] = {}
    for t in cands:
        by_m[t.m] = by_m.get(t.m, 0) + 1
    survivors = refine_by_rotation(cands)
    covers, eliminated = [], []
    for t in survivors:
        rs_list = exhaustive_r_search(t)
        if not rs_list:
            eliminated.append(t)
        for rs in rs_list:
            inst = CoveringInstance(t.q, tuple(zip(t.p, rs)))
            if not (is_perfect_cover(inst).is_perfect and covering_criterion(inst).is_perfect):
                raise AssertionError(f"offset search returned a non-cover: {inst}")
            covers.append(inst)
    return SearchReport(
        m_max, q_max, len(cands), by_m, ties, survivors, eliminated, covers,
        [match_cfc(i) for i in covers],
    )
