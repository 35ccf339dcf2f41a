"""Exact n(K,d), n_r(K,d) and maximum cross K-intersection families.

Each problem is a maximum clique in a compatibility graph on signature
pairs: two vertices of a complete-graph cover are compatible when the edge
between them is covered a number of times lying in K; two members of a cross
family are compatible when both ordered intersections lie in K.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Optional

import numpy as np

from .core import (
    BicliqueError,
    Cover,
    CrossFamily,
    KSet,
    SignaturePair,
    cover_of_signatures,
    coverage_count,
    family_to_cover,
)
from .kernels.clique import max_clique

MODES = ("complete", "regular", "cross")
MAX_UNIVERSE = 10**5


@dataclass(frozen=True)
class SearchProblem:
    d: int
    k_set: KSet
    mode: str = "complete"
    budget: Optional[int] = None

    def __post_init__(self):
        if self.d < 1:
            raise BicliqueError(f"d must be >= 1, got {self.d}")
        if self.mode not in MODES:
            raise BicliqueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.budget is not None and self.budget < 0:
            raise BicliqueError(f"budget must be >= 0, got {self.budget}")


@dataclass
class SearchResult:
    optimum: int
    witness: list[SignaturePair]
    nodes_explored: int
    exhausted: bool
    problem: Optional[SearchProblem] = None

    def to_cover(self) -> Cover:
        """Witness as a cover (complete host for n(K,d) modes, crown for cross)."""
        if self.problem is None:
            raise BicliqueError("result carries no problem")
        if self.problem.mode == "cross":
            return family_to_cover(self.to_family())
        return cover_of_signatures(self.witness, self.problem.d)

    def to_family(self) -> CrossFamily:
        if self.problem is None:
            raise BicliqueError("result carries no problem")
        return CrossFamily(self.problem.d, tuple(self.witness))


def _pair_key(p: SignaturePair):
    return (len(p.a | p.b), len(p.b), sorted(p.a), sorted(p.b))


def signature_universe(d: int, mode: str) -> list[SignaturePair]:
    """Candidate signatures in canonical order (support size, |b|, then lexicographic)."""
    if d < 1:
        raise BicliqueError(f"d must be >= 1, got {d}")
    if mode not in MODES:
        raise BicliqueError(f"mode must be one of {MODES}, got {mode!r}")
    full = frozenset(range(1, d + 1))
    if mode == "regular":
        pairs = [SignaturePair(frozenset(a), full - frozenset(a)) for s in range(d + 1) for a in combinations(range(1, d + 1), s)]
    else:
        pairs = []
        for labels in product((0, 1, 2), repeat=d):
            a = frozenset(j + 1 for j, t in enumerate(labels) if t == 1)
            b = frozenset(j + 1 for j, t in enumerate(labels) if t == 2)
            pairs.append(SignaturePair(a, b))
    return sorted(pairs, key=_pair_key)


def compatible(p: SignaturePair, q: SignaturePair, mode: str, k_set: KSet) -> bool:
    if mode == "cross":
        pa, pb = p.masks
        qa, qb = q.masks
        return (pa & qb).bit_count() in k_set and (qa & pb).bit_count() in k_set
    return coverage_count(p, q) in k_set


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def _compat_row(i: int, a: np.ndarray, b: np.ndarray, mode: str, k_arr: np.ndarray) -> np.ndarray:
    if mode == "cross":
        row = np.isin(_popcount(a[i] & b), k_arr) & np.isin(_popcount(a & b[i]), k_arr)
    else:
        row = np.isin(_popcount(a[i] & b) + _popcount(a & b[i]), k_arr)
    row[i] = False
    return row


def _pack(row: np.ndarray, n_words: int) -> np.ndarray:
    bits = np.packbits(row, bitorder="little")
    buf = np.zeros(n_words * 8, dtype=np.uint8)
    buf[: bits.size] = bits
    return buf.view("<u8").astype(np.uint64)


def compatibility_graph(universe: list[SignaturePair], mode: str, k_set: KSet):
    """Vertex order by descending degree (ties: canonical index) and packed adjacency.

    Returns ``(order, adj)`` where ``adj[r]`` is the neighbour bitset of
    universe element ``order[r]`` in the relabelled numbering.
    """
    n = len(universe)
    masks = [p.masks for p in universe]
    a = np.array([m[0] for m in masks], dtype=np.uint64)
    b = np.array([m[1] for m in masks], dtype=np.uint64)
    k_arr = np.array(k_set.elements, dtype=np.int64)
    degree = np.array([int(_compat_row(i, a, b, mode, k_arr).sum()) for i in range(n)], dtype=np.int64)
    order = sorted(range(n), key=lambda i: (-degree[i], i))
    a, b = a[order], b[order]
    n_words = max(1, (n + 63) // 64)
    adj = np.zeros((n, n_words), dtype=np.uint64)
    for r in range(n):
        adj[r] = _pack(_compat_row(r, a, b, mode, k_arr), n_words)
    return order, adj


def solve(problem: SearchProblem, backend: Optional[str] = None) -> SearchResult:
    """Maximum clique of the compatibility graph; exact unless the budget runs out."""
    size = 2**problem.d if problem.mode == "regular" else 3**problem.d
    if problem.budget is None and size > MAX_UNIVERSE:
        raise BicliqueError(
            f"universe has {size} signatures (> {MAX_UNIVERSE}); set a node budget to run a bounded search"
        )
    universe = signature_universe(problem.d, problem.mode)
    order, adj = compatibility_graph(universe, problem.mode, problem.k_set)
    clique, nodes, exhausted = max_clique(adj, len(universe), budget=problem.budget, backend=backend)
    chosen = sorted(order[v] for v in clique)
    return SearchResult(len(chosen), [universe[i] for i in chosen], nodes, exhausted, problem)


@dataclass
class SnevilyRow:
    d: int
    k_set: KSet
    max_m: int
    bound: int
    exhausted: bool

    @property
    def k(self) -> int:
        return self.k_set.k

    @property
    def holds(self) -> bool:
        return self.max_m <= self.bound

    @property
    def order_reading(self) -> bool:
        """K = {1..k}, the case where the sharp family attains the bound."""
        return self.k_set == KSet.order(self.k_set.k)

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "k_set": list(self.k_set.elements),
            "max_m": self.max_m,
            "bound": self.bound,
            "holds": self.holds,
            "equality": self.max_m == self.bound,
            "exhausted": self.exhausted,
        }


def snevily_check(d_max: int, k_max: int, backend: Optional[str] = None) -> list[SnevilyRow]:
    """Maximum cross family size for every K ⊆ {1..d}, |K| <= k_max, d <= d_max."""
    if d_max < 1 or k_max < 1:
        raise BicliqueError(f"need d_max >= 1 and k_max >= 1, got {d_max}, {k_max}")
    if 3**d_max > MAX_UNIVERSE:
        raise BicliqueError(f"d_max={d_max} gives a universe of {3 ** d_max} signatures (> {MAX_UNIVERSE})")
    rows = []
    for d in range(1, d_max + 1):
        for k in range(1, min(k_max, d) + 1):
            for ks in combinations(range(1, d + 1), k):
                k_set = KSet(ks)
                res = solve(SearchProblem(d, k_set, "cross"), backend=backend)
                rows.append(SnevilyRow(d, k_set, res.optimum, comb(d, k), res.exhausted))
    return rows
