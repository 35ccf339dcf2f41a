"""Explicit covers and families; every generator re-verifies its output."""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from .core import (
    BicliqueError,
    Cover,
    CrossFamily,
    HostGraph,
    KSet,
    SignaturePair,
    achieved_type,
    is_regular,
    verify_cross_family,
    verify_type,
)


def canonical_subsets(d: int, sizes) -> list[frozenset[int]]:
    """Subsets of ``{1..d}`` with the given sizes, by (cardinality, lexicographic)."""
    return [frozenset(c) for s in sorted(sizes) for c in combinations(range(1, d + 1), s)]


def _split_cover(vertices: list[frozenset[int]], d: int) -> Cover:
    sides = []
    for j in range(1, d + 1):
        sides.append(({v for v, s in enumerate(vertices) if j in s}, {v for v, s in enumerate(vertices) if j not in s}))
    return Cover.from_sides(HostGraph.complete(len(vertices)), sides)


def _check(ok: bool, what: str):
    if not ok:
        raise AssertionError(f"construction self-check failed: {what}")


def star_cover(n: int) -> Cover:
    if n < 2:
        raise BicliqueError(f"star_cover needs n >= 2, got {n}")
    cover = Cover.from_sides(HostGraph.complete(n), [({t - 1}, range(t, n)) for t in range(1, n)])
    _check(verify_type(cover, KSet((1,))).ok, f"star_cover({n}) is not of type {{1}}")
    return cover


def hypercube_cover(d: int) -> Cover:
    if d < 1:
        raise BicliqueError(f"hypercube_cover needs d >= 1, got {d}")
    cover = _split_cover(canonical_subsets(d, range(d + 1)), d)
    _check(verify_type(cover, KSet.order(d)).ok and is_regular(cover), f"hypercube_cover({d})")
    return cover


def even_subsets_cover(d: int, i: int) -> Cover:
    """All subsets of ``[d]`` of even size up to ``2i``, split by membership."""
    if i < 1 or d < 2 or 2 * i > d:
        raise BicliqueError(f"even_subsets_cover needs i >= 1 and 2i <= d, got d={d}, i={i}")
    cover = _split_cover(canonical_subsets(d, range(0, 2 * i + 1, 2)), d)
    types = achieved_type(cover).types
    _check(all(t > 0 and t % 2 == 0 for t in types), f"even_subsets_cover({d},{i}) realised odd or zero counts {sorted(types)}")
    return cover


def product_block_sizes(d: int, k: int) -> list[int]:
    return [(d + i) // k for i in range(k)]


def product_cover(d: int, k: int) -> Cover:
    """Balanced-grid cover of order k with prod(floor((d+i)/k) + 1) vertices.

    A vertex is a tuple ``c`` with ``0 <= c_t <= d_t``. Inside block ``t`` the
    biclique for local index ``s`` is ``(c_t == s-1, c_t >= s)``, so an edge is
    covered once for every coordinate where its endpoints differ.
    """
    if not (1 <= k <= d):
        raise BicliqueError(f"product_cover needs 1 <= k <= d, got d={d}, k={k}")
    sizes = product_block_sizes(d, k)
    tuples = list(product(*(range(s + 1) for s in sizes)))
    sides = []
    for t, size in enumerate(sizes):
        for s in range(1, size + 1):
            sides.append(
                (
                    {v for v, c in enumerate(tuples) if c[t] == s - 1},
                    {v for v, c in enumerate(tuples) if c[t] >= s},
                )
            )
    cover = Cover.from_sides(HostGraph.complete(len(tuples)), sides)
    _check(cover.d == d and verify_type(cover, KSet.order(k)).ok, f"product_cover({d},{k})")
    return cover


def product_tuples(d: int, k: int) -> list[tuple[int, ...]]:
    """Vertex labels of ``product_cover(d, k)`` in vertex-id order."""
    return list(product(*(range(s + 1) for s in product_block_sizes(d, k))))


def snevily_sharp_family(d: int, k: int) -> CrossFamily:
    """All k-subsets paired with their complements: m = C(d, k)."""
    if not (1 <= k <= d):
        raise BicliqueError(f"snevily_sharp_family needs 1 <= k <= d, got d={d}, k={k}")
    full = frozenset(range(1, d + 1))
    family = CrossFamily(d, tuple(SignaturePair(s, full - s) for s in canonical_subsets(d, [k])))
    _check(family.m == comb(d, k) and verify_cross_family(family, KSet.order(k)).ok, f"snevily_sharp_family({d},{k})")
    return family
