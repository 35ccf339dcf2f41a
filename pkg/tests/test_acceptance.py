"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line (shown in the
terminal summary by ``conftest.py``).  Run standalone with
``python tests/test_acceptance.py`` for the same lines without pytest.
Criteria are stated literally; none is relaxed to make it pass.
"""

from __future__ import annotations

import random
import time
from itertools import combinations
from math import prod

import numpy as np

from bicliquekit import bounds
from bicliquekit.constructions import (
    even_subsets_cover,
    hypercube_cover,
    product_cover,
    snevily_sharp_family,
    star_cover,
)
from bicliquekit.core import (
    Cover,
    CrossFamily,
    HostGraph,
    KSet,
    SignaturePair,
    achieved_type,
    cover_to_family,
    family_to_cover,
    verify_cross_family,
    verify_type,
)
from bicliquekit.polycert import (
    P_factored,
    Q_factored,
    R_factored,
    certify_koli,
    certify_lemma_b,
    certify_regular,
    enumerate_script_A,
    enumerate_script_A_k,
    enumerate_script_B,
    enumerate_script_B_block,
    evaluate_table,
    monomial_basis,
    poly_P,
    poly_Q,
    poly_R,
)
from bicliquekit.search import SearchProblem, snevily_check, solve

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str):
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def nonempty_subsets(top: int):
    return [KSet(c) for r in range(1, top + 1) for c in combinations(range(1, top + 1), r)]


# -- 1 -------------------------------------------------------------------------------


def test_criterion_1_endpoints():
    t0 = time.perf_counter()
    bad = []
    for d in range(1, 5):
        chain = [solve(SearchProblem(d, KSet.order(k))).optimum for k in range(1, d + 1)]
        if chain[0] != d + 1:
            bad.append(f"n({{1}},{d})={chain[0]}")
        if d <= 3 and chain[-1] != 2**d:
            bad.append(f"n([{d}],{d})={chain[-1]}")
        if chain != sorted(chain):
            bad.append(f"chain d={d} not monotone: {chain}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        bad.append(f"runtime {elapsed:.1f}s")
    record(1, not bad, "; ".join(bad) or f"d+1 and 2^d endpoints, monotone chains ({elapsed:.1f}s)")


# -- 2 -------------------------------------------------------------------------------


def test_criterion_2_bound_conformance():
    t0 = time.perf_counter()
    bad, cells = [], 0
    for d in range(1, 5):
        for k_set in nonempty_subsets(3):
            k = k_set.k
            if k > d:
                continue
            cells += 1
            n = solve(SearchProblem(d, k_set)).optimum
            nr = solve(SearchProblem(d, k_set, "regular")).optimum
            if not n <= bounds.koli_upper(d, k) <= bounds.alon_upper(d, k):
                bad.append(f"n({k_set},{d})={n}")
            if nr > bounds.regular_upper(d, k)[0]:
                bad.append(f"n_r({k_set},{d})={nr}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 300:
        bad.append(f"runtime {elapsed:.1f}s")
    record(2, not bad, "; ".join(bad) or f"{cells} cells, zero violations ({elapsed:.1f}s)")


# -- 3 -------------------------------------------------------------------------------


def test_criterion_3_lower_bound_witnesses():
    bad = []
    for d in range(1, 9):
        for k in range(1, d + 1):
            cover = product_cover(d, k)
            want = prod((d + i) // k + 1 for i in range(k))
            if cover.host.size != want or cover.d != d or not verify_type(cover, KSet.order(k)).ok:
                bad.append(f"product({d},{k})")
        star = star_cover(d + 1)
        if star.host.size != d + 1 or star.d != d or not verify_type(star, KSet((1,))).ok:
            bad.append(f"star d={d}")
        cube = hypercube_cover(d)
        if cube.host.size != 2**d or cube.d != d or not verify_type(cube, KSet.order(d)).ok:
            bad.append(f"hypercube d={d}")
    record(3, not bad, "; ".join(bad) or "product, star and hypercube covers exact for d <= 8")


# -- 4 -------------------------------------------------------------------------------


def test_criterion_4_even_subsets():
    bad, seen = [], []
    for (d, i), n in {(4, 1): 7, (5, 2): 16, (6, 2): 31}.items():
        cover = even_subsets_cover(d, i)
        types = sorted(achieved_type(cover).types)
        seen.append(f"({d},{i}): n={cover.host.size} type {set(types)}")
        if cover.host.size != n or types != [2, 4]:
            bad.append(seen[-1])
    record(4, not bad, "expected type {2,4}, got " + "; ".join(bad) if bad else "; ".join(seen))


# -- 5 -------------------------------------------------------------------------------


def _realised(pairs) -> set[int]:
    return {len(p.a & q.b) for i, p in enumerate(pairs) for j, q in enumerate(pairs) if i != j}


def random_family(rng: random.Random) -> tuple[CrossFamily, KSet]:
    while True:
        d, m = rng.randint(1, 5), rng.randint(2, 6)
        pairs = []
        for _ in range(m):
            side = [rng.choice("aab" "bn") for _ in range(d)]
            pairs.append(SignaturePair({j + 1 for j, s in enumerate(side) if s == "a"}, {j + 1 for j, s in enumerate(side) if s == "b"}))
        counts = _realised(pairs)
        if 0 not in counts:
            return CrossFamily(d, tuple(pairs)), KSet.of(sorted(counts))


def random_crown_cover(rng: random.Random) -> tuple[Cover, KSet]:
    while True:
        m, d = rng.randint(2, 6), rng.randint(1, 5)
        sides = []
        for _ in range(d):
            tag = [rng.choice("lrn") for _ in range(m)]
            sides.append(({v for v in range(m) if tag[v] == "l"}, {v for v in range(m) if tag[v] == "r"}))
        cover = Cover.from_sides(HostGraph.crown(m), sides)
        types = achieved_type(cover).types
        if 0 not in types:
            return cover, KSet.of(sorted(types))


def test_criterion_5_bijection():
    rng = random.Random(20261016)
    failures = 0
    for _ in range(200):
        fam, k_set = random_family(rng)
        cover = family_to_cover(fam)
        if not (verify_cross_family(fam, k_set).ok and verify_type(cover, k_set).ok and cover_to_family(cover) == fam):
            failures += 1
    for _ in range(200):
        cover, k_set = random_crown_cover(rng)
        fam = cover_to_family(cover)
        if not (verify_type(cover, k_set).ok and verify_cross_family(fam, k_set).ok and family_to_cover(fam) == cover):
            failures += 1
    record(5, failures == 0, f"{failures} failures in 200 families + 200 crown covers")


# -- 6 -------------------------------------------------------------------------------


def test_criterion_6_koli_certificates():
    t0 = time.perf_counter()
    cases = [(f"star d={d}", star_cover(d + 1), KSet((1,))) for d in range(1, 6)]
    cases += [(f"hypercube d={d}", hypercube_cover(d), KSet.order(d)) for d in range(1, 4)]
    cases += [(f"product ({d},{k})", product_cover(d, k), KSet.order(k)) for d in range(1, 5) for k in range(1, min(d, 2) + 1)]
    cases.append(("even-subsets (5,2)", even_subsets_cover(5, 2), KSet((2, 4))))
    bad = []
    for name, cover, k_set in cases:
        cert = certify_koli(cover, k_set)
        want = cover.host.size + bounds.script_a_count(cover.d, k_set.k)
        if not (cert.ok and cert.rank == want and cert.checks.get("relation_one")):
            bad.append(f"{name}: rank {cert.rank} want {want}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 300:
        bad.append(f"runtime {elapsed:.1f}s")
    record(6, not bad, "; ".join(bad) or f"{len(cases)} covers at full rank ({elapsed:.1f}s)")


# -- 7 -------------------------------------------------------------------------------


def test_criterion_7_regular_certificates():
    bad = []
    for k in range(2, 5):
        for d in range(k, 8):
            cert = certify_lemma_b(d, k)
            if cert.rank != bounds.script_b_count(d, k) or not cert.ok:
                bad.append(f"script-B ({d},{k}) rank {cert.rank}")
    for d in range(1, 4):
        cover = hypercube_cover(d)
        cert = certify_regular(cover, KSet.order(d))
        want = cover.host.size + bounds.script_a_k_count(d, d) + bounds.script_b_count(d, d)
        if cert.rank != want or not cert.ok:
            bad.append(f"regular hypercube d={d} rank {cert.rank} want {want}")
    for d in range(2, 7):
        triples = enumerate_script_B(d, d)
        full = (1 << d) - 1
        points = [(x, full ^ x) for x in range(1 << d)]
        table = evaluate_table([poly_R(i, I, J, d) for i, I, J in triples], points)
        if np.any(table != 0):
            bad.append(f"R nonzero on a regular point at d={d}")
    record(7, not bad, "; ".join(bad) or "script-B ranks, regular hypercube ranks and R vanishing all exact")


# -- 8 -------------------------------------------------------------------------------


def test_criterion_8_counting_identities():
    t0 = time.perf_counter()
    bad = []
    for d in range(1, 65):
        for k in range(1, d + 1):
            if bounds.alon_upper(d, k) - bounds.script_a_count(d, k) != bounds.koli_upper(d, k):
                bad.append(f"alon-A ({d},{k})")
            statement, proof = bounds.regular_upper(d, k)
            if statement != proof:
                bad.append(f"regular forms ({d},{k})")
            dim, _, a_k, b = bounds.counting_formulas(d, k)
            if dim - a_k - b != statement:
                bad.append(f"dim-A_k-B ({d},{k})")
    for d in range(1, 11):
        for k in range(1, d + 1):
            sizes = (
                len(monomial_basis(d, k)) == bounds.monomial_dim(d, k),
                len(enumerate_script_A(d, k)) == bounds.script_a_count(d, k),
                len(enumerate_script_A_k(d, k)) == bounds.script_a_k_count(d, k),
                len(enumerate_script_B(d, k)) == bounds.script_b_count(d, k),
                all(len(enumerate_script_B_block(d, k, i)) == bounds.script_b_block_count(d, k, i) for i in range(1, d)),
            )
            if not all(sizes):
                bad.append(f"enumeration sizes ({d},{k}): {sizes}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 10:
        bad.append(f"runtime {elapsed:.1f}s")
    record(8, not bad, "; ".join(bad) or f"all identities for k <= d <= 64, enumerations for d <= 10 ({elapsed:.1f}s)")


# -- 9 -------------------------------------------------------------------------------


def test_criterion_9_snevily():
    t0 = time.perf_counter()
    rows = snevily_check(4, 2)
    bad = []
    for r in rows:
        sharp = snevily_sharp_family(r.d, r.k_set.k)
        sharp_ok = sharp.m == r.bound and verify_cross_family(sharp, r.k_set).ok
        if r.max_m > r.bound:
            bad.append(f"d={r.d} K={r.k_set}: m={r.max_m} > {r.bound}")
        elif r.max_m != r.bound or not sharp_ok:
            bad.append(f"d={r.d} K={r.k_set}: m={r.max_m} < {r.bound}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 600:
        bad.append(f"runtime {elapsed:.1f}s")
    detail = f"{len(bad)} of {len(rows)} cells off equality: " + "; ".join(bad) if bad else f"{len(rows)} cells at equality"
    record(9, not bad, detail)


# -- 10 ------------------------------------------------------------------------------


def _polys_with_oracles(d: int, rng: random.Random, limit: int | None):
    out = []
    universe = [(a, b) for a in _subsets(d) for b in _subsets(d) if not a & b]
    for k_set in nonempty_subsets(min(d, 3)):
        for a, b in universe if limit is None else rng.sample(universe, min(limit, len(universe))):
            pair = SignaturePair(a, b)
            out.append((poly_P(pair, k_set, d), lambda x, y, pair=pair, k_set=k_set: P_factored(pair, k_set, x, y)))
    k = min(d, 3)
    quads = enumerate_script_A(d, k) + enumerate_script_A_k(d, k)
    for m_set, n_set in quads if limit is None else rng.sample(quads, min(limit, len(quads))):
        out.append((poly_Q(m_set, n_set, d), lambda x, y, m_set=m_set, n_set=n_set: Q_factored(m_set, n_set, x, y)))
    triples = enumerate_script_B(d, d) if d <= 4 else enumerate_script_B(d, 4)
    for i, I, J in triples if limit is None else rng.sample(triples, min(limit, len(triples))):
        out.append((poly_R(i, I, J, d), lambda x, y, i=i, I=I, J=J: R_factored(i, I, J, d, x, y)))
    return out


def _subsets(d):
    return [frozenset(c) for r in range(d + 1) for c in combinations(range(1, d + 1), r)]


def test_criterion_10_expansion_soundness():
    rng = random.Random(7)
    failures = mixed = checked = 0
    for d in range(1, 11):
        if d <= 4:
            polys = _polys_with_oracles(d, rng, None)
            points = [(x, y) for x in range(1 << d) for y in range(1 << d)]
        else:
            polys = _polys_with_oracles(d, rng, 40)
            points = [(rng.getrandbits(d), rng.getrandbits(d)) for _ in range(10_000)]
        mixed += sum(not p.is_mixed_free() for p, _ in polys)
        table = evaluate_table([p for p, _ in polys], points)
        for row, (_, oracle) in zip(table, polys):
            want = np.array([oracle(x, y) for x, y in points])
            failures += int(np.count_nonzero(row != want))
            checked += len(points)
    record(10, failures == mixed == 0, f"{failures} mismatches in {checked} evaluations, {mixed} mixed polynomials")


if __name__ == "__main__":
    for name, fn in sorted(globals().items(), key=lambda kv: int(kv[0].split("_")[2]) if kv[0].startswith("test_criterion_") else 0):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
