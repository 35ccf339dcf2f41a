"""Backend parity and independent oracles for the numba kernels."""

import random

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bicliquekit._accel import HAVE_NUMBA
from bicliquekit.kernels import clique, evaluate, modrank

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba disabled")


def test_prime_is_prime_and_fits():
    assert sympy.isprime(modrank.PRIME)
    assert 2**61 < modrank.PRIME < 2**62
    assert (modrank.PRIME * modrank._NPRIME) % 2**64 == 2**64 - 1


@given(st.integers(0, modrank.PRIME - 1), st.integers(0, modrank.PRIME - 1))
@settings(max_examples=500, deadline=None)
def test_montgomery_product(a, b):
    r_inv = pow(2**64, -1, modrank.PRIME)
    with np.errstate(over="ignore"):
        got = modrank._montmul_np(np.array([a], dtype=np.uint64), np.array([b], dtype=np.uint64))[0]
    assert int(got) == a * b * r_inv % modrank.PRIME


def _random_matrix(rng, r, c):
    m = [[rng.choice([0, 0, 1, -1, 2, rng.randint(-(10**25), 10**25)]) for _ in range(c)] for _ in range(r)]
    if r > 2 and rng.random() < 0.5:
        m[-1] = [x + 3 * y for x, y in zip(m[0], m[1])]
    return m


@pytest.mark.parametrize("backend", ["numpy", pytest.param("numba", marks=needs_numba)])
def test_modrank_vs_sympy(backend):
    rng = random.Random(11)
    for _ in range(40):
        m = _random_matrix(rng, rng.randint(1, 10), rng.randint(1, 10))
        assert modrank.rank_mod_p(modrank.to_residues(m), backend=backend) == sympy.Matrix(m).rank()


def test_modrank_sees_multiples_of_p():
    # a row that is p times another is zero mod p: rank drops, exact path would not
    m = [[1, 2], [modrank.PRIME, 0]]
    assert modrank.rank_mod_p(modrank.to_residues(m), backend="numpy") == 1


@needs_numba
def test_clique_backends_and_networkx():
    rng = random.Random(2)
    for t in range(80):
        n = rng.randint(0, 70)
        g = nx.gnp_random_graph(n, rng.random(), seed=t)
        nb = [sum(1 << u for u in g[v]) for v in range(n)]
        a = clique.max_clique(nb, n, backend="python")
        b = clique.max_clique(clique.adjacency_words(nb, n), n, backend="numba")
        assert a == b
        assert len(a[0]) == max((len(c) for c in nx.find_cliques(g)), default=0)
        assert all(u in g[v] for u in a[0] for v in a[0] if u != v)


@needs_numba
def test_clique_budget_parity():
    g = nx.gnp_random_graph(60, 0.8, seed=1)
    nb = [sum(1 << u for u in g[v]) for v in range(60)]
    for budget in (0, 1, 5, 50):
        a = clique.max_clique(nb, 60, budget=budget, backend="python")
        b = clique.max_clique(nb, 60, budget=budget, backend="numba")
        assert a == b and a[1] == budget and not a[2]


def test_words_round_trip():
    nb = [0b110, 0b101, 0b011, 1 << 70]
    assert clique.neighbour_ints(clique.adjacency_words(nb, 71)[:4]) == nb


@needs_numba
def test_evaluate_backends():
    rng = np.random.default_rng(4)
    n_terms = 50
    xm = rng.integers(0, 2**8, n_terms, dtype=np.uint64)
    ym = rng.integers(0, 2**8, n_terms, dtype=np.uint64)
    coeff = rng.integers(-9, 10, n_terms)
    offsets = np.array([0, 10, 10, 30, 50])
    px = rng.integers(0, 2**8, 40, dtype=np.uint64)
    py = rng.integers(0, 2**8, 40, dtype=np.uint64)
    a = evaluate.evaluate_many(xm, ym, coeff, offsets, px, py, backend="numpy")
    b = evaluate.evaluate_many(xm, ym, coeff, offsets, px, py, backend="numba")
    assert (a == b).all()
    for p in range(4):
        for q in range(40):
            want = sum(
                int(coeff[t])
                for t in range(offsets[p], offsets[p + 1])
                if int(px[q]) & int(xm[t]) == int(xm[t]) and int(py[q]) & int(ym[t]) == int(ym[t])
            )
            assert a[p, q] == want
