"""Exact maximum clique by branch and bound with greedy-colouring bounds.

Both backends walk the same search tree in the same order (Tomita-style
colour classes built lowest-index first, branches taken highest colour
first), so optimum, witness and node count agree exactly.

Vertices are expected to be relabelled already: bit ``v`` of a bitset is
vertex ``v``, and ``adj[v]`` excludes ``v`` itself.
"""

import numpy as np

from .._accel import HAVE_NUMBA, njit

_ZERO = np.uint64(0)
_ONE = np.uint64(1)


def _n_words(n):
    return max(1, (n + 63) // 64)


def adjacency_words(neighbours, n):
    """Pack per-vertex neighbour bitmasks (Python ints) into a uint64 array."""
    n_words = _n_words(n)
    adj = np.zeros((n, n_words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for v, bits in enumerate(neighbours):
        for w in range(n_words):
            adj[v, w] = (bits >> (64 * w)) & mask
    return adj


# -- pure Python path ---------------------------------------------------------


class _Budget(Exception):
    pass


def max_clique_python(neighbours, n, budget=-1):
    """Return ``(best_clique, nodes, exhausted)`` using Python int bitsets."""
    state = {"best": [], "nodes": 0}

    def colour(p):
        order, colours = [], []
        uncoloured = p
        c = 0
        while uncoloured:
            c += 1
            q = uncoloured
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~(1 << v)
                uncoloured &= ~(1 << v)
                q &= ~neighbours[v]
                order.append(v)
                colours.append(c)
        return order, colours

    def expand(clique, p):
        order, colours = colour(p)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colours[idx] <= len(state["best"]):
                return
            if 0 <= budget <= state["nodes"]:
                raise _Budget
            state["nodes"] += 1
            v = order[idx]
            clique.append(v)
            new_p = p & neighbours[v]
            if new_p:
                expand(clique, new_p)
            elif len(clique) > len(state["best"]):
                state["best"] = list(clique)
            clique.pop()
            p &= ~(1 << v)

    exhausted = True
    try:
        if n:
            expand([], (1 << n) - 1)
    except _Budget:
        exhausted = False
    return state["best"], state["nodes"], exhausted


# -- numba path ---------------------------------------------------------------


def _lowbit_index(x):
    b = 0
    if (x & np.uint64(0xFFFFFFFF)) == _ZERO:
        x = x >> np.uint64(32)
        b += 32
    if (x & np.uint64(0xFFFF)) == _ZERO:
        x = x >> np.uint64(16)
        b += 16
    if (x & np.uint64(0xFF)) == _ZERO:
        x = x >> np.uint64(8)
        b += 8
    if (x & np.uint64(0xF)) == _ZERO:
        x = x >> np.uint64(4)
        b += 4
    if (x & np.uint64(0x3)) == _ZERO:
        x = x >> np.uint64(2)
        b += 2
    if (x & _ONE) == _ZERO:
        b += 1
    return b


_lowbit_index_nb = njit(_lowbit_index)

if HAVE_NUMBA:

    @njit
    def _colour_nb(p_row, adj, order_row, col_row, u, q):
        n_words = p_row.shape[0]
        for w in range(n_words):
            u[w] = p_row[w]
        cnt = 0
        c = 0
        while True:
            any_left = False
            for w in range(n_words):
                if u[w] != _ZERO:
                    any_left = True
                    break
            if not any_left:
                break
            c += 1
            for w in range(n_words):
                q[w] = u[w]
            for w in range(n_words):
                while q[w] != _ZERO:
                    x = q[w]
                    low = x & (~x + _ONE)
                    v = w * 64 + _lowbit_index_nb(low)
                    q[w] &= ~low
                    u[w] &= ~low
                    for w2 in range(w, n_words):
                        q[w2] &= ~adj[v, w2]
                    order_row[cnt] = v
                    col_row[cnt] = c
                    cnt += 1
        return cnt

    @njit
    def _max_clique_nb(adj, n, budget):
        n_words = adj.shape[1]
        u = np.zeros(n_words, dtype=np.uint64)
        q = np.zeros(n_words, dtype=np.uint64)
        root = np.zeros(n_words, dtype=np.uint64)
        for v in range(n):
            root[v >> 6] |= _ONE << np.uint64(v & 63)
        root_order = np.zeros(n, dtype=np.int64)
        root_col = np.zeros(n, dtype=np.int64)
        root_cnt = _colour_nb(root, adj, root_order, root_col, u, q)
        max_depth = 1
        if root_cnt > 0:
            max_depth = root_col[root_cnt - 1] + 1

        p = np.zeros((max_depth, n_words), dtype=np.uint64)
        order = np.zeros((max_depth, n), dtype=np.int64)
        col = np.zeros((max_depth, n), dtype=np.int64)
        pos = np.zeros(max_depth, dtype=np.int64)
        clique = np.zeros(max_depth, dtype=np.int64)
        best = np.zeros(max_depth, dtype=np.int64)
        best_size = 0
        nodes = 0
        exhausted = True
        if n == 0:
            return best[:0], nodes, exhausted

        for w in range(n_words):
            p[0, w] = root[w]
        for i in range(root_cnt):
            order[0, i] = root_order[i]
            col[0, i] = root_col[i]
        pos[0] = root_cnt - 1
        depth = 0
        while depth >= 0:
            i = pos[depth]
            if i < 0 or depth + col[depth, i] <= best_size:
                depth -= 1
                if depth >= 0:
                    v = clique[depth]
                    p[depth, v >> 6] &= ~(_ONE << np.uint64(v & 63))
                    pos[depth] -= 1
                continue
            if budget >= 0 and nodes >= budget:
                exhausted = False
                break
            nodes += 1
            v = order[depth, i]
            clique[depth] = v
            empty = True
            for w in range(n_words):
                x = p[depth, w] & adj[v, w]
                p[depth + 1, w] = x
                if x != _ZERO:
                    empty = False
            if empty:
                if depth + 1 > best_size:
                    best_size = depth + 1
                    for t in range(best_size):
                        best[t] = clique[t]
                p[depth, v >> 6] &= ~(_ONE << np.uint64(v & 63))
                pos[depth] -= 1
            else:
                depth += 1
                cnt = _colour_nb(p[depth], adj, order[depth], col[depth], u, q)
                pos[depth] = cnt - 1
        return best[:best_size].copy(), nodes, exhausted

else:
    _max_clique_nb = None


def neighbour_ints(adj):
    """Inverse of :func:`adjacency_words`."""
    return [int.from_bytes(row.astype("<u8").tobytes(), "little") for row in adj]


def max_clique(adj, n, budget=None, backend=None):
    """Maximum clique of the graph on ``0..n-1``.

    ``adj`` is either a uint64 array of packed neighbour words, shape
    ``(n, ceil(n/64))``, or a list of Python-int neighbour masks.
    ``budget`` caps the number of branch nodes; ``None`` means unlimited.
    Returns ``(clique_vertices_in_insertion_order, nodes, exhausted)``.
    """
    b = -1 if budget is None else int(budget)
    if backend is None:
        backend = "numba" if HAVE_NUMBA else "python"
    if backend == "python":
        neighbours = adj if isinstance(adj, list) else neighbour_ints(adj)
        best, nodes, exhausted = max_clique_python(neighbours, n, b)
        return list(best), nodes, exhausted
    if backend == "numba":
        if _max_clique_nb is None:
            raise RuntimeError("numba backend requested but numba is disabled or missing")
        words = adjacency_words(adj, n) if isinstance(adj, list) else np.ascontiguousarray(adj, dtype=np.uint64)
        best, nodes, exhausted = _max_clique_nb(words, n, b)
        return [int(v) for v in best], int(nodes), bool(exhausted)
    raise ValueError(f"unknown backend {backend!r}")
