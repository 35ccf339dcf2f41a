"""Exact rank by fraction-free (Bareiss) elimination over the integers."""

from __future__ import annotations


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix given as a list of rows.

    Pivoting is deterministic: leftmost usable column, lowest row index.
    Every division is exact because each entry stays a minor of the input.
    """
    a = [list(r) for r in rows]
    n_rows = len(a)
    if not n_rows:
        return 0
    n_cols = len(a[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = next((i for i in range(rank, n_rows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pv = pr[col]
        for i in range(rank + 1, n_rows):
            row = a[i]
            f = row[col]
            for j in range(col + 1, n_cols):
                row[j] = (row[j] * pv - f * pr[j]) // prev
            row[col] = 0
        prev = pv
        rank += 1
    return rank
