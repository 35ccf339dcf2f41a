"""Rank of an integer matrix over GF(p) for a fixed 62-bit prime.

Products of two residues do not fit in 64 bits, so elimination uses
Montgomery multiplication (R = 2**64) on uint64 words. Rows are combined by
cross-multiplication, ``row_i <- pv*row_i - f*pivot_row``; every Montgomery
product carries the same nonzero factor R^-1, so rank is unaffected and no
conversion into or out of Montgomery form is needed.
"""

import numpy as np

from .._accel import HAVE_NUMBA, njit

#: Smallest prime above 2**61. Must stay below 2**62 so that 2p fits in uint64.
PRIME = 2**61 + 15
_R = 2**64
_NPRIME = (-pow(PRIME, -1, _R)) % _R

_P = np.uint64(PRIME)
_NP = np.uint64(_NPRIME)
_M32 = np.uint64(0xFFFFFFFF)
_S32 = np.uint64(32)
_ONE = np.uint64(1)
_ZERO = np.uint64(0)


def to_residues(rows):
    """Reduce a list of integer rows (Python ints, any size) to a uint64 matrix mod PRIME."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    out = np.zeros((n_rows, n_cols), dtype=np.uint64)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                out[i, j] = v % PRIME
    return out


# -- numpy path ---------------------------------------------------------------


def _montmul_np(a, b):
    a0 = a & _M32
    a1 = a >> _S32
    b0 = b & _M32
    b1 = b >> _S32
    p00 = a0 * b0
    p01 = a0 * b1
    p10 = a1 * b0
    p11 = a1 * b1
    mid = (p00 >> _S32) + (p01 & _M32) + (p10 & _M32)
    hi = p11 + (p01 >> _S32) + (p10 >> _S32) + (mid >> _S32)
    lo = a * b
    m = lo * _NP
    m0 = m & _M32
    m1 = m >> _S32
    q00 = m0 * (_P & _M32)
    q01 = m0 * (_P >> _S32)
    q10 = m1 * (_P & _M32)
    q11 = m1 * (_P >> _S32)
    qmid = (q00 >> _S32) + (q01 & _M32) + (q10 & _M32)
    mhi = q11 + (q01 >> _S32) + (q10 >> _S32) + (qmid >> _S32)
    t = hi + mhi + (lo != _ZERO).astype(np.uint64)
    return np.where(t >= _P, t - _P, t)


def _submod_np(x, y):
    return np.where(x >= y, x - y, x + (_P - y))


def _rank_numpy(a):
    a = a.copy()
    n_rows, n_cols = a.shape
    rank = 0
    with np.errstate(over="ignore"):
        for col in range(n_cols):
            if rank == n_rows:
                break
            nz = np.flatnonzero(a[rank:, col])
            if nz.size == 0:
                continue
            piv = rank + int(nz[0])
            if piv != rank:
                a[[rank, piv]] = a[[piv, rank]]
            below = rank + 1 + np.flatnonzero(a[rank + 1:, col])
            if below.size:
                pv = a[rank, col]
                prow = a[rank, col:]
                f = a[below, col][:, None]
                a[below, col:] = _submod_np(
                    _montmul_np(np.full_like(a[below, col:], pv), a[below, col:]),
                    _montmul_np(np.broadcast_to(f, (below.size, n_cols - col)), np.broadcast_to(prow, (below.size, n_cols - col))),
                )
            rank += 1
    return rank


# -- numba path ---------------------------------------------------------------


def _montmul_scalar(a, b):
    a0 = a & _M32
    a1 = a >> _S32
    b0 = b & _M32
    b1 = b >> _S32
    p00 = a0 * b0
    p01 = a0 * b1
    p10 = a1 * b0
    p11 = a1 * b1
    mid = (p00 >> _S32) + (p01 & _M32) + (p10 & _M32)
    hi = p11 + (p01 >> _S32) + (p10 >> _S32) + (mid >> _S32)
    lo = a * b
    m = lo * _NP
    m0 = m & _M32
    m1 = m >> _S32
    c0 = _P & _M32
    c1 = _P >> _S32
    q00 = m0 * c0
    q01 = m0 * c1
    q10 = m1 * c0
    q11 = m1 * c1
    qmid = (q00 >> _S32) + (q01 & _M32) + (q10 & _M32)
    mhi = q11 + (q01 >> _S32) + (q10 >> _S32) + (qmid >> _S32)
    t = hi + mhi
    if lo != _ZERO:
        t = t + _ONE
    if t >= _P:
        t = t - _P
    return t


_montmul_nb = njit(_montmul_scalar)

if HAVE_NUMBA:

    @njit
    def _rank_numba(a):
        n_rows, n_cols = a.shape
        rank = 0
        for col in range(n_cols):
            if rank == n_rows:
                break
            piv = -1
            for i in range(rank, n_rows):
                if a[i, col] != _ZERO:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, n_cols):
                    tmp = a[rank, j]
                    a[rank, j] = a[piv, j]
                    a[piv, j] = tmp
            pv = a[rank, col]
            for i in range(rank + 1, n_rows):
                f = a[i, col]
                if f == _ZERO:
                    continue
                for j in range(col, n_cols):
                    x = _montmul_nb(pv, a[i, j])
                    y = _montmul_nb(f, a[rank, j])
                    if x >= y:
                        a[i, j] = x - y
                    else:
                        a[i, j] = x + (_P - y)
            rank += 1
        return rank

else:
    _rank_numba = None


def rank_mod_p(residues, backend=None):
    """Rank of a uint64 residue matrix over GF(PRIME).

    ``backend`` is ``"numba"``, ``"numpy"`` or ``None`` (numba when available).
    """
    residues = np.ascontiguousarray(residues, dtype=np.uint64)
    if residues.size == 0:
        return 0
    if backend is None:
        backend = "numba" if HAVE_NUMBA else "numpy"
    if backend == "numba":
        if _rank_numba is None:
            raise RuntimeError("numba backend requested but numba is disabled or missing")
        return int(_rank_numba(residues.copy()))
    if backend == "numpy":
        return _rank_numpy(residues)
    raise ValueError(f"unknown backend {backend!r}")
