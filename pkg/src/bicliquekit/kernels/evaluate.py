"""Batch evaluation of multilinear polynomials on 0/1 points.

A polynomial is a flat run of terms ``(xmask, ymask, coeff)``; ``offsets``
delimits polynomials. A term contributes at point ``(px, py)`` iff its masks
are contained in the point's masks.
"""

import numpy as np

from .._accel import HAVE_NUMBA, njit

#: Largest |coefficient| * term count for which int64 accumulation is safe.
INT64_SAFE = 2**62


def _eval_numpy(xm, ym, coeff, offsets, px, py):
    n_polys = offsets.shape[0] - 1
    out = np.zeros((n_polys, px.shape[0]), dtype=np.int64)
    for p in range(n_polys):
        lo, hi = offsets[p], offsets[p + 1]
        if lo == hi:
            continue
        hit = ((px[None, :] & xm[lo:hi, None]) == xm[lo:hi, None]) & ((py[None, :] & ym[lo:hi, None]) == ym[lo:hi, None])
        out[p] = (hit * coeff[lo:hi, None]).sum(axis=0)
    return out


if HAVE_NUMBA:

    @njit
    def _eval_numba(xm, ym, coeff, offsets, px, py):
        n_polys = offsets.shape[0] - 1
        n_pts = px.shape[0]
        out = np.zeros((n_polys, n_pts), dtype=np.int64)
        for p in range(n_polys):
            for t in range(offsets[p], offsets[p + 1]):
                a = xm[t]
                b = ym[t]
                c = coeff[t]
                for q in range(n_pts):
                    if (px[q] & a) == a and (py[q] & b) == b:
                        out[p, q] += c
        return out

else:
    _eval_numba = None


def evaluate_many(xm, ym, coeff, offsets, px, py, backend=None):
    """Matrix ``out[p, q]`` = value of polynomial ``p`` at point ``q``."""
    args = (
        np.ascontiguousarray(xm, dtype=np.uint64),
        np.ascontiguousarray(ym, dtype=np.uint64),
        np.ascontiguousarray(coeff, dtype=np.int64),
        np.ascontiguousarray(offsets, dtype=np.int64),
        np.ascontiguousarray(px, dtype=np.uint64),
        np.ascontiguousarray(py, dtype=np.uint64),
    )
    if backend is None:
        backend = "numba" if HAVE_NUMBA else "numpy"
    if backend == "numba":
        if _eval_numba is None:
            raise RuntimeError("numba backend requested but numba is disabled or missing")
        return _eval_numba(*args)
    if backend == "numpy":
        return _eval_numpy(*args)
    raise ValueError(f"unknown backend {backend!r}")
