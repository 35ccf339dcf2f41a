"""Hot loops: each kernel has a numba build and a numpy/Python fallback."""
