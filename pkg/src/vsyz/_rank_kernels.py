"""Dense mod-p elimination kernels.

Two interchangeable implementations of row-echelon rank over F_p for int64
matrices: a numba-jitted kernel and a vectorized numpy fallback.  Selection is
controlled by the VSYZ_BACKEND environment variable:

    auto   -- use numba when importable, else numpy (default)
    numba  -- require numba, fail loudly if missing
    numpy  -- never touch numba

numba (and its compile step) is loaded lazily on the first rank call so that
code paths that never compute ranks pay nothing.
"""

from __future__ import annotations

import os

import numpy as np

_impl = None
_impl_name = None


def _rank_mod_p_numpy(a: np.ndarray, p: int) -> int:
    """Row-echelon rank of an int64 matrix over F_p, vectorized per pivot."""
    a = np.remainder(a, p)
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1:, c])[0]
        if below.size:
            idx = r + 1 + below
            # factors and row entries are < p <= 2^31, products fit in int64
            a[idx] = (a[idx] - a[idx, c][:, None] * a[r][None, :]) % p
        r += 1
    return r


def _build_numba_impl():
    from numba import njit

    @njit("int64(int64, int64, int64)", cache=True, nogil=True)
    def _powmod(base, exp, mod):
        result = 1
        base = base % mod
        while exp > 0:
            if exp & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            exp >>= 1
        return result

    @njit("int64(int64[:, :], int64)", cache=True, nogil=True)
    def _rank_mod_p_jit(a, p):
        m, n = a.shape
        for i in range(m):
            for j in range(n):
                a[i, j] = a[i, j] % p
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _powmod(a[r, c], p - 2, p)
            for j in range(c, n):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(r + 1, m):
                f = a[i, c]
                if f != 0:
                    for j in range(c, n):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            r += 1
        return r

    def impl(a: np.ndarray, p: int) -> int:
        return int(_rank_mod_p_jit(np.ascontiguousarray(a, dtype=np.int64), p))

    return impl


def _select_impl():
    global _impl, _impl_name
    backend = os.environ.get("VSYZ_BACKEND", "auto").strip().lower()
    if backend not in ("auto", "numba", "numpy"):
        raise ValueError(f"VSYZ_BACKEND must be auto|numba|numpy, got {backend!r}")
    if backend == "numpy":
        _impl, _impl_name = _rank_mod_p_numpy, "numpy"
    elif backend == "numba":
        _impl, _impl_name = _build_numba_impl(), "numba"
    else:
        try:
            _impl, _impl_name = _build_numba_impl(), "numba"
        except ImportError:
            _impl, _impl_name = _rank_mod_p_numpy, "numpy"
    return _impl


def rank_dense_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over F_p of a dense integer matrix (consumes a scratch copy)."""
    if a.size == 0:
        return 0
    work = np.array(a, dtype=np.int64, copy=True)
    impl = _impl if _impl is not None else _select_impl()
    return int(impl(work, p))


def active_backend() -> str:
    """Name of the kernel in use ("numba" or "numpy"); resolves lazily."""
    if _impl is None:
        _select_impl()
    return _impl_name
