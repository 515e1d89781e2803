"""Row-reduction kernels over prime fields.

Two implementations of the same routine live here: a numba-compiled loop and
a vectorised numpy version.  ``rref_modp`` dispatches to numba unless the
``QHALG_NUMBA`` environment variable is set to ``0`` (or numba is missing).
Both take and return int64 arrays with entries in ``[0, p)``.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("QHALG_NUMBA", "1").strip().lower() in ("0", "false", "no", "off")

try:  # pragma: no cover - exercised implicitly depending on the environment
    if _DISABLED:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

HAVE_NUMBA = njit is not None

# products of two residues must fit in int64 with room for one subtraction
MAX_PRIME = 1 << 31


def rref_modp_numpy(m: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    r = np.array(m, dtype=np.int64) % p
    rows, cols = r.shape
    pivots = []
    row = 0
    for c in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(r[row:, c])
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        inv = pow(int(r[row, c]), p - 2, p)
        r[row] = (r[row] * inv) % p
        f = r[:, c].copy()
        f[row] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            r[hit] = (r[hit] - np.outer(f[hit], r[row]) % p) % p
        pivots.append(c)
        row += 1
    return r, np.array(pivots, dtype=np.int64)


def _rref_modp_loops(r, p):
    rows, cols = r.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    row = 0
    for c in range(cols):
        if row == rows:
            break
        k = -1
        for i in range(row, rows):
            if r[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != row:
            for j in range(cols):
                t = r[row, j]
                r[row, j] = r[k, j]
                r[k, j] = t
        # Fermat inverse by square-and-multiply
        base = r[row, c]
        e = p - 2
        inv = 1
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(c, cols):
            r[row, j] = (r[row, j] * inv) % p
        for i in range(rows):
            if i == row:
                continue
            f = r[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                r[i, j] = (r[i, j] - f * r[row, j]) % p
        pivots[row] = c
        row += 1
    return pivots[:row]


if HAVE_NUMBA:
    _rref_modp_jit = njit(cache=False)(_rref_modp_loops)

    def rref_modp_numba(m: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
        r = np.ascontiguousarray(np.array(m, dtype=np.int64) % p)
        pivots = _rref_modp_jit(r, np.int64(p))
        return r, pivots

else:  # pragma: no cover
    rref_modp_numba = None


def rref_modp(m: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of ``m`` over GF(p) and its pivot columns."""
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large for int64 kernels (must be < 2**31)")
    if rref_modp_numba is not None and m.size:
        return rref_modp_numba(m, p)
    return rref_modp_numpy(m, p)
