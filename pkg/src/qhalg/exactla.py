"""Exact dense linear algebra over Q or a prime field.

Matrices are plain numpy arrays.  Over Q they have ``dtype=object`` and hold
``fractions.Fraction`` entries; over GF(p) they are int64 arrays of residues
in ``[0, p)``.  A :class:`Field` object knows how to build, reduce and
multiply arrays of its kind, and every algebra carries one.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ._kernels import MAX_PRIME, rref_modp

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "InconsistentSystemError",
    "rref",
    "rank",
    "kernel_basis",
    "solve_linear",
]


class InconsistentSystemError(ValueError):
    """Raised when ``a @ x = b`` has no solution."""

    def __init__(self, msg: str = "inconsistent system"):
        super().__init__(msg)


class Field:
    """Common interface of the two supported ground fields."""

    name: str
    characteristic: int
    dtype: object

    # -- construction -----------------------------------------------------
    def scalar(self, x):
        raise NotImplementedError

    def asarray(self, data) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, shape) -> np.ndarray:
        raise NotImplementedError

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def unit(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = self.one
        return v

    # -- arithmetic ---------------------------------------------------------
    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Bring an array produced by raw numpy arithmetic back into normal form."""
        return a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.kron(a, b))

    def rref(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        raise NotImplementedError

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(a != 0)

    def to_python(self, x):
        """Plain ``int``/``Fraction`` for reporting."""
        raise NotImplementedError

    # -- derived operations ---------------------------------------------------
    def rank(self, m: np.ndarray) -> int:
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def kernel(self, m: np.ndarray) -> np.ndarray:
        """Columns spanning the right null space of ``m``."""
        rows, cols = m.shape
        if cols == 0:
            return self.zeros((0, 0))
        if rows == 0:
            return self.eye(cols)
        r, pivots = self.rref(m)
        piv = set(pivots)
        free = [c for c in range(cols) if c not in piv]
        out = self.zeros((cols, len(free)))
        for k, f in enumerate(free):
            out[f, k] = self.one
            for row, pc in enumerate(pivots):
                out[pc, k] = -r[row, f]
        return self.reduce(out)

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """One solution ``x`` of ``a @ x = b``; ``b`` may be a vector or a matrix."""
        vector = b.ndim == 1
        bb = b.reshape(-1, 1) if vector else b
        rows, cols = a.shape
        if bb.shape[0] != rows:
            raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
        k = bb.shape[1]
        if rows == 0:
            x = self.zeros((cols, k))
            return x[:, 0] if vector else x
        aug = np.concatenate([a, bb], axis=1) if cols else bb.copy()
        r, pivots = self.rref(aug)
        if pivots and pivots[-1] >= cols:
            raise InconsistentSystemError()
        x = self.zeros((cols, k))
        for row, pc in enumerate(pivots):
            x[pc] = r[row, cols:]
        return x[:, 0] if vector else x

    def column_basis(self, m: np.ndarray) -> np.ndarray:
        """Linearly independent subset of the columns of ``m`` with the same span."""
        if m.size == 0:
            return self.zeros((m.shape[0], 0))
        _, pivots = self.rref(m)
        return m[:, pivots]

    def complement_units(self, u: np.ndarray) -> list[int]:
        """Coordinate indices whose unit vectors complete the columns of ``u`` to a basis.

        ``u`` must have independent columns.
        """
        n = u.shape[0]
        if u.shape[1] == 0:
            return list(range(n))
        _, pivots = self.rref(u.T.copy())
        piv = set(pivots)
        return [c for c in range(n) if c not in piv]


class RationalField(Field):
    """The field Q with ``Fraction`` entries."""

    name = "Q"
    characteristic = 0
    dtype = object

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (RationalField, ())

    def scalar(self, x):
        return Fraction(x)

    def asarray(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for k in range(flat.size):
            if not isinstance(flat[k], Fraction):
                flat[k] = Fraction(flat[k])
        return arr

    def zeros(self, shape) -> np.ndarray:
        return np.full(shape, self.zero, dtype=object)

    def matmul(self, a, b):
        if a.shape[-1] == 0:
            shape = a.shape[:-1] + b.shape[1:]
            return self.zeros(shape)
        return a.dot(b)

    def rref(self, m):
        r = np.array(m, dtype=object, copy=True)
        rows, cols = r.shape
        pivots: list[int] = []
        row = 0
        for c in range(cols):
            if row == rows:
                break
            col = r[row:, c]
            k = next((i for i in range(col.size) if col[i] != 0), None)
            if k is None:
                continue
            k += row
            if k != row:
                r[[row, k]] = r[[k, row]]
            piv = r[row, c]
            if piv != 1:
                r[row] = r[row] * (1 / piv)
            prow = r[row]
            for i in range(rows):
                if i != row:
                    f = r[i, c]
                    if f != 0:
                        r[i] = r[i] - f * prow
            pivots.append(c)
            row += 1
        return r, pivots

    def to_python(self, x):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else x


class PrimeField(Field):
    """GF(p) for a prime ``p < 2**31`` with int64 residues."""

    characteristic: int
    dtype = np.int64

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} too large (must be < 2**31)")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __reduce__(self):
        return (PrimeField, (self.p,))

    def scalar(self, x):
        x = Fraction(x)
        num = x.numerator % self.p
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
        return (num * pow(den, self.p - 2, self.p)) % self.p

    def asarray(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.size and any(isinstance(v, Fraction) and v.denominator != 1 for v in arr.reshape(-1)):
            out = np.empty(arr.shape, dtype=np.int64)
            flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
            for k in range(flat_in.size):
                flat_out[k] = self.scalar(flat_in[k])
            return out
        return np.array(np.array(data, dtype=object) % self.p, dtype=np.int64)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def reduce(self, a):
        return np.asarray(a, dtype=np.int64) % self.p

    def matmul(self, a, b):
        inner = a.shape[-1]
        if inner * (self.p - 1) ** 2 < (1 << 63):
            return (a @ b) % self.p
        prod = np.asarray(a, dtype=object).dot(np.asarray(b, dtype=object)) % self.p
        return np.asarray(prod, dtype=np.int64)

    def kron(self, a, b):
        return np.kron(a, b) % self.p

    def rref(self, m):
        if m.size == 0:
            return np.array(m, dtype=np.int64), []
        r, pivots = rref_modp(m, self.p)
        return r, [int(c) for c in pivots]

    def to_python(self, x):
        return int(x)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# -- module-level conveniences -------------------------------------------------


def _field_of(m: np.ndarray, field: Field | None) -> Field:
    if field is not None:
        return field
    if m.dtype == object:
        return QQ
    raise TypeError("pass field= for non-rational matrices")


def rref(m, field: Field | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; rank is ``len(pivots)``."""
    f = field or QQ
    return f.rref(f.asarray(m) if not isinstance(m, np.ndarray) else m)


def rank(m, field: Field | None = None) -> int:
    f = field or QQ
    m = f.asarray(m) if not isinstance(m, np.ndarray) else m
    return f.rank(m)


def kernel_basis(m, field: Field | None = None) -> list[np.ndarray]:
    """Basis of the right null space as a list of column vectors."""
    f = field or QQ
    m = f.asarray(m) if not isinstance(m, np.ndarray) else m
    k = f.kernel(m)
    return [k[:, j] for j in range(k.shape[1])]


def solve_linear(a, b, field: Field | None = None) -> np.ndarray:
    """Some ``x`` with ``a @ x = b``; raises :class:`InconsistentSystemError` otherwise."""
    f = field or QQ
    a = f.asarray(a) if not isinstance(a, np.ndarray) else a
    b = f.asarray(b) if not isinstance(b, np.ndarray) else b
    return f.solve(a, b)


def block_diag(field: Field, blocks) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = field.zeros((rows, cols))
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def hstack(field: Field, rows: int, mats) -> np.ndarray:
    mats = [m for m in mats if m.shape[1]]
    if not mats:
        return field.zeros((rows, 0))
    return np.concatenate(mats, axis=1)
