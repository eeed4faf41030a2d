"""Exact linear algebra over prime fields.

All matrices are dense row-major numpy ``int64`` arrays with entries reduced
modulo a prime ``q``.  A subspace is always represented by the reduced row
echelon form of a spanning set with zero rows dropped, so two spanning sets
generate the same subspace iff their canonical forms are byte-identical.
Elimination is deterministic: pivots are chosen as the first usable row in
the first nonzero column, scanning left to right.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, ParseError

Matrix = np.ndarray


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """Arithmetic context for the prime field with ``q`` elements."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if not isinstance(q, (int, np.integer)) or isinstance(q, bool) or not _is_prime(int(q)):
            raise ValueError(f"field order must be a prime integer, got {q!r}")
        self.q = int(q)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


def as_matrix(rows, q: int, cols: int | None = None) -> Matrix:
    """Normalize ``rows`` to a 2-D int64 array reduced mod ``q``.

    ``cols`` is required when ``rows`` is empty, since the ambient width
    cannot be inferred from nothing.
    """
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        if a.ndim == 2:
            cols = a.shape[1]
        if cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return np.zeros((0, cols), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got array of ndim {a.ndim}")
    return a % q


def rref(a: Matrix, q: int, *, packed: bool | None = None) -> Matrix:
    """Reduced row echelon form with zero rows removed (the canonical form).

    Row space is preserved; output rows have strictly increasing pivot
    columns with unit pivots and zeros elsewhere in pivot columns.  For
    ``q == 2`` a word-packed elimination is used by default; it follows the
    identical pivot rule and is bit-exact with the dense path.
    """
    a = np.asarray(a, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if packed is None:
        packed = q == 2
    if packed and q == 2:
        return _rref_gf2_packed(a)
    return _rref_dense(a % q, q)


def _rref_dense(a: Matrix, q: int) -> Matrix:
    a = a.copy()
    m, cols = a.shape
    r = 0
    for c in range(cols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), q - 2, q)
        if inv != 1:
            a[r] = (a[r] * inv) % q
        hits = np.nonzero(a[:, c])[0]
        hits = hits[hits != r]
        if hits.size:
            a[hits] = (a[hits] - np.outer(a[hits, c], a[r])) % q
        r += 1
    return a[:r]


def _rref_gf2_packed(a: Matrix) -> Matrix:
    m, cols = a.shape
    if m == 0:
        return np.zeros((0, cols), dtype=np.int64)
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if cols <= 62:
        weights = np.int64(1) << np.arange(cols, dtype=np.int64)
        packed = [int(x) for x in (a & 1) @ weights]
    else:
        packed = [int("".join("1" if x & 1 else "0" for x in row[::-1]), 2) for row in a]
    r = 0
    for c in range(cols):
        if r == m:
            break
        mask = 1 << c
        piv = None
        for i in range(r, m):
            if packed[i] & mask:
                piv = i
                break
        if piv is None:
            continue
        packed[r], packed[piv] = packed[piv], packed[r]
        row = packed[r]
        for i in range(m):
            if i != r and packed[i] & mask:
                packed[i] ^= row
        r += 1
    out = np.zeros((r, cols), dtype=np.int64)
    for i in range(r):
        x = packed[i]
        for j in range(cols):
            out[i, j] = (x >> j) & 1
    return out


def rank(a: Matrix, q: int) -> int:
    return rref(a, q).shape[0]


def pivot_columns(rref_matrix: Matrix) -> list[int]:
    """Pivot column of each row of a matrix already in canonical form."""
    return [int(np.argmax(row != 0)) for row in rref_matrix]


def kernel(a: Matrix, q: int) -> Matrix:
    """Basis of the right null space, one vector per row.

    Uses the free-variable convention: each free column contributes one
    basis vector with a 1 in that column.  Satisfies
    ``rank(a) + kernel(a).shape[0] == a.shape[1]``.
    """
    a = np.asarray(a, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    n = a.shape[1]
    r = rref(a, q)
    piv = pivot_columns(r)
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    out = np.zeros((len(free), n), dtype=np.int64)
    for idx, f in enumerate(free):
        out[idx, f] = 1
        for i, p in enumerate(piv):
            out[idx, p] = (-int(r[i, f])) % q
    return out


def in_row_space(basis: Matrix, v, q: int) -> bool:
    """Membership test against a canonical (rref) basis."""
    v = np.array(v, dtype=np.int64).reshape(-1) % q
    if basis.shape[0] and basis.shape[1] != v.shape[0]:
        raise DimensionMismatchError(
            f"vector of length {v.shape[0]} against basis with {basis.shape[1]} columns"
        )
    for i, p in enumerate(pivot_columns(basis)):
        if v[p]:
            v = (v - v[p] * basis[i]) % q
    return not v.any()


def subspace_sum(a: Matrix, b: Matrix, q: int) -> Matrix:
    """Canonical basis of the sum of two row spaces."""
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatchError(f"column counts differ: {a.shape[1]} vs {b.shape[1]}")
    return rref(np.vstack([a, b]), q)


def intersect(a: Matrix, b: Matrix, q: int) -> Matrix:
    """Canonical basis of the intersection of two row spaces (Zassenhaus)."""
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatchError(f"column counts differ: {a.shape[1]} vs {b.shape[1]}")
    n = a.shape[1]
    top = np.hstack([a, a])
    bot = np.hstack([b, np.zeros_like(b)])
    r = rref(np.vstack([top, bot]), q)
    if r.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    left_zero = ~(r[:, :n] != 0).any(axis=1)
    return rref(r[left_zero][:, n:], q)


def matrix_to_text(a: Matrix, q: int) -> str:
    """Serialize to the text format ``"q rows cols"`` then one row per line."""
    a = as_matrix(a, q, cols=a.shape[1] if a.ndim == 2 else None)
    lines = [f"{q} {a.shape[0]} {a.shape[1]}"]
    for row in a:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> tuple[Matrix, int]:
    """Parse the text format produced by :func:`matrix_to_text`.

    Returns ``(matrix, q)``.  Raises :class:`ParseError` with a 1-based line
    number on malformed input.
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty matrix text", line=1)
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("header must be 'q rows cols'", line=1)
    try:
        q, rows, cols = (int(x) for x in head)
    except ValueError:
        raise ParseError("header must contain three integers", line=1) from None
    if not _is_prime(q):
        raise ParseError(f"modulus {q} is not prime", line=1)
    if rows < 0 or cols < 0:
        raise ParseError("negative dimensions", line=1)
    data = []
    for i in range(rows):
        lineno = i + 2
        if lineno - 1 >= len(lines) + 1 and i >= len(lines) - 1:
            raise ParseError("missing matrix row", line=lineno)
        if i + 1 >= len(lines):
            raise ParseError("missing matrix row", line=lineno)
        parts = lines[i + 1].split()
        if len(parts) != cols:
            raise ParseError(f"expected {cols} entries, found {len(parts)}", line=lineno)
        try:
            data.append([int(x) for x in parts])
        except ValueError:
            raise ParseError("non-integer entry", line=lineno) from None
    return as_matrix(data, q, cols=cols), q
