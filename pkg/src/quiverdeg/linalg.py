"""Exact linear algebra over arbitrary-precision rationals.

Matrices are dense with `fractions.Fraction` entries and every result is
exact; no tolerance parameters exist anywhere in this module. Ranks are
computed by fraction-free (Bareiss) elimination with deterministic pivoting
(first nonzero entry in column order), so outputs are reproducible bit for
bit and intermediate values stay integral on integral input.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import NotInvariant

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int, a Fraction or a "p/q" string.

    Floats are rejected; they would silently lose exactness.
    """
    if isinstance(value, bool):
        raise ValueError(f"cannot interpret {value!r} as a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational from {value!r}") from exc
    raise ValueError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction):
    """Emit an int for integral values, otherwise a "p/q" string."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


class RatMatrix:
    """A rows x cols matrix of rationals stored row-major.

    0 x m and m x 0 matrices are legal (and have rank 0).
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        ent = tuple(
            e if isinstance(e, Fraction) else parse_rational(e) for e in entries
        )
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        self.rows = rows
        self.cols = cols
        self.entries = ent

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        ent = [_ZERO] * (n * n)
        for i in range(n):
            ent[i * n + i] = _ONE
        return cls(n, n, ent)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ValueError("rows have unequal lengths")
        return cls(rows, cols, (x for r in data for x in r))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "RatMatrix":
        ent = [
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        ]
        return RatMatrix(self.cols, self.rows, ent)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def scale(self, c) -> "RatMatrix":
        c = c if isinstance(c, Fraction) else parse_rational(c)
        return RatMatrix(self.rows, self.cols, (c * e for e in self.entries))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in matrix sum")
        return RatMatrix(
            self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries))
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [_ZERO] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            base = i * m
            for t, av in enumerate(arow):
                if av:
                    brow = b[t * m : (t + 1) * m]
                    for j in range(m):
                        bv = brow[j]
                        if bv:
                            out[base + j] += av * bv
        return RatMatrix(n, m, out)

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        c = self.cols
        return tuple(
            sum((self.entries[i * c + j] * vec[j] for j in range(c)), _ZERO)
            for i in range(self.rows)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols}, {self.row_list()!r})"

    def _int_rows(self) -> list[list[int]]:
        # Clear denominators row by row; scaling a row does not change rank.
        out = []
        c = self.cols
        for i in range(self.rows):
            row = self.entries[i * c : (i + 1) * c]
            mult = lcm(*(e.denominator for e in row)) if row else 1
            out.append([e.numerator * (mult // e.denominator) for e in row])
        return out

    def rank(self) -> int:
        """Rank over the rationals via fraction-free elimination."""
        if self.rows == 0 or self.cols == 0:
            return 0
        return _bareiss_rank(self._int_rows(), self.cols)

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the null space; list length is always cols - rank."""
        rows = self.row_list()
        pivots = _rref(rows, self.cols)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [_ZERO] * self.cols
            vec[free] = _ONE
            for ridx, pcol in enumerate(pivots):
                vec[pcol] = -rows[ridx][free]
            basis.append(tuple(vec))
        return basis


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    """One-step Bareiss elimination on integer rows; returns the rank.

    The pivot is always the first nonzero entry scanning columns left to
    right and remaining rows top to bottom, so the computation (not just
    the result) is deterministic.
    """
    rank = 0
    prev = 1
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        piv_row = rows[rank]
        p = piv_row[col]
        for r in range(rank + 1, nrows):
            row = rows[r]
            x = row[col]
            if x:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c] - x * piv_row[c]) // prev
                row[col] = 0
            elif p != prev:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rref(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[col]
        if lead != 1:
            rows[r] = prow = [x / lead for x in prow]
        for i in range(nrows):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def invert(m: RatMatrix) -> RatMatrix:
    """Inverse of a square matrix; raises ValueError if singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    aug = []
    for i in range(n):
        row = list(m.entries[i * n : (i + 1) * n])
        row.extend(_ONE if j == i else _ZERO for j in range(n))
        aug.append(row)
    pivots = _rref(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return RatMatrix(n, n, (aug[i][n + j] for i in range(n) for j in range(n)))


def extend_to_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> RatMatrix:
    """Complete independent vectors to a basis of the ambient space.

    Returns the invertible dim x dim matrix whose first columns are the
    given vectors, the rest filled with standard basis vectors chosen
    greedily in index order.
    """
    cols = [tuple(parse_rational(x) for x in v) for v in vectors]
    if any(len(v) != dim for v in cols):
        raise ValueError("basis vector length does not match ambient dimension")

    reduced: list[tuple[list[Fraction], int]] = []

    def absorb(vec) -> bool:
        row = list(vec)
        for prow, pcol in reduced:
            c = row[pcol]
            if c:
                row = [a - c * b for a, b in zip(row, prow)]
        pivot = next((idx for idx, x in enumerate(row) if x), None)
        if pivot is None:
            return False
        lead = row[pivot]
        if lead != 1:
            row = [x / lead for x in row]
        reduced.append((row, pivot))
        return True

    for v in cols:
        if not absorb(v):
            raise ValueError("subspace basis vectors are linearly dependent")
    for i in range(dim):
        if len(cols) == dim:
            break
        unit = tuple(_ONE if j == i else _ZERO for j in range(dim))
        if absorb(unit):
            cols.append(unit)
    entries = [cols[c][r] for r in range(dim) for c in range(dim)]
    return RatMatrix(dim, dim, entries)


def quotient_matrices(
    subspace_basis: Sequence[Sequence[Fraction]],
    ambient_dim: int,
    maps: Sequence[RatMatrix],
) -> list[RatMatrix]:
    """Express endomorphisms on the quotient by an invariant subspace.

    The subspace basis is completed to a full basis; each map, rewritten in
    that basis, must keep the subspace inside itself (otherwise NotInvariant)
    and its lower-right block is the induced map on the quotient, of size
    ambient_dim - len(subspace_basis).
    """
    for m in maps:
        if m.rows != ambient_dim or m.cols != ambient_dim:
            raise ValueError("quotient maps must be endomorphisms of the ambient space")
    k = len(subspace_basis)
    if k == 0:
        return list(maps)
    p = extend_to_basis(subspace_basis, ambient_dim)
    p_inv = invert(p)
    q = ambient_dim - k
    out = []
    for idx, m in enumerate(maps):
        t = p_inv @ m @ p
        for r in range(k, ambient_dim):
            for c in range(k):
                if t.at(r, c) != 0:
                    raise NotInvariant(
                        f"map {idx} carries the subspace outside itself"
                    )
        out.append(
            RatMatrix(q, q, (t.at(k + r, k + c) for r in range(q) for c in range(q)))
        )
    return out
