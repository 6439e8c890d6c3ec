"""Exact dense linear algebra over GF(p) and over the rationals.

No floating point is used anywhere.  Rational elimination clears
denominators row by row and then runs integer elimination, dividing every
updated row by the gcd of its entries to keep coefficient growth in check.

Elimination only touches rows with a nonzero entry in the pivot column, so
the banded rigidity matrices of rings and chains stay cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

#: Largest prime below 2**62.  Primality is checked in the test suite.
PRIME = 2**62 - 57

GF = "gf"
Q = "q"


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class DenseMatrix:
    rows: int
    cols: int
    entries: tuple
    field: str = Q
    modulus: int = PRIME

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")
        if self.field not in (GF, Q):
            raise FieldError(f"unknown field tag {self.field!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None, field: str = Q, modulus: int = PRIME):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        if field == GF:
            flat = tuple(int(x) % modulus for r in rows for x in r)
        else:
            flat = tuple(Fraction(x) for r in rows for x in r)
        return cls(len(rows), cols, flat, field, modulus)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "DenseMatrix":
        flat = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return DenseMatrix(self.cols, self.rows, flat, self.field, self.modulus)


# ---------------------------------------------------------------------------
# GF(p)


def rank_mod_p(rows: Iterable[Sequence[int]], ncols: int, p: int = PRIME) -> int:
    active = [[x % p for x in r] for r in rows]
    active = [r for r in active if any(r)]
    rank = 0
    for c in range(ncols):
        if not active:
            break
        piv_idx = next((i for i, r in enumerate(active) if r[c]), None)
        if piv_idx is None:
            continue
        piv = active.pop(piv_idx)
        inv = pow(piv[c], p - 2, p)
        tail = [(x * inv) % p for x in piv[c:]]
        rank += 1
        keep = []
        for r in active:
            f = r[c]
            if f:
                head = r[:c]
                r = head + [(x - f * y) % p for x, y in zip(r[c:], tail)]
                if not any(r):
                    continue
            keep.append(r)
        active = keep
    return rank


class EchelonModP:
    """Reduced row echelon basis of a row space over GF(p); answers span queries."""

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int, p: int = PRIME):
        self.p = p
        self.ncols = ncols
        basis: list[list[int]] = []
        pivots: list[int] = []
        for r in rows:
            r = self._reduce([x % p for x in r], basis, pivots)
            c = next((j for j, x in enumerate(r) if x), None)
            if c is None:
                continue
            inv = pow(r[c], p - 2, p)
            r = [(x * inv) % p for x in r]
            # back-eliminate so the basis stays fully reduced
            for k, b in enumerate(basis):
                f = b[c]
                if f:
                    basis[k] = [(x - f * y) % p for x, y in zip(b, r)]
            basis.append(r)
            pivots.append(c)
        self.basis = basis
        self.pivots = pivots

    def _reduce(self, r, basis, pivots):
        p = self.p
        for b, c in zip(basis, pivots):
            f = r[c]
            if f:
                r = [(x - f * y) % p for x, y in zip(r, b)]
        return r

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, row: Sequence[int]) -> bool:
        """Is ``row`` in the row space?"""
        p = self.p
        r = [x % p for x in row]
        for b, c in zip(self.basis, self.pivots):
            f = r[c]
            if f:
                r = [(x - f * y) % p for x, y in zip(r, b)]
        return not any(r)

    def contains_sparse(self, entries: dict[int, int]) -> bool:
        """Span test for a row given as {column: value}; only touches needed basis rows."""
        p = self.p
        r = [0] * self.ncols
        for j, x in entries.items():
            r[j] = x % p
        piv_of = self._pivot_index()
        # in RREF, subtracting basis row k never creates entries in other pivot columns
        for j in list(entries):
            k = piv_of.get(j)
            if k is not None:
                f = r[j]
                if f:
                    b = self.basis[k]
                    r = [(x - f * y) % p for x, y in zip(r, b)]
        return not any(r)

    def _pivot_index(self) -> dict[int, int]:
        idx = getattr(self, "_pidx", None)
        if idx is None:
            idx = {c: k for k, c in enumerate(self.pivots)}
            self._pidx = idx
        return idx


# ---------------------------------------------------------------------------
# rationals


def _integer_row(row: Sequence) -> list[int]:
    fr = [Fraction(x) for x in row]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return [int(x * den) for x in fr]


def _primitive(r: list[int]) -> list[int]:
    g = 0
    for x in r:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return r
    if g > 1:
        return [x // g for x in r]
    return r


def rank_rational(rows: Iterable[Sequence], ncols: int) -> int:
    """Exact rank by fraction-free integer elimination (no Fraction arithmetic in the loop)."""
    active = [_integer_row(r) for r in rows]
    active = [_primitive(r) for r in active if any(r)]
    rank = 0
    for c in range(ncols):
        if not active:
            break
        piv_idx = next((i for i, r in enumerate(active) if r[c]), None)
        if piv_idx is None:
            continue
        piv = active.pop(piv_idx)
        pc = piv[c]
        rank += 1
        keep = []
        for r in active:
            f = r[c]
            if f:
                g = math.gcd(pc, f)
                a, b = pc // g, f // g
                r = _primitive([a * x - b * y for x, y in zip(r, piv)])
                if not any(r):
                    continue
            keep.append(r)
        active = keep
    return rank


def _rref_integer(rows: list[list[int]], ncols: int):
    """Fraction-free Gauss-Jordan; returns (rows, pivot columns) with zeros above and below pivots."""
    M = [_primitive(r) for r in rows if any(r)]
    pivots: list[int] = []
    r0 = 0
    for c in range(ncols):
        piv_idx = next((i for i in range(r0, len(M)) if M[i][c]), None)
        if piv_idx is None:
            continue
        M[r0], M[piv_idx] = M[piv_idx], M[r0]
        piv = M[r0]
        pc = piv[c]
        for i in range(len(M)):
            if i == r0:
                continue
            f = M[i][c]
            if f:
                g = math.gcd(pc, f)
                a, b = pc // g, f // g
                M[i] = _primitive([a * x - b * y for x, y in zip(M[i], piv)])
        pivots.append(c)
        r0 += 1
        if r0 == len(M):
            break
    return [r for r in M[:r0]], pivots


def _right_kernel_int(int_rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    R, pivots = _rref_integer(int_rows, ncols)
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for row, c in zip(R, pivots):
            if row[j]:
                v[c] = Fraction(-row[j], row[c])
        basis.append(_normalize_vector(v))
    return basis


def _normalize_vector(v: list[Fraction]) -> list[Fraction]:
    """Scale to a primitive integer vector whose first nonzero entry is positive."""
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = _primitive([int(x * den) for x in v])
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def matrix_rank(M: DenseMatrix) -> int:
    if M.field == GF:
        return rank_mod_p(M.to_rows(), M.cols, M.modulus)
    return rank_rational(M.to_rows(), M.cols)


def nullspace(M: DenseMatrix, side: str = "right") -> list[list[Fraction]]:
    """Basis of {v : Mv = 0} (right) or {v : vM = 0} (left), exact over Q."""
    if M.field != Q:
        raise FieldError("null-space bases are only computed over the rationals")
    if side == "right":
        rows, ncols = M.to_rows(), M.cols
    elif side == "left":
        rows, ncols = M.transpose().to_rows(), M.rows
    else:
        raise ValueError("side must be 'left' or 'right'")
    return _right_kernel_int([_integer_row(r) for r in rows], ncols)


def mat_vec(M: DenseMatrix, v: Sequence) -> list:
    return [sum((M[i, j] * v[j] for j in range(M.cols) if M[i, j]), Fraction(0)) for i in range(M.rows)]


def vec_mat(v: Sequence, M: DenseMatrix) -> list:
    return [sum((v[i] * M[i, j] for i in range(M.rows) if M[i, j]), Fraction(0)) for j in range(M.cols)]


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
