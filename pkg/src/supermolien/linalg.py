"""Exact rational matrices and fraction-free elimination.

All rank and determinant work in the package funnels through this module:
determinants and ranks use Bareiss fraction-free elimination on
denominator-cleared integer matrices, char-poly style expansions use power
sums with Newton's identities, and greedy independent-subset selection uses
an incremental exact echelon accumulator.  Higher layers do no elimination
of their own.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NotSquare
from .rationals import format_rational, parse_rational
from .series import UniPoly


class QMatrix:
    """Immutable matrix over Q, row-major."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: Iterable):
        entries = tuple(Fraction(x) for x in entries)
        if len(entries) != nrows * ncols:
            raise ValueError(f"expected {nrows * ncols} entries, got {len(entries)}")
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "QMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return QMatrix(nrows, ncols, [x for r in rows for x in r])

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "QMatrix":
        return QMatrix(nrows, ncols, [Fraction(0)] * (nrows * ncols))

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def rows(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.nrows)]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (other.nrows, other.ncols, other.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows())
        return f"QMatrix({self.nrows}x{self.ncols}: {body})"

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        out = []
        for i in range(self.nrows):
            ri = self.row(i)
            for j in range(other.ncols):
                out.append(sum((ri[k] * other.get(k, j) for k in range(self.ncols)), Fraction(0)))
        return QMatrix(self.nrows, other.ncols, out)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return QMatrix(self.nrows, self.ncols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return QMatrix(self.nrows, self.ncols, [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "QMatrix":
        c = Fraction(c)
        return QMatrix(self.nrows, self.ncols, [c * x for x in self.entries])

    def trace(self) -> Fraction:
        if not self.is_square():
            raise NotSquare("trace of a non-square matrix")
        return sum((self.get(i, i) for i in range(self.nrows)), Fraction(0))

    def as_permutation_images(self) -> list[int] | None:
        """If this is a permutation matrix with M[i][j] = [j maps to i], return
        the one-line images (1-based); otherwise None."""
        if not self.is_square():
            return None
        images = []
        for j in range(self.ncols):
            col = [self.get(i, j) for i in range(self.nrows)]
            ones = [i for i, x in enumerate(col) if x == 1]
            if len(ones) != 1 or any(x not in (0, 1) for x in col):
                return None
            images.append(ones[0] + 1)
        return images if len(set(images)) == self.ncols else None

    def to_json_rows(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows()]

    @staticmethod
    def from_json_rows(rows: Sequence[Sequence[str]]) -> "QMatrix":
        return QMatrix.from_rows([[parse_rational(x) for x in r] for r in rows])


def assemble_blocks(num_blocks: int, block_size: int, blocks: Mapping[tuple[int, int], QMatrix]) -> QMatrix:
    """Assemble an (num_blocks*block_size) square matrix from square blocks.

    blocks maps 0-based (block_row, block_col) to a block_size x block_size
    QMatrix; absent positions are zero.
    """
    n = num_blocks * block_size
    entries = [Fraction(0)] * (n * n)
    for (bi, bj), m in blocks.items():
        if m.nrows != block_size or m.ncols != block_size:
            raise ValueError(f"block at {(bi, bj)} is {m.nrows}x{m.ncols}, expected {block_size}")
        for i in range(block_size):
            base = (bi * block_size + i) * n + bj * block_size
            for j in range(block_size):
                entries[base + j] = m.get(i, j)
    return QMatrix(n, n, entries)


def _cleared_int_rows(m: QMatrix) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; returns (int rows, product of row scales)."""
    rows = []
    scale = Fraction(1)
    for i in range(m.nrows):
        r = m.row(i)
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        rows.append([int(x * lcm) for x in r])
        scale *= lcm
    return rows, scale


def _bareiss_det_int(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def qmatrix_det(m: QMatrix) -> Fraction:
    """Exact determinant (Bareiss on the denominator-cleared matrix)."""
    if not m.is_square():
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    rows, scale = _cleared_int_rows(m)
    return Fraction(_bareiss_det_int(rows)) / scale


def matrix_rank(m: QMatrix) -> int:
    """Exact rank via fraction-free elimination with column skipping."""
    rows, _ = _cleared_int_rows(m)
    nr, nc = m.nrows, m.ncols
    rank = 0
    prev = 1
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        rank += 1
        r += 1
        if r == nr:
            break
    return rank


def charpoly_det(m: QMatrix, var: str = "z") -> UniPoly:
    """det(I - z*M) as a UniPoly in z.

    Power sums p_k = tr(M^k) feed Newton's identities for the elementary
    symmetric functions e_k of the eigenvalues; the result is
    sum_k (-1)^k e_k z^k.  The 0x0 matrix gives the constant 1.
    """
    if not m.is_square():
        raise NotSquare(f"char expansion of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return UniPoly([Fraction(1)], var=var)
    psums = []
    mk = m
    for k in range(n):
        psums.append(mk.trace())
        if k + 1 < n:
            mk = mk * m
    e = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * psums[i - 1]
        e.append(acc / k)
    return UniPoly([(-1) ** k * e[k] for k in range(n + 1)], var=var)


class EchelonSelector:
    """Greedy maximal-independent-subset accumulator over Q.

    offer() returns True iff the vector is independent of everything
    accepted so far, in which case it joins the echelon.
    """

    def __init__(self, width: int):
        self.width = width
        self._pivot_rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def offer(self, vec: Sequence) -> bool:
        v = [Fraction(x) for x in vec]
        if len(v) != self.width:
            raise ValueError(f"expected width {self.width}, got {len(v)}")
        while True:
            lead = next((i for i, a in enumerate(v) if a), None)
            if lead is None:
                return False
            pivot = self._pivot_rows.get(lead)
            if pivot is None:
                inv = Fraction(1) / v[lead]
                self._pivot_rows[lead] = [a * inv for a in v]
                return True
            c = v[lead]
            v = [a - c * b for a, b in zip(v, pivot)]


def select_independent(vectors: Iterable[Sequence], width: int) -> list[int]:
    """Indices of a greedy maximal linearly independent subset, in input order."""
    sel = EchelonSelector(width)
    return [i for i, v in enumerate(vectors) if sel.offer(v)]
