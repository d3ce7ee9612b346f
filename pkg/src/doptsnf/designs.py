"""Construction of the design families: tournaments, bordered skew matrices,
two-block assemblies, and the doubled constructions.

The two ``build_example_*`` functions reproduce the library's reference
designs of orders 26 and 66 from hard-coded circulant first rows; their
expected Gram identities and Smith normal forms are pinned by the test
suite. Determinant signs are whatever the construction produces — nothing
here normalizes signs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import (
    DimensionError,
    IntMatrix,
    block2x2,
    circulant,
    kronecker,
    matmul,
)


class NormalizationError(ValueError):
    """A matrix is not in the normal form an operation requires."""


#: First row of the order-13 circulant block of the order-26 design.
EXAMPLE_26_CIRCULANT_ROW = (1, 1, 1, 1, -1, 1, -1, -1, 1, 1, 1, -1, 1)

#: First row of the order-11 circulant seed of the order-66 design.
EXAMPLE_66_CIRCULANT_ROW = (0, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1)


@dataclass(frozen=True)
class Tournament:
    """A 0/1 tournament matrix: A + A^T = J - I, zero diagonal.

    The invariant is enforced at construction time, so any Tournament in
    circulation is valid.
    """

    order: int
    matrix: IntMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        if not m.is_square or m.rows != self.order:
            raise ValueError(f"matrix is not square of order {self.order}")
        n = self.order
        for i in range(n):
            for j in range(n):
                v = m.at(i, j)
                if i == j:
                    if v != 0:
                        raise ValueError("tournament diagonal must be zero")
                elif v not in (0, 1) or v + m.at(j, i) != 1:
                    raise ValueError(
                        f"entries ({i},{j})/({j},{i}) do not orient exactly one arc"
                    )

    @classmethod
    def from_matrix(cls, m: IntMatrix) -> "Tournament":
        return cls(m.rows, m)


@dataclass(frozen=True)
class BlockEwSpec:
    """Two square blocks R1, R2 assembled as [[R1, R2], [-R2^T, R1^T]]."""

    r1_block: IntMatrix
    r2_block: IntMatrix

    def __post_init__(self) -> None:
        r1, r2 = self.r1_block, self.r2_block
        if not (r1.is_square and r2.is_square and r1.rows == r2.rows):
            raise DimensionError("blocks must be square and of equal order")

    def assemble(self) -> IntMatrix:
        r1, r2 = self.r1_block, self.r2_block
        return block2x2(r1, r2, -(r2.transpose()), r1.transpose())


def skew_from_tournament(t: Tournament) -> IntMatrix:
    """Bordered +-1 matrix of order n+1 from a tournament of order n.

    The first row is all ones, the first column below it all minus ones, and
    the trailing block is I + A - A^T. The result always satisfies
    S + S^T = 2I.
    """
    a = t.matrix
    n = t.order
    at = a.transpose()
    rows = [[1] * (n + 1)]
    for i in range(n):
        rows.append([-1] + [int(i == j) + a.at(i, j) - at.at(i, j) for j in range(n)])
    return IntMatrix.from_rows(rows)


def tournament_from_skew(s: IntMatrix) -> Tournament:
    """Inverse of skew_from_tournament; rejects anything not in that exact form.

    The input must be a +-1 matrix with S + S^T = 2I, an all-ones first row
    and an all-minus-ones first column. Other normalizations are rejected
    rather than silently repaired (see normalize_skew_to_border).
    """
    if not s.is_square:
        raise NormalizationError("input must be square")
    n = s.rows - 1
    if n < 1:
        raise NormalizationError("input must have order at least 2")
    if any(v not in (1, -1) for v in s.entries):
        raise NormalizationError("entries must be +-1")
    if s + s.transpose() != 2 * IntMatrix.identity(n + 1):
        raise NormalizationError("input is not skew-type (S + S^T != 2I)")
    if any(s.at(0, j) != 1 for j in range(n + 1)):
        raise NormalizationError("first row must be all ones")
    if any(s.at(i, 0) != -1 for i in range(1, n + 1)):
        raise NormalizationError("first column below the corner must be all minus ones")
    a_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            m = s.at(i + 1, j + 1)
            row.append((m + 1 - 2 * int(i == j)) // 2)
        a_rows.append(row)
    return Tournament.from_matrix(IntMatrix.from_rows(a_rows))


def normalize_skew_to_border(s: IntMatrix) -> IntMatrix:
    """Conjugate a skew-type +-1 matrix by signs into the bordered form.

    Flipping row j and column j together (eps_j = s[0][j]) preserves
    skew-type and Smith normal form while making the first row all ones and
    the first column all minus ones, after which tournament_from_skew
    applies.
    """
    if not s.is_square:
        raise NormalizationError("input must be square")
    if any(v not in (1, -1) for v in s.entries):
        raise NormalizationError("entries must be +-1")
    n = s.rows
    if s + s.transpose() != 2 * IntMatrix.identity(n):
        raise NormalizationError("input is not skew-type (S + S^T != 2I)")
    eps = [s.at(0, j) for j in range(n)]
    return IntMatrix.from_rows(
        [[eps[i] * eps[j] * s.at(i, j) for j in range(n)] for i in range(n)]
    )


def build_example_26() -> IntMatrix:
    """Order-26 two-block design from one order-13 circulant."""
    r = circulant(EXAMPLE_26_CIRCULANT_ROW)
    return BlockEwSpec(r, r).assemble()


def build_example_66() -> IntMatrix:
    """Order-66 two-block design from an order-11 circulant seed.

    The seed A satisfies A = -A^T and AA^T = 11I - J; the two order-33
    blocks are Kronecker combinations of A with 3x3 patterns.
    """
    a = circulant(EXAMPLE_66_CIRCULANT_ROW)
    n = a.rows
    i3 = IntMatrix.identity(3)
    j3 = IntMatrix.all_ones(3)
    i11 = IntMatrix.identity(n)
    j11 = IntMatrix.all_ones(n)
    r1 = kronecker(a + i11, j3 - i3) + kronecker(j11 - 2 * i11, i3)
    r2 = kronecker(a + i11, j3 - i3) + kronecker(-a + i11, i3)
    return BlockEwSpec(r1, r2).assemble()


def is_barba(r: IntMatrix) -> bool:
    """Whether RR^T = R^TR = (n-1)I + J (a +-1 matrix is required)."""
    if not r.is_square:
        raise DimensionError("is_barba needs a square matrix")
    if any(v not in (1, -1) for v in r.entries):
        raise ValueError("entries must be +-1")
    n = r.rows
    target = (n - 1) * IntMatrix.identity(n) + IntMatrix.all_ones(n)
    rt = r.transpose()
    return matmul(r, rt) == target and matmul(rt, r) == target


def barba_double(r: IntMatrix) -> IntMatrix:
    """Double an odd-order +-1 matrix to [[R, R], [-R^T, R^T]] of order 2n."""
    if not r.is_square:
        raise DimensionError("barba_double needs a square matrix")
    if any(v not in (1, -1) for v in r.entries):
        raise ValueError("entries must be +-1")
    return BlockEwSpec(r, r).assemble()
