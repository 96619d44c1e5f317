"""Exact integer matrices: incidence, cardinality, line adjacency, signless
Laplacian, and rational kernel/rank computation.

Everything here is exact (Python big integers and fractions); floating
point appears only downstream in the eigensolver. Matrices are dense and
immutable; instances at the intended scale are tiny.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .core import Hypergraph, Multigraph
from .line import line_multigraph


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(int(x) for row in rows for x in row))

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> "IntMatrix":
        vals = list(values)
        n = len(vals)
        ent = [0] * (n * n)
        for i, v in enumerate(vals):
            ent[i * n + i] = int(v)
        return cls(n, n, tuple(ent))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diagonal([1] * n)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ent = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                ent.append(
                    sum(ri[k] * other.at(k, j) for k in range(self.cols))
                )
        return IntMatrix(self.rows, other.cols, tuple(ent))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def scaled(self, t: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(t * x for x in self.entries))

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum(self.at(i, i) for i in range(self.rows))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def to_text(self) -> str:
        """Plain-text dump: "rows cols" then one space-separated line per row."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in self.row(i)) for i in range(self.rows)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RationalVector:
    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[Fraction | int]):
        object.__setattr__(
            self, "entries", tuple(Fraction(x) for x in entries)
        )

    def __len__(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def incidence_matrix(h: Hypergraph) -> IntMatrix:
    """0/1 vertex-by-edge membership matrix (n x m), edges in input order."""
    ent = [0] * (h.n * h.m)
    for j, e in enumerate(h.edges):
        for v in e:
            ent[v * h.m + j] = 1
    return IntMatrix(h.n, h.m, tuple(ent))


def cardinality_matrix(h: Hypergraph) -> IntMatrix:
    """Diagonal m x m matrix of edge cardinalities."""
    return IntMatrix.diagonal(len(e) for e in h.edges)


def adjacency_matrix(g: Multigraph) -> IntMatrix:
    """Symmetric multiplicity matrix with zero diagonal."""
    n = g.order
    ent = [0] * (n * n)
    for i, j, mult in g.pairs():
        ent[i * n + j] = mult
        ent[j * n + i] = mult
    return IntMatrix(n, n, tuple(ent))


def signless_laplacian(h: Hypergraph) -> IntMatrix:
    """B B^T: degrees on the diagonal, co-membership counts off it."""
    b = incidence_matrix(h)
    return b @ b.transpose()


def gram_identity_check(h: Hypergraph) -> bool:
    """Exact entrywise test of B^T B = C + A_L.

    Always true for a correct implementation; exposed as a loud self-test.
    """
    b = incidence_matrix(h)
    lhs = b.transpose() @ b
    rhs = cardinality_matrix(h) + adjacency_matrix(line_multigraph(h).graph)
    return lhs == rhs


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def exact_rank(matrix: IntMatrix) -> int:
    rows = [[Fraction(x) for x in matrix.row(i)] for i in range(matrix.rows)]
    return len(_row_reduce(rows)[1])


def _normalize_integer(vec: list[Fraction]) -> RationalVector:
    # scale to integers with content 1, first non-zero entry positive
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return RationalVector(ints)


def exact_kernel(
    matrix: IntMatrix, fixed_zero_columns: Iterable[int] = ()
) -> list[RationalVector]:
    """Integer basis of the null space, zero on the fixed columns.

    The kernel is taken over the columns outside `fixed_zero_columns` and
    re-embedded with zeros there. Basis vectors are normalized to content-1
    integer vectors with positive leading entry, ordered by free column,
    so output is reproducible.
    """
    fixed = set(fixed_zero_columns)
    active = [c for c in range(matrix.cols) if c not in fixed]
    if not active:
        return []
    rows = [
        [Fraction(matrix.at(i, c)) for c in active] for i in range(matrix.rows)
    ]
    rref, pivots = _row_reduce(rows)
    pivot_set = set(pivots)
    basis: list[RationalVector] = []
    for f in range(len(active)):
        if f in pivot_set:
            continue
        wide = [Fraction(0)] * matrix.cols
        wide[active[f]] = Fraction(1)
        for r_idx, p in enumerate(pivots):
            wide[active[p]] = -rref[r_idx][f]
        basis.append(_normalize_integer(wide))
    return basis


def matrix_vector(matrix: IntMatrix, vec: RationalVector) -> RationalVector:
    if matrix.cols != len(vec):
        raise ValueError("dimension mismatch")
    return RationalVector(
        sum(Fraction(matrix.at(i, j)) * vec.entries[j] for j in range(matrix.cols))
        for i in range(matrix.rows)
    )
