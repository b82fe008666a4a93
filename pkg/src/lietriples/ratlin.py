"""Exact rational linear algebra.

Everything downstream (Lie brackets, Killing forms, enveloping-algebra
reductions) runs on top of this module.  All arithmetic uses
``fractions.Fraction``; floating point is never allowed to enter.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rat = Fraction


class AmbientMismatch(ValueError):
    """Two subspaces of different ambient dimension were combined."""


class NonSymmetric(ValueError):
    """A symmetric matrix was required."""


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class RatMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(_rat(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(values: Sequence) -> "RatMatrix":
        n = len(values)
        return RatMatrix(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_columns(ambient: int, columns: Sequence[Sequence]) -> "RatMatrix":
        cols = [tuple(_rat(x) for x in c) for c in columns]
        for c in cols:
            if len(c) != ambient:
                raise ValueError("column of wrong length")
        return RatMatrix([[c[i] for c in cols] for i in range(ambient)])

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in row] for row in self.entries])

    def scale(self, c) -> "RatMatrix":
        c = _rat(c)
        return RatMatrix([[c * a for a in row] for row in self.entries])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose().entries
        out = []
        for ra in self.entries:
            out.append([sum(a * b for a, b in zip(ra, rc)) for rc in ot])
        return RatMatrix(out)

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector, returned as a list of Fractions."""
        v = [_rat(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError("vector of wrong length")
        return [sum(a * b for a, b in zip(row, v)) for row in self.entries]

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        e = self.entries
        return all(
            e[i][j] == e[j][i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def trace(self) -> Fraction:
        return sum(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        if inv != 1:
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


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Rank via fraction-free (Bareiss) elimination on an integer matrix."""
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, n_rows):
            if all(x == 0 for x in rows[i]):
                continue
            ri, rr = rows[i], rows[r]
            rows[i] = [(piv * ri[j] - ri[c] * rr[j]) // prev for j in range(n_cols)]
        prev = piv
        r += 1
        if r == n_rows:
            break
    return r


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    out = []
    for row in m.entries:
        scale = 1
        for x in row:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def rank(m: RatMatrix) -> int:
    """Rank over the rationals, computed fraction-free."""
    return _bareiss_rank(_integer_rows(m))


def kernel(m: RatMatrix) -> "SubspaceBasis":
    """Canonical basis of the null space {x : m x = 0}."""
    rows = [list(r) for r in m.entries]
    rows, pivots = _rref(rows)
    n_cols = m.cols
    free = [c for c in range(n_cols) if c not in pivots]
    vectors = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r_idx, pc in enumerate(pivots):
            v[pc] = -rows[r_idx][fc]
        vectors.append(v)
    return SubspaceBasis(n_cols, vectors)


def solve(m: RatMatrix, v: Sequence) -> Optional[list]:
    """Some exact solution x of m x = v, or None if the system is inconsistent.

    Free variables are set to zero, so the returned solution is deterministic.
    """
    vv = [_rat(x) for x in v]
    if len(vv) != m.rows:
        raise ValueError("right-hand side of wrong length")
    rows = [list(r) + [vv[i]] for i, r in enumerate(m.entries)]
    rows, pivots = _rref(rows)
    n_cols = m.cols
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for r_idx, pc in enumerate(pivots):
        x[pc] = rows[r_idx][n_cols]
    return x


def inverse(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise ValueError("not square")
    n = m.rows
    rows = [
        list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
        for i, r in enumerate(m.entries)
    ]
    rows, pivots = _rref(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible")
    return RatMatrix([row[n:] for row in rows])


def signature(s: RatMatrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric matrix.

    Exact symmetric congruence diagonalization; no characteristic polynomial
    and no floating point anywhere.
    """
    if not s.is_symmetric():
        raise NonSymmetric("signature requires a symmetric matrix")
    n = s.rows
    a = [list(row) for row in s.entries]
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            # Try to bring a nonzero entry onto the diagonal by congruence.
            swapped = False
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    for t in range(n):
                        a[k][t], a[j][t] = a[j][t], a[k][t]
                    for t in range(n):
                        a[t][k], a[t][j] = a[t][j], a[t][k]
                    swapped = True
                    break
            if not swapped:
                for j in range(k + 1, n):
                    if a[k][j] != 0:
                        # row/col k += row/col j turns the 2x2 hyperbolic
                        # block into one with nonzero diagonal.
                        for t in range(n):
                            a[k][t] = a[k][t] + a[j][t]
                        for t in range(n):
                            a[t][k] = a[t][k] + a[t][j]
                        swapped = True
                        break
        piv = a[k][k]
        if piv == 0:
            zero += 1
            continue
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / piv
                for t in range(n):
                    a[i][t] = a[i][t] - f * a[k][t]
                for t in range(n):
                    a[t][i] = a[t][i] - f * a[t][k]
    return pos, neg, zero


class SubspaceBasis:
    """A rational subspace in canonical (reduced echelon) form.

    Stored as a tuple of basis vectors with leading coefficient 1 at strictly
    increasing pivot positions and zeros above/below each pivot.  Two
    SubspaceBasis values are equal exactly when they span the same subspace.
    """

    __slots__ = ("ambient_dim", "vectors")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence]):
        rows = [[_rat(x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError("vector of wrong length")
        rows, pivots = _rref(rows)
        rows = rows[: len(pivots)]
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in rows))

    def __setattr__(self, name, value):
        raise AttributeError("SubspaceBasis is immutable")

    @staticmethod
    def full(ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, RatMatrix.identity(ambient_dim).entries)

    @staticmethod
    def zero(ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, [])

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def matrix(self) -> RatMatrix:
        """Basis vectors as columns of an ambient_dim x dim matrix."""
        return RatMatrix.from_columns(self.ambient_dim, list(self.vectors))

    def pivots(self) -> list[int]:
        out = []
        for v in self.vectors:
            for i, x in enumerate(v):
                if x != 0:
                    out.append(i)
                    break
        return out

    def contains(self, vec: Sequence) -> bool:
        v = [_rat(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector of wrong ambient dimension")
        for basis_vec, pivot in zip(self.vectors, self.pivots()):
            if v[pivot] != 0:
                f = v[pivot]
                v = [a - f * b for a, b in zip(v, basis_vec)]
        return all(x == 0 for x in v)

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def coordinates(self, vec: Sequence) -> Optional[list]:
        """Coefficients of vec in this basis, or None if vec is outside."""
        return solve(self.matrix(), vec)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vectors))

    def __repr__(self):
        return f"SubspaceBasis(dim {self.dim} in R^{self.ambient_dim})"


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspace_sum over different ambient spaces")
    return SubspaceBasis(a.ambient_dim, list(a.vectors) + list(b.vectors))


def subspace_intersection(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """aranged as the kernel of the concatenated coefficient system.

    A vector in the intersection is A x = B y; solve for (x, y) in the kernel
    of [A | -B] and map x back through A.
    """
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspace_intersection over different ambient spaces")
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis.zero(a.ambient_dim)
    am = a.matrix()
    bm = b.matrix()
    stacked = RatMatrix(
        [list(am.row(i)) + [-x for x in bm.row(i)] for i in range(a.ambient_dim)]
    )
    ker = kernel(stacked)
    vectors = []
    for kv in ker.vectors:
        x = kv[: a.dim]
        vectors.append(am.apply(x))
    return SubspaceBasis(a.ambient_dim, vectors)
