"""Exact linear algebra over the rationals.

Matrices are lists (or tuples) of rows of ``fractions.Fraction``.  Everything
here is pure and allocation-happy rather than clever: dimensions never exceed
a few dozen for the algebras this package handles, so clarity wins.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

F0 = Fraction(0)
F1 = Fraction(1)


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(row) for row in rows)


def zeros(n: int) -> Vector:
    return (F0,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(F1 if j == i else F0 for j in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Fraction, a: Vector) -> Vector:
    if c == 0:
        return zeros(len(a))
    return tuple(c * x for x in a)


def vec_dot(a: Vector, b: Vector) -> Fraction:
    total = F0
    for x, y in zip(a, b, strict=True):
        if x and y:
            total += x * y
    return total


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def mat_vec(m: Sequence[Sequence[Fraction]], v: Vector) -> Vector:
    out = []
    for row in m:
        total = F0
        for entry, x in zip(row, v, strict=True):
            if entry and x:
                total += entry * x
        out.append(total)
    return tuple(out)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(vec_dot(tuple(row), col) for col in bt) for row in a)


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in col) for col in zip(*m))


def mat_neg(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(tuple(-x for x in row) for row in m)


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with unit pivots; zero rows are dropped.

    Returns the echelon rows and the pivot column of each row.  The output is
    canonical: two row sets spanning the same space reduce to identical
    matrices, which is what Subspace equality relies on.
    """
    work = [list(row) for row in rows if not is_zero_vec(row)]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        if pv != 1:
            inv = F1 / pv
            work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    reduced = tuple(tuple(row) for row in work[:r])
    return reduced, tuple(pivots)


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    reduced, _ = rref(rows)
    return len(reduced)


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> Matrix:
    """Canonical basis of {x : M x = 0}, as rows."""
    rows = [tuple(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [F0] * ncols
        v[fc] = F1
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    reduced_basis, _ = rref(basis)
    return reduced_basis


def solve(m: Sequence[Sequence[Fraction]], b: Vector) -> Vector | None:
    """One solution of M x = b, or None if inconsistent."""
    rows = [list(row) + [bb] for row, bb in zip(m, b, strict=True)]
    ncols = len(m[0]) if m else 0
    reduced, pivots = rref(rows)
    x = [F0] * ncols
    for row, pc in zip(reduced, pivots):
        if pc == ncols:
            return None
    for row, pc in zip(reduced, pivots):
        x[pc] = row[ncols]
    # Verify: with free columns fixed at zero this is only valid if the
    # residual vanishes, which rref already guarantees for consistent systems.
    return tuple(x)


def mat_inv(m: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(m)
    aug = [list(row) + list(unit_vector(n, i)) for i, row in enumerate(m)]
    reduced, pivots = rref(aug)
    if len(reduced) != n or any(p != i for i, p in enumerate(pivots)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(m)
    work = [list(row) for row in m]
    result = F1
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return F0
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            result = -result
        pv = work[c][c]
        result *= pv
        inv = F1 / pv
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return result


def is_symmetric(m: Sequence[Sequence[Fraction]]) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def is_positive_definite(m: Sequence[Sequence[Fraction]]) -> bool:
    """Exact test via the LDL pivots of a symmetric rational matrix."""
    n = len(m)
    work = [[Fraction(x) for x in row] for row in m]
    for k in range(n):
        pivot = work[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            if work[i][k] != 0:
                f = work[i][k] / pivot
                for j in range(k, n):
                    work[i][j] -= f * work[k][j]
    return True


def nonpositive_direction(m: Sequence[Sequence[Fraction]]) -> Vector | None:
    """A rational x with x^T M x <= 0 for symmetric M, or None if M is positive definite.

    Found while running the same elimination as :func:`is_positive_definite`;
    the returned vector is exact, so it can serve as a counterexample witness.
    """
    n = len(m)
    work = [[Fraction(x) for x in row] for row in m]
    # Track the congruence transform so a failing pivot maps back to a vector.
    trans = [list(unit_vector(n, i)) for i in range(n)]
    for k in range(n):
        pivot = work[k][k]
        if pivot <= 0:
            return tuple(trans[k])
        for i in range(k + 1, n):
            if work[i][k] != 0:
                f = work[i][k] / pivot
                for j in range(k, n):
                    work[i][j] -= f * work[k][j]
                trans[i] = [a - f * b for a, b in zip(trans[i], trans[k])]
    return None


class Subspace:
    """A rational subspace held in reduced row echelon form.

    The echelon normal form makes equality canonical: two spans of the same
    space construct identical objects.
    """

    __slots__ = ("rows", "ambient_dim")

    def __init__(self, rows: Iterable[Sequence[Fraction]], ambient_dim: int):
        reduced, _ = rref([tuple(Fraction(x) for x in r) for r in rows])
        self.rows: Matrix = reduced
        self.ambient_dim = ambient_dim

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Sequence[Fraction]) -> bool:
        rem = list(Fraction(x) for x in v)
        for row in self.rows:
            pc = next(i for i, x in enumerate(row) if x != 0)
            if rem[pc] != 0:
                f = rem[pc]
                for i in range(len(rem)):
                    rem[i] -= f * row[i]
        return all(x == 0 for x in rem)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.rows + other.rows, self.ambient_dim)
