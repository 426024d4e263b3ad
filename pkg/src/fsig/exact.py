"""Exact integer and rational linear algebra kernel.

Scalars are Python ints (arbitrary precision) and fractions.Fraction, so no
overflow is possible and every result is exact.  Matrices and vectors are
immutable tuples; all functions here are pure, which makes them safe for
concurrent use.

The Hermite normal form convention used throughout the package: row-style,
upper echelon, positive pivots, and every entry above a pivot reduced into
[0, pivot).  Lattice coordinates elsewhere in the package are always taken
against a basis in this form.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable rectangular matrix with arbitrary-precision integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.rows)) if self.rows else ())


def dot(u: Sequence, v: Sequence):
    """Scalar product; works for int and Fraction entries alike."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch in scalar product")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def is_zero_vector(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def _hermite_rows(rows, track):
    """Shared HNF worker; returns (basis rows, transform rows or None)."""
    work = [list(r) for r in rows]
    n = len(work)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if track else None
    ncols = len(work[0]) if work else 0
    r = 0
    for col in range(ncols):
        # Euclid on the column below r until at most one nonzero entry is left.
        while True:
            nz = [i for i in range(r, n) if work[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(work[i][col]), i))
            if i0 != r:
                work[r], work[i0] = work[i0], work[r]
                if track:
                    u[r], u[i0] = u[i0], u[r]
            others = [i for i in range(r + 1, n) if work[i][col] != 0]
            if not others:
                break
            p = work[r][col]
            for i in others:
                q = work[i][col] // p
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                if track:
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        if r < n and work[r][col] != 0:
            if work[r][col] < 0:
                work[r] = [-a for a in work[r]]
                if track:
                    u[r] = [-a for a in u[r]]
            p = work[r][col]
            for i in range(r):
                q = work[i][col] // p  # floor division puts the entry in [0, p)
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                    if track:
                        u[i] = [a - q * b for a, b in zip(u[i], u[r])]
            r += 1
            if r == n:
                break
    basis = [tuple(row) for row in work[:r]]
    transform = [tuple(row) for row in u[:r]] if track else None
    return basis, transform


def hermite_basis(m: IntegerMatrix) -> IntegerMatrix:
    """Row-style Hermite normal form basis of the row lattice of m.

    The result has full row rank equal to the rank of m and the same integer
    row span; a zero matrix yields an empty basis of rank 0.  Idempotent.
    """
    if m.nrows < 1:
        raise ValueError("hermite_basis requires at least one row")
    basis, _ = _hermite_rows(m.rows, track=False)
    return IntegerMatrix(tuple(basis))


def hermite_basis_with_transform(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Hermite basis H together with an integer transform U with U @ m = H."""
    if m.nrows < 1:
        raise ValueError("hermite_basis requires at least one row")
    basis, transform = _hermite_rows(m.rows, track=True)
    return IntegerMatrix(tuple(basis)), IntegerMatrix(tuple(transform))


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _pivot_columns(basis: IntegerMatrix) -> list[int]:
    pivots = []
    for row in basis.rows:
        for j, entry in enumerate(row):
            if entry != 0:
                pivots.append(j)
                break
        else:
            raise ValueError("basis contains a zero row")
    return pivots


def express_in_basis(v: Sequence[int], basis: IntegerMatrix) -> Vector | None:
    """Coefficients c with c @ basis = v, or None if v is outside the lattice.

    The basis must be in the Hermite form produced by hermite_basis, so the
    coefficients are read off by forward substitution on the pivot columns.
    """
    if basis.nrows and len(v) != basis.ncols:
        raise ValueError("vector length does not match basis width")
    residual = [int(x) for x in v]
    coeffs = []
    for row, p in zip(basis.rows, _pivot_columns(basis)):
        c, rem = divmod(residual[p], row[p])
        if rem != 0:
            return None
        if c:
            residual = [a - c * b for a, b in zip(residual, row)]
        coeffs.append(c)
    if any(residual):
        return None
    return tuple(coeffs)


def solve_integer_combination(m: IntegerMatrix, target: Sequence[int]) -> Vector | None:
    """Some integer row combination a with a @ m = target, or None."""
    basis, transform = hermite_basis_with_transform(m)
    coeffs = express_in_basis(target, basis)
    if coeffs is None:
        return None
    a = [0] * m.nrows
    for c, urow in zip(coeffs, transform.rows):
        if c:
            a = [x + c * y for x, y in zip(a, urow)]
    return tuple(a)


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank


def solve_linear_system(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve a square nonsingular rational system; None if singular."""
    n = len(rows)
    if n == 0:
        return ()
    if any(len(row) != n for row in rows) or len(rhs) != n:
        raise ValueError("solve_linear_system expects a square system")
    work = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return tuple(row[n] for row in work)


def rational_determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix with rational entries."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("rational_determinant requires a square matrix")
    work = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(col + 1, n):
            if work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return det


def primitive_vector(vec: Sequence) -> Vector:
    """The unique primitive integer vector that is a positive multiple of vec."""
    fracs = [Fraction(x) for x in vec]
    if all(x == 0 for x in fracs):
        raise ValueError("the zero vector has no primitive form")
    denom = lcm(*(x.denominator for x in fracs))
    ints = [int(x * denom) for x in fracs]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def extended_gcd_vector(values: Sequence[int]) -> tuple[int, Vector]:
    """gcd g of values and integer coefficients c with c . values = g."""
    if not values:
        raise ValueError("extended_gcd_vector requires at least one value")
    g = 0
    coeffs = [0] * len(values)
    for k, a in enumerate(values):
        if a == 0:
            continue
        if g == 0:
            g = abs(a)
            coeffs = [0] * len(values)
            coeffs[k] = 1 if a > 0 else -1
            continue
        # Euclid on (g, a), tracking coefficients of g only.
        old_r, r = g, a
        old_s, s = 1, 0
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
        # old_s * g + t * a = old_r with t = (old_r - old_s * g) / a
        t = (old_r - old_s * g) // a
        coeffs = [old_s * c for c in coeffs]
        coeffs[k] += t
        g = old_r
        if g < 0:
            g = -g
            coeffs = [-c for c in coeffs]
    return g, tuple(coeffs)


def lattice_points_in_box(basis: IntegerMatrix, bounds: Sequence[int]) -> Iterator[Vector]:
    """All points of the row lattice of basis inside the box prod [0, bounds[j]].

    The basis must be in Hermite form.  Coefficients are iterated pivot by
    pivot; once a coefficient is fixed, every coordinate left of the next
    pivot is final and is checked against the box, which prunes the search.
    """
    bounds = [int(b) for b in bounds]
    if any(b < 0 for b in bounds):
        return
    ncols = len(bounds)
    d = basis.nrows
    if d == 0:
        yield (0,) * ncols
        return
    if basis.ncols != ncols:
        raise ValueError("bounds length does not match basis width")
    rows = basis.rows
    pivots = _pivot_columns(basis)
    point = [0] * ncols

    def rec(k: int) -> Iterator[Vector]:
        start = pivots[k - 1] + 1 if k > 0 else 0
        end = pivots[k] if k < d else ncols
        for j in range(start, end):
            if not 0 <= point[j] <= bounds[j]:
                return
        if k == d:
            yield tuple(point)
            return
        row = rows[k]
        p = pivots[k]
        step = row[p]
        lo = -(point[p] // step)
        hi = (bounds[p] - point[p]) // step
        for c in range(lo, hi + 1):
            if c:
                for j in range(p, ncols):
                    point[j] += c * row[j]
            yield from rec(k + 1)
            if c:
                for j in range(p, ncols):
                    point[j] -= c * row[j]

    yield from rec(0)
