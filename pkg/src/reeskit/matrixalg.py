"""Matrices over a polynomial ring: kinds, determinants, Pfaffians, minors.

A PolyMatrix carries one of three kinds.  Symmetric and alternating matrices
are validated entrywise at construction; the common homogeneous entry degree
(when it exists) is computed once and cached.

Determinants switch from cofactor expansion to fraction-free (Bareiss)
elimination at size 5; both algorithms stay public so they can serve as each
other's oracle.  Pfaffians use the first-row Laplace expansion with a shared
memo over index subsets, and the Pfaffian adjoint is the alternating matrix
whose (i, j) entry, i < j, is (-1)^(i+j) times the Pfaffian of the matrix
with rows and columns i, j deleted; it satisfies pfadj(M)*M = Pf(M)*I.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, ExactDivisionError, KindShapeError
from .poly import (
    ALL_DEGREES,
    FieldSpec,
    MonomialOrder,
    PolyRing,
    Polynomial,
    coefficient_ops,
    homogeneous_degree,
    mon_div,
)


class MatrixKind(str, Enum):
    ORDINARY = "ordinary"
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"


def _as_kind(kind) -> MatrixKind:
    if isinstance(kind, MatrixKind):
        return kind
    try:
        return MatrixKind(kind)
    except ValueError:
        raise KindShapeError(f"unknown matrix kind {kind!r}") from None


class PolyMatrix:
    """Rectangular matrix of polynomials with a declared kind.

    Immutable.  `entry_degree` is the common homogeneous degree of the
    entries when one exists (zero entries are compatible with any degree),
    otherwise None.
    """

    __slots__ = ("kind", "ring", "_rows", "m", "n", "entry_degree")

    def __init__(self, kind, entries: Iterable[Iterable[Polynomial]], ring: PolyRing | None = None):
        kind = _as_kind(kind)
        rows = tuple(tuple(row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise KindShapeError("ragged entry grid")
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if not rows:
            if ring is None:
                raise KindShapeError("an empty matrix needs an explicit ring")
        else:
            ring = rows[0][0].ring
            for row in rows:
                for e in row:
                    if not isinstance(e, Polynomial):
                        raise KindShapeError(f"entry {e!r} is not a Polynomial")
                    if e.ring != ring:
                        raise KindShapeError("entries live in different rings")
        if kind in (MatrixKind.SYMMETRIC, MatrixKind.ALTERNATING) and m != n:
            raise KindShapeError(f"{kind.value} matrix must be square, got {m}x{n}")
        if kind is MatrixKind.SYMMETRIC:
            for i in range(m):
                for j in range(i + 1, n):
                    if rows[i][j] != rows[j][i]:
                        raise KindShapeError(f"symmetric violation at ({i + 1},{j + 1})")
        if kind is MatrixKind.ALTERNATING:
            for i in range(m):
                if not rows[i][i].is_zero:
                    raise KindShapeError(f"alternating matrix has nonzero diagonal at ({i + 1},{i + 1})")
                for j in range(i + 1, n):
                    if rows[i][j] != -rows[j][i]:
                        raise KindShapeError(f"alternating violation at ({i + 1},{j + 1})")
        self.kind = kind
        self.ring = ring
        self._rows = rows
        self.m = m
        self.n = n
        self.entry_degree = self._common_degree()

    def _common_degree(self) -> int | None:
        finite: set[int] = set()
        for row in self._rows:
            for e in row:
                d = homogeneous_degree(e)
                if d is ALL_DEGREES:
                    continue
                if d is None:
                    return None
                finite.add(d)
        return finite.pop() if len(finite) == 1 else None

    def entry(self, i: int, j: int) -> Polynomial:
        return self._rows[i][j]

    @property
    def rows(self) -> tuple[tuple[Polynomial, ...], ...]:
        return self._rows

    def grid(self) -> list[list[Polynomial]]:
        return [list(row) for row in self._rows]

    def submatrix(self, row_set: Sequence[int], col_set: Sequence[int]) -> "PolyMatrix":
        """Submatrix as an ordinary matrix (indices 0-based, increasing)."""
        sub = [[self._rows[i][j] for j in col_set] for i in row_set]
        return PolyMatrix(MatrixKind.ORDINARY, sub, ring=self.ring)

    def transpose(self) -> "PolyMatrix":
        sub = [[self._rows[i][j] for i in range(self.m)] for j in range(self.n)]
        return PolyMatrix(MatrixKind.ORDINARY, sub, ring=self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.kind == other.kind and self._rows == other._rows and self.ring == other.ring

    def __hash__(self) -> int:
        return hash((self.kind, self._rows, self.ring))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self._rows)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.kind.value}, {self.m}x{self.n})"


def generic_matrix(
    m: int,
    n: int,
    kind,
    base_vars: Sequence[str] = (),
    *,
    field: FieldSpec = FieldSpec(),
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> PolyMatrix:
    """Matrix of fresh indeterminates appended to `base_vars`.

    Fresh variable counts: m*n (ordinary), n*(n+1)/2 (symmetric upper
    triangle), n*(n-1)/2 (alternating strict upper triangle).  Entry degree
    is 1.  Fresh names are x{i}_{j}, 1-based.
    """
    kind = _as_kind(kind)
    if m < 1 or n < 1:
        raise KindShapeError(f"matrix dimensions must be positive, got {m}x{n}")
    if kind in (MatrixKind.SYMMETRIC, MatrixKind.ALTERNATING) and m != n:
        raise KindShapeError(f"{kind.value} matrix must be square, got {m}x{n}")

    if kind is MatrixKind.ORDINARY:
        positions = [(i, j) for i in range(m) for j in range(n)]
    elif kind is MatrixKind.SYMMETRIC:
        positions = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        positions = [(i, j) for i in range(n) for j in range(i + 1, n)]

    fresh = [f"x{i + 1}_{j + 1}" for i, j in positions]
    base = tuple(base_vars)
    clash = set(base) & set(fresh)
    if clash:
        raise DomainError(f"base variables collide with fresh names: {sorted(clash)}")
    ring = PolyRing(base + tuple(fresh), field=field, order=order)

    var = {pos: ring.var(name) for pos, name in zip(positions, fresh)}
    zero = ring.zero()
    if kind is MatrixKind.ORDINARY:
        rows = [[var[(i, j)] for j in range(n)] for i in range(m)]
    elif kind is MatrixKind.SYMMETRIC:
        rows = [[var[(i, j)] if i <= j else var[(j, i)] for j in range(n)] for i in range(n)]
    else:
        rows = [[var[(i, j)] if i < j else (-var[(j, i)] if i > j else zero) for j in range(n)] for i in range(n)]
    return PolyMatrix(kind, rows)


# -- determinants ----------------------------------------------------------


def _det_cofactor_grid(grid: list[list[Polynomial]], ring: PolyRing) -> Polynomial:
    n = len(grid)
    if n == 0:
        return ring.one()
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    total = ring.zero()
    rest = grid[1:]
    for j, head in enumerate(grid[0]):
        if head.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rest]
        term = head * _det_cofactor_grid(minor, ring)
        total = total - term if j % 2 else total + term
    return total


def exact_quotient(num: Polynomial, den: Polynomial) -> Polynomial:
    """num / den when the division is exact; raises otherwise."""
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return num.ring.zero()
    ring = num.ring
    ops = coefficient_ops(ring.field)
    lt = den.leading_term()
    dm, dc = lt
    den_terms = den.terms
    work = dict(num.terms)
    q: dict = {}
    mkey = ring.mkey
    while work:
        wm = max(work, key=mkey)
        qm = mon_div(wm, dm)
        if qm is None:
            raise ExactDivisionError("division is not exact")
        qc = ops.div(work[wm], dc)
        q[qm] = qc
        for m, c in den_terms.items():
            mm = tuple(a + b for a, b in zip(qm, m))
            s = ops.sub(work.get(mm, 0), ops.mul(qc, c)) if mm in work else ops.neg(ops.mul(qc, c))
            if s == 0:
                work.pop(mm, None)
            else:
                work[mm] = s
    return Polynomial(ring, q, _clean=True)


def _det_bareiss_grid(grid: list[list[Polynomial]], ring: PolyRing) -> Polynomial:
    n = len(grid)
    if n == 0:
        return ring.one()
    mat = [row[:] for row in grid]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        pivot_row = k
        while pivot_row < n and mat[pivot_row][k].is_zero:
            pivot_row += 1
        if pivot_row == n:
            return ring.zero()
        if pivot_row != k:
            mat[k], mat[pivot_row] = mat[pivot_row], mat[k]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * mat[i][j] - mat[i][k] * mat[k][j]
                mat[i][j] = exact_quotient(num, prev)
            mat[i][k] = ring.zero()
        prev = pivot
    result = mat[n - 1][n - 1]
    return -result if sign < 0 else result


def det_cofactor(M: PolyMatrix) -> Polynomial:
    if M.m != M.n:
        raise KindShapeError(f"determinant needs a square matrix, got {M.m}x{M.n}")
    return _det_cofactor_grid(M.grid(), M.ring)


def det_bareiss(M: PolyMatrix) -> Polynomial:
    if M.m != M.n:
        raise KindShapeError(f"determinant needs a square matrix, got {M.m}x{M.n}")
    return _det_bareiss_grid(M.grid(), M.ring)


def determinant(M: PolyMatrix) -> Polynomial:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss above."""
    if M.m != M.n:
        raise KindShapeError(f"determinant needs a square matrix, got {M.m}x{M.n}")
    if M.n <= 4:
        return _det_cofactor_grid(M.grid(), M.ring)
    return _det_bareiss_grid(M.grid(), M.ring)


def classical_adjoint(M: PolyMatrix) -> PolyMatrix:
    """adj(M) with adj(M)*M = det(M)*I."""
    if M.m != M.n:
        raise KindShapeError(f"adjoint needs a square matrix, got {M.m}x{M.n}")
    n = M.n
    ring = M.ring
    if n == 0:
        return PolyMatrix(MatrixKind.ORDINARY, (), ring=ring)
    if n == 1:
        return PolyMatrix(MatrixKind.ORDINARY, [[ring.one()]], ring=ring)
    grid = M.grid()
    out = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            # adj entry (i, j) is the (j, i) cofactor.
            minor = [row[:i] + row[i + 1 :] for r, row in enumerate(grid) if r != j]
            cof = _det_cofactor_grid(minor, ring) if n - 1 <= 4 else _det_bareiss_grid(minor, ring)
            out[i][j] = -cof if (i + j) % 2 else cof
    return PolyMatrix(MatrixKind.ORDINARY, out, ring=ring)


# -- Pfaffians --------------------------------------------------------------


def _pfaffian_indices(M: PolyMatrix, idx: tuple[int, ...], memo: dict) -> Polynomial:
    if not idx:
        return M.ring.one()
    cached = memo.get(idx)
    if cached is not None:
        return cached
    first = idx[0]
    rest = idx[1:]
    total = M.ring.zero()
    for pos, other in enumerate(rest):
        e = M.entry(first, other)
        if e.is_zero:
            continue
        sub = rest[:pos] + rest[pos + 1 :]
        term = e * _pfaffian_indices(M, sub, memo)
        # Expansion along the first row: positions alternate +, -, +, ...
        total = total + term if pos % 2 == 0 else total - term
    memo[idx] = total
    return total


def _require_alternating_even(M: PolyMatrix, op: str):
    if M.kind is not MatrixKind.ALTERNATING:
        raise KindShapeError(f"{op} needs an alternating matrix, got {M.kind.value}")
    if M.n % 2 != 0:
        raise DomainError(f"{op} needs even size, got {M.n}")


def pfaffian(M: PolyMatrix) -> Polynomial:
    """Pf(M) by recursive Laplace expansion; Pf of the empty matrix is 1."""
    _require_alternating_even(M, "pfaffian")
    return _pfaffian_indices(M, tuple(range(M.n)), {})


def pfaffian_adjoint(M: PolyMatrix) -> PolyMatrix:
    """Alternating pfadj(M) with pfadj(M)*M = Pf(M)*I."""
    _require_alternating_even(M, "pfaffian adjoint")
    n = M.n
    ring = M.ring
    memo: dict = {}
    out = [[ring.zero()] * n for _ in range(n)]
    all_idx = range(n)
    for i in range(n):
        for j in range(i + 1, n):
            sub = tuple(k for k in all_idx if k != i and k != j)
            pf = _pfaffian_indices(M, sub, memo)
            # 1-based sign (-1)^(i+j) is (-1)^(i0+j0) with 0-based indices.
            entry = pf if (i + j) % 2 == 0 else -pf
            out[i][j] = entry
            out[j][i] = -entry
    return PolyMatrix(MatrixKind.ALTERNATING, out, ring=ring)


# -- enumeration ------------------------------------------------------------


def minor_selectors(m: int, n: int, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (row_set, col_set) pairs, lexicographic, rows outer."""
    return [(r, c) for r in combinations(range(m), t) for c in combinations(range(n), t)]


def enumerate_minors(M: PolyMatrix, t: int) -> list[Polynomial]:
    """All t x t minors, selector order lexicographic (rows outer)."""
    if not 1 <= t <= min(M.m, M.n):
        raise DomainError(f"minor size {t} out of range for a {M.m}x{M.n} matrix")
    out = []
    for rows, cols in minor_selectors(M.m, M.n, t):
        out.append(determinant(M.submatrix(rows, cols)))
    return out


def enumerate_pfaffians(M: PolyMatrix, two_t: int) -> list[Polynomial]:
    """Pfaffians of all principal two_t x two_t submatrices, lexicographic."""
    if M.kind is not MatrixKind.ALTERNATING:
        raise KindShapeError(f"pfaffian enumeration needs an alternating matrix, got {M.kind.value}")
    if two_t % 2 != 0:
        raise DomainError(f"pfaffian size must be even, got {two_t}")
    if not 2 <= two_t <= M.n:
        raise DomainError(f"pfaffian size {two_t} out of range for a {M.n}x{M.n} matrix")
    memo: dict = {}
    return [_pfaffian_indices(M, idx, memo) for idx in combinations(range(M.n), two_t)]
