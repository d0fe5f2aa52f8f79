"""G_s machinery: height thresholds, the concrete checker, closed forms.

For an ideal of t x t minors (or 2t x 2t Pfaffians) of generic height, G_s
holds exactly when every lower ideal of j x j minors (2j x 2j Pfaffians),
1 <= j <= t-1, has height at least min(theta_j, s), where theta_j is a
binomial threshold depending on the matrix kind.  `check_Gs` evaluates the
heights with Groebner bases; `max_Gs_generic` is the independent closed
form for generic matrices, including the one exceptional family
(3 <= t = m, n = m+3) where the answer is 18.

Convention: `t` counts minors for ordinary/symmetric matrices; for
alternating matrices `t` is half the Pfaffian size (the ideal is Pf_{2t}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .errors import DomainError, GenericHeightError
from .groebner import LowerIdealCache
from .matrixalg import MatrixKind, PolyMatrix


@dataclass(frozen=True)
class ProblemInstance:
    """The parameter tuple every closed-form criterion reads.

    For alternating matrices t is half the Pfaffian size (Pf_{2t}); m = n
    is required for symmetric and alternating kinds.  d is the number of
    variables of the ambient ring, delta the common entry degree, char the
    field characteristic.
    """

    kind: MatrixKind
    m: int
    n: int
    t: int
    d: int
    delta: int
    char: int

    def __post_init__(self):
        object.__setattr__(self, "kind", MatrixKind(self.kind))
        if self.kind in (MatrixKind.SYMMETRIC, MatrixKind.ALTERNATING):
            if self.m != self.n:
                raise DomainError(f"{self.kind.value} instance must have m = n, got {self.m}x{self.n}")
        if self.kind is MatrixKind.ALTERNATING:
            if not 1 <= self.t or not 2 * self.t <= self.n:
                raise DomainError(f"need 2 <= 2t <= n, got 2t={2 * self.t}, n={self.n}")
        else:
            if not 1 <= self.t <= self.m <= self.n:
                raise DomainError(f"need 1 <= t <= m <= n, got t={self.t}, m={self.m}, n={self.n}")
        if self.d < 1:
            raise DomainError(f"ambient variable count d must be >= 1, got {self.d}")
        if self.delta < 0:
            raise DomainError(f"entry degree must be >= 0, got {self.delta}")
        if self.char < 0:
            raise DomainError(f"characteristic must be >= 0, got {self.char}")

    @property
    def pfaffian_size(self) -> int:
        if self.kind is not MatrixKind.ALTERNATING:
            raise DomainError("pfaffian_size is only defined for alternating instances")
        return 2 * self.t

    @classmethod
    def from_matrix(cls, M: PolyMatrix, t: int) -> "ProblemInstance":
        """Instance of a concrete matrix; t follows the module convention.

        Requires a uniform homogeneous entry degree.
        """
        if M.entry_degree is None:
            raise DomainError("matrix entries are not homogeneous of one common degree")
        return cls(
            kind=M.kind,
            m=M.m,
            n=M.n,
            t=t,
            d=M.ring.nvars,
            delta=M.entry_degree,
            char=M.ring.field.characteristic,
        )


@dataclass(frozen=True)
class GsRow:
    j: int
    threshold: int
    actual_height: object  # int or math.inf
    required: int
    satisfied: bool


@dataclass(frozen=True)
class GsReport:
    """Outcome of the G_s test at a requested s.

    max_s is +inf when every lower height clears its full threshold, and
    otherwise the minimum height over the thresholds that fail.
    """

    generic_height_ok: bool
    per_j: tuple[GsRow, ...]
    max_s: object  # int or math.inf
    requested_s: object
    satisfied: bool


def gs_threshold(inst: ProblemInstance, j: int) -> int:
    """Height threshold theta_j for the lower ideal at level j."""
    if not 1 <= j <= inst.t - 1:
        raise DomainError(f"j must satisfy 1 <= j <= t-1 = {inst.t - 1}, got {j}")
    m, n, t = inst.m, inst.n, inst.t
    if inst.kind is MatrixKind.ORDINARY:
        return comb(m - j + 1, m - t) * comb(n - j + 1, n - t)
    if inst.kind is MatrixKind.SYMMETRIC:
        num = comb(n - j + 2, n - t) * comb(n - j + 2, n - t + 1)
        if num % (n - j + 2) != 0:
            raise AssertionError(f"threshold is not integral for {inst}, j={j}")
        return num // (n - j + 2)
    return comb(n - 2 * j + 2, n - 2 * t)


def check_Gs(M: PolyMatrix, t: int, s, cache: LowerIdealCache | None = None) -> GsReport:
    """Decide G_s for I_t(M) (Pf_{2t}(M) when alternating) via heights.

    Requires the ideal itself to be of generic height.  s is a positive
    integer or math.inf.
    """
    if s != math.inf and (not isinstance(s, int) or s < 1):
        raise DomainError(f"s must be a positive integer or +inf, got {s!r}")
    inst = ProblemInstance.from_matrix(M, t)
    cache = cache if cache is not None else LowerIdealCache(M)
    size = 2 * t if M.kind is MatrixKind.ALTERNATING else t
    gh = cache.generic_report(size)
    if not gh.ok:
        raise GenericHeightError(
            f"the ideal is not of generic height: height {gh.actual}, expected {gh.expected}"
        )
    rows = []
    for j in range(1, inst.t):
        theta = gs_threshold(inst, j)
        actual = cache.lower_height(j)
        required = min(theta, s)
        rows.append(GsRow(j=j, threshold=theta, actual_height=actual, required=required, satisfied=actual >= required))
    failing = [r.actual_height for r in rows if r.actual_height < r.threshold]
    max_s = min(failing) if failing else math.inf
    return GsReport(
        generic_height_ok=True,
        per_j=tuple(rows),
        max_s=max_s,
        requested_s=s,
        satisfied=all(r.satisfied for r in rows),
    )


def max_Gs_generic(inst: ProblemInstance):
    """Largest s for which the generic ideal satisfies G_s (closed form)."""
    m, n, t = inst.m, inst.n, inst.t
    if inst.kind is MatrixKind.ORDINARY:
        if (
            t == 1
            or t == m == n
            or (m == n and t == n - 1)
            or (n == m + 1 and t == m)
            or (n == m + 2 and t == m)
            or (m == 2 and n == 5 and t == 2)
        ):
            return math.inf
        if 3 <= t == m and n == m + 3:
            return 18
        return (m - t + 2) * (n - t + 2)
    if inst.kind is MatrixKind.SYMMETRIC:
        if t in (1, n - 1, n):
            return math.inf
        return comb(n - t + 3, 2)
    if 2 * t in (2, n, n - 1, n - 2):
        return math.inf
    return comb(n - 2 * t + 4, 2)


def min_gens_generic(inst: ProblemInstance) -> int:
    """Minimal number of generators of the generic ideal."""
    m, n, t = inst.m, inst.n, inst.t
    if inst.kind is MatrixKind.ORDINARY:
        return comb(m, t) * comb(n, t)
    if inst.kind is MatrixKind.SYMMETRIC:
        num = comb(n + 1, t + 1) * comb(n + 1, t)
        if num % (n + 1) != 0:
            raise AssertionError(f"generator count is not integral for {inst}")
        return num // (n + 1)
    return comb(n, 2 * t)
