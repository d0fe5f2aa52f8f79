"""Decision engine: specialization hypotheses, degree bounds, classification.

Everything here evaluates closed-form criteria from the built-in catalog
(labels like "Thm 5.2.2b" or "Cor 5.4.4e"; see the README table) against a
parameter tuple, and verifies the height hypotheses of each criterion with
real Groebner computations on the matrix at hand.  Three kinds of output:

* hypothesis_check / specialization_check decide whether the Rees algebra
  of the ideal is the specialization of the generic one (uncapped
  thresholds) or satisfies the weaker capped thresholds the degree bounds
  need, and report Cohen-Macaulayness where the catalog settles it.
* degree_bounds evaluates the generation/concentration degree bounds for
  the k-th piece of the defining ideal, returning extended values: -inf
  (the piece vanishes), finite ints, +inf (no finite bound exists), or
  conditional values max{<symbolic generic term>, c} that keep the unknown
  generic degree symbolic instead of guessing it.
* classify emits every linear-type / fiber-type / annihilation conclusion
  whose shape matches and whose height hypotheses verify; conclusions with
  unverified hypotheses are never emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    CharacteristicError,
    DomainError,
    GenericHeightError,
    NotApplicableError,
    NotAttestedError,
)
from .groebner import LowerIdealCache
from .gs import ProblemInstance
from .matrixalg import MatrixKind, PolyMatrix
from .resolutions import n_constants

# Claim kinds a classification can assert.
LINEAR_TYPE = "linear_type"
FIBER_TYPE = "fiber_type"
REES_SPECIALIZES = "rees_specializes"
REES_COHEN_MACAULAY = "rees_cohen_macaulay"
MAXIMAL_IDEAL_ANNIHILATES = "ideal_annihilated_by_maximal_ideal"
LOW_POWER_RELATIONS_VANISH = "low_power_relations_vanish"


@dataclass(frozen=True)
class BoundValue:
    """An extended degree bound.

    tag is one of neg_infinity (the module vanishes), finite,
    pos_infinity (no finite bound is claimed), conditional (the bound is
    max{symbol, finite_part}, or just the symbol when finite_part is None).
    """

    tag: str
    finite_part: int | None = None
    symbol: str | None = None
    note: str | None = None

    @classmethod
    def neg_inf(cls) -> "BoundValue":
        return cls("neg_infinity")

    @classmethod
    def finite(cls, value: int) -> "BoundValue":
        return cls("finite", finite_part=int(value))

    @classmethod
    def pos_inf(cls, note: str | None = None) -> "BoundValue":
        return cls("pos_infinity", note=note)

    @classmethod
    def conditional(cls, symbol: str, finite_part: int | None = None, note: str | None = None) -> "BoundValue":
        return cls("conditional", finite_part=None if finite_part is None else int(finite_part), symbol=symbol, note=note)

    def render(self) -> str:
        if self.tag == "neg_infinity":
            return "-inf"
        if self.tag == "finite":
            return str(self.finite_part)
        if self.tag == "pos_infinity":
            return "+inf"
        if self.finite_part is None:
            return self.symbol
        return f"max{{{self.symbol}, {self.finite_part}}}"


@dataclass(frozen=True)
class HypothesisRow:
    j: int
    required: int
    actual: object  # int or math.inf
    satisfied: bool


@dataclass(frozen=True)
class HypothesisReport:
    mode: str  # "specialization" (uncapped) or "bounds" (capped by d)
    case: str  # i..v
    source: str
    per_j: tuple[HypothesisRow, ...]
    all_satisfied: bool


@dataclass(frozen=True)
class SpecializationResult:
    specializes: bool
    cohen_macaulay: str  # "yes" or "unknown"
    source: str
    report: HypothesisReport


@dataclass(frozen=True)
class DegreeBoundsResult:
    applicable: bool
    source: str
    b0: BoundValue | None = None
    td: BoundValue | None = None
    note: str | None = None


@dataclass(frozen=True)
class Conclusion:
    claim: str
    source: str
    hypotheses_verified: bool
    detail: str | None = None


@dataclass(frozen=True)
class ClassificationReport:
    conclusions: tuple[Conclusion, ...]

    def claims(self) -> set[str]:
        return {c.claim for c in self.conclusions}

    def with_source(self, source: str) -> tuple[Conclusion, ...]:
        return tuple(c for c in self.conclusions if c.source == source)


@dataclass(frozen=True)
class GenericStatus:
    """Known behavior of the generic ideal; None means no statement."""

    linear_type: bool | None = None
    fiber_type: bool | None = None
    td_finite_all_k: bool | None = None
    td_infinite_some_k: bool | None = None
    sources: tuple[str, ...] = ()


def _case_tag(inst: ProblemInstance) -> str:
    """Case letter i..v used by the specialization and capped criteria."""
    if inst.kind is MatrixKind.ORDINARY:
        return "i" if inst.t == inst.m else "ii"
    if inst.kind is MatrixKind.SYMMETRIC:
        return "iii"
    if 2 * inst.t == inst.n:
        raise NotApplicableError("alternating 2t = n (a single Pfaffian) has no specialization criterion")
    return "iv" if 2 * inst.t == inst.n - 1 else "v"


def _hypothesis_schedule(inst: ProblemInstance) -> list[tuple[int, int]]:
    """(j, uncapped threshold) pairs for the instance's case."""
    m, n, t = inst.m, inst.n, inst.t
    case = _case_tag(inst)
    if case == "i":
        return [(j, (m - j + 1) * (n - m) + 1) for j in range(1, m)]
    if case == "ii":
        return [(j, (m - j + 1) * (n - j + 1)) for j in range(1, t)]
    if case == "iii":
        return [(j, comb(n - j + 2, 2)) for j in range(1, t)]
    if case == "iv":
        return [(j, n - 2 * j + 2) for j in range(1, (n - 3) // 2 + 1)]
    return [(j, comb(n - 2 * j + 2, 2)) for j in range(1, t)]


def _require_generic(M: PolyMatrix, inst: ProblemInstance, cache: LowerIdealCache):
    size = 2 * inst.t if inst.kind is MatrixKind.ALTERNATING else inst.t
    gh = cache.generic_report(size)
    if not gh.ok:
        raise GenericHeightError(
            f"the ideal is not of generic height: height {gh.actual}, expected {gh.expected}"
        )


def hypothesis_check(M: PolyMatrix, t: int, mode: str, cache: LowerIdealCache | None = None) -> HypothesisReport:
    """Verify the height hypotheses of the specialization (uncapped) or
    degree-bound (capped by d) criteria on a concrete matrix.

    For alternating matrices t is half the Pfaffian size.  The main ideal
    must be of generic height.
    """
    if mode not in ("specialization", "bounds"):
        raise DomainError(f"mode must be 'specialization' or 'bounds', got {mode!r}")
    inst = ProblemInstance.from_matrix(M, t)
    cache = cache if cache is not None else LowerIdealCache(M)
    _require_generic(M, inst, cache)
    case = _case_tag(inst)
    source = (f"Prop 4.7{case}" if mode == "specialization" else f"Cor 5.1.4{case}")
    rows = []
    for j, theta in _hypothesis_schedule(inst):
        required = theta if mode == "specialization" else min(theta, inst.d)
        actual = cache.lower_height(j)
        rows.append(HypothesisRow(j=j, required=required, actual=actual, satisfied=actual >= required))
    return HypothesisReport(
        mode=mode,
        case=case,
        source=source,
        per_j=tuple(rows),
        all_satisfied=all(r.satisfied for r in rows),
    )


def specialization_check(M: PolyMatrix, t: int, cache: LowerIdealCache | None = None) -> SpecializationResult:
    """Does the Rees algebra of I_t(M) / Pf_{2t}(M) arise by specializing
    the generic one, and is it Cohen-Macaulay where the catalog says so."""
    inst = ProblemInstance.from_matrix(M, t)
    report = hypothesis_check(M, t, "specialization", cache=cache)
    specializes = report.all_satisfied
    cm = "unknown"
    if specializes:
        case = report.case
        if case in ("i", "iv"):
            cm = "yes"
        elif case == "ii":
            if inst.char == 0 or inst.char > min(inst.t, inst.m - inst.t):
                cm = "yes"
        elif case == "v":
            if inst.char == 0 or inst.char > min(2 * inst.t, inst.n - 2 * inst.t):
                cm = "yes"
    return SpecializationResult(specializes=specializes, cohen_macaulay=cm, source=report.source, report=report)


# -- generic-case status ------------------------------------------------------


def generic_status(inst: ProblemInstance) -> GenericStatus:
    """What is known about the generic ideal with these parameters."""
    flags = {
        "linear_type": None,
        "fiber_type": None,
        "td_finite_all_k": None,
        "td_infinite_some_k": None,
    }
    sources: list[str] = []

    def apply(src: str, **updates):
        wrote = False
        for name, val in updates.items():
            if flags[name] is not None:
                continue
            # The two td flags contradict each other; first writer wins.
            if name == "td_finite_all_k" and flags["td_infinite_some_k"]:
                continue
            if name == "td_infinite_some_k" and flags["td_finite_all_k"]:
                continue
            flags[name] = val
            wrote = True
        if wrote:
            sources.append(src)

    m, n, t = inst.m, inst.n, inst.t
    if inst.kind is MatrixKind.ORDINARY:
        if t == 1:
            apply("Prop 5.2.1a", linear_type=True)
        if t == m and n <= m + 1:
            apply("Prop 5.2.1b", linear_type=True)
        if t == m and n >= m + 2:
            apply("Prop 5.2.1c", linear_type=False, td_infinite_some_k=True)
        if t == m:
            apply("Prop 5.2.1d", fiber_type=True)
        if m == n and t == n - 1:
            apply("Prop 5.2.1e", linear_type=True)
        if inst.char == 0 and m == 3 and t == 2:
            apply("Prop 5.2.1f", fiber_type=True)
        if t == 2:
            apply("Prop 5.2.1g", td_finite_all_k=True)
        if 2 < t < m and not (t + 1 == m == n):
            apply("Prop 5.2.1h", linear_type=False, td_infinite_some_k=True)
    elif inst.kind is MatrixKind.SYMMETRIC:
        if t == 1:
            apply("Prop 5.3.1a", linear_type=True)
        if t == n:
            apply("Prop 5.3.1b", linear_type=True)
        if t == n - 1:
            apply("Prop 5.3.1c", linear_type=True)
        if t == 2:
            apply("Prop 5.3.1d", td_finite_all_k=True)
        if 2 < t < n - 1:
            apply("Prop 5.3.1e", linear_type=False, td_infinite_some_k=True)
    else:
        two_t = 2 * t
        if two_t == 2:
            apply("Prop 5.4.1a", linear_type=True)
        if two_t == n:
            apply("Prop 5.4.1b", linear_type=True)
        if two_t == n - 1:
            apply("Prop 5.4.1c", linear_type=True)
        if two_t == n - 2 and inst.char != 2:
            apply("Prop 5.4.1d", linear_type=True)
        if two_t == 4:
            apply("Prop 5.4.1e", td_finite_all_k=True)
        if 4 < two_t < n - 2:
            apply("Prop 5.4.1f", linear_type=False, td_infinite_some_k=True)

    return GenericStatus(sources=tuple(sources), **flags)


# -- degree bounds ------------------------------------------------------------

_CHAR_ZERO_RULES = {"5.2.4", "5.2.6", "5.2.8", "5.4.5", "5.4.7", "5.4.8"}


def select_bound_rule(inst: ProblemInstance) -> str | None:
    """Which degree-bound criterion covers the instance; None when nothing
    does.  Exactly one criterion (or None) per parameter tuple."""
    m, n, t = inst.m, inst.n, inst.t
    if inst.kind is MatrixKind.ORDINARY:
        if t == m:
            return "5.2.2"
        if m == n and t == n - 1:
            return "5.2.6"
        if t == 2:
            return "5.2.4"
        if 2 < t < m:
            return "5.2.8"
        return None  # t = 1 < m
    if inst.kind is MatrixKind.SYMMETRIC:
        return "5.3.2" if t == n - 1 else None
    two_t = 2 * t
    if two_t == n:
        return None
    if two_t == n - 1:
        return "5.4.3"
    if two_t == n - 2:
        return "5.4.5"
    if two_t == 4:
        return "5.4.7"
    if 4 < two_t:
        return "5.4.8"
    return None  # 2t = 2 below every covered family


def _sym_generic(delta: int, fn: str, k: int) -> str:
    base = f"{fn}(A_{k}(J))"
    return base if delta == 1 else f"{delta}*{base}"


def _not_applicable(source: str, threshold: int) -> DegreeBoundsResult:
    return DegreeBoundsResult(
        applicable=False,
        source=source,
        note=f"no bound is stated below k = {threshold}",
    )


def _rule_5_2_2(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    m, n, d, delta = inst.m, inst.n, inst.d, inst.delta
    if n == m:
        return DegreeBoundsResult(True, "Thm 5.2.2a", BoundValue.neg_inf(), BoundValue.neg_inf())
    if n == m + 1:
        if d > min(k, m):
            return DegreeBoundsResult(True, "Thm 5.2.2b", BoundValue.neg_inf(), BoundValue.neg_inf())
        return DegreeBoundsResult(
            True,
            "Thm 5.2.2b",
            BoundValue.finite((d - 1) * (delta - 1)),
            BoundValue.finite(d * (delta - 1)),
        )
    length = min(k, m) * (n - m)
    b0 = BoundValue.finite(0) if d - 1 > length else BoundValue.finite((d - 1) * (delta - 1))
    td = BoundValue.pos_inf(note="the generic concentration degree is infinite for some power [Prop 5.2.1c]")
    return DegreeBoundsResult(True, "Thm 5.2.2c", b0, td)


def _rule_5_2_4(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    m, d, delta = inst.m, inst.d, inst.delta
    td_note = "the generic term is finite for every power [Prop 5.2.1g]"
    if m == 3:
        return DegreeBoundsResult(
            True,
            "Thm 5.2.4a",
            BoundValue.finite((d - 1) * (delta - 1)),
            BoundValue.conditional(_sym_generic(delta, "td", k), d * (delta - 1), note=td_note),
        )
    if k < 2:
        return _not_applicable("Thm 5.2.4b", 2)
    extra = delta * (m - k - 1) if k <= m - 2 else 0
    return DegreeBoundsResult(
        True,
        "Thm 5.2.4b",
        BoundValue.conditional(_sym_generic(delta, "b0", k), (d - 1) * (delta - 1) + extra),
        BoundValue.conditional(_sym_generic(delta, "td", k), d * (delta - 1) + extra, note=td_note),
    )


def _rule_5_2_6(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    n, d, delta = inst.n, inst.d, inst.delta
    if k < n - 1:
        return _not_applicable("Thm 5.2.6", n - 1)
    bump = delta * n_constants("square_submax", n)
    return DegreeBoundsResult(
        True,
        "Thm 5.2.6",
        BoundValue.finite((d - 1) * (delta - 1) + bump),
        BoundValue.finite(d * (delta - 1) + bump),
    )


def _rule_5_2_8(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    m, t, d, delta = inst.m, inst.t, inst.d, inst.delta
    if k < m - 1:
        return _not_applicable("Thm 5.2.8", m - 1)
    bump = delta * n_constants("ordinary_minors", t)
    return DegreeBoundsResult(
        True,
        "Thm 5.2.8",
        BoundValue.conditional(_sym_generic(delta, "b0", k), (d - 1) * (delta - 1) + bump),
        BoundValue.pos_inf(note="the generic concentration degree is infinite for some power [Prop 5.2.1h]"),
    )


def _rule_5_3_2(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    d, delta = inst.d, inst.delta

    def sym(position: int, shift: int) -> str:
        base = f"b0(F^{k}_{position})"
        scaled = base if delta == 1 else f"{delta}*{base}"
        return scaled if shift == 0 else f"{scaled} - {shift}"

    return DegreeBoundsResult(
        True,
        "Prop 5.3.2",
        BoundValue.conditional(sym(d - 1, d - 1)),
        BoundValue.conditional(sym(d, d)),
        note="generation degrees of the symmetric resolutions are not on record; the bound stays symbolic",
    )


def _rule_5_4_3(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    n, d, delta = inst.n, inst.d, inst.delta
    if d >= n or k <= d - 2:
        return DegreeBoundsResult(True, "Thm 5.4.3d", BoundValue.neg_inf(), BoundValue.neg_inf())
    if k == d - 1:
        if d % 2 == 1:
            return DegreeBoundsResult(True, "Thm 5.4.3c", BoundValue.neg_inf(), BoundValue.neg_inf())
        base = (d - 1) * (delta - 1)
        return DegreeBoundsResult(
            True,
            "Thm 5.4.3b",
            BoundValue.finite(base),
            BoundValue.finite(base + delta * (n - d + 1) // 2 - 1),
        )
    return DegreeBoundsResult(
        True,
        "Thm 5.4.3a",
        BoundValue.finite((d - 1) * (delta - 1)),
        BoundValue.finite(d * (delta - 1)),
    )


def _rule_5_4_5(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    n, d, delta = inst.n, inst.d, inst.delta
    source = "Thm 5.4.5a" if n % 4 == 0 else "Thm 5.4.5b"
    if k < n - 2:
        return _not_applicable(source, n - 2)
    bump = delta * n_constants("pfaff_n_minus_2", n)
    return DegreeBoundsResult(
        True,
        source,
        BoundValue.finite((d - 1) * (delta - 1) + bump),
        BoundValue.finite(d * (delta - 1) + bump),
    )


def _pfaffian_k_threshold(n: int) -> int:
    return n - 2 if n % 2 == 0 else n - 3


def _rule_5_4_7(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    n, d, delta = inst.n, inst.d, inst.delta
    threshold = _pfaffian_k_threshold(n)
    if k < threshold:
        return _not_applicable("Thm 5.4.7", threshold)
    return DegreeBoundsResult(
        True,
        "Thm 5.4.7",
        BoundValue.conditional(_sym_generic(delta, "b0", k), (d - 1) * (delta - 1)),
        BoundValue.conditional(
            _sym_generic(delta, "td", k),
            d * (delta - 1),
            note="the generic term is finite for every power [Prop 5.4.1e]",
        ),
    )


def _rule_5_4_8(inst: ProblemInstance, k: int) -> DegreeBoundsResult:
    n, t, d, delta = inst.n, inst.t, inst.d, inst.delta
    threshold = _pfaffian_k_threshold(n)
    if k < threshold:
        return _not_applicable("Thm 5.4.8", threshold)
    bump = delta * n_constants("pfaff_general", t)
    return DegreeBoundsResult(
        True,
        "Thm 5.4.8",
        BoundValue.conditional(_sym_generic(delta, "b0", k), (d - 1) * (delta - 1) + bump),
        BoundValue.pos_inf(note="the generic concentration degree is infinite for some power [Prop 5.4.1f]"),
    )


_RULES = {
    "5.2.2": _rule_5_2_2,
    "5.2.4": _rule_5_2_4,
    "5.2.6": _rule_5_2_6,
    "5.2.8": _rule_5_2_8,
    "5.3.2": _rule_5_3_2,
    "5.4.3": _rule_5_4_3,
    "5.4.5": _rule_5_4_5,
    "5.4.7": _rule_5_4_7,
    "5.4.8": _rule_5_4_8,
}


def degree_bounds(inst: ProblemInstance, k: int, *, hypotheses_attested: bool = False) -> DegreeBoundsResult:
    """Bounds on b0 and td of the degree-k piece of the defining ideal.

    The caller must attest that hypothesis_check(mode="bounds") passed for
    the matrix the instance came from; evaluation itself is pure formula
    work, so tabulating over k after one verification is cheap.
    """
    if not hypotheses_attested:
        raise NotAttestedError(
            "degree_bounds requires hypotheses_attested=True after a passing hypothesis_check(mode='bounds')"
        )
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"power k must be a positive integer, got {k!r}")
    rule = select_bound_rule(inst)
    if rule is None:
        raise NotApplicableError(
            f"no degree-bound criterion covers kind={inst.kind.value}, t={inst.t}, m={inst.m}, n={inst.n}"
        )
    if rule in _CHAR_ZERO_RULES and inst.char != 0:
        raise CharacteristicError(
            f"criterion {rule} requires characteristic zero, the instance has characteristic {inst.char}"
        )
    return _RULES[rule](inst, k)


# -- classification -----------------------------------------------------------


def classify(M: PolyMatrix, t: int, cache: LowerIdealCache | None = None) -> ClassificationReport:
    """Emit every matching catalog conclusion whose hypotheses verify.

    For alternating matrices t is half the Pfaffian size.  A matrix whose
    main ideal is not of generic height matches nothing (empty report).
    """
    inst = ProblemInstance.from_matrix(M, t)
    cache = cache if cache is not None else LowerIdealCache(M)
    m, n, d, delta, char = inst.m, inst.n, inst.d, inst.delta, inst.char

    size = 2 * t if inst.kind is MatrixKind.ALTERNATING else t
    if not cache.generic_report(size).ok:
        return ClassificationReport(())

    conclusions: list[Conclusion] = []

    def emit(claim: str, source: str, detail: str | None = None):
        conclusions.append(Conclusion(claim=claim, source=source, hypotheses_verified=True, detail=detail))

    def heights_ok(pairs) -> bool:
        return all(cache.lower_height(j) >= req for j, req in pairs)

    if inst.kind is MatrixKind.ORDINARY:
        if n == m + 1 and t == m and heights_ok((j, m - j + 2) for j in range(1, m)):
            emit(LINEAR_TYPE, "Cor 4.8i")
        if m == n and t == n - 1 and heights_ok((j, (n - j + 1) ** 2) for j in range(1, n - 1)):
            emit(LINEAR_TYPE, "Cor 4.8ii")
        if t == m and heights_ok((j, (m - j + 1) * (n - m) + 1) for j in range(1, m)):
            emit(FIBER_TYPE, "Cor 4.8vi")
        if char == 0 and m == 3 and t == 2 and cache.lower_height(1) >= 3 * n:
            emit(FIBER_TYPE, "Cor 4.8vii")
        if t == m and heights_ok((j, min((m - j + 1) * (n - m) + 1, d)) for j in range(1, m)):
            if delta == 1:
                emit(FIBER_TYPE, "Cor 5.2.3a")
            if n == m + 1 and d > m:
                emit(LINEAR_TYPE, "Cor 5.2.3b")
            if n == m + 1 and d <= m and delta == 1:
                emit(MAXIMAL_IDEAL_ANNIHILATES, "Cor 5.2.3c")
            if n >= m + 2 and d > m * (n - m) + 1:
                emit(FIBER_TYPE, "Cor 5.2.3d")
        if char == 0 and m == 3 and t == 2 and delta == 1 and cache.lower_height(1) >= min(3 * n, d):
            emit(FIBER_TYPE, "Cor 5.2.5")
        if char == 0 and m == n == 3 and t == 2 and delta == 1 and cache.lower_height(1) >= min(9, d):
            emit(FIBER_TYPE, "Cor 5.2.7")
            emit(MAXIMAL_IDEAL_ANNIHILATES, "Cor 5.2.7")
    elif inst.kind is MatrixKind.SYMMETRIC:
        if t == n - 1 and heights_ok((j, comb(n - j + 2, 2)) for j in range(1, n - 1)):
            emit(LINEAR_TYPE, "Cor 4.8iii")
    else:
        two_t = 2 * t
        submax_js = range(1, (n - 3) // 2 + 1)
        if n % 2 == 1 and n >= 3 and two_t == n - 1:
            if heights_ok((j, n - 2 * j + 2) for j in submax_js):
                emit(LINEAR_TYPE, "Cor 4.8iv")
            if heights_ok((j, min(n - 2 * j + 2, d)) for j in submax_js):
                if d >= n:
                    emit(LINEAR_TYPE, "Cor 5.4.4a")
                if delta == 1:
                    emit(FIBER_TYPE, "Cor 5.4.4b")
                if d >= 3:
                    emit(LOW_POWER_RELATIONS_VANISH, "Cor 5.4.4c", detail=f"defining relations vanish in degrees k <= {d - 2}")
                if d % 2 == 1 and d >= 3:
                    emit(LOW_POWER_RELATIONS_VANISH, "Cor 5.4.4d", detail=f"defining relations vanish in degrees k <= {d - 1}")
                if d % 2 == 1 and delta == 1:
                    emit(MAXIMAL_IDEAL_ANNIHILATES, "Cor 5.4.4e")
        if char != 2 and n % 2 == 0 and n >= 4 and two_t == n - 2:
            if heights_ok((j, comb(n - 2 * j + 2, 2)) for j in range(1, (n - 4) // 2 + 1)):
                emit(LINEAR_TYPE, "Cor 4.8v")
        if char == 0 and n == 6 and two_t == 4 and delta == 1 and cache.lower_height(1) >= min(15, d):
            emit(FIBER_TYPE, "Cor 5.4.6")
            emit(MAXIMAL_IDEAL_ANNIHILATES, "Cor 5.4.6")

    return ClassificationReport(tuple(conclusions))
