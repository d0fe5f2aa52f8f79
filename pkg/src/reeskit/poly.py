"""Exact multivariate polynomials over the rationals or a prime field.

A polynomial is a sparse map from exponent tuples to nonzero coefficients.
Coefficients are ``fractions.Fraction`` over the rationals, or canonical
representatives in ``[1, p)`` over the prime field F_p.  Nothing here ever
rounds: arithmetic, parsing, and printing are exact, and every value is
immutable after construction, so polynomials can be shared freely between
threads.

Monomial orders: graded reverse lexicographic (the default, used for all
dimension work) and lexicographic.  Canonical printing lists terms in
descending order with explicit ``*`` and ``^``; juxtaposition is not a
product, so multi-character variable names are unambiguous.

Text grammar (whitespace insignificant, one optional leading sign)::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' NAT)?
    base   := NAT | NAT '/' NAT | IDENT | '(' expr ')'
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, NamedTuple

from .errors import DomainError, PolyParseError, RingMismatchError

# An exponent tuple, one slot per ring variable.
Monomial = tuple[int, ...]


def mon_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b as a monomial, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # Deterministic Miller-Rabin for anything below 3.3e24 (covers a word).
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (p is None) or F_p for a prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not 2 <= self.p < 2**63:
                raise DomainError(f"prime modulus must be a machine-word integer >= 2, got {self.p!r}")
            if not _is_prime(self.p):
                raise DomainError(f"modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls()

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime-field"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def coerce(self, value) -> Fraction | int:
        """Bring an int/Fraction into canonical coefficient form."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return value % self.p

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"


class CoeffOps(NamedTuple):
    add: Callable
    sub: Callable
    mul: Callable
    div: Callable
    neg: Callable


def coefficient_ops(field: FieldSpec) -> CoeffOps:
    """Arithmetic closures for a field, used by the inner loops."""
    p = field.p
    if p is None:
        return CoeffOps(
            add=lambda a, b: a + b,
            sub=lambda a, b: a - b,
            mul=lambda a, b: a * b,
            div=lambda a, b: a / b,
            neg=lambda a: -a,
        )
    return CoeffOps(
        add=lambda a, b: (a + b) % p,
        sub=lambda a, b: (a - b) % p,
        mul=lambda a, b: (a * b) % p,
        div=lambda a, b: a * pow(b, -1, p) % p,
        neg=lambda a: (-a) % p,
    )


class MonomialOrder(Enum):
    GREVLEX = "grevlex"
    LEX = "lex"

    def key(self, m: Monomial):
        """Sort key: key(a) > key(b) iff a > b in this order."""
        if self is MonomialOrder.GREVLEX:
            return (sum(m), tuple(-e for e in reversed(m)))
        return m


GREVLEX = MonomialOrder.GREVLEX
LEX = MonomialOrder.LEX


def order_key_fn(order: MonomialOrder) -> Callable[[Monomial], tuple]:
    """Memoized key function; worth it inside Groebner reductions."""
    cache: dict[Monomial, tuple] = {}
    base = order.key

    def kf(m: Monomial) -> tuple:
        k = cache.get(m)
        if k is None:
            k = cache[m] = base(m)
        return k

    return kf


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring: ordered variable names, a field, a monomial order."""

    variables: tuple[str, ...]
    field: FieldSpec = FieldSpec()
    order: MonomialOrder = MonomialOrder.GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        seen = set()
        for v in self.variables:
            if not v or not (v[0].isalpha() or v[0] == "_") or not all(c.isalnum() or c == "_" for c in v):
                raise DomainError(f"invalid variable name {v!r}")
            if v in seen:
                raise DomainError(f"duplicate variable name {v!r}")
            seen.add(v)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def mkey(self, m: Monomial):
        return self.order.key(m)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {}, _clean=True)

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        terms = {} if c == 0 else {(0,) * self.nvars: c}
        return Polynomial(self, terms, _clean=True)

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise DomainError(f"unknown variable {name!r} in ring {self.variables}") from None
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.coerce(1)}, _clean=True)

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def term(self, coeff, exponents: Iterable[int]) -> "Polynomial":
        m = tuple(exponents)
        if len(m) != self.nvars or any(e < 0 for e in m):
            raise DomainError(f"bad exponent tuple {m} for {self.nvars} variables")
        c = self.field.coerce(coeff)
        return Polynomial(self, {m: c} if c != 0 else {}, _clean=True)

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables)}] ({self.order.value})"


class Polynomial:
    """Immutable sparse polynomial; no zero coefficients are ever stored."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, *, _clean: bool = False):
        if not _clean:
            clean: dict[Monomial, object] = {}
            n = ring.nvars
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise DomainError(f"bad monomial {m} for {n} variables")
                c = ring.field.coerce(c)
                if c != 0:
                    clean[m] = c
            terms = clean
        self.ring = ring
        self._terms = terms
        self._hash: int | None = None

    # -- inspection ------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Terms in descending order under the ring's monomial order."""
        return sorted(self._terms.items(), key=lambda kv: self.ring.mkey(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, object] | None:
        if not self._terms:
            return None
        m = max(self._terms, key=self.ring.mkey)
        return m, self._terms[m]

    def leading_monomial(self) -> Monomial | None:
        lt = self.leading_term()
        return None if lt is None else lt[0]

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"operands in different rings: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = self.ring.constant(other)
            else:
                return NotImplemented
        self._check_ring(other)
        ops = coefficient_ops(self.ring.field)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = ops.add(out.get(m, 0), c) if m in out else c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        neg = coefficient_ops(self.ring.field).neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = self.ring.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                c = self.ring.field.coerce(other)
                if c == 0:
                    return self.ring.zero()
                mul = coefficient_ops(self.ring.field).mul
                return Polynomial(self.ring, {m: mul(v, c) for m, v in self._terms.items()}, _clean=True)
            return NotImplemented
        self._check_ring(other)
        if not self._terms or not other._terms:
            return self.ring.zero()
        ops = coefficient_ops(self.ring.field)
        out: dict[Monomial, object] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = ops.add(out[m], ops.mul(ca, cb)) if m in out else ops.mul(ca, cb)
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"polynomial exponent must be a non-negative integer, got {n!r}")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient (zero stays zero)."""
        lt = self.leading_term()
        if lt is None:
            return self
        div = coefficient_ops(self.ring.field).div
        _, lc = lt
        return Polynomial(self.ring, {m: div(c, lc) for m, c in self._terms.items()}, _clean=True)

    # -- equality --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"


class _AllDegreesType:
    """Sentinel: the zero polynomial is homogeneous of every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALL_DEGREES"


ALL_DEGREES = _AllDegreesType()


def homogeneous_degree(p: Polynomial):
    """Common total degree of all terms; None if mixed; ALL_DEGREES for 0."""
    if p.is_zero:
        return ALL_DEGREES
    degs = {sum(m) for m in p.terms}
    return degs.pop() if len(degs) == 1 else None


# -- printing ------------------------------------------------------------


def _format_coeff(c) -> str:
    return str(c)


def _format_monomial(m: Monomial, variables: tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Canonical text: terms descending, explicit '*' and '^'."""
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    rational = p.ring.field.p is None
    for m, c in p.sorted_terms():
        negative = rational and c < 0
        mag = -c if negative else c
        mono = _format_monomial(m, p.ring.variables)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


# -- parsing -------------------------------------------------------------


class _Token(NamedTuple):
    kind: str  # NAT | IDENT | OP | END
    value: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("NAT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing, notes: list[str] | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.notes = notes

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.value != op:
            raise PolyParseError(f"expected {op!r}, found {tok.value or 'end of input'!r}", tok.pos)
        return self.take()

    def _note_reduction(self, value: int, pos: int):
        p = self.ring.field.p
        if self.notes is not None and p is not None and value >= p:
            self.notes.append(f"coefficient {value} reduced to {value % p} modulo {p} (column {pos + 1})")

    def parse(self) -> Polynomial:
        poly = self.parse_expr()
        tok = self.peek()
        if tok.kind != "END":
            raise PolyParseError(f"unexpected trailing {tok.value!r}", tok.pos)
        return poly

    def parse_expr(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok.kind == "OP" and tok.value in "+-":
            self.take()
            negate = tok.value == "-"
        poly = self.parse_term()
        if negate:
            poly = -poly
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.value in "+-":
                self.take()
                rhs = self.parse_term()
                poly = poly - rhs if tok.value == "-" else poly + rhs
            else:
                return poly

    def parse_term(self) -> Polynomial:
        poly = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.value == "*":
                self.take()
                poly = poly * self.parse_factor()
            elif tok.kind in ("NAT", "IDENT") or (tok.kind == "OP" and tok.value == "("):
                # Juxtaposition is not multiplication here.
                raise PolyParseError(f"missing '*' before {tok.value!r}", tok.pos)
            else:
                return poly

    def parse_factor(self) -> Polynomial:
        poly = self.parse_base()
        tok = self.peek()
        if tok.kind == "OP" and tok.value == "^":
            self.take()
            exp = self.peek()
            if exp.kind != "NAT":
                raise PolyParseError(f"expected exponent, found {exp.value or 'end of input'!r}", exp.pos)
            self.take()
            poly = poly ** int(exp.value)
        return poly

    def parse_base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "NAT":
            self.take()
            num = int(tok.value)
            self._note_reduction(num, tok.pos)
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.value == "/":
                self.take()
                den_tok = self.peek()
                if den_tok.kind != "NAT":
                    raise PolyParseError(f"expected denominator, found {den_tok.value or 'end of input'!r}", den_tok.pos)
                self.take()
                den = int(den_tok.value)
                if den == 0:
                    raise PolyParseError("zero denominator", den_tok.pos)
                self._note_reduction(den, den_tok.pos)
                p = self.ring.field.p
                if p is not None and den % p == 0:
                    raise PolyParseError(f"denominator {den} is divisible by the modulus {p}", den_tok.pos)
                return self.ring.constant(Fraction(num, den))
            return self.ring.constant(num)
        if tok.kind == "IDENT":
            self.take()
            if tok.value not in self.ring.variables:
                raise PolyParseError(f"unknown identifier {tok.value!r}", tok.pos)
            return self.ring.var(tok.value)
        if tok.kind == "OP" and tok.value == "(":
            self.take()
            poly = self.parse_expr()
            self.expect_op(")")
            return poly
        raise PolyParseError(f"expected a number, variable, or '(', found {tok.value or 'end of input'!r}", tok.pos)


def parse_poly(text: str, ring: PolyRing, notes: list[str] | None = None) -> Polynomial:
    """Parse the grammar above into a canonical polynomial of `ring`.

    When `notes` is a list and the field is prime, a human-readable note is
    appended for every literal coefficient that got reduced modulo p.
    """
    return _Parser(text, ring, notes).parse()
