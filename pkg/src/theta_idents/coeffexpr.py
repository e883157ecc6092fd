"""Expression trees for the right-hand-side coefficients of the identities.

Coefficients are built from theta values evaluated at integer-combination
multiples of the base shift delta = T/p, combined by products, sums, powers,
absolute values, and indexed products/sums.  Offsets, range bounds and
symbolic exponents are all integer-valued polynomials over the parameter
symbols (r, s, t, l, p) and the loop variables (n, k), kept exact as
Fractions so that offsets like (r-s) never suffer float cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import DivisionNearZeroError, DomainError, ParseError, UnboundSymbolError

__all__ = [
    "IntPoly",
    "CoeffExpr",
    "Const",
    "ThetaAt",
    "Abs",
    "Neg",
    "Pow",
    "Mul",
    "Add",
    "IndexedProd",
    "IndexedSum",
    "SignPow",
    "inv",
    "eval_expr",
    "free_symbols",
    "serialize_expr",
    "parse_expr",
]

_SYMBOLS = ("p", "r", "s", "t", "l", "n", "k")
_PARAM_SYMBOLS = frozenset({"p", "r", "s", "t", "l"})
_LOOP_SYMBOLS = frozenset({"n", "k"})

_DIV_EPS = 1e-14


class IntPoly:
    """Polynomial with Fraction coefficients over the parameter symbols.

    Evaluation must produce an integer; a fractional result (e.g. (l-1)/2 with
    even l) is a domain error, which is how parity constraints surface when
    violated.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[str, ...], Fraction] | None = None):
        cleaned = {}
        for mono, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef:
                cleaned[tuple(sorted(mono))] = coef
        self.terms = cleaned

    # -- construction -------------------------------------------------------

    @classmethod
    def const(cls, value) -> "IntPoly":
        return cls({(): Fraction(value)})

    @classmethod
    def sym(cls, name: str) -> "IntPoly":
        if name not in _SYMBOLS:
            raise ParseError(f"unknown symbol {name!r}")
        return cls({(name,): Fraction(1)})

    def __add__(self, other: "IntPoly") -> "IntPoly":
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coef
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out: dict[tuple[str, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return IntPoly(out)

    def scale(self, factor) -> "IntPoly":
        return IntPoly({m: c * Fraction(factor) for m, c in self.terms.items()})

    # -- queries ------------------------------------------------------------

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(s for mono in self.terms for s in mono)

    def is_const(self) -> bool:
        return all(mono == () for mono in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise DomainError(f"polynomial {self} is not constant")
        return self.terms.get((), Fraction(0))

    def eval(self, binding: dict[str, int]) -> int:
        total = Fraction(0)
        for mono, coef in self.terms.items():
            value = coef
            for s in mono:
                if s not in binding:
                    raise UnboundSymbolError(f"symbol {s!r} unbound in {self}")
                value *= binding[s]
            total += value
        if total.denominator != 1:
            raise DomainError(f"{self} evaluates to non-integer {total} under {binding}")
        return int(total)

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def mono_key(item):
            mono, _ = item
            return (-len(mono), mono)
        parts = []
        for mono, coef in sorted(self.terms.items(), key=mono_key):
            body = ""
            i = 0
            while i < len(mono):
                j = i
                while j < len(mono) and mono[j] == mono[i]:
                    j += 1
                power = j - i
                body += ("*" if body else "") + mono[i] + (f"^{power}" if power > 1 else "")
                i = j
            if not body:
                frag = str(coef)
            elif coef == 1:
                frag = body
            elif coef == -1:
                frag = "-" + body
            else:
                frag = f"{coef}*{body}"
            if parts and not frag.startswith("-"):
                parts.append("+" + frag)
            else:
                parts.append(frag)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- parsing ------------------------------------------------------------

    @classmethod
    def parse(cls, text) -> "IntPoly":
        if isinstance(text, IntPoly):
            return text
        if isinstance(text, int):
            return cls.const(text)
        return _PolyParser(text).parse()


class _PolyParser:
    """Recursive-descent parser for polynomial text like ``(l-1)*(l-3)/2``."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> IntPoly:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(
                f"trailing input in polynomial {self.text!r}", column=self.pos
            )
        return value

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else "\x00"

    def _expr(self) -> IntPoly:
        sign = 1
        while self._peek() in "+-":
            if self._peek() == "-":
                sign = -sign
            self.pos += 1
        value = self._term().scale(sign)
        while self._peek() in "+-":
            op = self._peek()
            self.pos += 1
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> IntPoly:
        value = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                value = value * self._factor()
            elif ch == "/":
                self.pos += 1
                divisor = self._int()
                if divisor == 0:
                    raise ParseError(f"division by zero in {self.text!r}")
                value = value.scale(Fraction(1, divisor))
            else:
                return value

    def _factor(self) -> IntPoly:
        base = self._primary()
        if self._peek() == "^":
            self.pos += 1
            exponent = self._int()
            if exponent < 0:
                raise ParseError(f"negative power in polynomial {self.text!r}")
            out = IntPoly.const(1)
            for _ in range(exponent):
                out = out * base
            return out
        return base

    def _primary(self) -> IntPoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise ParseError(f"unbalanced parens in {self.text!r}", column=self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            return IntPoly.const(self._int())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            return IntPoly.sym(self.text[start : self.pos])
        raise ParseError(f"unexpected character {ch!r} in {self.text!r}", column=self.pos)

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected integer in {self.text!r}", column=self.pos)
        return int(self.text[start : self.pos])


# ---------------------------------------------------------------------------
# Expression tree
# ---------------------------------------------------------------------------


class CoeffExpr:
    """Base class for coefficient expression nodes.

    Arithmetic operators build trees (ints and Fractions are wrapped into
    Const nodes), so coefficient formulas can be transcribed directly.
    """

    __slots__ = ()

    @staticmethod
    def _wrap(value) -> "CoeffExpr":
        if isinstance(value, CoeffExpr):
            return value
        if isinstance(value, (int, Fraction)):
            return Const(Fraction(value))
        return NotImplemented

    def __mul__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Mul((self, other))

    def __rmul__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Mul((other, self))

    def __truediv__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Mul((self, Pow(other, IntPoly.const(-1))))

    def __rtruediv__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Mul((other, Pow(self, IntPoly.const(-1))))

    def __add__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Add((self, other))

    def __radd__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Add((other, self))

    def __sub__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Add((self, Neg(other)))

    def __rsub__(self, other):
        other = CoeffExpr._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return Add((other, Neg(self)))

    def __neg__(self):
        return Neg(self)

    def __pow__(self, exponent):
        return Pow(self, IntPoly.parse(exponent))


@dataclass(frozen=True)
class Const(CoeffExpr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class ThetaAt(CoeffExpr):
    """theta_index evaluated at offset*delta, optionally differentiated once."""

    index: int
    offset: IntPoly
    deriv: int = 0

    def __post_init__(self):
        if self.index not in (1, 2, 3, 4):
            raise DomainError(f"theta index must be 1..4, got {self.index}")
        if self.deriv not in (0, 1):
            raise DomainError(f"coefficient theta derivative order must be 0 or 1")
        object.__setattr__(self, "offset", IntPoly.parse(self.offset))


@dataclass(frozen=True)
class Abs(CoeffExpr):
    child: CoeffExpr


@dataclass(frozen=True)
class Neg(CoeffExpr):
    child: CoeffExpr


@dataclass(frozen=True)
class Pow(CoeffExpr):
    """child ** exponent; the exponent polynomial must evaluate to an integer."""

    child: CoeffExpr
    exponent: IntPoly

    def __post_init__(self):
        object.__setattr__(self, "exponent", IntPoly.parse(self.exponent))


@dataclass(frozen=True)
class Mul(CoeffExpr):
    children: tuple[CoeffExpr, ...]


@dataclass(frozen=True)
class Add(CoeffExpr):
    children: tuple[CoeffExpr, ...]


@dataclass(frozen=True)
class SignPow(CoeffExpr):
    """(-1) ** exponent."""

    exponent: IntPoly

    def __post_init__(self):
        object.__setattr__(self, "exponent", IntPoly.parse(self.exponent))


@dataclass(frozen=True)
class IndexedProd(CoeffExpr):
    var: str
    lo: IntPoly
    hi: IntPoly
    body: CoeffExpr
    exclude: Optional[str] = None

    def __post_init__(self):
        if self.var not in _LOOP_SYMBOLS:
            raise DomainError(f"loop variable must be n or k, got {self.var!r}")
        object.__setattr__(self, "lo", IntPoly.parse(self.lo))
        object.__setattr__(self, "hi", IntPoly.parse(self.hi))


@dataclass(frozen=True)
class IndexedSum(IndexedProd):
    pass


def inv(child: CoeffExpr) -> Pow:
    """Reciprocal, spelled as an explicit power of -1."""
    return Pow(child, IntPoly.const(-1))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

ThetaEvaluator = Callable[[int, int, int], complex]
"""(index, offset_in_delta_units, deriv) -> theta value at offset*delta."""


def eval_expr(
    expr: CoeffExpr,
    binding: dict,
    theta_value: ThetaEvaluator | None = None,
) -> complex:
    """Evaluate a coefficient tree under a parameter binding.

    ``binding`` holds the integer parameters (p and whichever of r, s, t, l
    the expression uses) plus "T" (the period, pi or 2*pi) and "tau".  A
    custom ``theta_value`` callback may be supplied to reuse cached theta
    constants; by default the q-series is evaluated directly.
    """
    if theta_value is None:
        from .special import theta as _theta

        try:
            tau = binding["tau"]
            delta = binding["T"] / binding["p"]
        except KeyError as exc:
            raise UnboundSymbolError(f"binding lacks {exc.args[0]!r}") from exc

        def theta_value(index, offset, deriv):
            return _theta(index, offset * delta, tau, order=deriv)

    ints = {k: v for k, v in binding.items() if k in _SYMBOLS}
    return _eval(expr, ints, theta_value)


def _eval(expr, ints, theta_value) -> complex:
    if isinstance(expr, Const):
        return complex(expr.value)
    if isinstance(expr, ThetaAt):
        return complex(theta_value(expr.index, expr.offset.eval(ints), expr.deriv))
    if isinstance(expr, Abs):
        return complex(abs(_eval(expr.child, ints, theta_value)))
    if isinstance(expr, Neg):
        return -_eval(expr.child, ints, theta_value)
    if isinstance(expr, SignPow):
        return complex(-1.0 if expr.exponent.eval(ints) % 2 else 1.0)
    if isinstance(expr, Pow):
        base = _eval(expr.child, ints, theta_value)
        exponent = expr.exponent.eval(ints)
        if exponent < 0 and abs(base) < _DIV_EPS:
            raise DivisionNearZeroError(
                f"denominator magnitude {abs(base):.3e} below {_DIV_EPS} in {serialize_expr(expr)}"
            )
        return base**exponent
    if isinstance(expr, Mul):
        out = complex(1.0)
        for child in expr.children:
            out *= _eval(child, ints, theta_value)
        return out
    if isinstance(expr, Add):
        out = complex(0.0)
        for child in expr.children:
            out += _eval(child, ints, theta_value)
        return out
    if isinstance(expr, (IndexedSum, IndexedProd)):
        lo = expr.lo.eval(ints)
        hi = expr.hi.eval(ints)
        is_sum = isinstance(expr, IndexedSum)
        out = complex(0.0 if is_sum else 1.0)
        exclude = ints.get(expr.exclude) if expr.exclude else None
        for value in range(lo, hi + 1):
            if exclude is not None and value == exclude:
                continue
            inner = dict(ints)
            inner[expr.var] = value
            term = _eval(expr.body, inner, theta_value)
            out = out + term if is_sum else out * term
        return out
    raise DomainError(f"unknown expression node {type(expr).__name__}")


def free_symbols(expr: CoeffExpr) -> frozenset[str]:
    """Parameter symbols referenced by the tree (loop variables excluded).

    Any theta evaluation implies a dependence on p through the base shift
    delta = T/p, so p is reported whenever a ThetaAt node is present.
    """
    out: set[str] = set()
    _collect_symbols(expr, out, bound=frozenset())
    return frozenset(out)


def _collect_symbols(expr, out, bound):
    if isinstance(expr, Const):
        return
    if isinstance(expr, ThetaAt):
        out.add("p")
        syms = expr.offset.symbols
        out.update(syms & _PARAM_SYMBOLS)
        unresolved = syms - _PARAM_SYMBOLS - bound
        if unresolved:
            raise UnboundSymbolError(
                f"offset {expr.offset} uses loop symbol(s) {sorted(unresolved)} outside their loop"
            )
        return
    if isinstance(expr, (Abs, Neg)):
        _collect_symbols(expr.child, out, bound)
        return
    if isinstance(expr, SignPow):
        out.update(expr.exponent.symbols & _PARAM_SYMBOLS)
        return
    if isinstance(expr, Pow):
        out.update(expr.exponent.symbols & _PARAM_SYMBOLS)
        _collect_symbols(expr.child, out, bound)
        return
    if isinstance(expr, (Mul, Add)):
        for child in expr.children:
            _collect_symbols(child, out, bound)
        return
    if isinstance(expr, (IndexedSum, IndexedProd)):
        out.update(expr.lo.symbols & _PARAM_SYMBOLS)
        out.update(expr.hi.symbols & _PARAM_SYMBOLS)
        _collect_symbols(expr.body, out, bound | {expr.var})
        return
    raise DomainError(f"unknown expression node {type(expr).__name__}")


# ---------------------------------------------------------------------------
# Compact prefix serialization
# ---------------------------------------------------------------------------


def serialize_expr(expr: CoeffExpr) -> str:
    """Compact prefix text form, embedded in catalog files."""
    if isinstance(expr, Const):
        if expr.value.denominator == 1:
            return f"(int {expr.value.numerator})"
        return f"(rat {expr.value.numerator} {expr.value.denominator})"
    if isinstance(expr, ThetaAt):
        suffix = " d1" if expr.deriv else ""
        return f"(theta {expr.index} {expr.offset}{suffix})"
    if isinstance(expr, Abs):
        return f"(abs {serialize_expr(expr.child)})"
    if isinstance(expr, Neg):
        return f"(neg {serialize_expr(expr.child)})"
    if isinstance(expr, SignPow):
        return f"(sgn {expr.exponent})"
    if isinstance(expr, Pow):
        return f"(pow {serialize_expr(expr.child)} {expr.exponent})"
    if isinstance(expr, Mul):
        return "(mul " + " ".join(serialize_expr(c) for c in expr.children) + ")"
    if isinstance(expr, Add):
        return "(add " + " ".join(serialize_expr(c) for c in expr.children) + ")"
    if isinstance(expr, (IndexedSum, IndexedProd)):
        head = "sum" if isinstance(expr, IndexedSum) else "prod"
        ne = f" ne {expr.exclude}" if expr.exclude else ""
        return (
            f"({head} {expr.var} {expr.lo} {expr.hi}{ne} "
            f"{serialize_expr(expr.body)})"
        )
    raise DomainError(f"unknown expression node {type(expr).__name__}")


def _tokenize(text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append(ch)
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def parse_expr(text: str) -> CoeffExpr:
    """Parse the compact prefix text form back into a tree."""
    tokens = _tokenize(text)
    expr, rest = _parse_tokens(tokens)
    if rest:
        raise ParseError(f"trailing tokens {rest[:3]} in expression {text!r}")
    return expr


def _parse_tokens(tokens):
    if not tokens:
        raise ParseError("empty expression")
    if tokens[0] != "(":
        raise ParseError(f"expected '(' at {tokens[0]!r}")
    head, rest = tokens[1], tokens[2:]

    def finish(node, rest):
        if not rest or rest[0] != ")":
            raise ParseError(f"expected ')' after {head}")
        return node, rest[1:]

    if head == "int":
        return finish(Const(Fraction(int(rest[0]))), rest[1:])
    if head == "rat":
        return finish(Const(Fraction(int(rest[0]), int(rest[1]))), rest[2:])
    if head == "theta":
        index = int(rest[0])
        offset = IntPoly.parse(rest[1])
        rest = rest[2:]
        deriv = 0
        if rest and rest[0] == "d1":
            deriv = 1
            rest = rest[1:]
        return finish(ThetaAt(index, offset, deriv), rest)
    if head == "sgn":
        return finish(SignPow(IntPoly.parse(rest[0])), rest[1:])
    if head in ("abs", "neg"):
        child, rest = _parse_tokens(rest)
        node = Abs(child) if head == "abs" else Neg(child)
        return finish(node, rest)
    if head == "pow":
        child, rest = _parse_tokens(rest)
        if not rest:
            raise ParseError("pow missing exponent")
        exponent = IntPoly.parse(rest[0])
        return finish(Pow(child, exponent), rest[1:])
    if head in ("mul", "add"):
        children = []
        while rest and rest[0] == "(":
            child, rest = _parse_tokens(rest)
            children.append(child)
        node = Mul(tuple(children)) if head == "mul" else Add(tuple(children))
        return finish(node, rest)
    if head in ("sum", "prod"):
        var = rest[0]
        lo = IntPoly.parse(rest[1])
        hi = IntPoly.parse(rest[2])
        rest = rest[3:]
        exclude = None
        if rest and rest[0] == "ne":
            exclude = rest[1]
            rest = rest[2:]
        body, rest = _parse_tokens(rest)
        cls = IndexedSum if head == "sum" else IndexedProd
        return finish(cls(var, lo, hi, body, exclude), rest)
    raise ParseError(f"unknown expression head {head!r}")
