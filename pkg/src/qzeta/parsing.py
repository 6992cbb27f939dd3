"""
Concrete syntax for quotient types and germs.

Type literals look like ``X(6;3,2)``, ``X(2,3;1,1|1,2)`` or ``C^2``.  Germ
expressions follow

    germ   := factor { ["*"] factor }  |  sum
    factor := VAR ["^" rat] | "(" sum ")" ["^" int]
    sum    := term { ("+"|"-") term }
    term   := [rat] { VAR ["^" nat] }
    rat    := int | int "/" int        (a rational exponent may be parenthesized)

with variables x, y, z.  A bare top-level sum such as ``x^4+y^6`` is one
sum factor.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .germ import Germ, format_monomial
from .qspace import QuotientType

VARIABLES = "xyz"

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokens(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def peek_op(self, *ops) -> bool:
        kind, value, _ = self.tok
        return kind == "op" and value in ops

    def take(self):
        t = self.tok
        self.i += 1
        return t

    def fail(self, message: str, pos=None):
        raise ParseError(message, self.text, self.tok[2] if pos is None else pos)

    def expect_op(self, op: str):
        if not self.peek_op(op):
            self.fail(f"expected {op!r}")
        self.take()

    def int_(self) -> int:
        kind, value, _ = self.tok
        if kind != "int":
            if kind == "op" and value == "-":
                self.fail("negative numbers are not allowed here")
            self.fail("expected an integer")
        self.take()
        return value

    def signed_int(self) -> int:
        sign = 1
        if self.peek_op("-"):
            self.take()
            sign = -1
        return sign * self.int_()

    def rat(self) -> Fraction:
        num = self.int_()
        if self.peek_op("/"):
            self.take()
            den = self.int_()
            if den == 0:
                self.fail("zero denominator")
            return Fraction(num, den)
        return Fraction(num)


# -- quotient types ---------------------------------------------------------------


def parse_space(text: str) -> QuotientType:
    """Parse ``X(d;a,b)``, ``X(d1,d2;a11,a12|a21,a22)`` or ``C^n``."""
    cur = _Cursor(text)
    kind, value, pos = cur.take()
    if kind != "name" or value not in ("X", "C"):
        raise ParseError("expected 'X(...)' or 'C^n'", text, pos)
    if value == "C":
        cur.expect_op("^")
        n = cur.int_()
        if n < 1:
            cur.fail("dimension must be positive")
        q = QuotientType.trivial(n)
    else:
        cur.expect_op("(")
        orders = [cur.int_()]
        while cur.peek_op(","):
            cur.take()
            orders.append(cur.int_())
        cur.expect_op(";")
        rows = [[cur.signed_int()]]
        while cur.peek_op(",", "|"):
            _, op, _ = cur.take()
            if op == "|":
                rows.append([])
            rows[-1].append(cur.signed_int())
        cur.expect_op(")")
        if len(rows) != len(orders):
            raise ParseError(f"{len(orders)} orders but {len(rows)} weight rows", text, pos)
        if len({len(r) for r in rows}) != 1:
            raise ParseError("weight rows have different lengths", text, pos)
        if any(d < 1 for d in orders):
            raise ParseError("orders must be positive", text, pos)
        q = QuotientType(tuple(orders), tuple(tuple(r) for r in rows))
    if cur.tok[0] != "end":
        cur.fail("unexpected trailing input")
    return q


# -- germ expressions ----------------------------------------------------------------


@dataclass(frozen=True)
class VarFactor:
    var: int
    exponent: Fraction = Fraction(1)

    def to_str(self, n: int) -> str:
        return format_monomial(tuple(self.exponent if j == self.var else 0 for j in range(n)), n)


@dataclass(frozen=True)
class SumFactor:
    """A parenthesized sum; ``terms`` is a canonical tuple of (exponents, coefficient)."""

    terms: tuple[tuple[tuple[int, ...], Fraction], ...]
    power: int = 1

    def germ(self, n: int) -> Germ:
        return Germ(dict(self.terms), n)

    def sum_str(self, n: int) -> str:
        return self.germ(n)._format_sum()

    def to_str(self, n: int) -> str:
        s = f"({self.sum_str(n)})"
        return s if self.power == 1 else f"{s}^{self.power}"


def _canonical_terms(terms: dict) -> tuple:
    """Merge like terms, drop zeros and sort as Germ prints them."""
    merged = {e: c for e, c in terms.items() if c}
    return tuple(sorted(merged.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0]))))


@dataclass(frozen=True)
class GermExpression:
    """A product of factors, or (``bare_sum``) a single unparenthesized sum."""

    n: int
    factors: tuple
    bare_sum: bool = False

    def __str__(self) -> str:
        if self.bare_sum:
            return self.factors[0].sum_str(self.n)
        return " ".join(f.to_str(self.n) for f in self.factors) or "1"

    def to_germ(self, ambient: QuotientType | None = None) -> Germ:
        ambient = ambient if ambient is not None else QuotientType.trivial(self.n)
        if ambient.n != self.n:
            raise ParseError(f"expression has {self.n} variables, ambient {ambient} has {ambient.n}", str(self), 0)
        if self.bare_sum:
            return self.factors[0].germ(self.n).with_ambient(ambient)
        mono = [Fraction(0)] * self.n
        sums = []
        for f in self.factors:
            if isinstance(f, VarFactor):
                mono[f.var] += f.exponent
            else:
                sums.append((f.germ(self.n), f.power))
        if not sums:
            return Germ.monomial(mono, 1, ambient)
        return Germ.from_factors(mono, sums, 1, ambient)


class _GermParser(_Cursor):
    def __init__(self, text: str, n: int | None):
        super().__init__(text)
        self.n = n
        self.used = 0

    def var(self) -> int:
        kind, value, pos = self.tok
        if kind != "name" or len(value) != 1 or value not in VARIABLES:
            self.fail(f"unsupported variable {value!r}" if kind == "name" else "expected a variable")
        j = VARIABLES.index(value)
        if self.n is not None and j >= self.n:
            self.fail(f"variable {value!r} is not available with n={self.n}")
        self.used = max(self.used, j + 1)
        self.take()
        return j

    def exponent(self, allow_rational: bool) -> Fraction:
        pos = self.tok[2]
        if self.peek_op("-"):
            self.fail("negative exponents are not allowed")
        if self.peek_op("("):
            self.take()
            if self.peek_op("-"):
                self.fail("negative exponents are not allowed")
            e = self.rat()
            self.expect_op(")")
        else:
            e = self.rat()
        if not allow_rational and e.denominator != 1:
            self.fail("exponents inside a sum must be natural numbers", pos)
        return e

    def term(self):
        """[rat] {VAR ["^" nat]} -> (exponent dict, coefficient)."""
        coeff = Fraction(1)
        start = self.i
        if self.tok[0] == "int":
            coeff = self.rat()
        exps: dict[int, int] = {}
        while self.tok[0] == "name":
            j = self.var()
            e = 1
            if self.peek_op("^"):
                self.take()
                e = int(self.exponent(False))
            exps[j] = exps.get(j, 0) + e
        if self.i == start:
            self.fail("expected a term")
        return exps, coeff

    def sum_(self):
        sign = 1
        if self.peek_op("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        terms = []
        exps, c = self.term()
        terms.append((exps, sign * c))
        while self.peek_op("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            exps, c = self.term()
            terms.append((exps, sign * c))
        return terms

    def factor(self):
        if self.peek_op("("):
            self.take()
            terms = self.sum_()
            self.expect_op(")")
            power = 1
            if self.peek_op("^"):
                self.take()
                if self.peek_op("-"):
                    self.fail("negative exponents are not allowed")
                power = self.int_()
                if power < 1:
                    self.fail("factor exponents must be positive")
            return ("sum", terms, power)
        j = self.var()
        e = Fraction(1)
        if self.peek_op("^"):
            self.take()
            e = self.exponent(True)
        return ("var", j, e)

    def germ(self):
        """Try the product form; fall back to a bare sum."""
        start = self.i
        try:
            factors = [self.factor()]
            while not self.peek_op(")") and self.tok[0] != "end":
                if self.peek_op("*"):
                    self.take()
                factors.append(self.factor())
            return factors, False
        except ParseError as product_error:
            self.i = start
            try:
                terms = self.sum_()
            except ParseError:
                raise product_error from None
            if self.tok[0] != "end":
                self.fail("unexpected trailing input")
            return [("sum", terms, 1)], True


def parse_germ(text: str, n: int | None = None) -> GermExpression:
    """Parse a germ expression over variables x, y, z.

    ``n`` fixes the number of variables; by default it is inferred (at least 2).
    """
    p = _GermParser(text, n)
    if p.tok[0] == "end":
        p.fail("empty expression")
    raw, bare = p.germ()
    n = n if n is not None else max(2, p.used)
    factors = []
    for f in raw:
        if f[0] == "var":
            factors.append(VarFactor(f[1], f[2]))
            continue
        terms: dict = {}
        for exps, c in f[1]:
            e = tuple(exps.get(j, 0) for j in range(n))
            terms[e] = terms.get(e, 0) + c
        canon = _canonical_terms(terms)
        if not canon:
            raise ParseError("a sum factor is identically zero", text, 0)
        factors.append(SumFactor(canon, f[2]))
    return GermExpression(n, tuple(factors), bare)


def germ_from_text(text: str, space: QuotientType | None = None) -> Germ:
    n = space.n if space is not None else None
    return parse_germ(text, n).to_germ(space)
