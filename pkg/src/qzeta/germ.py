"""
Sparse polynomial germs with rational coefficients and nonnegative rational
exponents, living over a quotient type.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import QZetaError
from .qspace import QuotientType, var_name

Exponent = tuple[Fraction, ...]


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"({x.numerator}/{x.denominator})"


def format_monomial(exponents: Sequence[Fraction], n: int) -> str:
    parts = []
    for j, e in enumerate(exponents):
        if e == 0:
            continue
        v = var_name(j, n)
        parts.append(v if e == 1 else f"{v}^{_fmt_rat(Fraction(e))}")
    return " ".join(parts)


class Germ:
    """A finite sum of terms c * x^e over ``ambient``.

    ``factored`` optionally records ``(monomial, [(inner, multiplicity), ...])``
    with integer-exponent inner germs; ``terms`` is always the expanded form.
    """

    __slots__ = ("_terms", "ambient", "factored")

    def __init__(
        self,
        terms: Mapping[Sequence, object],
        ambient: QuotientType | int | None = None,
        factored=None,
    ):
        clean: dict[Exponent, Fraction] = {}
        n = None
        for exps, c in terms.items():
            e = tuple(Fraction(x) for x in exps)
            if any(x < 0 for x in e):
                raise QZetaError(f"negative exponent in {e}")
            if n is None:
                n = len(e)
            elif len(e) != n:
                raise QZetaError("exponent vectors of different lengths")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        if isinstance(ambient, int):
            ambient = QuotientType.trivial(ambient)
        if ambient is None:
            if n is None:
                raise QZetaError("cannot infer the dimension of an empty germ")
            ambient = QuotientType.trivial(n)
        if n is not None and n != ambient.n:
            raise QZetaError(f"germ has {n} variables but ambient {ambient} has n={ambient.n}")
        self._terms = clean
        self.ambient = ambient
        self.factored = factored

    @classmethod
    def monomial(cls, exponents: Sequence, coeff=1, ambient=None) -> Germ:
        return cls({tuple(exponents): coeff}, ambient if ambient is not None else len(exponents))

    @classmethod
    def from_factors(
        cls,
        monomial: Sequence,
        factors: Iterable[tuple[Germ, int]],
        coeff=1,
        ambient: QuotientType | None = None,
    ) -> Germ:
        """Build ``coeff * x^monomial * prod inner^mult`` and keep the factorization."""
        monomial = tuple(Fraction(x) for x in monomial)
        ambient = ambient if ambient is not None else QuotientType.trivial(len(monomial))
        factors = tuple((inner.with_ambient(ambient), int(k)) for inner, k in factors)
        for inner, k in factors:
            if k < 1:
                raise QZetaError("factor multiplicities must be positive")
            if any(x.denominator != 1 for e in inner.terms for x in e):
                raise QZetaError("inner factors must have integer exponents")
        out = cls.monomial(monomial, coeff, ambient)
        for inner, k in factors:
            out = out * inner**k
        return cls(out.terms, ambient, (Fraction(coeff), monomial, factors))

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    @property
    def n(self) -> int:
        return self.ambient.n

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def with_ambient(self, ambient: QuotientType) -> Germ:
        return Germ(self._terms, ambient, self.factored)

    def __eq__(self, other):
        if not isinstance(other, Germ):
            return NotImplemented
        return self._terms == other._terms and self.ambient == other.ambient

    def __hash__(self):
        return hash((frozenset(self._terms.items()), self.ambient))

    def __add__(self, other: Germ) -> Germ:
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Germ(out, self.ambient)

    def __neg__(self) -> Germ:
        return Germ({e: -c for e, c in self._terms.items()}, self.ambient)

    def __sub__(self, other: Germ) -> Germ:
        return self + (-other)

    def __mul__(self, other: Germ) -> Germ:
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Germ(out, self.ambient)

    def __pow__(self, k: int) -> Germ:
        if k < 0:
            raise QZetaError("negative powers of germs are not supported")
        out = Germ.monomial((0,) * self.n, 1, self.ambient)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def power(self, k: int) -> Germ:
        """f^k, keeping the factored form when there is one."""
        if self.factored is None:
            return self**k
        coeff, mono, factors = self.factored
        return Germ.from_factors(
            tuple(k * e for e in mono),
            [(inner, k * m) for inner, m in factors],
            coeff**k,
            self.ambient,
        )

    def common_monomial(self) -> Exponent:
        """Componentwise minimum exponent over all terms."""
        if not self._terms:
            raise QZetaError("the zero germ has no monomial factor")
        return tuple(min(col) for col in zip(*self._terms))

    def order(self, weights: Sequence) -> Fraction:
        """The weighted order min <w, e> over the terms."""
        return min(sum(Fraction(w) * e for w, e in zip(weights, exps)) for exps in self._terms)

    def transport(self, factors: Sequence, ambient: QuotientType) -> Germ:
        """Rewrite in coordinates X_j = x_j^(1/factor_j) by scaling exponent j."""
        factors = tuple(Fraction(f) for f in factors)

        def scale(e):
            return tuple(a * f for a, f in zip(e, factors))

        terms = {scale(e): c for e, c in self._terms.items()}
        factored = None
        if self.factored is not None:
            coeff, mono, inner = self.factored
            factored = (coeff, scale(mono), tuple((g.transport(factors, ambient), k) for g, k in inner))
        return Germ(terms, ambient, factored)

    def pullback(self, matrix: Sequence[Sequence[int]], ambient: QuotientType) -> Germ:
        """Substitute X_k = prod_j x_j^matrix[k][j] (a monomial chart map)."""
        n = len(matrix[0])

        def pull(e):
            return tuple(
                sum((Fraction(e[k]) * matrix[k][j] for k in range(len(e))), Fraction(0))
                for j in range(n)
            )

        return Germ({pull(e): c for e, c in self._terms.items()}, ambient)

    def check_factorization(self) -> bool:
        if self.factored is None:
            return True
        coeff, mono, inner = self.factored
        out = Germ.monomial(mono, coeff, self.ambient)
        for g, k in inner:
            out = out * g**k
        return out._terms == self._terms

    def reduced(self) -> Germ:
        """The product of the distinct factors, each to the first power."""
        if self.factored is None:
            return self
        coeff, mono, inner = self.factored
        mono = tuple(Fraction(1) if e else Fraction(0) for e in mono)
        seen = []
        for g, _ in inner:
            if g not in seen:
                seen.append(g)
        return Germ.from_factors(mono, [(g, 1) for g in seen], 1, self.ambient)

    def _format_sum(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0]))):
            mono = format_monomial(e, self.n)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        if self.factored is None:
            return self._format_sum()
        coeff, mono, inner = self.factored
        parts = []
        if coeff != 1:
            parts.append(str(coeff) if coeff.denominator == 1 else f"({coeff})")
        m = format_monomial(mono, self.n)
        if m:
            parts.append(m)
        for g, k in inner:
            s = f"({g._format_sum()})"
            parts.append(s if k == 1 else f"{s}^{k}")
        return " ".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Germ({str(self)!r}, ambient={self.ambient})"
