"""
Formal products  sign * prod (t^m - 1)^e  with positive rational keys m.

Two conventions share one carrier:

* Z-form  (``convention="Z"``): the value is ``sign * prod (1 - t^m)^e``,
  the shape of a monodromy zeta function.
* Delta-form (``convention="D"``): the value is ``sign * prod (t^m - 1)^e``,
  the shape of a characteristic polynomial.

Since ``(1 - t^m) = -(t^m - 1)`` the two differ by ``(-1)^(sum e)``;
:meth:`CyclotomicProduct.as_convention` makes that exact.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ConventionMismatch, NonIntegerExponent, NotAPolynomial, QZetaError

Z_FORM = "Z"
DELTA_FORM = "D"


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer string; floats are refused."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise QZetaError(f"expected a rational string like '11/6', got {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise QZetaError(f"not a rational literal: {text!r}") from None


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CyclotomicProduct:
    factors: Mapping[Fraction, int] = field(default_factory=dict)
    sign: int = 1
    convention: str = Z_FORM

    def __post_init__(self):
        if self.convention not in (Z_FORM, DELTA_FORM):
            raise QZetaError(f"unknown convention {self.convention!r}")
        if self.sign not in (1, -1):
            raise QZetaError("sign must be +1 or -1")
        clean: dict[Fraction, int] = {}
        for m, e in dict(self.factors).items():
            m = Fraction(m)
            if m <= 0:
                raise QZetaError(f"factor keys must be positive, got {m}")
            if int(e) != e:
                raise QZetaError(f"factor exponents must be integers, got {e}")
            clean[m] = clean.get(m, 0) + int(e)
        object.__setattr__(
            self, "factors", {m: clean[m] for m in sorted(clean) if clean[m]}
        )

    @classmethod
    def one(cls, convention: str = Z_FORM) -> CyclotomicProduct:
        return cls({}, 1, convention)

    @classmethod
    def factor(cls, m, e: int = 1, convention: str = Z_FORM) -> CyclotomicProduct:
        return cls({Fraction(m): e}, 1, convention)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicProduct):
            return NotImplemented
        return (self.factors, self.sign, self.convention) == (
            other.factors,
            other.sign,
            other.convention,
        )

    def __hash__(self):
        return hash((tuple(self.factors.items()), self.sign, self.convention))

    def __mul__(self, other: CyclotomicProduct) -> CyclotomicProduct:
        return z_mul(self, other)

    def inverse(self) -> CyclotomicProduct:
        return CyclotomicProduct(
            {m: -e for m, e in self.factors.items()}, self.sign, self.convention
        )

    def __pow__(self, k: int) -> CyclotomicProduct:
        k = int(k)
        return CyclotomicProduct(
            {m: k * e for m, e in self.factors.items()},
            self.sign if k % 2 else 1,
            self.convention,
        )

    def is_one(self) -> bool:
        return not self.factors and self.sign == 1

    def has_integer_keys(self) -> bool:
        return all(m.denominator == 1 for m in self.factors)

    def total_exponent(self) -> int:
        return sum(self.factors.values())

    def as_convention(self, convention: str) -> CyclotomicProduct:
        """The same function written in the other convention."""
        if convention == self.convention:
            return self
        flip = -1 if self.total_exponent() % 2 else 1
        return CyclotomicProduct(self.factors, self.sign * flip, convention)

    def to_str(self) -> str:
        if not self.factors:
            return "-1" if self.sign < 0 else "1"
        parts = []
        for m, e in self.factors.items():
            base = f"t^{format_rational(m)}" if m != 1 else "t"
            body = f"(1-{base})" if self.convention == Z_FORM else f"({base}-1)"
            parts.append(body if e == 1 else f"{body}^{e}")
        s = " · ".join(parts)
        return f"-{s}" if self.sign < 0 else s

    def __str__(self) -> str:
        return self.to_str()

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "convention": self.convention,
            "factors": [
                {"m": format_rational(m), "e": e} for m, e in self.factors.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CyclotomicProduct:
        factors: dict[Fraction, int] = {}
        for rec in data.get("factors", []):
            m = parse_rational(rec["m"])
            factors[m] = factors.get(m, 0) + int(rec["e"])
        return cls(factors, int(data.get("sign", 1)), data.get("convention", Z_FORM))


def z_mul(a: CyclotomicProduct, b: CyclotomicProduct) -> CyclotomicProduct:
    if a.convention != b.convention:
        raise ConventionMismatch(
            f"cannot multiply a {a.convention}-form by a {b.convention}-form product"
        )
    out = dict(a.factors)
    for m, e in b.factors.items():
        out[m] = out.get(m, 0) + e
    return CyclotomicProduct(out, a.sign * b.sign, a.convention)


def z_prod(items: Iterable[CyclotomicProduct], convention: str = Z_FORM) -> CyclotomicProduct:
    out = CyclotomicProduct.one(convention)
    for z in items:
        out = z_mul(out, z)
    return out


def z_degree(z: CyclotomicProduct) -> Fraction:
    """sum m*e, the degree in t (t^(i/k) has degree i/k)."""
    return sum((m * e for m, e in z.factors.items()), Fraction(0))


def to_delta(z: CyclotomicProduct, n: int) -> CyclotomicProduct:
    """[ (t-1)^-1 prod (t^m - 1)^chi ]^((-1)^n), normalized monic.

    ``n`` is the dimension of the hypersurface, i.e. the germ lives on an
    (n+1)-dimensional space.
    """
    if z.convention != Z_FORM:
        raise ConventionMismatch("to_delta expects a Z-form product")
    inner = CyclotomicProduct(z.factors, 1, DELTA_FORM) * CyclotomicProduct.factor(
        1, -1, DELTA_FORM
    )
    return inner if n % 2 == 0 else inner.inverse()


def milnor(z: CyclotomicProduct, n: int) -> Fraction:
    """(-1)^n (-1 + deg Z)."""
    return (-1) ** n * (-1 + z_degree(z))


def euler_characteristic(z: CyclotomicProduct) -> Fraction:
    return z_degree(z)


def _require_integer_keys(z: CyclotomicProduct) -> None:
    bad = [m for m in z.factors if m.denominator != 1]
    if bad:
        raise NonIntegerExponent(
            f"factor keys {', '.join(format_rational(m) for m in bad)} are not integers"
        )


def lefschetz(z: CyclotomicProduct, k: int) -> int:
    """Lambda(h^k) = sum over factors with m | k of m*e; k = 0 gives sum m*e."""
    _require_integer_keys(z)
    if k < 0:
        raise QZetaError("Lefschetz numbers are defined for k >= 0")
    total = 0
    for m, e in z.factors.items():
        m = int(m)
        if k == 0 or k % m == 0:
            total += m * e
    return total


def lefschetz_table(z: CyclotomicProduct, ks: Iterable[int]) -> list[tuple[int, int]]:
    return [(k, lefschetz(z, k)) for k in ks]


def twist(delta: CyclotomicProduct, k: int) -> CyclotomicProduct:
    """(t^m - 1)^a -> (t^(m/g) - 1)^(g*a) with g = gcd(m, k)."""
    _require_integer_keys(delta)
    if k < 1:
        raise QZetaError("twist needs a positive integer k")
    out: dict[Fraction, int] = {}
    for m, a in delta.factors.items():
        g = gcd(int(m), k)
        key = m / g
        out[key] = out.get(key, 0) + g * a
    return CyclotomicProduct(out, delta.sign, delta.convention)


def subst_power(z: CyclotomicProduct, r) -> CyclotomicProduct:
    """Substitute t -> t^r: every key m becomes m*r."""
    r = Fraction(r)
    if r <= 0:
        raise QZetaError("subst_power needs a positive rational")
    return CyclotomicProduct({m * r: e for m, e in z.factors.items()}, z.sign, z.convention)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots_of_unity_factor(cls, m: int) -> IntPolynomial:
        return cls((-1,) + (0,) * (m - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise QZetaError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            out.append(("-" if c < 0 else "+", body))
        sign, body = out[0]
        s = ("-" if sign == "-" else "") + body
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self.to_str()


def _mul_cyclo(c: list[int], m: int) -> list[int]:
    out = [0] * (len(c) + m)
    for i, a in enumerate(c):
        out[i] -= a
        out[i + m] += a
    return out


def _div_cyclo(c: list[int], m: int) -> list[int]:
    # c = q * (t^m - 1)  =>  c_i = q_(i-m) - q_i
    deg = len(c) - 1
    if deg < m:
        raise NotAPolynomial(f"cannot divide a degree-{deg} polynomial by t^{m}-1")
    q = [0] * (deg - m + 1)
    for i in range(deg - m + 1):
        q[i] = (q[i - m] if i >= m else 0) - c[i]
    for i in range(deg - m + 1, deg + 1):
        if c[i] != (q[i - m] if i - m >= 0 else 0):
            raise NotAPolynomial(f"division by t^{m}-1 leaves a nonzero remainder")
    return q


def expand(p: CyclotomicProduct) -> IntPolynomial:
    """Multiply out a Delta-form product; negative exponents divide exactly."""
    if p.convention != DELTA_FORM:
        p = p.as_convention(DELTA_FORM)
    _require_integer_keys(p)
    coeffs = [p.sign]
    for m, e in p.factors.items():
        for _ in range(max(e, 0)):
            coeffs = _mul_cyclo(coeffs, int(m))
    for m, e in p.factors.items():
        for _ in range(max(-e, 0)):
            coeffs = _div_cyclo(coeffs, int(m))
    return IntPolynomial(tuple(coeffs))


def root_multiset(p: CyclotomicProduct) -> Counter:
    """Eigenvalues exp(2 pi i theta), as theta in [0, 1), with signed multiplicity.

    Each (t^m - 1)^e contributes e to every j/m; zero entries are dropped.
    """
    _require_integer_keys(p)
    out: Counter = Counter()
    for m, e in p.factors.items():
        m = int(m)
        for j in range(m):
            out[Fraction(j, m)] += e
    return Counter({k: v for k, v in out.items() if v})


# Truncated power series with exact rational coefficients.


def series_mul(a: Sequence, b: Sequence, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def series_exp(g: Sequence, order: int) -> list[Fraction]:
    """exp(g) for g with g[0] = 0, via n E_n = sum_k k g_k E_(n-k)."""
    if g and g[0]:
        raise QZetaError("series_exp needs a vanishing constant term")
    g = list(g) + [Fraction(0)] * (order + 1 - len(g))
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if g[k]:
                acc += k * g[k] * out[n - k]
        out[n] = acc / n
    return out


def zeta_series(z: CyclotomicProduct, order: int) -> list[Fraction]:
    """Power series of a Z-form product with integer keys, by direct multiplication."""
    _require_integer_keys(z)
    z = z.as_convention(Z_FORM)
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(z.sign)
    for m, e in z.factors.items():
        m = int(m)
        for _ in range(abs(e)):
            if e > 0:
                # multiply by (1 - t^m)
                for i in range(order, m - 1, -1):
                    out[i] -= out[i - m]
            else:
                # multiply by 1/(1 - t^m) = 1 + t^m + t^2m + ...
                for i in range(m, order + 1):
                    out[i] += out[i - m]
    return out


def series_check(
    z: CyclotomicProduct, order: int, lefschetz_numbers: Mapping[int, int] | None = None
) -> bool:
    """Compare Z(t) with exp(-sum_k Lambda(h^k) t^k / k) up to t^order.

    ``lefschetz_numbers`` overrides the Lambda table (missing k fall back to
    :func:`lefschetz`), which is how a corrupted table is fed in.
    """
    lam = dict(lefschetz_numbers or {})
    g = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        value = lam[k] if k in lam else lefschetz(z, k)
        g[k] = Fraction(-value, k)
    return zeta_series(z, order) == series_exp(g, order)
